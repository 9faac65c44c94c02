// Decide, count and print the labelings of a small graph.
#include <addlab/addlab.hpp>

#include <iostream>

int main() {
    const auto g = addlab::parse_graph(
        "d 6\n"
        "edge p q 1\n"
        "edge q r 3\n"
        "edge r p 4\n"
        "edge r s 5\n");

    if (!addlab::check(g).additive) {
        std::cout << "not additive\n";
        return 1;
    }
    std::cout << addlab::count(g)->total << " labelings\n";
    for (const auto& f : addlab::enumerate(g, 10)) {
        addlab::write_labeling(std::cout, g, f);
        std::cout << '\n';
    }
}
