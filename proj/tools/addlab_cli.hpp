#ifndef ADDLAB_TOOLS_CLI_HPP
#define ADDLAB_TOOLS_CLI_HPP

#include <addlab/addlab.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace addlab::cli {

// Exit codes: 0 success / additive, 1 negative answer, 2 bad input.
inline constexpr int exit_ok = 0;
inline constexpr int exit_negative = 1;
inline constexpr int exit_input = 2;

struct Options {
    std::string file = "-";
    std::size_t limit = 100;
    std::uint64_t max_states = oracle::default_max_states;
    bool multiplicative = false;
    unsigned jobs = 1;
};

namespace detail {

inline std::string slurp(const std::string& path, std::istream& in) {
    std::ostringstream buf;
    if (path == "-") {
        buf << in.rdbuf();
    } else {
        std::ifstream f(path);
        if (!f) throw Error("cannot open '" + path + "'");
        buf << f.rdbuf();
    }
    return buf.str();
}

// A graph file starts with the "d" directive; anything else is a matrix dump.
inline bool looks_like_graph(const std::string& text) {
    std::istringstream is(text);
    std::string token;
    while (is >> token) {
        if (token.front() == '#') {
            std::getline(is, token);
            continue;
        }
        return token == "d";
    }
    return true;
}

inline void print_violation(std::ostream& out, const Violation& v) {
    write_residues(out, v.generator);
    out << "  # " << to_string(v.source) << ", component " << v.component + 1 << ", pairing " << v.value << '\n';
}

inline int cmd_check(const LabeledGraph& g, const Options& o, std::ostream& out) {
    const auto verdict = o.multiplicative ? multiplicative_check(g, o.jobs) : check(g, o.jobs);
    if (verdict.additive) {
        out << "ADDITIVE\n";
        return exit_ok;
    }
    out << "NOT ADDITIVE\n";
    print_violation(out, verdict.violations.front());
    return exit_negative;
}

inline int cmd_solve(const LabeledGraph& g, const Options& o, std::ostream& out) {
    if (o.multiplicative) {
        auto r = toric_solve(g);
        if (!r) {
            out << "NOT ADDITIVE\n";
            return exit_negative;
        }
        write_labeling(out, g, std::span<const Residue>(r->vertex_exponents));
        return exit_ok;
    }
    auto f = solve_one(g, o.jobs);
    if (!f) {
        out << "NOT ADDITIVE\n";
        return exit_negative;
    }
    write_labeling(out, g, *f);
    return exit_ok;
}

inline int cmd_count(const LabeledGraph& g, const Options& o, std::ostream& out) {
    const auto cd = components_and_parity(g);
    if (o.multiplicative) {
        g.labels();
        std::vector<ToricCount> parts;
        BigInt total = 1;
        for (std::size_t c = 0; c < cd.count(); ++c) {
            auto tc = toric_count(component_subgraph(g, cd, c).graph);
            if (!tc) {
                out << "NOT ADDITIVE\n";
                return exit_negative;
            }
            total *= tc->solutions;
            parts.push_back(*tc);
        }
        out << total << '\n';
        for (std::size_t c = 0; c < parts.size(); ++c)
            out << "# component " << c + 1 << " (" << g.vertex_name(cd.roots[c]) << "): " << parts[c].solutions
                << ", g = " << parts[c].g << '\n';
        return exit_ok;
    }
    auto n = count(g, o.jobs);
    if (!n) {
        out << "NOT ADDITIVE\n";
        return exit_negative;
    }
    out << n->total << '\n';
    for (std::size_t c = 0; c < n->per_component.size(); ++c)
        out << "# component " << c + 1 << " (" << g.vertex_name(cd.roots[c]) << "): " << n->per_component[c] << '\n';
    return exit_ok;
}

template <typename Range, typename Values>
void print_stream(std::ostream& out, const LabeledGraph& g, const Range& items, Values&& values) {
    bool first = true;
    for (const auto& item : items) {
        if (!first) out << '\n';
        first = false;
        write_labeling(out, g, std::span<const Residue>(values(item)));
    }
}

inline int cmd_enumerate(const LabeledGraph& g, const Options& o, std::ostream& out) {
    if (o.multiplicative) {
        if (!multiplicative_check(g, o.jobs).additive) {
            out << "NOT ADDITIVE\n";
            return exit_negative;
        }
        print_stream(out, g, toric_enumerate(g, o.limit), [](const RootAssignment& r) { return r.vertex_exponents; });
        return exit_ok;
    }
    if (!check(g, o.jobs).additive) {
        out << "NOT ADDITIVE\n";
        return exit_negative;
    }
    LabelingEnumerator it(g, o.limit);
    bool first = true;
    while (auto f = it.next()) {
        if (!first) out << '\n';
        first = false;
        write_labeling(out, g, *f);
    }
    return exit_ok;
}

inline int cmd_extend(const LabeledGraph& g, std::ostream& out) {
    auto full = extend(g);
    if (!full) {
        out << "NO EXTENSION\n";
        return exit_negative;
    }
    write_graph(out, *full);
    return exit_ok;
}

inline int cmd_snf(const std::string& text, std::ostream& out) {
    IntMatrix a;
    if (looks_like_graph(text)) {
        a = incidence_matrix(parse_graph(text));
    } else {
        std::istringstream is(text);
        a = read_matrix(is);
    }
    const auto res = snf(a);
    const std::pair<const char*, const IntMatrix*> blocks[] = {
        {"A", &a}, {"U", &res.u}, {"S", &res.s}, {"V", &res.v}, {"V^-1", &res.v_inv}};
    for (const auto& [name, m] : blocks) {
        out << "### " << name << '\n';
        write_matrix(out, *m);
    }
    return exit_ok;
}

inline int cmd_kernel(const LabeledGraph& g, const Options& o, std::ostream& out) {
    const auto cd = components_and_parity(g);
    const auto parts = analyze(g, cd, o.jobs);
    for (std::size_t c = 0; c < parts.size(); ++c)
        for (const auto& gen : parts[c].kernel.generators) {
            write_residues(out, embed_generator(parts[c], gen, g.edge_count()));
            out << "  # " << to_string(gen.source);
            if (gen.source != GeneratorSource::odd_cycle_vector) out << " " << gen.column + 1;
            out << ", component " << c + 1 << '\n';
        }
    return exit_ok;
}

inline int cmd_oracle(const LabeledGraph& g, const Options& o, std::ostream& out) {
    const auto all = oracle::brute_force_solutions(g, o.max_states);
    if (all.empty()) {
        out << "NO SOLUTIONS\n";
        return exit_negative;
    }
    print_stream(out, g, all, [](const VLabeling& f) { return f.values; });
    return exit_ok;
}

}  // namespace detail

/// Entry point shared by the executable and the tests. `args` excludes argv[0].
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Additive edge labelings over Z_d: decide, solve, count, enumerate, extend."};
    app.name("addlab");
    app.require_subcommand(1);
    app.fallthrough();

    Options o;
    app.add_option("--limit", o.limit, "Maximum number of labelings printed by enumerate")->check(CLI::PositiveNumber);
    app.add_option("--max-states", o.max_states, "Largest d^n the oracle will search")->check(CLI::PositiveNumber);
    app.add_flag("--multiplicative", o.multiplicative, "Read labels as exponents of d-th roots of unity");
    app.add_option("--jobs", o.jobs, "Worker threads for per-component work")->check(CLI::PositiveNumber);

    const char* names[][2] = {
        {"check", "Decide additivity (exit 0 additive, 1 not)"},
        {"solve", "Print one valid vertex labeling"},
        {"count", "Print the number of valid vertex labelings"},
        {"enumerate", "Print valid vertex labelings, blank-line separated"},
        {"extend", "Fill '?' edge labels so the result is additive"},
        {"snf", "Print A, U, S, V, V^-1 for a graph's incidence matrix or a matrix dump"},
        {"kernel", "Print mod-d kernel generators of each component's incidence matrix"},
        {"oracle", "Print every valid vertex labeling by exhaustive search"},
    };
    for (const auto& [name, help] : names) app.add_subcommand(name, help)->add_option("file", o.file, "Input file, '-' for stdin");

    std::vector<std::string> argv_storage{"addlab"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_storage) argv.push_back(a.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "addlab: " << e.what() << '\n';
        return exit_input;
    }

    const auto* sub = app.get_subcommands().front();
    const auto cmd = sub->get_name();
    try {
        const auto text = detail::slurp(o.file, in);
        if (cmd == "snf") return detail::cmd_snf(text, out);
        const auto g = parse_graph(text);
        if (cmd == "check") return detail::cmd_check(g, o, out);
        if (cmd == "solve") return detail::cmd_solve(g, o, out);
        if (cmd == "count") return detail::cmd_count(g, o, out);
        if (cmd == "enumerate") return detail::cmd_enumerate(g, o, out);
        if (cmd == "extend") return detail::cmd_extend(g, out);
        if (cmd == "kernel") return detail::cmd_kernel(g, o, out);
        if (cmd == "oracle") return detail::cmd_oracle(g, o, out);
    } catch (const InternalInconsistency& e) {
        err << "addlab: internal error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        err << "addlab: " << e.what() << '\n';
        return exit_input;
    }
    return exit_input;
}

}  // namespace addlab::cli

#endif  // ADDLAB_TOOLS_CLI_HPP
