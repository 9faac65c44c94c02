#ifndef ADDLAB_FORMAT_HPP
#define ADDLAB_FORMAT_HPP

#include "cycle_space.hpp"
#include "graph.hpp"

#include <ostream>
#include <span>

namespace addlab {

/// One "<vertex> <residue>" line per vertex, in vertex order.
inline void write_labeling(std::ostream& os, const LabeledGraph& g, std::span<const Residue> values) {
    for (std::size_t v = 0; v < g.vertex_count(); ++v) os << g.vertex_name(v) << ' ' << values[v] << '\n';
}

inline void write_labeling(std::ostream& os, const LabeledGraph& g, const VLabeling& f) {
    write_labeling(os, g, std::span<const Residue>(f.values));
}

inline void write_residues(std::ostream& os, std::span<const Residue> values) {
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) os << ' ';
        os << values[i];
    }
}

}  // namespace addlab

#endif  // ADDLAB_FORMAT_HPP
