#ifndef ANNIGRAPH_EQUIVALENCE_HPP
#define ANNIGRAPH_EQUIVALENCE_HPP

#include <cstdint>
#include <vector>

#include "annigraph/graphs.hpp"

namespace annigraph {

// partition of the graph's vertices, given by module element ids; classes
// are sorted ascending and ordered by least element
struct Partition {
    std::vector<std::vector<int>> classes;

    bool operator==(const Partition& o) const { return classes == o.classes; }
    std::vector<std::size_t> class_sizes() const;   // sorted ascending
    int class_of(int elem) const;                   // -1 when absent
};

// open-neighbourhood equality N(u) = N(v)
Partition nbd_classes(const AnnGraph& ag);

// d(u,w) = d(v,w) for every other vertex w; unreachable pairs compare
// equal. Disconnected graphs are handled by treating infinity as a value.
Partition distance_classes(const AnnGraph& ag);

// the edge-aware characterization: non-adjacent with N(u) = N(v), or
// adjacent with N[u] = N[v]; kept separate from distance_classes so the
// two routes can be compared
Partition distance_classes_formula(const AnnGraph& ag);

// ann(u)M = ann(v)M
Partition submodule_classes(const AnnGraph& ag);

struct VertexInvariants {
    std::vector<int64_t> theta;    // |Rx| per vertex (graph order)
    std::vector<char> primitive;   // Rx is a simple submodule
};
VertexInvariants vertex_invariants(const AnnGraph& ag);

} // namespace annigraph

#endif
