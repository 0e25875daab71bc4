#ifndef ANNIGRAPH_GRAPHS_HPP
#define ANNIGRAPH_GRAPHS_HPP

#include <string>
#include <vector>

#include "annigraph/module.hpp"

namespace annigraph {

enum class Flavor { full, semi, star };

std::string flavor_name(Flavor f);
Flavor parse_flavor(const std::string& s);   // "f"/"full", "s"/"semi", "t"/"star"

struct SimpleGraph {
    int n = 0;
    std::vector<DynBitset> adj;

    SimpleGraph() = default;
    explicit SimpleGraph(int n_);
    void add_edge(int u, int v);
    bool is_edge(int u, int v) const { return adj[static_cast<std::size_t>(u)].test(static_cast<std::size_t>(v)); }
    int degree(int v) const { return static_cast<int>(adj[static_cast<std::size_t>(v)].count()); }
    std::size_t edge_count() const;
};

// x is a member when x = 0 or the flavor's colon condition holds and some
// nonzero witness y with the flavor's witness condition satisfies
// [x:M][y:M]M = 0
DynBitset annihilator_members(const ModulePtr& mod, Flavor f);

// graph on the nonzero members; x adjacent to y exactly when
// [x:M][y:M]M = 0 (witness conditions are membership-only)
struct AnnGraph {
    ModulePtr mod;
    Flavor flavor = Flavor::full;
    std::vector<int> verts;   // module element ids, ascending
    SimpleGraph g;

    int vertex_of(int elem) const;   // -1 when not a vertex
};

AnnGraph build_graph(const ModulePtr& mod, Flavor f);

struct GraphShape {
    int vertices = 0;
    std::size_t edges = 0;
    bool complete = false;
    bool connected = false;       // true for 0 or 1 vertices
    int cycle_len = 0;            // n when the graph is one n-cycle (n >= 3)
    bool star = false;            // K_{1,m}; a single vertex counts
    int star_center = -1;
    bool triangle_free = true;
    std::vector<int> pendants;           // degree-1 vertex indices
    std::vector<int> degree_sequence;    // ascending
};

GraphShape classify_shape(const SimpleGraph& g);

bool graph_isomorphic(const SimpleGraph& a, const SimpleGraph& b);

// classical zero-divisor graph: nonzero zero-divisors, edges xy = 0
struct ZeroDivisorGraph {
    RingPtr ring;
    std::vector<int> verts;
    SimpleGraph g;
};
ZeroDivisorGraph zero_divisor_graph(const RingPtr& ring);

} // namespace annigraph

#endif
