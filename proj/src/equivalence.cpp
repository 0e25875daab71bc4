#include "annigraph/equivalence.hpp"

#include <algorithm>
#include <functional>

namespace annigraph {

std::vector<std::size_t> Partition::class_sizes() const {
    std::vector<std::size_t> out;
    for (const auto& c : classes) out.push_back(c.size());
    std::sort(out.begin(), out.end());
    return out;
}

int Partition::class_of(int elem) const {
    for (std::size_t i = 0; i < classes.size(); ++i)
        if (std::binary_search(classes[i].begin(), classes[i].end(), elem))
            return static_cast<int>(i);
    return -1;
}

namespace {

// groups vertex indices by a pairwise relation (assumed transitive) and
// reports classes as sorted element ids
Partition group_by(const AnnGraph& ag, const std::function<bool(int, int)>& related) {
    int n = ag.g.n;
    std::vector<int> cls(static_cast<std::size_t>(n), -1);
    Partition p;
    for (int u = 0; u < n; ++u) {
        if (cls[static_cast<std::size_t>(u)] >= 0) continue;
        cls[static_cast<std::size_t>(u)] = static_cast<int>(p.classes.size());
        std::vector<int> c{ag.verts[static_cast<std::size_t>(u)]};
        for (int v = u + 1; v < n; ++v)
            if (cls[static_cast<std::size_t>(v)] < 0 && related(u, v)) {
                cls[static_cast<std::size_t>(v)] = cls[static_cast<std::size_t>(u)];
                c.push_back(ag.verts[static_cast<std::size_t>(v)]);
            }
        p.classes.push_back(std::move(c));
    }
    return p;
}

std::vector<std::vector<int>> all_pairs_distance(const SimpleGraph& g) {
    std::vector<std::vector<int>> d(static_cast<std::size_t>(g.n),
                                    std::vector<int>(static_cast<std::size_t>(g.n), -1));
    for (int s = 0; s < g.n; ++s) {
        auto& row = d[static_cast<std::size_t>(s)];
        row[static_cast<std::size_t>(s)] = 0;
        std::vector<int> q{s};
        for (std::size_t h = 0; h < q.size(); ++h)
            g.adj[static_cast<std::size_t>(q[h])].for_each([&](std::size_t w) {
                if (row[w] < 0) {
                    row[w] = row[static_cast<std::size_t>(q[h])] + 1;
                    q.push_back(static_cast<int>(w));
                }
            });
    }
    return d;
}

} // namespace

Partition nbd_classes(const AnnGraph& ag) {
    return group_by(ag, [&](int u, int v) {
        return ag.g.adj[static_cast<std::size_t>(u)] == ag.g.adj[static_cast<std::size_t>(v)];
    });
}

Partition distance_classes(const AnnGraph& ag) {
    std::vector<std::vector<int>> d = all_pairs_distance(ag.g);
    return group_by(ag, [&](int u, int v) {
        for (int w = 0; w < ag.g.n; ++w) {
            if (w == u || w == v) continue;
            if (d[static_cast<std::size_t>(u)][static_cast<std::size_t>(w)] !=
                d[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)])
                return false;
        }
        return true;
    });
}

Partition distance_classes_formula(const AnnGraph& ag) {
    return group_by(ag, [&](int u, int v) {
        DynBitset nu = ag.g.adj[static_cast<std::size_t>(u)];
        DynBitset nv = ag.g.adj[static_cast<std::size_t>(v)];
        if (!ag.g.is_edge(u, v)) return nu == nv;
        nu.set(static_cast<std::size_t>(u));
        nv.set(static_cast<std::size_t>(v));
        return nu == nv;
    });
}

Partition submodule_classes(const AnnGraph& ag) {
    std::vector<DynBitset> annm;
    for (int v : ag.verts)
        annm.push_back(ideal_times_module(ann_element(ag.mod, v), ag.mod).elems);
    return group_by(ag, [&](int u, int v) {
        return annm[static_cast<std::size_t>(u)] == annm[static_cast<std::size_t>(v)];
    });
}

VertexInvariants vertex_invariants(const AnnGraph& ag) {
    VertexInvariants out;
    for (int v : ag.verts) {
        Submodule rv = cyclic_submodule(ag.mod, v);
        out.theta.push_back(static_cast<int64_t>(rv.card()));
        bool simple = rv.card() > 1;
        rv.elems.for_each([&](std::size_t z) {
            if (z != 0 && !(cyclic_submodule(ag.mod, static_cast<int>(z)) == rv)) simple = false;
        });
        out.primitive.push_back(simple ? 1 : 0);
    }
    return out;
}

} // namespace annigraph
