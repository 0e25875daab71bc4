#include "annigraph/graphs.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace annigraph {

std::string flavor_name(Flavor f) {
    switch (f) {
        case Flavor::full: return "full";
        case Flavor::semi: return "semi";
        case Flavor::star: return "star";
    }
    return "";
}

Flavor parse_flavor(const std::string& s) {
    if (s == "f" || s == "full") return Flavor::full;
    if (s == "s" || s == "semi") return Flavor::semi;
    if (s == "t" || s == "star") return Flavor::star;
    throw std::invalid_argument("unknown flavor: " + s);
}

SimpleGraph::SimpleGraph(int n_) : n(n_) {
    adj.assign(static_cast<std::size_t>(n), DynBitset(static_cast<std::size_t>(n)));
}

void SimpleGraph::add_edge(int u, int v) {
    adj[static_cast<std::size_t>(u)].set(static_cast<std::size_t>(v));
    adj[static_cast<std::size_t>(v)].set(static_cast<std::size_t>(u));
}

std::size_t SimpleGraph::edge_count() const {
    std::size_t d = 0;
    for (const DynBitset& row : adj) d += row.count();
    return d / 2;
}

namespace {

// per distinct colon ideal: the submodule [x:M]M and the kernel
// {m : [x:M]m = 0}; [x:M][y:M]M = 0 iff [y:M]M lies in the kernel of [x:M]
struct ColonData {
    std::vector<int> cls;           // element -> distinct-colon index
    std::vector<Ideal> ideals;      // distinct colon ideals
    std::vector<DynBitset> image;   // IM per distinct colon
    std::vector<DynBitset> kernel;  // ker I per distinct colon

    bool prodzero(int x, int y) const {
        return image[static_cast<std::size_t>(cls[static_cast<std::size_t>(y)])].subset_of(
            kernel[static_cast<std::size_t>(cls[static_cast<std::size_t>(x)])]);
    }
};

ColonData colon_data(const ModulePtr& mod) {
    ColonData d;
    d.cls.resize(static_cast<std::size_t>(mod->size));
    std::map<std::pair<int64_t, DynBitset>, int> seen;
    for (int x = 0; x < mod->size; ++x) {
        Ideal c = colon_element(mod, x);
        auto key = std::make_pair(c.zgen, c.elems);
        auto it = seen.find(key);
        if (it == seen.end()) {
            int id = static_cast<int>(d.ideals.size());
            seen.emplace(std::move(key), id);
            d.image.push_back(ideal_times_module(c, mod).elems);
            d.kernel.push_back(ideal_kernel(c, mod).elems);
            d.ideals.push_back(std::move(c));
            d.cls[static_cast<std::size_t>(x)] = id;
        } else {
            d.cls[static_cast<std::size_t>(x)] = it->second;
        }
    }
    return d;
}

DynBitset members_from(const ModulePtr& mod, Flavor f, const ColonData& cd) {
    Ideal annm = ann_module(mod);
    auto colon_of = [&](int x) -> const Ideal& {
        return cd.ideals[static_cast<std::size_t>(cd.cls[static_cast<std::size_t>(x)])];
    };
    auto self_ok = [&](const Ideal& c) {
        switch (f) {
            case Flavor::full: return true;
            case Flavor::semi: return !c.is_zero();
            case Flavor::star: return !(c == annm);
        }
        return false;
    };
    auto witness_ok = [&](const Ideal& c) {
        if (c.is_unit_ideal()) return false;
        switch (f) {
            case Flavor::full: return true;
            case Flavor::semi: return !c.is_zero();
            case Flavor::star: return !(c == annm);
        }
        return false;
    };
    DynBitset members(static_cast<std::size_t>(mod->size));
    members.set(0);
    for (int x = 1; x < mod->size; ++x) {
        if (!self_ok(colon_of(x))) continue;
        for (int y = 1; y < mod->size; ++y) {
            if (!witness_ok(colon_of(y))) continue;
            if (cd.prodzero(x, y)) {
                members.set(static_cast<std::size_t>(x));
                break;
            }
        }
    }
    return members;
}

} // namespace

DynBitset annihilator_members(const ModulePtr& mod, Flavor f) {
    return members_from(mod, f, colon_data(mod));
}

int AnnGraph::vertex_of(int elem) const {
    auto it = std::lower_bound(verts.begin(), verts.end(), elem);
    if (it == verts.end() || *it != elem) return -1;
    return static_cast<int>(it - verts.begin());
}

AnnGraph build_graph(const ModulePtr& mod, Flavor f) {
    AnnGraph ag;
    ag.mod = mod;
    ag.flavor = f;
    ColonData cd = colon_data(mod);
    DynBitset members = members_from(mod, f, cd);
    members.for_each([&](std::size_t x) {
        if (x != 0) ag.verts.push_back(static_cast<int>(x));
    });
    ag.g = SimpleGraph(static_cast<int>(ag.verts.size()));
    for (std::size_t i = 0; i < ag.verts.size(); ++i)
        for (std::size_t j = i + 1; j < ag.verts.size(); ++j)
            if (cd.prodzero(ag.verts[i], ag.verts[j]))
                ag.g.add_edge(static_cast<int>(i), static_cast<int>(j));
    return ag;
}

GraphShape classify_shape(const SimpleGraph& g) {
    GraphShape s;
    s.vertices = g.n;
    s.edges = g.edge_count();
    for (int v = 0; v < g.n; ++v) s.degree_sequence.push_back(g.degree(v));
    std::sort(s.degree_sequence.begin(), s.degree_sequence.end());
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) == 1) s.pendants.push_back(v);

    std::vector<int> reach;
    if (g.n > 0) {
        std::vector<bool> vis(static_cast<std::size_t>(g.n), false);
        reach.push_back(0);
        vis[0] = true;
        for (std::size_t h = 0; h < reach.size(); ++h)
            g.adj[static_cast<std::size_t>(reach[h])].for_each([&](std::size_t w) {
                if (!vis[w]) {
                    vis[w] = true;
                    reach.push_back(static_cast<int>(w));
                }
            });
    }
    s.connected = g.n <= 1 || static_cast<int>(reach.size()) == g.n;
    s.complete = g.n > 0;
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) != g.n - 1) s.complete = false;
    if (g.n >= 3 && s.connected && s.degree_sequence.front() == 2 && s.degree_sequence.back() == 2)
        s.cycle_len = g.n;
    if (g.n >= 1 && s.edges == static_cast<std::size_t>(g.n) - 1) {
        for (int v = 0; v < g.n && !s.star; ++v)
            if (g.degree(v) == g.n - 1) {
                s.star = true;
                s.star_center = v;
            }
    }
    for (int a = 0; a < g.n && s.triangle_free; ++a)
        for (int b = a + 1; b < g.n && s.triangle_free; ++b) {
            if (!g.is_edge(a, b)) continue;
            DynBitset common = g.adj[static_cast<std::size_t>(a)] & g.adj[static_cast<std::size_t>(b)];
            if (common.any()) s.triangle_free = false;
        }
    return s;
}

namespace {

using ColorKey = std::pair<int, std::vector<int>>;

ColorKey color_key(const SimpleGraph& g, const std::vector<int>& color, int v) {
    std::vector<int> sig;
    g.adj[static_cast<std::size_t>(v)].for_each(
        [&](std::size_t w) { sig.push_back(color[w]); });
    std::sort(sig.begin(), sig.end());
    return {color[static_cast<std::size_t>(v)], std::move(sig)};
}

/* joint refinement: one key table numbers both graphs, so equal classes get
   equal ids across them (per-graph numbering would depend on vertex order) */
void refine_colors(const SimpleGraph& a, const SimpleGraph& b,
                   std::vector<int>& ca, std::vector<int>& cb) {
    ca.resize(static_cast<std::size_t>(a.n));
    cb.resize(static_cast<std::size_t>(b.n));
    for (int v = 0; v < a.n; ++v) ca[static_cast<std::size_t>(v)] = a.degree(v);
    for (int v = 0; v < b.n; ++v) cb[static_cast<std::size_t>(v)] = b.degree(v);
    for (int round = 0; round <= a.n; ++round) {
        std::vector<ColorKey> ka, kb;
        ka.reserve(ca.size());
        kb.reserve(cb.size());
        for (int v = 0; v < a.n; ++v) ka.push_back(color_key(a, ca, v));
        for (int v = 0; v < b.n; ++v) kb.push_back(color_key(b, cb, v));
        std::map<ColorKey, int> ids;
        for (const auto& k : ka) ids.emplace(k, 0);
        for (const auto& k : kb) ids.emplace(k, 0);
        int c = 0;
        for (auto& kv : ids) kv.second = c++;
        std::vector<int> na(ca.size()), nb(cb.size());
        for (std::size_t v = 0; v < ka.size(); ++v) na[v] = ids[ka[v]];
        for (std::size_t v = 0; v < kb.size(); ++v) nb[v] = ids[kb[v]];
        if (na == ca && nb == cb) break;
        ca = std::move(na);
        cb = std::move(nb);
    }
}

bool iso_dfs(const SimpleGraph& a, const SimpleGraph& b, const std::vector<int>& order,
             std::size_t k, std::vector<int>& map, std::vector<bool>& used,
             const std::vector<int>& ca, const std::vector<int>& cb) {
    if (k == order.size()) return true;
    int u = order[k];
    for (int v = 0; v < b.n; ++v) {
        if (used[static_cast<std::size_t>(v)]) continue;
        if (ca[static_cast<std::size_t>(u)] != cb[static_cast<std::size_t>(v)]) continue;
        bool ok = true;
        for (std::size_t j = 0; j < k && ok; ++j)
            if (a.is_edge(u, order[j]) != b.is_edge(v, map[static_cast<std::size_t>(order[j])])) ok = false;
        if (!ok) continue;
        map[static_cast<std::size_t>(u)] = v;
        used[static_cast<std::size_t>(v)] = true;
        if (iso_dfs(a, b, order, k + 1, map, used, ca, cb)) return true;
        used[static_cast<std::size_t>(v)] = false;
    }
    return false;
}

} // namespace

bool graph_isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
    if (a.n != b.n) return false;
    if (a.edge_count() != b.edge_count()) return false;
    std::vector<int> ca, cb;
    refine_colors(a, b, ca, cb);
    {
        std::vector<int> sa = ca, sb = cb;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }
    // rare colors first keeps the search shallow; ids can exceed the vertex
    // count since the key table spans both graphs
    std::vector<int> freq(2 * static_cast<std::size_t>(a.n) + 1, 0);
    for (int c : ca) ++freq[static_cast<std::size_t>(c)];
    std::vector<int> order(static_cast<std::size_t>(a.n));
    for (int v = 0; v < a.n; ++v) order[static_cast<std::size_t>(v)] = v;
    std::sort(order.begin(), order.end(), [&](int u, int v) {
        int fu = freq[static_cast<std::size_t>(ca[static_cast<std::size_t>(u)])];
        int fv = freq[static_cast<std::size_t>(ca[static_cast<std::size_t>(v)])];
        if (fu != fv) return fu < fv;
        return u < v;
    });
    std::vector<int> map(static_cast<std::size_t>(a.n), -1);
    std::vector<bool> used(static_cast<std::size_t>(a.n), false);
    return iso_dfs(a, b, order, 0, map, used, ca, cb);
}

ZeroDivisorGraph zero_divisor_graph(const RingPtr& ring) {
    if (!ring->finite()) throw std::logic_error("zero-divisor graph needs a finite ring");
    ZeroDivisorGraph z;
    z.ring = ring;
    for (int a = 1; a < ring->size; ++a)
        for (int b = 1; b < ring->size; ++b)
            if (ring->muli(a, b) == 0) {
                z.verts.push_back(a);
                break;
            }
    z.g = SimpleGraph(static_cast<int>(z.verts.size()));
    for (std::size_t i = 0; i < z.verts.size(); ++i)
        for (std::size_t j = i + 1; j < z.verts.size(); ++j)
            if (ring->muli(z.verts[i], z.verts[j]) == 0)
                z.g.add_edge(static_cast<int>(i), static_cast<int>(j));
    return z;
}

} // namespace annigraph
