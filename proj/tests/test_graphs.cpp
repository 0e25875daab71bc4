#include <doctest.h>

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "annigraph/graphs.hpp"

using namespace annigraph;

namespace {

ModulePtr zmodule(const std::vector<int64_t>& orders) {
    std::vector<ModuleFactor> fs;
    for (int64_t d : orders) fs.push_back({d, 0});
    return make_module(ring_integers(), fs);
}

std::vector<int64_t> vert_labels_z(const AnnGraph& a) {
    std::vector<int64_t> out;
    for (int v : a.verts) out.push_back(a.mod->coords(v)[0]);
    return out;
}

std::set<std::pair<int64_t, int64_t>> edge_labels_z(const AnnGraph& a) {
    std::set<std::pair<int64_t, int64_t>> out;
    for (int i = 0; i < a.g.n; ++i)
        for (int j = i + 1; j < a.g.n; ++j)
            if (a.g.is_edge(i, j))
                out.insert({a.mod->coords(a.verts[i])[0],
                            a.mod->coords(a.verts[j])[0]});
    return out;
}

bool is_complete(const SimpleGraph& g) {
    return classify_shape(g).complete && g.n > 0;
}

} // namespace

TEST_CASE("flavor names parse both long and short") {
    CHECK(parse_flavor("full") == Flavor::full);
    CHECK(parse_flavor("f") == Flavor::full);
    CHECK(parse_flavor("semi") == Flavor::semi);
    CHECK(parse_flavor("s") == Flavor::semi);
    CHECK(parse_flavor("star") == Flavor::star);
    CHECK(parse_flavor("t") == Flavor::star);
    CHECK(flavor_name(Flavor::semi) == "semi");
    CHECK_THROWS(parse_flavor("x"));
}

TEST_CASE("paths over cyclic modules") {
    AnnGraph a6 = build_graph(zmodule({6}), Flavor::full);
    CHECK(vert_labels_z(a6) == std::vector<int64_t>({2, 3, 4}));
    CHECK(edge_labels_z(a6) ==
          std::set<std::pair<int64_t, int64_t>>({{2, 3}, {3, 4}}));

    AnnGraph a8 = build_graph(zmodule({8}), Flavor::full);
    CHECK(vert_labels_z(a8) == std::vector<int64_t>({2, 4, 6}));
    CHECK(edge_labels_z(a8) ==
          std::set<std::pair<int64_t, int64_t>>({{2, 4}, {4, 6}}));
}

TEST_CASE("small complete graphs") {
    for (const auto& orders :
         std::vector<std::vector<int64_t>>{{2, 4}, {2, 2, 2}}) {
        AnnGraph a = build_graph(zmodule(orders), Flavor::full);
        CHECK(a.g.n == 7);
        CHECK(is_complete(a.g));
    }
    AnnGraph a4 = build_graph(zmodule({4}), Flavor::full);
    CHECK(a4.g.n == 1);
    CHECK(a4.g.edge_count() == 0);
    AnnGraph a9 = build_graph(zmodule({9}), Flavor::full);
    CHECK(vert_labels_z(a9) == std::vector<int64_t>({3, 6}));
    CHECK(a9.g.is_edge(0, 1));
}

TEST_CASE("flavors on the Klein module") {
    ModulePtr k = zmodule({2, 2});
    AnnGraph full = build_graph(k, Flavor::full);
    CHECK(full.g.n == 3);
    CHECK(is_complete(full.g));
    AnnGraph semi = build_graph(k, Flavor::semi);
    CHECK(semi.g.n == 3);
    CHECK(is_complete(semi.g));
    CHECK(build_graph(k, Flavor::star).g.n == 0);
}

TEST_CASE("flavors can differ over finite base rings") {
    /* Klein over Z/2: [x:M] = 0 for nonzero x, so colons multiply to zero
       but the semi flavor demands nonzero colons */
    ModulePtr k2 = make_module(ring_zmod(2), {{2, 0}, {2, 0}});
    CHECK(build_graph(k2, Flavor::full).g.n == 3);
    CHECK(build_graph(k2, Flavor::semi).g.n == 0);
    CHECK(build_graph(k2, Flavor::star).g.n == 0);

    /* Klein over Z/6: colons are 2+6Z, nonzero but equal to ann(M), so the
       star flavor's strict containment empties the graph */
    ModulePtr k6 = make_module(ring_zmod(6), {{2, 0}, {2, 0}});
    CHECK(build_graph(k6, Flavor::full).g.n == 3);
    CHECK(build_graph(k6, Flavor::semi).g.n == 3);
    CHECK(is_complete(build_graph(k6, Flavor::semi).g));
    CHECK(build_graph(k6, Flavor::star).g.n == 0);
}

TEST_CASE("stars over 2p and squarefree shapes") {
    AnnGraph a10 = build_graph(zmodule({10}), Flavor::full);
    GraphShape s10 = classify_shape(a10.g);
    CHECK(s10.vertices == 5);
    CHECK(s10.star);
    CHECK(a10.mod->coords(a10.verts[s10.star_center])[0] == 5);

    AnnGraph a14 = build_graph(zmodule({14}), Flavor::full);
    GraphShape s14 = classify_shape(a14.g);
    CHECK(s14.star);
    CHECK(s14.vertices == 7);
    CHECK(a14.mod->coords(a14.verts[s14.star_center])[0] == 7);

    /* 15: complete bipartite on the multiples of 3 and of 5 */
    AnnGraph a15 = build_graph(zmodule({15}), Flavor::full);
    CHECK(a15.g.n == 6);
    CHECK(a15.g.edge_count() == 8);
    GraphShape s15 = classify_shape(a15.g);
    CHECK(s15.triangle_free);
    CHECK_FALSE(s15.star);
    for (int i = 0; i < a15.g.n; ++i)
        for (int j = i + 1; j < a15.g.n; ++j) {
            int64_t x = a15.mod->coords(a15.verts[i])[0];
            int64_t y = a15.mod->coords(a15.verts[j])[0];
            CHECK(a15.g.is_edge(i, j) == (x % 3 != y % 3 && x % 5 != y % 5));
        }
}

TEST_CASE("order sixteen cyclic module has one triangle") {
    AnnGraph a = build_graph(zmodule({16}), Flavor::full);
    CHECK(vert_labels_z(a) == std::vector<int64_t>({2, 4, 6, 8, 10, 12, 14}));
    CHECK(edge_labels_z(a) == std::set<std::pair<int64_t, int64_t>>(
                                  {{2, 8}, {4, 8}, {4, 12}, {6, 8}, {8, 10},
                                   {8, 12}, {8, 14}}));
    CHECK_FALSE(classify_shape(a.g).triangle_free);
}

TEST_CASE("flavor membership sets nest") {
    for (const auto& orders : std::vector<std::vector<int64_t>>{
             {6}, {12}, {2, 2}, {2, 4}, {16}, {2, 6}}) {
        ModulePtr m = zmodule(orders);
        DynBitset f = annihilator_members(m, Flavor::full);
        DynBitset s = annihilator_members(m, Flavor::semi);
        DynBitset t = annihilator_members(m, Flavor::star);
        CHECK(t.subset_of(s));
        CHECK(s.subset_of(f));
        CHECK(f.test(0));
    }
}

TEST_CASE("shape classifier") {
    SimpleGraph p3(3);
    p3.add_edge(0, 1);
    p3.add_edge(1, 2);
    GraphShape sp = classify_shape(p3);
    CHECK(sp.connected);
    CHECK(sp.star);
    CHECK(sp.star_center == 1);
    CHECK(sp.triangle_free);
    CHECK(sp.pendants == std::vector<int>({0, 2}));
    CHECK(sp.degree_sequence == std::vector<int>({1, 1, 2}));
    CHECK(sp.cycle_len == 0);

    SimpleGraph c5(5);
    for (int i = 0; i < 5; ++i) c5.add_edge(i, (i + 1) % 5);
    GraphShape sc = classify_shape(c5);
    CHECK(sc.cycle_len == 5);
    CHECK(sc.connected);
    CHECK_FALSE(sc.star);

    SimpleGraph k3(3);
    k3.add_edge(0, 1);
    k3.add_edge(1, 2);
    k3.add_edge(0, 2);
    GraphShape sk = classify_shape(k3);
    CHECK(sk.complete);
    CHECK(sk.cycle_len == 3);
    CHECK_FALSE(sk.triangle_free);

    SimpleGraph one(1);
    GraphShape s1 = classify_shape(one);
    CHECK(s1.star);
    CHECK(s1.connected);
    CHECK(s1.complete);

    SimpleGraph two(4);
    two.add_edge(0, 1);
    two.add_edge(2, 3);
    GraphShape s2 = classify_shape(two);
    CHECK_FALSE(s2.connected);
    CHECK(s2.pendants.size() == 4);
}

TEST_CASE("graph isomorphism") {
    SimpleGraph p3(3);
    p3.add_edge(0, 1);
    p3.add_edge(1, 2);
    SimpleGraph p3b(3);
    p3b.add_edge(2, 0);
    p3b.add_edge(0, 1);
    CHECK(graph_isomorphic(p3, p3b));

    SimpleGraph k3(3);
    k3.add_edge(0, 1);
    k3.add_edge(1, 2);
    k3.add_edge(0, 2);
    CHECK_FALSE(graph_isomorphic(p3, k3));
    CHECK_FALSE(graph_isomorphic(p3, SimpleGraph(4)));

    /* same degree sequence, different structure */
    SimpleGraph c6(6);
    for (int i = 0; i < 6; ++i) c6.add_edge(i, (i + 1) % 6);
    SimpleGraph twok3(6);
    twok3.add_edge(0, 1);
    twok3.add_edge(1, 2);
    twok3.add_edge(0, 2);
    twok3.add_edge(3, 4);
    twok3.add_edge(4, 5);
    twok3.add_edge(3, 5);
    CHECK_FALSE(graph_isomorphic(c6, twok3));
    CHECK(graph_isomorphic(SimpleGraph(0), SimpleGraph(0)));
}

TEST_CASE("zero divisor graph matches the module graph of the ring") {
    for (int n : {6, 8, 12, 16, 30}) {
        RingPtr r = ring_zmod(n);
        ZeroDivisorGraph z = zero_divisor_graph(r);
        AnnGraph a = build_graph(module_from_ring(r), Flavor::full);
        REQUIRE(z.verts == a.verts);
        REQUIRE(z.g.n == a.g.n);
        for (int i = 0; i < z.g.n; ++i)
            for (int j = 0; j < z.g.n; ++j)
                CHECK(z.g.is_edge(i, j) == a.g.is_edge(i, j));
    }
    CHECK(zero_divisor_graph(ring_zmod(7)).g.n == 0);
    CHECK(zero_divisor_graph(ring_zmod(12)).g.n == 7);
}
