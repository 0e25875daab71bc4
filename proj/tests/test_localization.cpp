#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "annigraph/graphs.hpp"
#include "annigraph/ideal.hpp"
#include "annigraph/localization.hpp"

using namespace annigraph;

namespace {

ModulePtr zmodule(const std::vector<int64_t>& orders) {
    std::vector<ModuleFactor> fs;
    for (int64_t d : orders) fs.push_back({d, 0});
    return make_module(ring_integers(), fs);
}

DynBitset bits(int n, const std::vector<int>& ones) {
    DynBitset b(static_cast<std::size_t>(n));
    for (int x : ones) b.set(static_cast<std::size_t>(x));
    return b;
}

/* textbook equivalence on pairs: r1/t1 = r2/t2 iff u(r1 t2 - r2 t1) = 0
   for some u in T */
bool pairs_equal(const RingPtr& r, const DynBitset& T, int r1, int t1, int r2, int t2) {
    int d = r->addi(r->muli(r1, t2), r->neg(r->muli(r2, t1)));
    for (int u = 0; u < r->size; ++u)
        if (T.test(static_cast<std::size_t>(u)) && r->muli(u, d) == 0) return true;
    return false;
}

} // namespace

TEST_CASE("zero divisors acting on a module") {
    /* Z/6 on itself: 2*3 = 0, 3*2 = 0, 4*3 = 0 */
    DynBitset c = zero_divisors_on_module(module_from_ring(ring_zmod(6)));
    CHECK(c == bits(6, {0, 2, 3, 4}));

    /* Z/4 on the Klein module: 2 kills everything */
    DynBitset ck = zero_divisors_on_module(make_module(ring_zmod(4), {{2, 0}, {2, 0}}));
    CHECK(ck == bits(4, {0, 2}));

    CHECK_THROWS_AS(zero_divisors_on_module(zmodule({4})), std::logic_error);
}

TEST_CASE("localizing a residue ring at the odd elements") {
    RingPtr r = ring_zmod(12);
    FractionRing fr = fraction_ring(r, bits(12, {1, 3, 5, 7, 9, 11}));
    CHECK(fr.kernel == bits(12, {0, 4, 8}));
    CHECK(fr.ring->size == 4);
    /* the quotient is the 4 element local ring with a square-zero maximal
       ideal: one zero-divisor vertex and no idempotents besides 0,1 */
    CHECK(zero_divisor_graph(fr.ring).g.n == 1);
    CHECK_FALSE(is_regular_ring(fr.ring));
    CHECK(idempotents(fr.ring).size() == 2);

    /* r/1 classes collapse exactly the kernel */
    for (int a = 0; a < 12; ++a)
        for (int b = 0; b < 12; ++b) {
            bool same = fr.of_base[a] == fr.of_base[b];
            int diff = r->addi(a, r->neg(b));
            CHECK(same == fr.kernel.test(static_cast<std::size_t>(diff)));
        }
}

TEST_CASE("fraction classes agree with the pair construction") {
    RingPtr r = ring_zmod(12);
    DynBitset T = bits(12, {1, 3, 5, 7, 9, 11});
    FractionRing fr = fraction_ring(r, T);
    for (int r1 = 0; r1 < 12; ++r1)
        for (int t1 = 0; t1 < 12; ++t1) {
            if (!T.test(static_cast<std::size_t>(t1))) continue;
            for (int r2 = 0; r2 < 12; ++r2)
                for (int t2 = 0; t2 < 12; ++t2) {
                    if (!T.test(static_cast<std::size_t>(t2))) continue;
                    CHECK((fr.frac(r1, t1) == fr.frac(r2, t2)) ==
                          pairs_equal(r, T, r1, t1, r2, t2));
                }
        }
}

TEST_CASE("localizing Z/6 away from 3") {
    FractionRing fr = fraction_ring(ring_zmod(6), bits(6, {1, 2, 4, 5}));
    CHECK(fr.kernel == bits(6, {0, 3}));
    CHECK(fr.ring->size == 3);
    CHECK(is_regular_ring(fr.ring));
    CHECK(fr.frac(1, 2) == fr.frac(2, 4));
}

TEST_CASE("degenerate denominator sets are rejected") {
    RingPtr r = ring_zmod(6);
    CHECK_THROWS_AS(fraction_ring(r, bits(6, {1, 0})), std::invalid_argument);
    CHECK_THROWS_AS(fraction_ring(r, bits(6, {2, 4})), std::invalid_argument);     /* no 1 */
    CHECK_THROWS_AS(fraction_ring(r, bits(6, {1, 2})), std::invalid_argument);     /* 2*2 missing */
    FractionRing id = fraction_ring(r, bits(6, {1}));
    CHECK(id.ring->size == 6);
    CHECK(id.kernel.count() == 1);
}

TEST_CASE("module of fractions at the regular elements") {
    /* Klein module over Z/4: C = {0,2}, T = {1,3}, nothing collapses */
    ModulePtr k = make_module(ring_zmod(4), {{2, 0}, {2, 0}});
    FractionModule fm = fraction_module(k);
    CHECK(fm.ring.denoms == bits(4, {1, 3}));
    CHECK(fm.ring.kernel == bits(4, {0}));
    CHECK(fm.ring.ring->size == 4);
    CHECK(fm.mod->size == 4);
    CHECK(fm.mod->ring == fm.ring.ring);

    /* Z/6 over itself: C = {0,2,3,4}, T = {1,5}, identity localization */
    FractionModule f6 = fraction_module(module_from_ring(ring_zmod(6)));
    CHECK(f6.ring.kernel.count() == 1);
    CHECK(f6.mod->size == 6);
    AnnGraph before = build_graph(f6.base, Flavor::full);
    AnnGraph after = build_graph(f6.mod, Flavor::full);
    CHECK(before.verts == after.verts);
    CHECK(graph_isomorphic(before.g, after.g));
}

TEST_CASE("denominator images become units") {
    for (int n : {6, 8, 12}) {
        ModulePtr m = module_from_ring(ring_zmod(n));
        FractionModule fm = fraction_module(m);
        for (int t = 0; t < n; ++t)
            if (fm.ring.denoms.test(static_cast<std::size_t>(t)))
                CHECK(fm.ring.ring->is_unit(fm.ring.of_base[t]));
    }
}

TEST_CASE("integer modules reduce to a finite carrier with the same graphs") {
    ModulePtr k = zmodule({2, 2});
    ModulePtr rk = reduce_to_finite(k);
    CHECK(rk->ring->size == 4);   /* exponent 2 times spare factor 2 */
    CHECK(rk->size == 4);

    ModulePtr m6 = zmodule({6});
    ModulePtr rm6 = reduce_to_finite(m6);
    CHECK(rm6->ring->size == 12);

    for (ModulePtr m : {k, m6, zmodule({2, 4}), zmodule({12})}) {
        ModulePtr rm = reduce_to_finite(m);
        REQUIRE(rm->size == m->size);
        for (Flavor f : {Flavor::full, Flavor::semi, Flavor::star}) {
            AnnGraph a = build_graph(m, f);
            AnnGraph b = build_graph(rm, f);
            REQUIRE(a.verts == b.verts);   /* element-for-element */
            for (std::size_t i = 0; i < a.verts.size(); ++i)
                for (std::size_t j = 0; j < a.verts.size(); ++j)
                    CHECK(a.g.is_edge(static_cast<int>(i), static_cast<int>(j)) ==
                          b.g.is_edge(static_cast<int>(i), static_cast<int>(j)));
        }
    }
}
