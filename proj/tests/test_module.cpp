#include <doctest.h>

#include <numeric>
#include <stdexcept>
#include <vector>

#include "annigraph/module.hpp"

using namespace annigraph;

namespace {

ModulePtr zmodule(const std::vector<int64_t>& orders) {
    std::vector<ModuleFactor> fs;
    for (int64_t d : orders) fs.push_back({d, 0});
    return make_module(ring_integers(), fs);
}

std::vector<int> members(const Submodule& n) {
    std::vector<int> out;
    for (int m = 0; m < n.mod->size; ++m)
        if (n.contains(m)) out.push_back(m);
    return out;
}

/* independent colon computation: scan scalars directly against Rx */
int64_t colon_oracle_z(const ModulePtr& mod, int x) {
    Submodule rx = cyclic_submodule(mod, x);
    int64_t g = mod->exponent;
    for (int64_t r = 1; r < mod->exponent; ++r) {
        bool inside = true;
        for (int m = 0; m < mod->size && inside; ++m)
            inside = rx.contains(mod->act(r, m));
        if (inside) g = std::gcd(g, r);
    }
    return g;
}

DynBitset colon_oracle_finite(const ModulePtr& mod, int x) {
    Submodule rx = cyclic_submodule(mod, x);
    DynBitset out(static_cast<std::size_t>(mod->ring->size));
    for (int r = 0; r < mod->ring->size; ++r) {
        bool inside = true;
        for (int m = 0; m < mod->size && inside; ++m)
            inside = rx.contains(mod->act(r, m));
        if (inside) out.set(static_cast<std::size_t>(r));
    }
    return out;
}

} // namespace

TEST_CASE("module construction and coordinates") {
    ModulePtr m = zmodule({2, 4});
    CHECK(m->size == 8);
    CHECK(m->exponent == 4);
    for (int a = 0; a < m->size; ++a) CHECK(m->from_coords(m->coords(a)) == a);
    CHECK(m->order_of(m->from_coords({1, 1})) == 4);
    CHECK(m->order_of(m->from_coords({0, 2})) == 2);
    CHECK(m->order_of(0) == 1);

    ModulePtr k = make_module(ring_zmod(4), {{2, 0}, {2, 0}});
    CHECK(k->size == 4);
    CHECK(k->exponent == 2);

    /* factor order must divide the modulus it lives over */
    CHECK_THROWS_AS(make_module(ring_zmod(12), {{5, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(make_module(ring_product({2, 3}), {{3, 0}}), std::invalid_argument);

    ModulePtr r12 = module_from_ring(ring_zmod(12));
    CHECK(r12->size == 12);
    check_module_axioms(*r12);
    check_module_axioms(*m);
}

TEST_CASE("table constructor rejects broken scalar action") {
    RingPtr r2 = ring_zmod(2);
    std::vector<int> add = {0, 1, 1, 0};
    std::vector<int> bad_smul = {0, 0, 0, 0};   /* 1*1 = 0 violates identity */
    CHECK_THROWS_AS(module_from_tables(r2, add, bad_smul, {"0", "1"}, "bad"),
                    std::invalid_argument);
    std::vector<int> good_smul = {0, 0, 0, 1};
    ModulePtr ok = module_from_tables(r2, add, good_smul, {"0", "1"}, "F2");
    CHECK(ok->size == 2);
}

TEST_CASE("colon ideals match a direct scan") {
    for (const auto& orders : std::vector<std::vector<int64_t>>{
             {6}, {12}, {2, 4}, {2, 8}, {3, 3}}) {
        ModulePtr m = zmodule(orders);
        for (int x = 0; x < m->size; ++x)
            CHECK(colon_element(m, x).zgen == colon_oracle_z(m, x));
    }
    for (ModulePtr m : {module_from_ring(ring_zmod(12)),
                        make_module(ring_zmod(6), {{2, 0}}),
                        make_module(ring_zmod(4), {{2, 0}, {2, 0}}),
                        make_module(ring_product({2, 3}), {{2, 0}, {3, 1}})}) {
        for (int x = 0; x < m->size; ++x)
            CHECK(colon_element(m, x).elems == colon_oracle_finite(m, x));
    }
}

TEST_CASE("colon and annihilator examples") {
    ModulePtr m23 = zmodule({2, 3});
    CHECK(colon_element(m23, m23->from_coords({1, 0})).zgen == 3);
    CHECK(colon_element(m23, m23->from_coords({0, 1})).zgen == 2);
    CHECK(colon_element(m23, m23->from_coords({1, 1})).zgen == 1);
    CHECK(ann_element(m23, m23->from_coords({1, 1})).zgen == 6);
    CHECK(ann_module(zmodule({3, 3})).zgen == 3);
    CHECK(ann_module(zmodule({2, 4})).zgen == 4);

    /* [N:M] for a named submodule */
    ModulePtr z12 = zmodule({12});
    Submodule n = submodule_generated(z12, {4});
    CHECK(members(n) == std::vector<int>({0, 4, 8}));
    CHECK(colon_ideal(n).zgen == 4);
}

TEST_CASE("submodule lattice sizes") {
    CHECK(enumerate_submodules(zmodule({2, 2})).size() == 5);
    CHECK(enumerate_submodules(zmodule({4})).size() == 3);
    CHECK(enumerate_submodules(zmodule({5})).size() == 2);
    CHECK(enumerate_submodules(zmodule({12})).size() == 6);

    CHECK(all_submodules_cyclic(zmodule({4})));
    CHECK(all_submodules_cyclic(zmodule({6})));
    CHECK_FALSE(all_submodules_cyclic(zmodule({2, 2})));
    CHECK_FALSE(all_submodules_cyclic(zmodule({2, 4})));
}

TEST_CASE("ideal action on modules") {
    ModulePtr z4 = zmodule({4});
    CHECK(members(ideal_times_module(ideal_integers({2}), z4)) ==
          std::vector<int>({0, 2}));
    CHECK(ideal_times_module(ideal_integers({6}), zmodule({2, 3})).is_zero());
    CHECK(ideal_times_module(unit_ideal(ring_integers()), z4).is_whole());

    ModulePtr z12 = zmodule({12});
    CHECK(members(ideal_kernel(ideal_integers({2}), z12)) ==
          std::vector<int>({0, 6}));
    CHECK(ideal_kernel(ideal_integers({1}), z12).is_zero());

    Submodule n = submodule_generated(z12, {2});
    CHECK(members(ideal_times_submodule(ideal_integers({3}), n)) ==
          std::vector<int>({0, 6}));
}

TEST_CASE("structure submodules of a cyclic module") {
    ModulePtr z12 = zmodule({12});
    StructureSubmodules s = structure_submodules(z12);
    CHECK(s.socle.card() == 6);
    CHECK(members(s.radical) == std::vector<int>({0, 6}));
    CHECK(s.essoc == s.socle);
    CHECK(s.nil_set.count() == 2);
    CHECK(s.nil_set.test(0));
    CHECK(s.nil_set.test(6));
    CHECK(s.nil_closed);
    CHECK(s.singular_set.count() == 12);   /* every ann is nonzero, hence essential in Z */

    DistinguishedSubmodules d = distinguished_submodules(z12);
    CHECK(d.maximal.size() == 2);
    CHECK(d.minimal.size() == 2);
    CHECK(d.prime.size() == 2);
}

TEST_CASE("structure submodules of the Klein module") {
    ModulePtr k = zmodule({2, 2});
    StructureSubmodules s = structure_submodules(k);
    CHECK(s.socle.is_whole());
    CHECK(s.radical.is_zero());
    CHECK(s.essoc.is_whole());
    CHECK(s.nil_set.count() == 4);
    CHECK(s.nil_closed);
}

TEST_CASE("nil set need not be additively closed") {
    StructureSubmodules s = structure_submodules(zmodule({2, 8}));
    CHECK_FALSE(s.nil_closed);
}

TEST_CASE("quotients and submodules as modules") {
    ModulePtr z12 = zmodule({12});
    Submodule n = submodule_generated(z12, {4});
    ModulePtr q = quotient_module(z12, n);
    CHECK(q->size == 4);
    CHECK(module_isomorphic(q, zmodule({4})));

    StructureSubmodules s = structure_submodules(z12);
    CHECK(module_isomorphic(submodule_as_module(s.socle), zmodule({6})));
}

TEST_CASE("injectivity over finite rings") {
    CHECK(is_injective(module_from_ring(ring_zmod(4))));
    CHECK(is_injective(module_from_ring(ring_zmod(12))));
    CHECK(is_injective(module_from_ring(ring_product({2, 3}))));
    CHECK_FALSE(is_injective(make_module(ring_zmod(4), {{2, 0}})));
    CHECK_FALSE(is_injective(make_module(ring_zmod(12), {{6, 0}})));
    CHECK_THROWS_AS(is_injective(zmodule({4})), std::logic_error);
}

TEST_CASE("module isomorphism") {
    CHECK(module_isomorphic(zmodule({6}), zmodule({2, 3})));
    CHECK(module_isomorphic(zmodule({2, 3}), zmodule({3, 2})));
    CHECK_FALSE(module_isomorphic(zmodule({4}), zmodule({2, 2})));
    CHECK_FALSE(module_isomorphic(zmodule({4}), zmodule({8})));
    /* same additive group, different scalar action */
    CHECK_FALSE(module_isomorphic(module_from_ring(ring_zmod(4)),
                                  make_module(ring_zmod(4), {{2, 0}, {2, 0}})));
}

TEST_CASE("direct sum decomposition") {
    auto split = direct_sum_decomposition(zmodule({6}));
    REQUIRE(split.has_value());
    CHECK(members(split->first) == std::vector<int>({0, 3}));
    CHECK(members(split->second) == std::vector<int>({0, 2, 4}));
    CHECK_FALSE(direct_sum_decomposition(zmodule({4})).has_value());
    CHECK_FALSE(direct_sum_decomposition(zmodule({8})).has_value());
    CHECK(direct_sum_decomposition(zmodule({2, 2})).has_value());
}

TEST_CASE("multiplication modules") {
    CHECK(is_multiplication(module_from_ring(ring_zmod(12))));
    CHECK(is_multiplication(zmodule({12})));
    CHECK_FALSE(is_multiplication(zmodule({2, 2})));
    CHECK_FALSE(is_multiplication(zmodule({2, 4})));
}

TEST_CASE("submodule essentiality routes agree") {
    for (ModulePtr m : {zmodule({12}), zmodule({2, 2}), zmodule({2, 4}),
                        module_from_ring(ring_zmod(8))}) {
        for (const Submodule& n : enumerate_submodules(m))
            CHECK(is_essential_submodule(n) == is_essential_submodule_full(n));
    }
    ModulePtr z12 = zmodule({12});
    CHECK(is_essential_submodule(submodule_generated(z12, {2})));
    CHECK_FALSE(is_essential_submodule(submodule_generated(z12, {6})));
    ModulePtr k = zmodule({2, 2});
    CHECK_FALSE(is_essential_submodule(submodule_generated(k, {1})));
    CHECK(is_essential_submodule(whole_submodule(k)));
}
