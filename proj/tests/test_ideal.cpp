#include <doctest.h>

#include <algorithm>
#include <vector>

#include "annigraph/ideal.hpp"
#include "annigraph/ring.hpp"

using namespace annigraph;

namespace {

std::vector<int> members(const Ideal& i) {
    std::vector<int> out;
    for (int a = 0; a < i.ring->size; ++a)
        if (i.contains(a)) out.push_back(a);
    return out;
}

} // namespace

TEST_CASE("integer ideals reduce to a gcd generator") {
    CHECK(ideal_integers({4, 6}).zgen == 2);
    CHECK(ideal_integers({}).is_zero());
    CHECK(ideal_integers({0, 0}).is_zero());
    CHECK(ideal_integers({1, 5}).is_unit_ideal());
    CHECK(ideal_integers({-6, 9}).zgen == 3);

    Ideal a = ideal_integers({4});
    Ideal b = ideal_integers({6});
    CHECK(ideal_product(a, b).zgen == 24);
    CHECK(ideal_intersect(a, b).zgen == 12);
    CHECK(ideal_sum(a, b).zgen == 2);
    CHECK(a.subset_of(ideal_integers({2})));
    CHECK(ideal_integers({2}).proper_subset_of(unit_ideal(ring_integers())));

    /* every nonzero ideal of Z is essential: gZ meets hZ in ghZ != 0 */
    CHECK(is_essential_ideal(a));
    CHECK_FALSE(is_essential_ideal(zero_ideal(ring_integers())));
}

TEST_CASE("ideal lattice of a residue ring") {
    RingPtr r = ring_zmod(12);
    std::vector<Ideal> all = enumerate_ideals(r);
    REQUIRE(all.size() == 6);
    std::vector<std::size_t> cards;
    for (const auto& i : all) cards.push_back(i.card());
    CHECK(cards == std::vector<std::size_t>({1, 2, 3, 4, 6, 12}));
    CHECK(all.front().is_zero());
    CHECK(all.back().is_unit_ideal());

    CHECK(members(ideal_span(r, {8})) == std::vector<int>({0, 4, 8}));
    CHECK(members(ideal_span(r, {6})) == std::vector<int>({0, 6}));
    CHECK(ideal_span(r, {8, 6}) == ideal_span(r, {2}));
}

TEST_CASE("ideal arithmetic in residue rings") {
    RingPtr r4 = ring_zmod(4);
    Ideal two4 = ideal_span(r4, {2});
    CHECK(ideal_product(two4, two4).is_zero());

    RingPtr r12 = ring_zmod(12);
    Ideal two12 = ideal_span(r12, {2});
    CHECK(ideal_product(two12, two12) == ideal_span(r12, {4}));
    CHECK(ideal_intersect(ideal_span(r12, {4}), ideal_span(r12, {6})) ==
          ideal_span(r12, {0}));
    CHECK(ideal_sum(ideal_span(r12, {4}), ideal_span(r12, {6})) == two12);
}

TEST_CASE("radical and socle ideals") {
    RingPtr r = ring_zmod(12);
    RadicalIdeals rad = radical_ideals(r);
    CHECK(members(rad.nil) == std::vector<int>({0, 6}));
    CHECK(rad.jacobson == rad.nil);
    CHECK(members(rad.socle) == std::vector<int>({0, 2, 4, 6, 8, 10}));

    /* squarefree modulus: no nilpotents, everything is a sum of minimals */
    RadicalIdeals rad6 = radical_ideals(ring_zmod(6));
    CHECK(rad6.nil.is_zero());
    CHECK(rad6.jacobson.is_zero());
    CHECK(rad6.socle.is_unit_ideal());
}

TEST_CASE("singular set and regularity") {
    CHECK(members(singular_set_ring(ring_zmod(12))) == std::vector<int>({0, 6}));
    CHECK(singular_set_ring(ring_zmod(6)).is_zero());
    CHECK(singular_set_ring(ring_integers()).is_zero());

    CHECK(is_regular_ring(ring_zmod(6)));
    CHECK_FALSE(is_regular_ring(ring_zmod(4)));
    CHECK_FALSE(is_regular_ring(ring_zmod(12)));
    CHECK_FALSE(is_regular_ring(ring_integers()));
    CHECK(is_regular_ring(ring_product({2, 3})));
}

TEST_CASE("idempotents") {
    CHECK(idempotents(ring_zmod(6)) == std::vector<int>({0, 1, 3, 4}));
    CHECK(idempotents(ring_zmod(8)) == std::vector<int>({0, 1}));
    CHECK(idempotents(ring_product({2, 2})).size() == 4);
}

TEST_CASE("element annihilators") {
    RingPtr r = ring_zmod(12);
    CHECK(members(ann_ring_element(r, 8)) == std::vector<int>({0, 3, 6, 9}));
    CHECK(ann_ring_element(r, 1).is_zero());
    CHECK(ann_ring_element(r, 0).is_unit_ideal());
}

TEST_CASE("essentiality routes agree on whole lattices") {
    for (int n : {8, 12, 30}) {
        RingPtr r = ring_zmod(n);
        for (const Ideal& i : enumerate_ideals(r))
            CHECK(is_essential_ideal(i) == is_essential_ideal_full(i));
    }
    /* Z/12: essential ideals are exactly those containing the socle's
       minimal pieces {0,6} and {0,4,8}, i.e. 2Z/12Z and the whole ring */
    RingPtr r12 = ring_zmod(12);
    CHECK(is_essential_ideal(ideal_span(r12, {2})));
    CHECK(is_essential_ideal(unit_ideal(r12)));
    CHECK_FALSE(is_essential_ideal(ideal_span(r12, {6})));
    CHECK_FALSE(is_essential_ideal(ideal_span(r12, {4})));
}
