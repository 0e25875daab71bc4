#include <doctest.h>

#include <stdexcept>

#include "annigraph/ring.hpp"

using namespace annigraph;

TEST_CASE("residue ring arithmetic") {
    RingPtr r = ring_zmod(12);
    CHECK(r->finite());
    CHECK(r->size == 12);
    CHECK(r->one == 1);
    CHECK(r->addi(7, 8) == 3);
    CHECK(r->muli(7, 8) == 8);
    CHECK(r->neg(5) == 7);
    CHECK(r->neg(0) == 0);
    CHECK(r->is_unit(5));
    CHECK(r->is_unit(11));
    CHECK_FALSE(r->is_unit(4));
    CHECK_FALSE(r->is_unit(0));
    CHECK(r->labels[10] == "10");
}

TEST_CASE("integers stay symbolic") {
    RingPtr z = ring_integers();
    CHECK_FALSE(z->finite());
    CHECK(z->size == 0);
}

TEST_CASE("product ring coordinates") {
    RingPtr r = ring_product({2, 3});
    CHECK(r->size == 6);
    REQUIRE(r->moduli == std::vector<int64_t>{2, 3});
    for (int a = 0; a < r->size; ++a) CHECK(r->from_coords(r->coords(a)) == a);
    int e = r->from_coords({1, 0});
    int f = r->from_coords({0, 1});
    CHECK(r->muli(e, f) == 0);
    CHECK(r->addi(e, f) == r->one);
    CHECK(r->muli(e, e) == e);
    /* units are the elements with every coordinate a unit */
    int u = r->from_coords({1, 2});
    CHECK(r->is_unit(u));
    CHECK_FALSE(r->is_unit(e));
}

TEST_CASE("ring parser") {
    CHECK_FALSE(parse_ring("Z")->finite());
    CHECK(parse_ring("Z/6")->size == 6);
    CHECK(parse_ring("Z/2 x Z/3")->size == 6);
    CHECK(parse_ring("Z/2 x Z/3")->moduli == std::vector<int64_t>({2, 3}));
    CHECK(parse_ring("Z/2x Z/9")->size == 18);
    CHECK(parse_ring("Z/4 x Z/2 x Z/2")->size == 16);
    CHECK_THROWS_AS(parse_ring("Q"), std::invalid_argument);
    CHECK_THROWS_AS(parse_ring("Z/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_ring("Z/1x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_ring(""), std::invalid_argument);
}

TEST_CASE("axiom check accepts the builtins and rejects broken tables") {
    check_ring_axioms(*ring_zmod(7));
    check_ring_axioms(*ring_product({2, 2}));

    /* Z/2 with a corrupted product: 1*1 = 0 kills the identity axiom */
    std::vector<int> add = {0, 1, 1, 0};
    std::vector<int> bad_mul = {0, 0, 0, 0};
    CHECK_THROWS_AS(ring_from_tables(add, bad_mul, 1, {"0", "1"}, "broken"),
                    std::invalid_argument);

    std::vector<int> good_mul = {0, 0, 0, 1};
    RingPtr r2 = ring_from_tables(add, good_mul, 1, {"0", "1"}, "F2");
    CHECK(r2->size == 2);
    CHECK(r2->moduli.empty());
    CHECK(r2->is_unit(1));
}
