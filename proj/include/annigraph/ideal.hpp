#ifndef ANNIGRAPH_IDEAL_HPP
#define ANNIGRAPH_IDEAL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "annigraph/ring.hpp"

namespace annigraph {

// Ideal of a ring. Over the integers only the nonnegative generator is
// stored (0 denotes the zero ideal). Over finite rings the element set is
// the source of truth; product-form rings additionally carry a canonical
// divisor-tuple generator (entry d_i divides n_i, with d_i = n_i encoding
// the zero component).
struct Ideal {
    RingPtr ring;
    int64_t zgen = 0;            // integers only
    DynBitset elems;             // finite only
    std::vector<int64_t> gens;   // divisor tuple; empty for table rings

    bool is_zero() const;
    bool is_unit_ideal() const;
    std::size_t card() const;    // finite only
    bool contains(int elem) const { return elems.test(static_cast<std::size_t>(elem)); }
    bool operator==(const Ideal& o) const;
    bool subset_of(const Ideal& o) const;
    bool proper_subset_of(const Ideal& o) const { return subset_of(o) && !(*this == o); }
    std::string describe() const;
};

// integer ideal g*Z from a list of integer generators (gcd); empty list
// gives the zero ideal
Ideal ideal_integers(const std::vector<int64_t>& gens);

// ideal of a finite ring generated by the given element ids
Ideal ideal_span(const RingPtr& ring, const std::vector<int>& gens);

// wraps an already ideal-closed element set (caller guarantees closure);
// fills in the canonical divisor tuple on product-form rings
Ideal ideal_from_elems(RingPtr ring, DynBitset elems);

Ideal zero_ideal(const RingPtr& ring);
Ideal unit_ideal(const RingPtr& ring);

Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_intersect(const Ideal& a, const Ideal& b);
Ideal ideal_sum(const Ideal& a, const Ideal& b);

// all ideals of a finite ring, ordered by (cardinality, element set);
// product-form rings enumerate divisor tuples, table rings close the
// principal ideals under sums
std::vector<Ideal> enumerate_ideals(const RingPtr& ring);

// essentiality: meets every nonzero ideal nontrivially. The fast route
// checks principal ideals only (sufficient: every nonzero ideal contains a
// nonzero principal one); the full route walks the whole ideal lattice.
bool is_essential_ideal(const Ideal& i);
bool is_essential_ideal_full(const Ideal& i);

struct RadicalIdeals {
    Ideal nil;        // nilpotent elements
    Ideal jacobson;   // intersection of maximal ideals
    Ideal socle;      // sum of minimal nonzero ideals
};
RadicalIdeals radical_ideals(const RingPtr& ring);

bool is_regular_ring(const RingPtr& ring);   // von Neumann regular

// {r : ann(r) is an essential ideal}; for the integers this is {0}
Ideal singular_set_ring(const RingPtr& ring);

std::vector<int> idempotents(const RingPtr& ring);

// annihilator of a ring element
Ideal ann_ring_element(const RingPtr& ring, int a);

} // namespace annigraph

#endif
