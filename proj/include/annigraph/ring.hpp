#ifndef ANNIGRAPH_RING_HPP
#define ANNIGRAPH_RING_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "annigraph/bitset.hpp"

namespace annigraph {

enum class RingKind { integers, finite };

// Commutative unital ring. The integers are kept symbolic (no element
// enumeration); finite rings are table-backed. Product-form rings
// (ZMod(n) and finite products of them) carry their moduli so ideals get
// canonical divisor-tuple generators; rings built from raw tables (e.g.
// fraction rings) leave `moduli` empty.
struct Ring {
    RingKind kind = RingKind::finite;
    int size = 0;                     // 0 for the integers
    std::vector<int64_t> moduli;      // product decomposition, empty for table rings
    std::vector<int> add, mul;        // size*size row-major tables
    int one = 0;
    std::vector<std::string> labels;
    std::string name;

    bool finite() const { return kind == RingKind::finite; }

    int addi(int a, int b) const { return add[static_cast<std::size_t>(a) * size + b]; }
    int muli(int a, int b) const { return mul[static_cast<std::size_t>(a) * size + b]; }
    int neg(int a) const;
    bool is_unit(int a) const;

    // element <-> coordinate conversion for product-form rings
    std::vector<int64_t> coords(int a) const;
    int from_coords(const std::vector<int64_t>& c) const;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr ring_integers();
RingPtr ring_zmod(int64_t n);
RingPtr ring_product(const std::vector<int64_t>& moduli);

// Builds a finite ring from explicit tables and checks the commutative
// unital ring axioms; throws std::invalid_argument when they fail.
RingPtr ring_from_tables(std::vector<int> add, std::vector<int> mul, int one,
                         std::vector<std::string> labels, std::string name);

// "Z", "Z/6", "Z/2 x Z/3" (whitespace around 'x' optional)
RingPtr parse_ring(const std::string& text);

// asserts the ring axioms on table rings; used by tests and constructions
void check_ring_axioms(const Ring& r);

} // namespace annigraph

#endif
