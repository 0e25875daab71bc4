#ifndef ANNIGRAPH_LOCALIZATION_HPP
#define ANNIGRAPH_LOCALIZATION_HPP

#include <vector>

#include "annigraph/module.hpp"

namespace annigraph {

// C(M) = {r : rm = 0 for some nonzero m}; always contains 0
DynBitset zero_divisors_on_module(const ModulePtr& mod);

// T^{-1}R for a finite ring and a multiplicatively closed T containing 1
// and not 0. Since images of T become cancellable, hence invertible, in
// the finite quotient R/K with K = {r : tr = 0 for some t in T}, the
// fraction ring is that quotient; the construction asserts invertibility.
struct FractionRing {
    RingPtr base;
    DynBitset denoms;            // T
    DynBitset kernel;            // K
    RingPtr ring;                // T^{-1}R as a table ring
    std::vector<int> of_base;    // r -> class of r/1

    int frac(int r, int s) const;   // class of r/s, s in T
};

FractionRing fraction_ring(const RingPtr& base, const DynBitset& denoms);

// T^{-1}M at T = R \ C(M). No nonzero m is killed by any t in T, so the
// underlying group is unchanged and each fraction-ring class acts through
// any of its base representatives (K annihilates M).
struct FractionModule {
    FractionRing ring;
    ModulePtr base;
    ModulePtr mod;               // over ring.ring, same element ids as base
};

FractionModule fraction_module(const ModulePtr& base);

// moves a module over the integers to Z/m with m = exponent * smallest
// prime factor of the exponent. Keeping a spare prime factor means no
// colon-ideal generator (a divisor of the exponent) becomes zero or a
// unit, so membership and adjacency in all three graph flavors carry over
// element-for-element.
ModulePtr reduce_to_finite(const ModulePtr& mod);

} // namespace annigraph

#endif
