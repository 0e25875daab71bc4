#ifndef ANNIGRAPH_MODULE_HPP
#define ANNIGRAPH_MODULE_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "annigraph/ideal.hpp"
#include "annigraph/ring.hpp"

namespace annigraph {

// Cyclic factor of order `order`; over a product ring `comp` names the
// ring component acting on it (the other components act as zero).
struct ModuleFactor {
    int64_t order = 0;
    int comp = 0;
    bool operator==(const ModuleFactor& o) const { return order == o.order && comp == o.comp; }
};

// Finite module, table-backed. Scalars are ring element ids for finite
// rings; over the integers the action factors through Z/exponent, so
// `smul` has `exponent` rows and act() reduces the scalar first.
// Factor-built modules keep their factors for coordinate access and the
// colon-ideal generator shortcut; modules built from raw tables (e.g.
// fraction modules, quotients) leave `factors` empty.
struct Module {
    RingPtr ring;
    std::vector<ModuleFactor> factors;
    int size = 0;
    int64_t exponent = 1;           // additive exponent
    int64_t srows = 0;              // rows in smul
    std::vector<int> add;           // size*size row-major
    std::vector<int> negt;          // size
    std::vector<int> smul;          // srows*size row-major
    std::vector<std::string> labels;
    std::string name;

    int addm(int a, int b) const { return add[static_cast<std::size_t>(a) * size + b]; }
    int negm(int a) const { return negt[static_cast<std::size_t>(a)]; }
    int subm(int a, int b) const { return addm(a, negm(b)); }

    // scalar action; over the integers `r` is any integer, otherwise a
    // ring element id
    int act(int64_t r, int m) const {
        if (!ring->finite()) r = ((r % exponent) + exponent) % exponent;
        return smul[static_cast<std::size_t>(r) * size + m];
    }

    std::vector<int64_t> coords(int m) const;          // factor-built only
    int from_coords(const std::vector<int64_t>& c) const;
    int64_t order_of(int m) const;                     // additive order
};

using ModulePtr = std::shared_ptr<const Module>;

// module with the given cyclic factors; over product rings each factor
// order must divide the modulus of its component, over Z and Z/n the
// component tags must be zero
ModulePtr make_module(const RingPtr& ring, const std::vector<ModuleFactor>& factors);

// a finite ring as a module over itself
ModulePtr module_from_ring(const RingPtr& ring);

// module from explicit tables; checks the module axioms (throws
// std::invalid_argument on failure)
ModulePtr module_from_tables(const RingPtr& ring, std::vector<int> add,
                             std::vector<int> smul, std::vector<std::string> labels,
                             std::string name);

void check_module_axioms(const Module& m);

struct Submodule {
    ModulePtr mod;
    DynBitset elems;

    bool is_zero() const { return elems.count() == 1; }
    bool is_whole() const { return elems.count() == static_cast<std::size_t>(mod->size); }
    std::size_t card() const { return elems.count(); }
    bool contains(int m) const { return elems.test(static_cast<std::size_t>(m)); }
    bool operator==(const Submodule& o) const { return elems == o.elems; }
    bool subset_of(const Submodule& o) const { return elems.subset_of(o.elems); }
    bool proper_subset_of(const Submodule& o) const { return subset_of(o) && !(*this == o); }
    std::string describe() const;
};

Submodule zero_submodule(const ModulePtr& mod);
Submodule whole_submodule(const ModulePtr& mod);
Submodule submodule_generated(const ModulePtr& mod, const std::vector<int>& gens);
Submodule cyclic_submodule(const ModulePtr& mod, int m);   // Rm
Submodule submodule_sum(const Submodule& a, const Submodule& b);
Submodule submodule_intersect(const Submodule& a, const Submodule& b);

// [N : M] = {r : rM is contained in N}
Ideal colon_ideal(const Submodule& n);
// [x : M] = [Rx : M]
Ideal colon_element(const ModulePtr& mod, int x);
// ann(m) = {r : rm = 0}
Ideal ann_element(const ModulePtr& mod, int m);
// ann(M) = [0 : M]
Ideal ann_module(const ModulePtr& mod);

// image submodule IM (additively closed since I is an ideal)
Submodule ideal_times_module(const Ideal& i, const ModulePtr& mod);
// IN for a submodule N
Submodule ideal_times_submodule(const Ideal& i, const Submodule& n);
// {m : Im = 0}
Submodule ideal_kernel(const Ideal& i, const ModulePtr& mod);

// all submodules: join-closure of the cyclic ones, sorted by
// (cardinality, element set)
std::vector<Submodule> enumerate_submodules(const ModulePtr& mod);

// checks that joins of cyclic submodules stay cyclic (equivalent to every
// submodule being cyclic, without materializing the lattice)
bool all_submodules_cyclic(const ModulePtr& mod);

// essentiality: meets every nonzero submodule nontrivially. Fast route
// checks nonzero cyclics (sufficient); full route walks the lattice, which
// callers can pass in to avoid re-enumeration.
bool is_essential_submodule(const Submodule& n);
bool is_essential_submodule_full(const Submodule& n);
bool is_essential_submodule_full(const Submodule& n, const std::vector<Submodule>& lattice);

struct StructureSubmodules {
    Submodule socle;        // sum of simple submodules
    Submodule radical;      // intersection of maximal submodules
    Submodule essoc;        // socle when essential, zero otherwise
    DynBitset nil_set;      // {x : [x:M]x = 0}; need not be a submodule
    bool nil_closed = true; // whether nil_set is closed under addition
    DynBitset singular_set; // {m : ann(m) essential in R}
};
StructureSubmodules structure_submodules(const ModulePtr& mod);

struct DistinguishedSubmodules {
    std::vector<Submodule> maximal;
    std::vector<Submodule> minimal;   // the simple submodules
    std::vector<Submodule> prime;     // N proper, rm in N forces m in N or r in [N:M]
};
DistinguishedSubmodules distinguished_submodules(const ModulePtr& mod);

// every submodule of the form IM
bool is_multiplication(const ModulePtr& mod);

// M/N with least-id coset representatives
ModulePtr quotient_module(const ModulePtr& mod, const Submodule& n);

// a submodule as a standalone module
ModulePtr submodule_as_module(const Submodule& n);

// Baer test over finite product-form rings, where every ideal is
// principal: a hom (g) -> M is an element m with ann(g) inside ann(m) and
// extends to R exactly when m lies in gM. Throws std::logic_error for the
// integers and table rings.
bool is_injective(const ModulePtr& mod);

bool module_isomorphic(const ModulePtr& a, const ModulePtr& b);

// first (by lattice order) pair of nonzero submodules with zero meet and
// full join, if any
std::optional<std::pair<Submodule, Submodule>> direct_sum_decomposition(const ModulePtr& mod);

} // namespace annigraph

#endif
