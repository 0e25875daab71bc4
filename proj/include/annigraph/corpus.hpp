#ifndef ANNIGRAPH_CORPUS_HPP
#define ANNIGRAPH_CORPUS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "annigraph/module.hpp"

namespace annigraph {

// Which scalar rings the corpus ranges over and how large the instances
// get. Defaults keep a full run in the minutes range.
struct CorpusSpec {
    bool integers = true;
    bool zmod = true;
    bool product = true;
    int64_t max_module_order = 64;
    int64_t max_ring_order = 36;
};

// One corpus entry: ring syntax plus module factors, instantiable on
// demand so the corpus itself stays cheap to enumerate.
struct InstanceSpec {
    std::string ring;                    // "Z", "Z/6", "Z/2 x Z/3"
    std::vector<ModuleFactor> factors;

    std::string name() const;
};

// Deterministic enumeration, grouped by ring kind (integers, then Z/n,
// then two-component products). Integers modules are invariant-factor
// chains d1 | d2 | ... with product bounded by max_module_order; finite
// rings use nondecreasing multisets of factors whose orders divide the
// acting component's modulus. Within a ring, instances are sorted by
// (module order, factor list).
std::vector<InstanceSpec> enumerate_corpus(const CorpusSpec& spec);

ModulePtr instantiate(const InstanceSpec& inst);

} // namespace annigraph

#endif
