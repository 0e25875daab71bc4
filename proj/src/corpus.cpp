#include "annigraph/corpus.hpp"

#include <algorithm>
#include <numeric>

#include "annigraph/util.hpp"

namespace annigraph {

namespace {

int64_t factor_product(const std::vector<ModuleFactor>& fs) {
    int64_t p = 1;
    for (const ModuleFactor& f : fs) p *= f.order;
    return p;
}

std::vector<std::pair<int64_t, int>> sort_key(const InstanceSpec& inst) {
    std::vector<std::pair<int64_t, int>> key;
    key.reserve(inst.factors.size());
    for (const ModuleFactor& f : inst.factors) key.emplace_back(f.order, f.comp);
    return key;
}

void sort_instances(std::vector<InstanceSpec>& v) {
    std::stable_sort(v.begin(), v.end(), [](const InstanceSpec& a, const InstanceSpec& b) {
        int64_t pa = factor_product(a.factors), pb = factor_product(b.factors);
        if (pa != pb) return pa < pb;
        return sort_key(a) < sort_key(b);
    });
}

/* invariant-factor chains d1 | d2 | ..., every factor at least 2 */
void extend_chains(std::vector<std::vector<int64_t>>& out, std::vector<int64_t>& cur,
                   int64_t prod, int64_t bound) {
    int64_t step = cur.empty() ? 1 : cur.back();
    int64_t first = cur.empty() ? 2 : cur.back();
    for (int64_t d = first; prod * d <= bound; d += step) {
        cur.push_back(d);
        out.push_back(cur);
        extend_chains(out, cur, prod * d, bound);
        cur.pop_back();
    }
}

/* nondecreasing multisets over `options`, product of orders bounded */
void extend_multisets(std::vector<std::vector<ModuleFactor>>& out,
                      const std::vector<ModuleFactor>& options, std::size_t start,
                      std::vector<ModuleFactor>& cur, int64_t prod, int64_t bound) {
    for (std::size_t i = start; i < options.size(); ++i) {
        if (prod * options[i].order > bound) continue;
        cur.push_back(options[i]);
        out.push_back(cur);
        extend_multisets(out, options, i, cur, prod * options[i].order, bound);
        cur.pop_back();
    }
}

std::vector<InstanceSpec> instances_for_ring(const std::string& ring,
                                             const std::vector<int64_t>& moduli,
                                             int64_t bound) {
    std::vector<ModuleFactor> options;
    for (std::size_t c = 0; c < moduli.size(); ++c)
        for (int64_t d : divisors(moduli[c]))
            if (d >= 2) options.push_back({d, static_cast<int>(c)});
    std::sort(options.begin(), options.end(), [](const ModuleFactor& a, const ModuleFactor& b) {
        return std::pair(a.order, a.comp) < std::pair(b.order, b.comp);
    });
    std::vector<std::vector<ModuleFactor>> sets;
    std::vector<ModuleFactor> cur;
    extend_multisets(sets, options, 0, cur, 1, bound);
    std::vector<InstanceSpec> out;
    out.reserve(sets.size());
    for (auto& fs : sets) out.push_back({ring, std::move(fs)});
    sort_instances(out);
    return out;
}

} // namespace

std::string InstanceSpec::name() const {
    std::string s = "[";
    bool tagged = ring.find(" x ") != std::string::npos;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(factors[i].order);
        if (tagged) s += "@" + std::to_string(factors[i].comp);
    }
    s += "] over " + ring;
    return s;
}

std::vector<InstanceSpec> enumerate_corpus(const CorpusSpec& spec) {
    std::vector<InstanceSpec> out;
    if (spec.integers) {
        std::vector<std::vector<int64_t>> chains;
        std::vector<int64_t> cur;
        extend_chains(chains, cur, 1, spec.max_module_order);
        std::vector<InstanceSpec> block;
        block.reserve(chains.size());
        for (const auto& ch : chains) {
            InstanceSpec inst;
            inst.ring = "Z";
            for (int64_t d : ch) inst.factors.push_back({d, 0});
            block.push_back(std::move(inst));
        }
        sort_instances(block);
        out.insert(out.end(), block.begin(), block.end());
    }
    if (spec.zmod) {
        for (int64_t n = 2; n <= spec.max_ring_order; ++n) {
            auto block = instances_for_ring("Z/" + std::to_string(n), {n}, spec.max_module_order);
            out.insert(out.end(), block.begin(), block.end());
        }
    }
    if (spec.product) {
        for (int64_t n1 = 2; n1 * n1 <= spec.max_ring_order; ++n1) {
            for (int64_t n2 = n1; n1 * n2 <= spec.max_ring_order; ++n2) {
                std::string ring = "Z/" + std::to_string(n1) + " x Z/" + std::to_string(n2);
                auto block = instances_for_ring(ring, {n1, n2}, spec.max_module_order);
                out.insert(out.end(), block.begin(), block.end());
            }
        }
    }
    return out;
}

ModulePtr instantiate(const InstanceSpec& inst) {
    return make_module(parse_ring(inst.ring), inst.factors);
}

} // namespace annigraph
