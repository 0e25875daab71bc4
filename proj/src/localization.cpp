#include "annigraph/localization.hpp"

#include <stdexcept>

#include "annigraph/util.hpp"

namespace annigraph {

DynBitset zero_divisors_on_module(const ModulePtr& mod) {
    if (!mod->ring->finite()) throw std::logic_error("zero divisors on a module need a finite ring");
    DynBitset c(static_cast<std::size_t>(mod->ring->size));
    for (int r = 0; r < mod->ring->size; ++r)
        for (int m = 1; m < mod->size; ++m)
            if (mod->act(r, m) == 0) {
                c.set(static_cast<std::size_t>(r));
                break;
            }
    if (mod->size > 1) c.set(0);
    return c;
}

int FractionRing::frac(int r, int s) const {
    if (!denoms.test(static_cast<std::size_t>(s))) throw std::invalid_argument("denominator not in T");
    int sb = of_base[static_cast<std::size_t>(s)];
    for (int u = 0; u < ring->size; ++u)
        if (ring->muli(sb, u) == ring->one)
            return ring->muli(of_base[static_cast<std::size_t>(r)], u);
    throw std::logic_error("denominator image not invertible");
}

FractionRing fraction_ring(const RingPtr& base, const DynBitset& denoms) {
    if (!base->finite()) throw std::logic_error("fraction ring needs a finite base ring");
    if (!denoms.test(static_cast<std::size_t>(base->one)))
        throw std::invalid_argument("T must contain 1");
    if (denoms.test(0)) throw std::invalid_argument("T must not contain 0");
    denoms.for_each([&](std::size_t s) {
        denoms.for_each([&](std::size_t t) {
            if (!denoms.test(static_cast<std::size_t>(base->muli(static_cast<int>(s), static_cast<int>(t)))))
                throw std::invalid_argument("T not multiplicatively closed");
        });
    });

    FractionRing out;
    out.base = base;
    out.denoms = denoms;
    out.kernel = DynBitset(static_cast<std::size_t>(base->size));
    for (int r = 0; r < base->size; ++r) {
        bool killed = false;
        denoms.for_each([&](std::size_t t) {
            if (base->muli(static_cast<int>(t), r) == 0) killed = true;
        });
        if (killed) out.kernel.set(static_cast<std::size_t>(r));
    }

    /* trivial kernel: each t in T is cancellable, hence a unit of the finite
       base ring, and r/t -> r t^{-1} identifies the fractions with base itself */
    if (out.kernel.count() == 1) {
        out.of_base.resize(static_cast<std::size_t>(base->size));
        for (int r = 0; r < base->size; ++r) out.of_base[static_cast<std::size_t>(r)] = r;
        out.ring = base;
        denoms.for_each([&](std::size_t t) {
            if (!base->is_unit(static_cast<int>(t)))
                throw std::logic_error("denominator image not a unit in the quotient");
        });
        return out;
    }

    /* least-representative cosets of K */
    out.of_base.assign(static_cast<std::size_t>(base->size), -1);
    std::vector<int> reps;
    for (int r = 0; r < base->size; ++r) {
        if (out.of_base[static_cast<std::size_t>(r)] >= 0) continue;
        out.kernel.for_each([&](std::size_t k) {
            out.of_base[static_cast<std::size_t>(base->addi(r, static_cast<int>(k)))] =
                static_cast<int>(reps.size());
        });
        reps.push_back(r);
    }
    int n = static_cast<int>(reps.size());
    std::vector<int> add(static_cast<std::size_t>(n) * n), mul(static_cast<std::size_t>(n) * n);
    std::vector<std::string> labels(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a) {
        labels[static_cast<std::size_t>(a)] = base->labels[static_cast<std::size_t>(reps[static_cast<std::size_t>(a)])];
        for (int b = 0; b < n; ++b) {
            add[static_cast<std::size_t>(a) * n + b] =
                out.of_base[static_cast<std::size_t>(base->addi(reps[static_cast<std::size_t>(a)], reps[static_cast<std::size_t>(b)]))];
            mul[static_cast<std::size_t>(a) * n + b] =
                out.of_base[static_cast<std::size_t>(base->muli(reps[static_cast<std::size_t>(a)], reps[static_cast<std::size_t>(b)]))];
        }
    }
    out.ring = ring_from_tables(std::move(add), std::move(mul),
                                out.of_base[static_cast<std::size_t>(base->one)], std::move(labels),
                                base->name + " fractions");
    denoms.for_each([&](std::size_t t) {
        if (!out.ring->is_unit(out.of_base[t]))
            throw std::logic_error("denominator image not a unit in the quotient");
    });
    return out;
}

FractionModule fraction_module(const ModulePtr& base) {
    FractionModule out;
    out.base = base;
    DynBitset c = zero_divisors_on_module(base);
    DynBitset t(static_cast<std::size_t>(base->ring->size));
    for (int r = 0; r < base->ring->size; ++r)
        if (!c.test(static_cast<std::size_t>(r))) t.set(static_cast<std::size_t>(r));
    out.ring = fraction_ring(base->ring, t);

    /* K kills M: tr = 0 with t outside C(M) forces rm = 0 for all m */
    out.ring.kernel.for_each([&](std::size_t k) {
        for (int m = 0; m < base->size; ++m)
            if (base->act(static_cast<int64_t>(k), m) != 0)
                throw std::logic_error("fraction-ring kernel does not annihilate the module");
    });

    /* identity localization: unit denominators already act invertibly on M */
    if (out.ring.ring == base->ring) {
        out.mod = base;
        return out;
    }

    const RingPtr& fr = out.ring.ring;
    std::vector<int> rep(static_cast<std::size_t>(fr->size), -1);
    for (int r = 0; r < base->ring->size; ++r) {
        int c2 = out.ring.of_base[static_cast<std::size_t>(r)];
        if (rep[static_cast<std::size_t>(c2)] < 0) rep[static_cast<std::size_t>(c2)] = r;
    }
    std::vector<int> smul(static_cast<std::size_t>(fr->size) * base->size);
    for (int c2 = 0; c2 < fr->size; ++c2)
        for (int m = 0; m < base->size; ++m)
            smul[static_cast<std::size_t>(c2) * base->size + m] =
                base->act(rep[static_cast<std::size_t>(c2)], m);
    out.mod = module_from_tables(fr, base->add, std::move(smul), base->labels,
                                 base->name + " localized");
    return out;
}

ModulePtr reduce_to_finite(const ModulePtr& mod) {
    if (mod->ring->finite()) throw std::logic_error("reduce_to_finite expects a module over the integers");
    int64_t e = mod->exponent;
    int64_t m = e * smallest_prime_factor(e);
    RingPtr ring = ring_zmod(m);
    std::vector<ModuleFactor> fs = mod->factors;
    for (ModuleFactor& f : fs) f.comp = 0;
    return make_module(ring, fs);
}

} // namespace annigraph
