#include "annigraph/ideal.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "annigraph/util.hpp"

namespace annigraph {

namespace {

void require_finite(const Ideal& i) {
    if (!i.ring->finite()) throw std::logic_error("operation needs a finite ring");
}

// additive closure of the bits already set; assumes scalar-closedness is
// either already present or irrelevant to the caller
void close_under_addition(const Ring& r, DynBitset& s) {
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<int> cur = s.to_vector();
        for (int a : cur)
            for (int b : cur) {
                int c = r.addi(a, b);
                if (!s.test(c)) {
                    s.set(c);
                    changed = true;
                }
            }
    }
}

std::vector<int64_t> canonical_divisor_tuple(const Ring& r, const DynBitset& elems) {
    std::vector<int64_t> d(r.moduli.size());
    for (std::size_t i = 0; i < r.moduli.size(); ++i) d[i] = r.moduli[i];
    elems.for_each([&](std::size_t e) {
        auto c = r.coords(static_cast<int>(e));
        for (std::size_t i = 0; i < c.size(); ++i)
            if (c[i] != 0) d[i] = std::gcd(d[i], c[i]);
    });
    return d;
}

DynBitset elems_of_divisor_tuple(const Ring& r, const std::vector<int64_t>& d) {
    DynBitset s(static_cast<std::size_t>(r.size));
    for (int e = 0; e < r.size; ++e) {
        auto c = r.coords(e);
        bool in = true;
        for (std::size_t i = 0; i < c.size() && in; ++i) in = c[i] % d[i] == 0;
        if (in) s.set(static_cast<std::size_t>(e));
    }
    return s;
}

} // namespace

Ideal ideal_from_elems(RingPtr ring, DynBitset elems) {
    Ideal i;
    i.ring = std::move(ring);
    i.elems = std::move(elems);
    if (!i.ring->moduli.empty()) i.gens = canonical_divisor_tuple(*i.ring, i.elems);
    return i;
}

bool Ideal::is_zero() const {
    if (!ring->finite()) return zgen == 0;
    return elems.count() == 1;
}

bool Ideal::is_unit_ideal() const {
    if (!ring->finite()) return zgen == 1;
    return elems.count() == static_cast<std::size_t>(ring->size);
}

std::size_t Ideal::card() const {
    require_finite(*this);
    return elems.count();
}

bool Ideal::operator==(const Ideal& o) const {
    if (ring->finite() != o.ring->finite()) return false;
    if (!ring->finite()) return zgen == o.zgen;
    return elems == o.elems;
}

bool Ideal::subset_of(const Ideal& o) const {
    if (!ring->finite()) {
        // g*Z is contained in h*Z iff h divides g
        if (zgen == 0) return true;
        if (o.zgen == 0) return false;
        return zgen % o.zgen == 0;
    }
    return elems.subset_of(o.elems);
}

std::string Ideal::describe() const {
    if (!ring->finite()) return zgen == 0 ? "(0)" : "(" + std::to_string(zgen) + ")";
    if (!gens.empty()) {
        std::string s = "(";
        for (std::size_t i = 0; i < gens.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(gens[i] == ring->moduli[i] ? 0 : gens[i]);
        }
        return s + ")";
    }
    std::string s = "{";
    bool first = true;
    elems.for_each([&](std::size_t e) {
        if (!first) s += ",";
        s += ring->labels[e];
        first = false;
    });
    return s + "}";
}

Ideal ideal_integers(const std::vector<int64_t>& gens) {
    Ideal i;
    i.ring = ring_integers();
    int64_t g = 0;
    for (int64_t x : gens) g = std::gcd(g, x);
    i.zgen = g < 0 ? -g : g;
    return i;
}

Ideal ideal_span(const RingPtr& ring, const std::vector<int>& gens) {
    if (!ring->finite()) throw std::logic_error("ideal_span needs a finite ring; use ideal_integers");
    DynBitset s(static_cast<std::size_t>(ring->size));
    s.set(0);
    for (int g : gens)
        for (int r = 0; r < ring->size; ++r) s.set(static_cast<std::size_t>(ring->muli(r, g)));
    close_under_addition(*ring, s);
    return ideal_from_elems(ring, std::move(s));
}

Ideal zero_ideal(const RingPtr& ring) {
    if (!ring->finite()) return ideal_integers({});
    return ideal_span(ring, {});
}

Ideal unit_ideal(const RingPtr& ring) {
    if (!ring->finite()) return ideal_integers({1});
    return ideal_span(ring, {ring->one});
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
    if (!a.ring->finite()) {
        Ideal i;
        i.ring = a.ring;
        i.zgen = a.zgen * b.zgen;
        return i;
    }
    const Ring& r = *a.ring;
    DynBitset s(static_cast<std::size_t>(r.size));
    s.set(0);
    a.elems.for_each([&](std::size_t x) {
        b.elems.for_each([&](std::size_t y) {
            s.set(static_cast<std::size_t>(r.muli(static_cast<int>(x), static_cast<int>(y))));
        });
    });
    close_under_addition(r, s);
    return ideal_from_elems(a.ring, std::move(s));
}

Ideal ideal_intersect(const Ideal& a, const Ideal& b) {
    if (!a.ring->finite()) {
        Ideal i;
        i.ring = a.ring;
        i.zgen = a.zgen == 0 || b.zgen == 0 ? 0 : std::lcm(a.zgen, b.zgen);
        return i;
    }
    return ideal_from_elems(a.ring, a.elems & b.elems);
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
    if (!a.ring->finite()) {
        Ideal i;
        i.ring = a.ring;
        i.zgen = std::gcd(a.zgen, b.zgen);
        return i;
    }
    DynBitset s = a.elems | b.elems;
    close_under_addition(*a.ring, s);
    return ideal_from_elems(a.ring, std::move(s));
}

std::vector<Ideal> enumerate_ideals(const RingPtr& ring) {
    if (!ring->finite()) throw std::logic_error("cannot enumerate ideals of the integers");
    std::vector<Ideal> out;
    if (!ring->moduli.empty()) {
        // every ideal of a product of Z/n_i is a product of divisor ideals
        std::vector<std::vector<int64_t>> divs;
        for (int64_t n : ring->moduli) divs.push_back(divisors(n));
        std::vector<std::size_t> idx(ring->moduli.size(), 0);
        for (;;) {
            std::vector<int64_t> tuple(idx.size());
            for (std::size_t i = 0; i < idx.size(); ++i) tuple[i] = divs[i][idx[i]];
            Ideal ideal;
            ideal.ring = ring;
            ideal.elems = elems_of_divisor_tuple(*ring, tuple);
            ideal.gens = tuple;
            out.push_back(std::move(ideal));
            std::size_t k = 0;
            while (k < idx.size() && ++idx[k] == divs[k].size()) idx[k++] = 0;
            if (k == idx.size()) break;
        }
    } else {
        // principal ideals, then closure under pairwise sums
        std::vector<Ideal> work;
        auto seen = [&](const DynBitset& s) {
            for (const Ideal& i : work)
                if (i.elems == s) return true;
            return false;
        };
        for (int a = 0; a < ring->size; ++a) {
            Ideal p = ideal_span(ring, {a});
            if (!seen(p.elems)) work.push_back(std::move(p));
        }
        for (std::size_t i = 0; i < work.size(); ++i)
            for (std::size_t j = 0; j < i; ++j) {
                Ideal s = ideal_sum(work[i], work[j]);
                if (!seen(s.elems)) work.push_back(std::move(s));
            }
        out = std::move(work);
    }
    std::sort(out.begin(), out.end(), [](const Ideal& a, const Ideal& b) {
        std::size_t ca = a.elems.count(), cb = b.elems.count();
        if (ca != cb) return ca < cb;
        return a.elems < b.elems;
    });
    return out;
}

bool is_essential_ideal(const Ideal& i) {
    if (!i.ring->finite()) return i.zgen != 0;
    const Ring& r = *i.ring;
    for (int a = 1; a < r.size; ++a) {
        if (i.contains(a)) continue;
        Ideal p = ideal_span(i.ring, {a});
        DynBitset meet = p.elems & i.elems;
        if (meet.count() <= 1) return false;
    }
    return true;
}

bool is_essential_ideal_full(const Ideal& i) {
    if (!i.ring->finite()) return i.zgen != 0;
    for (const Ideal& j : enumerate_ideals(i.ring)) {
        if (j.is_zero()) continue;
        DynBitset meet = j.elems & i.elems;
        if (meet.count() <= 1) return false;
    }
    return true;
}

RadicalIdeals radical_ideals(const RingPtr& ring) {
    RadicalIdeals out;
    if (!ring->finite()) {
        out.nil = ideal_integers({});
        out.jacobson = ideal_integers({});
        out.socle = ideal_integers({});
        return out;
    }
    const Ring& r = *ring;
    DynBitset nil(static_cast<std::size_t>(r.size));
    for (int a = 0; a < r.size; ++a) {
        int p = a;
        for (int k = 0; k < r.size; ++k) {
            if (p == 0) {
                nil.set(static_cast<std::size_t>(a));
                break;
            }
            p = r.muli(p, a);
        }
    }
    out.nil = ideal_from_elems(ring, std::move(nil));

    std::vector<Ideal> all = enumerate_ideals(ring);
    out.jacobson = unit_ideal(ring);
    out.socle = zero_ideal(ring);
    for (const Ideal& m : all) {
        if (m.is_unit_ideal()) continue;
        bool maximal = true;
        for (const Ideal& j : all)
            if (!j.is_unit_ideal() && m.proper_subset_of(j)) {
                maximal = false;
                break;
            }
        if (maximal) out.jacobson = ideal_intersect(out.jacobson, m);
    }
    for (const Ideal& m : all) {
        if (m.is_zero()) continue;
        bool minimal = true;
        for (const Ideal& j : all)
            if (!j.is_zero() && j.proper_subset_of(m)) {
                minimal = false;
                break;
            }
        if (minimal) out.socle = ideal_sum(out.socle, m);
    }
    return out;
}

bool is_regular_ring(const RingPtr& ring) {
    if (!ring->finite()) return false;
    const Ring& r = *ring;
    for (int a = 0; a < r.size; ++a) {
        int aa = r.muli(a, a);
        bool ok = false;
        for (int x = 0; x < r.size && !ok; ++x) ok = r.muli(aa, x) == a;
        if (!ok) return false;
    }
    return true;
}

Ideal ann_ring_element(const RingPtr& ring, int a) {
    if (!ring->finite()) {
        Ideal i;
        i.ring = ring;
        i.zgen = a == 0 ? 1 : 0;
        return i;
    }
    DynBitset s(static_cast<std::size_t>(ring->size));
    for (int b = 0; b < ring->size; ++b)
        if (ring->muli(a, b) == 0) s.set(static_cast<std::size_t>(b));
    return ideal_from_elems(ring, std::move(s));
}

Ideal singular_set_ring(const RingPtr& ring) {
    if (!ring->finite()) return ideal_integers({});
    DynBitset s(static_cast<std::size_t>(ring->size));
    for (int a = 0; a < ring->size; ++a)
        if (is_essential_ideal(ann_ring_element(ring, a))) s.set(static_cast<std::size_t>(a));
    return ideal_from_elems(ring, std::move(s));
}

std::vector<int> idempotents(const RingPtr& ring) {
    if (!ring->finite()) throw std::logic_error("idempotents need a finite ring");
    std::vector<int> out;
    for (int a = 0; a < ring->size; ++a)
        if (ring->muli(a, a) == a) out.push_back(a);
    return out;
}

} // namespace annigraph
