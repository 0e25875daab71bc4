#include "annigraph/module.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "annigraph/util.hpp"

namespace annigraph {

namespace {

std::string factor_label(const std::vector<int64_t>& c) {
    if (c.size() == 1) return std::to_string(c[0]);
    std::string s = "(";
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(c[i]);
    }
    return s + ")";
}

int64_t lcm_order(const Module& m) {
    int64_t e = 1;
    for (int a = 0; a < m.size; ++a) e = std::lcm(e, m.order_of(a));
    return e;
}

/* sum of two subgroups is already a subgroup, no closure loop needed */
DynBitset sumset(const Module& m, const DynBitset& a, const DynBitset& b) {
    DynBitset out(static_cast<std::size_t>(m.size));
    a.for_each([&](std::size_t x) {
        b.for_each([&](std::size_t y) {
            out.set(static_cast<std::size_t>(m.addm(static_cast<int>(x), static_cast<int>(y))));
        });
    });
    return out;
}

void close_additively(const Module& m, DynBitset& s) {
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<int> cur = s.to_vector();
        for (int a : cur)
            for (int b : cur) {
                int c = m.addm(a, b);
                if (!s.test(c)) {
                    s.set(c);
                    changed = true;
                }
            }
    }
}

ModulePtr finish_module(Module m, bool check) {
    m.negt.assign(static_cast<std::size_t>(m.size), -1);
    for (int a = 0; a < m.size; ++a)
        for (int b = 0; b < m.size; ++b)
            if (m.addm(a, b) == 0) m.negt[static_cast<std::size_t>(a)] = b;
    auto p = std::make_shared<Module>(std::move(m));
    if (check) check_module_axioms(*p);
    return p;
}

} // namespace

std::vector<int64_t> Module::coords(int m) const {
    if (factors.empty()) throw std::logic_error("coords need a factor-built module");
    std::vector<int64_t> c(factors.size());
    for (std::size_t i = factors.size(); i-- > 0;) {
        c[i] = m % factors[i].order;
        m = static_cast<int>(m / factors[i].order);
    }
    return c;
}

int Module::from_coords(const std::vector<int64_t>& c) const {
    int64_t m = 0;
    for (std::size_t i = 0; i < factors.size(); ++i)
        m = m * factors[i].order + (c[i] % factors[i].order + factors[i].order) % factors[i].order;
    return static_cast<int>(m);
}

int64_t Module::order_of(int m) const {
    int64_t k = 1;
    int t = m;
    while (t != 0) {
        t = addm(t, m);
        ++k;
    }
    return k;
}

ModulePtr make_module(const RingPtr& ring, const std::vector<ModuleFactor>& factors) {
    if (factors.empty()) throw std::invalid_argument("module needs at least one factor");
    if (ring->finite() && ring->moduli.empty())
        throw std::invalid_argument("factor-built modules need a product-form ring");
    Module m;
    m.ring = ring;
    m.factors = factors;
    int64_t size = 1;
    for (const ModuleFactor& f : factors) {
        if (f.order < 2) throw std::invalid_argument("factor order must be at least 2");
        if (!ring->finite()) {
            if (f.comp != 0) throw std::invalid_argument("component tags need a product ring");
        } else {
            if (f.comp < 0 || static_cast<std::size_t>(f.comp) >= ring->moduli.size())
                throw std::invalid_argument("factor component out of range");
            if (ring->moduli[static_cast<std::size_t>(f.comp)] % f.order != 0)
                throw std::invalid_argument("factor order must divide its component modulus");
        }
        size *= f.order;
        m.exponent = std::lcm(m.exponent, f.order);
    }
    if (size > (1 << 20)) throw std::invalid_argument("module too large");
    m.size = static_cast<int>(size);

    m.add.resize(static_cast<std::size_t>(m.size) * m.size);
    m.labels.resize(static_cast<std::size_t>(m.size));
    std::vector<std::vector<int64_t>> cs(static_cast<std::size_t>(m.size));
    for (int a = 0; a < m.size; ++a) {
        cs[static_cast<std::size_t>(a)].resize(factors.size());
        int t = a;
        for (std::size_t i = factors.size(); i-- > 0;) {
            cs[static_cast<std::size_t>(a)][i] = t % factors[i].order;
            t = static_cast<int>(t / factors[i].order);
        }
        m.labels[static_cast<std::size_t>(a)] = factor_label(cs[static_cast<std::size_t>(a)]);
    }
    std::vector<int64_t> tmp(factors.size());
    for (int a = 0; a < m.size; ++a)
        for (int b = 0; b < m.size; ++b) {
            for (std::size_t i = 0; i < factors.size(); ++i)
                tmp[i] = (cs[static_cast<std::size_t>(a)][i] + cs[static_cast<std::size_t>(b)][i]) % factors[i].order;
            m.add[static_cast<std::size_t>(a) * m.size + b] = m.from_coords(tmp);
        }

    m.srows = ring->finite() ? ring->size : m.exponent;
    m.smul.resize(static_cast<std::size_t>(m.srows) * m.size);
    for (int64_t r = 0; r < m.srows; ++r) {
        std::vector<int64_t> rc;
        if (ring->finite()) rc = ring->coords(static_cast<int>(r));
        for (int a = 0; a < m.size; ++a) {
            for (std::size_t i = 0; i < factors.size(); ++i) {
                int64_t scal = ring->finite() ? rc[static_cast<std::size_t>(factors[i].comp)] : r;
                tmp[i] = (scal * cs[static_cast<std::size_t>(a)][i]) % factors[i].order;
            }
            m.smul[static_cast<std::size_t>(r) * m.size + a] = m.from_coords(tmp);
        }
    }

    std::string fs;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) fs += ",";
        fs += std::to_string(factors[i].order);
        if (ring->moduli.size() > 1) fs += "@" + std::to_string(factors[i].comp);
    }
    m.name = "[" + fs + "] over " + (ring->finite() ? ring->name : "Z");
    return finish_module(std::move(m), false);
}

ModulePtr module_from_ring(const RingPtr& ring) {
    if (!ring->finite()) throw std::logic_error("module_from_ring needs a finite ring");
    if (!ring->moduli.empty()) {
        std::vector<ModuleFactor> fs;
        for (std::size_t i = 0; i < ring->moduli.size(); ++i)
            fs.push_back({ring->moduli[i], static_cast<int>(i)});
        return make_module(ring, fs);
    }
    return module_from_tables(ring, ring->add, ring->mul, ring->labels, ring->name + " over itself");
}

ModulePtr module_from_tables(const RingPtr& ring, std::vector<int> add,
                             std::vector<int> smul, std::vector<std::string> labels,
                             std::string name) {
    if (!ring->finite()) throw std::logic_error("module_from_tables needs a finite ring");
    Module m;
    m.ring = ring;
    m.size = static_cast<int>(labels.size());
    m.add = std::move(add);
    m.smul = std::move(smul);
    m.labels = std::move(labels);
    m.name = std::move(name);
    m.srows = ring->size;
    if (m.add.size() != static_cast<std::size_t>(m.size) * m.size ||
        m.smul.size() != static_cast<std::size_t>(m.srows) * m.size)
        throw std::invalid_argument("table size mismatch");
    m.exponent = lcm_order(m);
    return finish_module(std::move(m), true);
}

void check_module_axioms(const Module& m) {
    auto fail = [](const char* what) { throw std::invalid_argument(what); };
    for (int a = 0; a < m.size; ++a) {
        if (m.addm(0, a) != a) fail("additive identity broken");
        if (m.negt[static_cast<std::size_t>(a)] < 0) fail("missing additive inverse");
        for (int b = 0; b < m.size; ++b) {
            if (m.addm(a, b) != m.addm(b, a)) fail("addition not commutative");
            for (int c = 0; c < m.size; ++c)
                if (m.addm(m.addm(a, b), c) != m.addm(a, m.addm(b, c)))
                    fail("addition not associative");
        }
    }
    bool fin = m.ring->finite();
    int64_t n = m.srows;
    for (int64_t r = 0; r < n; ++r)
        for (int a = 0; a < m.size; ++a)
            for (int b = 0; b < m.size; ++b)
                if (m.act(r, m.addm(a, b)) != m.addm(m.act(r, a), m.act(r, b)))
                    fail("action not additive in the module argument");
    for (int64_t r = 0; r < n; ++r)
        for (int64_t s = 0; s < n; ++s) {
            int64_t rs = fin ? m.ring->addi(static_cast<int>(r), static_cast<int>(s)) : (r + s) % m.exponent;
            int64_t rm = fin ? m.ring->muli(static_cast<int>(r), static_cast<int>(s)) : (r * s) % m.exponent;
            for (int a = 0; a < m.size; ++a) {
                if (m.act(rs, a) != m.addm(m.act(r, a), m.act(s, a)))
                    fail("action not additive in the scalar");
                if (m.act(rm, a) != m.act(r, m.act(s, a))) fail("action not multiplicative");
            }
        }
    int64_t one = fin ? m.ring->one : 1 % m.exponent;
    for (int a = 0; a < m.size; ++a)
        if (m.act(one, a) != a) fail("unit does not act as identity");
}

std::string Submodule::describe() const {
    std::string s = "{";
    bool first = true;
    elems.for_each([&](std::size_t e) {
        if (!first) s += ",";
        s += mod->labels[e];
        first = false;
    });
    return s + "}";
}

Submodule zero_submodule(const ModulePtr& mod) {
    Submodule s;
    s.mod = mod;
    s.elems = DynBitset(static_cast<std::size_t>(mod->size));
    s.elems.set(0);
    return s;
}

Submodule whole_submodule(const ModulePtr& mod) {
    Submodule s;
    s.mod = mod;
    s.elems = DynBitset(static_cast<std::size_t>(mod->size));
    for (int a = 0; a < mod->size; ++a) s.elems.set(static_cast<std::size_t>(a));
    return s;
}

Submodule submodule_generated(const ModulePtr& mod, const std::vector<int>& gens) {
    Submodule s = zero_submodule(mod);
    /* seed with the scalar orbits; the additive closure of a scalar-closed
       set stays scalar-closed */
    for (int g : gens)
        for (int64_t r = 0; r < mod->srows; ++r) s.elems.set(static_cast<std::size_t>(mod->act(r, g)));
    close_additively(*mod, s.elems);
    return s;
}

Submodule cyclic_submodule(const ModulePtr& mod, int m) { return submodule_generated(mod, {m}); }

Submodule submodule_sum(const Submodule& a, const Submodule& b) {
    Submodule s;
    s.mod = a.mod;
    s.elems = sumset(*a.mod, a.elems, b.elems);
    return s;
}

Submodule submodule_intersect(const Submodule& a, const Submodule& b) {
    Submodule s;
    s.mod = a.mod;
    s.elems = a.elems & b.elems;
    return s;
}

Ideal colon_ideal(const Submodule& n) {
    const Module& m = *n.mod;
    if (!m.ring->finite()) {
        /* {d : dM in N} is an ideal containing exponent*Z, so its positive
           generator is the least divisor of the exponent that works */
        for (int64_t d : divisors(m.exponent)) {
            bool ok = true;
            for (int a = 0; a < m.size && ok; ++a) ok = n.contains(m.act(d, a));
            if (ok) return ideal_integers({d});
        }
        return ideal_integers({m.exponent});
    }
    DynBitset s(static_cast<std::size_t>(m.ring->size));
    for (int r = 0; r < m.ring->size; ++r) {
        bool ok = true;
        if (!m.factors.empty()) {
            /* rM is additively generated by the images of the unit vectors */
            std::vector<int64_t> c(m.factors.size(), 0);
            for (std::size_t i = 0; i < m.factors.size() && ok; ++i) {
                c[i] = 1;
                ok = n.contains(m.act(r, m.from_coords(c)));
                c[i] = 0;
            }
        } else {
            for (int a = 0; a < m.size && ok; ++a) ok = n.contains(m.act(r, a));
        }
        if (ok) s.set(static_cast<std::size_t>(r));
    }
    return ideal_from_elems(m.ring, std::move(s));
}

Ideal colon_element(const ModulePtr& mod, int x) { return colon_ideal(cyclic_submodule(mod, x)); }

Ideal ann_element(const ModulePtr& mod, int m) {
    if (!mod->ring->finite()) return ideal_integers({mod->order_of(m)});
    DynBitset s(static_cast<std::size_t>(mod->ring->size));
    for (int r = 0; r < mod->ring->size; ++r)
        if (mod->act(r, m) == 0) s.set(static_cast<std::size_t>(r));
    return ideal_from_elems(mod->ring, std::move(s));
}

Ideal ann_module(const ModulePtr& mod) { return colon_ideal(zero_submodule(mod)); }

Submodule ideal_times_module(const Ideal& i, const ModulePtr& mod) {
    return ideal_times_submodule(i, whole_submodule(mod));
}

Submodule ideal_times_submodule(const Ideal& i, const Submodule& n) {
    const ModulePtr& mod = n.mod;
    Submodule s = zero_submodule(mod);
    if (!mod->ring->finite()) {
        /* gN is the image of an endomorphism of N, already a submodule */
        if (i.zgen != 0)
            n.elems.for_each([&](std::size_t a) {
                s.elems.set(static_cast<std::size_t>(mod->act(i.zgen, static_cast<int>(a))));
            });
        return s;
    }
    i.elems.for_each([&](std::size_t r) {
        n.elems.for_each([&](std::size_t a) {
            s.elems.set(static_cast<std::size_t>(mod->act(static_cast<int64_t>(r), static_cast<int>(a))));
        });
    });
    close_additively(*mod, s.elems);
    return s;
}

Submodule ideal_kernel(const Ideal& i, const ModulePtr& mod) {
    if (!mod->ring->finite() && i.zgen == 0) return whole_submodule(mod);
    Submodule s;
    s.mod = mod;
    s.elems = DynBitset(static_cast<std::size_t>(mod->size));
    for (int a = 0; a < mod->size; ++a) {
        bool killed = true;
        if (!mod->ring->finite()) {
            killed = mod->act(i.zgen, a) == 0;
        } else {
            i.elems.for_each([&](std::size_t r) {
                if (mod->act(static_cast<int64_t>(r), a) != 0) killed = false;
            });
        }
        if (killed) s.elems.set(static_cast<std::size_t>(a));
    }
    return s;
}

std::vector<Submodule> enumerate_submodules(const ModulePtr& mod) {
    std::set<DynBitset> seen;
    std::vector<DynBitset> work;
    for (int a = 0; a < mod->size; ++a) {
        DynBitset c = cyclic_submodule(mod, a).elems;
        if (seen.insert(c).second) work.push_back(std::move(c));
    }
    std::vector<DynBitset> cyclics = work;
    /* every submodule is a join of cyclics, so closing under joins with
       cyclics reaches the whole lattice */
    for (std::size_t i = 0; i < work.size(); ++i)
        for (const DynBitset& c : cyclics) {
            if (c.subset_of(work[i])) continue;
            DynBitset j = sumset(*mod, work[i], c);
            if (seen.insert(j).second) work.push_back(std::move(j));
        }
    std::vector<Submodule> out;
    for (DynBitset& s : work) {
        Submodule n;
        n.mod = mod;
        n.elems = std::move(s);
        out.push_back(std::move(n));
    }
    std::sort(out.begin(), out.end(), [](const Submodule& a, const Submodule& b) {
        std::size_t ca = a.elems.count(), cb = b.elems.count();
        if (ca != cb) return ca < cb;
        return a.elems < b.elems;
    });
    return out;
}

bool all_submodules_cyclic(const ModulePtr& mod) {
    std::set<DynBitset> cyc;
    for (int a = 0; a < mod->size; ++a) cyc.insert(cyclic_submodule(mod, a).elems);
    for (auto i = cyc.begin(); i != cyc.end(); ++i)
        for (auto j = std::next(i); j != cyc.end(); ++j) {
            DynBitset s = sumset(*mod, *i, *j);
            if (!cyc.count(s)) return false;
        }
    return true;
}

bool is_essential_submodule(const Submodule& n) {
    const ModulePtr& mod = n.mod;
    for (int a = 1; a < mod->size; ++a) {
        if (n.contains(a)) continue;
        DynBitset meet = cyclic_submodule(mod, a).elems & n.elems;
        if (meet.count() <= 1) return false;
    }
    return true;
}

bool is_essential_submodule_full(const Submodule& n) {
    return is_essential_submodule_full(n, enumerate_submodules(n.mod));
}

bool is_essential_submodule_full(const Submodule& n, const std::vector<Submodule>& lattice) {
    for (const Submodule& s : lattice) {
        if (s.is_zero()) continue;
        DynBitset meet = s.elems & n.elems;
        if (meet.count() <= 1) return false;
    }
    return true;
}

StructureSubmodules structure_submodules(const ModulePtr& mod) {
    StructureSubmodules out;
    std::set<DynBitset> cyc;
    for (int a = 1; a < mod->size; ++a) cyc.insert(cyclic_submodule(mod, a).elems);
    out.socle = zero_submodule(mod);
    for (const DynBitset& c : cyc) {
        bool minimal = true;
        for (const DynBitset& d : cyc)
            if (d != c && d.subset_of(c)) {
                minimal = false;
                break;
            }
        if (minimal) out.socle.elems = sumset(*mod, out.socle.elems, c);
    }
    out.radical = whole_submodule(mod);
    std::vector<Submodule> all = enumerate_submodules(mod);
    for (const Submodule& n : all) {
        if (n.is_whole()) continue;
        bool maximal = true;
        for (const Submodule& p : all)
            if (!p.is_whole() && n.proper_subset_of(p)) {
                maximal = false;
                break;
            }
        if (maximal) out.radical.elems &= n.elems;
    }
    out.essoc = is_essential_submodule(out.socle) ? out.socle : zero_submodule(mod);
    out.nil_set = DynBitset(static_cast<std::size_t>(mod->size));
    out.singular_set = DynBitset(static_cast<std::size_t>(mod->size));
    for (int x = 0; x < mod->size; ++x) {
        Ideal cx = colon_element(mod, x);
        bool killed = true;
        if (!mod->ring->finite()) {
            killed = cx.zgen == 0 || mod->act(cx.zgen, x) == 0;
        } else {
            cx.elems.for_each([&](std::size_t r) {
                if (mod->act(static_cast<int64_t>(r), x) != 0) killed = false;
            });
        }
        if (killed) out.nil_set.set(static_cast<std::size_t>(x));
        if (is_essential_ideal(ann_element(mod, x))) out.singular_set.set(static_cast<std::size_t>(x));
    }
    out.nil_closed = true;
    out.nil_set.for_each([&](std::size_t a) {
        out.nil_set.for_each([&](std::size_t b) {
            if (!out.nil_set.test(static_cast<std::size_t>(mod->addm(static_cast<int>(a), static_cast<int>(b)))))
                out.nil_closed = false;
        });
    });
    return out;
}

DistinguishedSubmodules distinguished_submodules(const ModulePtr& mod) {
    DistinguishedSubmodules out;
    std::vector<Submodule> all = enumerate_submodules(mod);
    for (const Submodule& n : all) {
        if (!n.is_whole()) {
            bool maximal = true;
            for (const Submodule& p : all)
                if (!p.is_whole() && n.proper_subset_of(p)) {
                    maximal = false;
                    break;
                }
            if (maximal) out.maximal.push_back(n);
        }
        if (!n.is_zero()) {
            bool minimal = true;
            for (const Submodule& p : all)
                if (!p.is_zero() && p.proper_subset_of(n)) {
                    minimal = false;
                    break;
                }
            if (minimal) out.minimal.push_back(n);
        }
        if (!n.is_whole()) {
            Ideal cn = colon_ideal(n);
            bool prime = true;
            int64_t scal = mod->srows;
            for (int64_t r = 0; r < scal && prime; ++r) {
                bool in_colon = mod->ring->finite()
                                    ? cn.contains(static_cast<int>(r))
                                    : (cn.zgen != 0 && r % cn.zgen == 0);
                if (in_colon) continue;
                for (int a = 0; a < mod->size && prime; ++a)
                    if (n.contains(mod->act(r, a)) && !n.contains(a)) prime = false;
            }
            if (prime) out.prime.push_back(n);
        }
    }
    return out;
}

bool is_multiplication(const ModulePtr& mod) {
    for (const Submodule& n : enumerate_submodules(mod))
        if (!(ideal_times_module(colon_ideal(n), mod) == n)) return false;
    return true;
}

ModulePtr quotient_module(const ModulePtr& mod, const Submodule& n) {
    std::vector<int> rep(static_cast<std::size_t>(mod->size), -1);
    std::vector<int> reps;
    for (int a = 0; a < mod->size; ++a) {
        if (rep[static_cast<std::size_t>(a)] >= 0) continue;
        /* coset a+N; a is its least element because of the scan order */
        n.elems.for_each([&](std::size_t b) {
            rep[static_cast<std::size_t>(mod->addm(a, static_cast<int>(b)))] = static_cast<int>(reps.size());
        });
        reps.push_back(a);
    }
    Module q;
    q.ring = mod->ring;
    q.size = static_cast<int>(reps.size());
    q.add.resize(static_cast<std::size_t>(q.size) * q.size);
    q.labels.resize(static_cast<std::size_t>(q.size));
    for (int a = 0; a < q.size; ++a) {
        q.labels[static_cast<std::size_t>(a)] = mod->labels[static_cast<std::size_t>(reps[static_cast<std::size_t>(a)])];
        for (int b = 0; b < q.size; ++b)
            q.add[static_cast<std::size_t>(a) * q.size + b] =
                rep[static_cast<std::size_t>(mod->addm(reps[static_cast<std::size_t>(a)], reps[static_cast<std::size_t>(b)]))];
    }
    int64_t e = 1;
    for (int a = 0; a < q.size; ++a) {
        int64_t k = 1;
        int t = a;
        while (t != 0) {
            t = q.add[static_cast<std::size_t>(t) * q.size + a];
            ++k;
        }
        e = std::lcm(e, k);
    }
    q.exponent = e;
    q.srows = mod->ring->finite() ? mod->ring->size : e;
    q.smul.resize(static_cast<std::size_t>(q.srows) * q.size);
    for (int64_t r = 0; r < q.srows; ++r)
        for (int a = 0; a < q.size; ++a)
            q.smul[static_cast<std::size_t>(r) * q.size + a] =
                rep[static_cast<std::size_t>(mod->act(r, reps[static_cast<std::size_t>(a)]))];
    q.name = mod->name + " quotient";
    return finish_module(std::move(q), true);
}

ModulePtr submodule_as_module(const Submodule& n) {
    const ModulePtr& mod = n.mod;
    std::vector<int> elems = n.elems.to_vector();
    std::vector<int> idx(static_cast<std::size_t>(mod->size), -1);
    for (std::size_t i = 0; i < elems.size(); ++i) idx[static_cast<std::size_t>(elems[i])] = static_cast<int>(i);
    Module s;
    s.ring = mod->ring;
    s.size = static_cast<int>(elems.size());
    s.add.resize(static_cast<std::size_t>(s.size) * s.size);
    s.labels.resize(static_cast<std::size_t>(s.size));
    for (int a = 0; a < s.size; ++a) {
        s.labels[static_cast<std::size_t>(a)] = mod->labels[static_cast<std::size_t>(elems[static_cast<std::size_t>(a)])];
        for (int b = 0; b < s.size; ++b)
            s.add[static_cast<std::size_t>(a) * s.size + b] =
                idx[static_cast<std::size_t>(mod->addm(elems[static_cast<std::size_t>(a)], elems[static_cast<std::size_t>(b)]))];
    }
    int64_t e = 1;
    for (int a : elems) e = std::lcm(e, mod->order_of(a));
    s.exponent = e;
    s.srows = mod->ring->finite() ? mod->ring->size : e;
    s.smul.resize(static_cast<std::size_t>(s.srows) * s.size);
    for (int64_t r = 0; r < s.srows; ++r)
        for (int a = 0; a < s.size; ++a)
            s.smul[static_cast<std::size_t>(r) * s.size + a] =
                idx[static_cast<std::size_t>(mod->act(r, elems[static_cast<std::size_t>(a)]))];
    s.name = mod->name + " submodule";
    return finish_module(std::move(s), true);
}

bool is_injective(const ModulePtr& mod) {
    const RingPtr& ring = mod->ring;
    if (!ring->finite() || ring->moduli.empty())
        throw std::logic_error("injectivity test needs a finite product-form ring");
    /* every ideal here is principal, so Baer reduces to: whenever
       ann(g) kills m, m must be divisible by g */
    for (int g = 0; g < ring->size; ++g) {
        Ideal ag = ann_ring_element(ring, g);
        DynBitset gm(static_cast<std::size_t>(mod->size));
        for (int a = 0; a < mod->size; ++a) gm.set(static_cast<std::size_t>(mod->act(g, a)));
        for (int m = 0; m < mod->size; ++m) {
            if (gm.test(static_cast<std::size_t>(m))) continue;
            if (ag.subset_of(ann_element(mod, m))) return false;
        }
    }
    return true;
}

namespace {

bool same_scalars(const RingPtr& a, const RingPtr& b) {
    if (a == b) return true;
    if (a->finite() != b->finite()) return false;
    if (!a->finite()) return true;
    return a->size == b->size && a->one == b->one && a->add == b->add && a->mul == b->mul;
}

/* extends gen -> image assignments to a module hom by closing under
   addition and the scalar action; nullopt when the pairs are inconsistent.
   only bijections are of interest, so a collision of images prunes too:
   an isomorphism restricted to any partial domain stays injective */
std::optional<std::vector<int>> close_hom(const Module& a, const Module& b,
                                          const std::vector<int>& gens,
                                          const std::vector<int>& imgs) {
    std::vector<int> map(static_cast<std::size_t>(a.size), -1);
    std::vector<int> pre(static_cast<std::size_t>(b.size), -1);
    std::vector<int> known;
    auto assign = [&](int x, int y) {
        if (map[static_cast<std::size_t>(x)] >= 0) return map[static_cast<std::size_t>(x)] == y;
        if (pre[static_cast<std::size_t>(y)] >= 0) return false;
        map[static_cast<std::size_t>(x)] = y;
        pre[static_cast<std::size_t>(y)] = x;
        known.push_back(x);
        return true;
    };
    if (!assign(0, 0)) return std::nullopt;
    for (std::size_t i = 0; i < gens.size(); ++i)
        if (!assign(gens[i], imgs[i])) return std::nullopt;
    for (std::size_t i = 0; i < known.size(); ++i) {
        int x = known[i], y = map[static_cast<std::size_t>(x)];
        for (std::size_t j = 0; j <= i; ++j) {
            int u = known[j], v = map[static_cast<std::size_t>(u)];
            if (!assign(a.addm(x, u), b.addm(y, v))) return std::nullopt;
        }
        for (int64_t r = 0; r < a.srows; ++r)
            if (!assign(a.act(r, x), b.act(r, y))) return std::nullopt;
    }
    return map;
}

bool iso_backtrack(const Module& a, const Module& b, std::vector<int>& gens,
                   std::vector<int>& imgs, const std::vector<Ideal>& ann_a,
                   const std::vector<Ideal>& ann_b) {
    auto closed = close_hom(a, b, gens, imgs);
    if (!closed) return false;
    const std::vector<int>& map = *closed;
    int next = -1;
    for (int x = 0; x < a.size; ++x)
        if (map[static_cast<std::size_t>(x)] < 0) {
            next = x;
            break;
        }
    if (next < 0) {
        std::vector<bool> hit(static_cast<std::size_t>(b.size), false);
        for (int x = 0; x < a.size; ++x) {
            int y = map[static_cast<std::size_t>(x)];
            if (hit[static_cast<std::size_t>(y)]) return false;
            hit[static_cast<std::size_t>(y)] = true;
        }
        return true;
    }
    gens.push_back(next);
    for (int y = 0; y < b.size; ++y) {
        if (!(ann_a[static_cast<std::size_t>(next)] == ann_b[static_cast<std::size_t>(y)])) continue;
        imgs.push_back(y);
        if (iso_backtrack(a, b, gens, imgs, ann_a, ann_b)) return true;
        imgs.pop_back();
    }
    gens.pop_back();
    return false;
}

} // namespace

bool module_isomorphic(const ModulePtr& a, const ModulePtr& b) {
    if (!same_scalars(a->ring, b->ring)) return false;
    if (a->size != b->size) return false;
    std::vector<int64_t> oa, ob;
    for (int x = 0; x < a->size; ++x) oa.push_back(a->order_of(x));
    for (int x = 0; x < b->size; ++x) ob.push_back(b->order_of(x));
    std::sort(oa.begin(), oa.end());
    std::sort(ob.begin(), ob.end());
    if (oa != ob) return false;
    /* over Z and Z/n the action is repeated addition, so matching order
       statistics already settle the isomorphism type */
    if (!a->ring->finite() || a->ring->moduli.size() == 1) return true;
    std::vector<Ideal> ann_a, ann_b;
    for (int x = 0; x < a->size; ++x) ann_a.push_back(ann_element(a, x));
    for (int x = 0; x < b->size; ++x) ann_b.push_back(ann_element(b, x));
    /* an isomorphism matches annihilators elementwise, so the multisets of
       (order, annihilator) signatures must agree */
    auto signature = [](const ModulePtr& m, const std::vector<int64_t>& ord,
                        const std::vector<Ideal>& ann) {
        std::vector<std::pair<int64_t, std::size_t>> sig;
        for (int x = 0; x < m->size; ++x)
            sig.emplace_back(ord[static_cast<std::size_t>(x)],
                             ann[static_cast<std::size_t>(x)].elems.hash());
        std::sort(sig.begin(), sig.end());
        return sig;
    };
    std::vector<int64_t> ua, ub;
    for (int x = 0; x < a->size; ++x) ua.push_back(a->order_of(x));
    for (int x = 0; x < b->size; ++x) ub.push_back(b->order_of(x));
    if (signature(a, ua, ann_a) != signature(b, ub, ann_b)) return false;
    std::vector<int> gens, imgs;
    return iso_backtrack(*a, *b, gens, imgs, ann_a, ann_b);
}

std::optional<std::pair<Submodule, Submodule>> direct_sum_decomposition(const ModulePtr& mod) {
    std::vector<Submodule> all = enumerate_submodules(mod);
    for (std::size_t i = 0; i < all.size(); ++i) {
        if (all[i].is_zero() || all[i].is_whole()) continue;
        for (std::size_t j = i + 1; j < all.size(); ++j) {
            if (all[j].is_zero() || all[j].is_whole()) continue;
            if ((all[i].elems & all[j].elems).count() != 1) continue;
            if (sumset(*mod, all[i].elems, all[j].elems).count() == static_cast<std::size_t>(mod->size))
                return std::make_pair(all[i], all[j]);
        }
    }
    return std::nullopt;
}

} // namespace annigraph
