#include "annigraph/suites.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

#include <json.hpp>

#include "annigraph/equivalence.hpp"
#include "annigraph/graphs.hpp"
#include "annigraph/localization.hpp"
#include "annigraph/util.hpp"

namespace annigraph {

namespace {

/* Per-instance cache. Within one suite an instance is touched by exactly
   one worker, and suites run one after another, so the lazy fields need
   no locking. Pair suites prefill what their scan reads. */
struct Workbench {
    InstanceSpec ispec;
    ModulePtr mod;

    std::optional<AnnGraph> graphs_[3];
    std::optional<std::vector<Ideal>> colons_;
    std::optional<std::vector<Ideal>> anns_;
    std::optional<std::vector<Submodule>> lattice_;
    std::optional<StructureSubmodules> structure_;
    std::optional<DistinguishedSubmodules> distinguished_;
    std::optional<bool> mult_;
    std::optional<bool> allcyc_;
    std::optional<ModulePtr> socle_mod_;
    std::optional<ModulePtr> base_;
    std::optional<FractionModule> frac_;
    std::optional<AnnGraph> base_graphs_[3];
    std::optional<AnnGraph> frac_graphs_[3];

    bool integers() const { return !mod->ring->finite(); }

    const AnnGraph& graph(Flavor f) {
        auto& slot = graphs_[static_cast<int>(f)];
        if (!slot) slot = build_graph(mod, f);
        return *slot;
    }
    const std::vector<Ideal>& colons() {
        if (!colons_) {
            std::vector<Ideal> v;
            v.reserve(static_cast<std::size_t>(mod->size));
            for (int x = 0; x < mod->size; ++x) v.push_back(colon_element(mod, x));
            colons_ = std::move(v);
        }
        return *colons_;
    }
    const std::vector<Ideal>& anns() {
        if (!anns_) {
            std::vector<Ideal> v;
            v.reserve(static_cast<std::size_t>(mod->size));
            for (int x = 0; x < mod->size; ++x) v.push_back(ann_element(mod, x));
            anns_ = std::move(v);
        }
        return *anns_;
    }
    const std::vector<Submodule>& lattice() {
        if (!lattice_) lattice_ = enumerate_submodules(mod);
        return *lattice_;
    }
    const StructureSubmodules& structure() {
        if (!structure_) structure_ = structure_submodules(mod);
        return *structure_;
    }
    const DistinguishedSubmodules& distinguished() {
        if (!distinguished_) distinguished_ = distinguished_submodules(mod);
        return *distinguished_;
    }
    bool multiplication() {
        if (!mult_) mult_ = is_multiplication(mod);
        return *mult_;
    }
    bool all_cyclic() {
        if (!allcyc_) allcyc_ = all_submodules_cyclic(mod);
        return *allcyc_;
    }
    const ModulePtr& socle_mod() {
        if (!socle_mod_) socle_mod_ = submodule_as_module(structure().socle);
        return *socle_mod_;
    }
    const ModulePtr& base() {
        if (!base_) base_ = integers() ? reduce_to_finite(mod) : mod;
        return *base_;
    }
    const FractionModule& frac() {
        if (!frac_) frac_ = fraction_module(base());
        return *frac_;
    }
    const AnnGraph& base_graph(Flavor f) {
        auto& slot = base_graphs_[static_cast<int>(f)];
        if (!slot) slot = build_graph(base(), f);
        return *slot;
    }
    const AnnGraph& frac_graph(Flavor f) {
        auto& slot = frac_graphs_[static_cast<int>(f)];
        if (!slot) slot = build_graph(frac().mod, f);
        return *slot;
    }
};

struct Check {
    bool hyp = false;
    std::string fail;   // nonempty = counterexample witness
};

std::string label_of(const ModulePtr& m, int x) {
    return m->labels[static_cast<std::size_t>(x)];
}

std::string join_labels(const ModulePtr& m, const std::vector<int>& xs) {
    std::string s = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) s += ",";
        s += label_of(m, xs[i]);
    }
    return s + "}";
}

std::string bits_to_string(const ModulePtr& m, const DynBitset& b) {
    std::string s = "{";
    bool first = true;
    b.for_each([&](std::size_t i) {
        if (!first) s += ",";
        s += label_of(m, static_cast<int>(i));
        first = false;
    });
    return s + "}";
}

std::string partition_to_string(const ModulePtr& m, const Partition& p) {
    std::string s;
    for (const auto& cl : p.classes) {
        if (!s.empty()) s += " ";
        s += join_labels(m, cl);
    }
    return s;
}

std::string where(Workbench& wb) { return wb.mod->name; }

bool square_zero(Workbench& wb, int x) {
    const Ideal& c = wb.colons()[static_cast<std::size_t>(x)];
    Submodule im = ideal_times_module(c, wb.mod);
    return ideal_times_submodule(c, im).is_zero();
}

/* [x:M][y:M]M = 0; edges already encode this for distinct vertices */
bool prodzero(Workbench& wb, int x, int y) {
    if (x == y) return square_zero(wb, x);
    const AnnGraph& g = wb.graph(Flavor::full);
    int u = g.vertex_of(x), v = g.vertex_of(y);
    if (u >= 0 && v >= 0) return g.g.is_edge(u, v);
    const Ideal& cx = wb.colons()[static_cast<std::size_t>(x)];
    Submodule im = ideal_times_module(wb.colons()[static_cast<std::size_t>(y)], wb.mod);
    return ideal_times_submodule(cx, im).is_zero();
}

bool nil_member(Workbench& wb, int x) {
    const Ideal& c = wb.colons()[static_cast<std::size_t>(x)];
    if (!wb.mod->ring->finite()) return wb.mod->act(c.zgen, x) == 0;
    bool ok = true;
    c.elems.for_each([&](std::size_t r) {
        if (wb.mod->act(static_cast<int64_t>(r), x) != 0) ok = false;
    });
    return ok;
}

DynBitset nil_bitset(Workbench& wb) {
    DynBitset out(static_cast<std::size_t>(wb.mod->size));
    for (int x = 0; x < wb.mod->size; ++x)
        if (nil_member(wb, x)) out.set(static_cast<std::size_t>(x));
    return out;
}

std::vector<std::pair<int, int>> open_similar_pairs(const AnnGraph& ag) {
    std::vector<std::pair<int, int>> out;
    const int n = static_cast<int>(ag.verts.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (ag.g.adj[static_cast<std::size_t>(i)] == ag.g.adj[static_cast<std::size_t>(j)])
                out.emplace_back(i, j);
    return out;
}

std::vector<int> nbd_class_ids(const AnnGraph& ag) {
    const int n = static_cast<int>(ag.verts.size());
    std::vector<int> cls(static_cast<std::size_t>(n), -1);
    int next = 0;
    for (int i = 0; i < n; ++i) {
        if (cls[static_cast<std::size_t>(i)] >= 0) continue;
        cls[static_cast<std::size_t>(i)] = next;
        for (int j = i + 1; j < n; ++j)
            if (ag.g.adj[static_cast<std::size_t>(j)] == ag.g.adj[static_cast<std::size_t>(i)])
                cls[static_cast<std::size_t>(j)] = next;
        ++next;
    }
    return cls;
}

bool common_neighbour(const AnnGraph& ag, int u, int v) {
    return (ag.g.adj[static_cast<std::size_t>(u)] & ag.g.adj[static_cast<std::size_t>(v)]).any();
}

bool cyclics_meet_nonzero(Workbench& wb) {
    DynBitset meet = whole_submodule(wb.mod).elems;
    for (int x = 1; x < wb.mod->size; ++x) meet &= cyclic_submodule(wb.mod, x).elems;
    return meet.count() > 1;
}

std::vector<std::pair<int, int>> edge_elems(const AnnGraph& ag) {
    std::vector<std::pair<int, int>> out;
    const int n = static_cast<int>(ag.verts.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (ag.g.is_edge(i, j)) out.emplace_back(ag.verts[static_cast<std::size_t>(i)],
                                                     ag.verts[static_cast<std::size_t>(j)]);
    return out;
}

bool graphs_equal_exact(const AnnGraph& a, const AnnGraph& b) {
    return a.verts == b.verts && edge_elems(a) == edge_elems(b);
}

bool mirrors_ring(Workbench& wb) {
    const RingPtr& r = wb.mod->ring;
    if (!r->finite() || r->moduli.empty()) return false;
    if (wb.mod->factors.size() != r->moduli.size()) return false;
    for (std::size_t i = 0; i < r->moduli.size(); ++i)
        if (wb.mod->factors[i].order != r->moduli[i] ||
            wb.mod->factors[i].comp != static_cast<int>(i))
            return false;
    return true;
}

bool ideal_is_singular_module(const RingPtr& ring, const Ideal& i) {
    bool ok = true;
    i.elems.for_each([&](std::size_t r) {
        if (!is_essential_ideal(ann_ring_element(ring, static_cast<int>(r)))) ok = false;
    });
    return ok;
}

bool ideal_is_simple_module(const RingPtr& ring, const Ideal& i) {
    if (i.card() <= 1) return false;
    bool ok = true;
    i.elems.for_each([&](std::size_t s) {
        if (s == 0) return;
        if (!(ideal_span(ring, {static_cast<int>(s)}) == i)) ok = false;
    });
    return ok;
}

/* distinct singular simple colon ideals of full-graph vertices, with
   their injectivity as R-modules */
struct SingularSimpleScan {
    bool exists = false;
    bool all_injective = true;
};

SingularSimpleScan scan_singular_simple(Workbench& wb) {
    SingularSimpleScan out;
    const RingPtr& ring = wb.mod->ring;
    ModulePtr rm = module_from_ring(ring);
    std::set<DynBitset> seen;
    for (int v : wb.graph(Flavor::full).verts) {
        const Ideal& i = wb.colons()[static_cast<std::size_t>(v)];
        if (!seen.insert(i.elems).second) continue;
        if (!ideal_is_simple_module(ring, i) || !ideal_is_singular_module(ring, i)) continue;
        out.exists = true;
        if (!is_injective(submodule_as_module(Submodule{rm, i.elems}))) out.all_injective = false;
    }
    return out;
}

std::vector<Ideal> maximal_ideals(const RingPtr& ring) {
    std::vector<Ideal> all = enumerate_ideals(ring);
    std::vector<Ideal> out;
    for (const Ideal& i : all) {
        if (i.is_unit_ideal()) continue;
        bool maximal = true;
        for (const Ideal& j : all)
            if (!j.is_unit_ideal() && i.proper_subset_of(j)) {
                maximal = false;
                break;
            }
        if (maximal) out.push_back(i);
    }
    return out;
}

bool quotient_radical_zero(const RingPtr& ring, const Ideal& i) {
    if (i.is_unit_ideal()) return true;
    ModulePtr rm = module_from_ring(ring);
    ModulePtr q = quotient_module(rm, Submodule{rm, i.elems});
    return structure_submodules(q).radical.is_zero();
}

using Runner = std::function<SuiteReport(std::vector<Workbench>&)>;

struct SuiteDef {
    std::string name;
    Runner run;
};

SuiteReport aggregate(std::string name, std::vector<std::string> assumptions,
                      int64_t checked, int64_t hyps, std::optional<std::string> first_fail) {
    SuiteReport rep;
    rep.suite = std::move(name);
    rep.assumptions = std::move(assumptions);
    rep.instances_checked = checked;
    rep.hypothesis_satisfied = hyps;
    rep.witness = std::move(first_fail);
    rep.status = rep.witness                  ? "counterexample"
                 : rep.hypothesis_satisfied == 0 ? "hypothesis-never-satisfied"
                                                 : "pass";
    return rep;
}

Runner scan_instances(std::vector<std::string> assumptions,
                      std::function<Check(Workbench&)> fn) {
    return [assumptions = std::move(assumptions), fn = std::move(fn)](
               std::vector<Workbench>& wbs) mutable {
        std::vector<Check> res(wbs.size());
        parallel_for(wbs.size(), [&](std::size_t i) { res[i] = fn(wbs[i]); });
        int64_t hyps = 0;
        std::optional<std::string> fail;
        for (const Check& c : res) {
            if (c.hyp) ++hyps;
            if (!c.fail.empty() && !fail) fail = c.fail;
        }
        return aggregate("", assumptions, static_cast<int64_t>(wbs.size()), hyps, fail);
    };
}

Runner scan_pairs(std::vector<std::string> assumptions,
                  std::function<void(Workbench&)> warm,
                  std::function<Check(Workbench&, Workbench&)> fn) {
    return [assumptions = std::move(assumptions), warm = std::move(warm),
            fn = std::move(fn)](std::vector<Workbench>& wbs) mutable {
        parallel_for(wbs.size(), [&](std::size_t i) { warm(wbs[i]); });
        std::map<std::string, std::vector<std::size_t>> buckets;
        for (std::size_t i = 0; i < wbs.size(); ++i) buckets[wbs[i].ispec.ring].push_back(i);
        std::vector<std::vector<std::size_t>> mates(wbs.size());
        for (const auto& [ring, idx] : buckets)
            for (std::size_t a = 0; a < idx.size(); ++a)
                for (std::size_t b = a + 1; b < idx.size(); ++b)
                    mates[idx[a]].push_back(idx[b]);
        std::vector<std::string> fails(wbs.size());
        std::vector<int64_t> hyps(wbs.size(), 0), counts(wbs.size(), 0);
        parallel_for(wbs.size(), [&](std::size_t i) {
            for (std::size_t j : mates[i]) {
                ++counts[i];
                Check c = fn(wbs[i], wbs[j]);
                if (c.hyp) ++hyps[i];
                if (!c.fail.empty() && fails[i].empty()) fails[i] = c.fail;
            }
        });
        int64_t checked = 0, hyp_total = 0;
        std::optional<std::string> fail;
        for (std::size_t i = 0; i < wbs.size(); ++i) {
            checked += counts[i];
            hyp_total += hyps[i];
            if (!fails[i].empty() && !fail) fail = fails[i];
        }
        return aggregate("", assumptions, checked, hyp_total, fail);
    };
}

/* ---------- individual suites ---------- */

Check check_containment(Workbench& wb) {
    Check c;
    c.hyp = true;
    const AnnGraph& gf = wb.graph(Flavor::full);
    const AnnGraph& gs = wb.graph(Flavor::semi);
    const AnnGraph& gt = wb.graph(Flavor::star);
    auto contained = [&](const AnnGraph& small, const AnnGraph& big, const char* what) {
        for (std::size_t i = 0; i < small.verts.size(); ++i) {
            int a = small.verts[i];
            if (big.vertex_of(a) < 0) {
                c.fail = where(wb) + ": " + what + " vertex " + label_of(wb.mod, a) +
                         " missing from the larger flavor";
                return;
            }
            for (std::size_t j = i + 1; j < small.verts.size(); ++j) {
                int b = small.verts[j];
                bool es = small.g.is_edge(static_cast<int>(i), static_cast<int>(j));
                bool eb = big.g.is_edge(big.vertex_of(a), big.vertex_of(b));
                if (es != eb) {
                    c.fail = where(wb) + ": edge " + label_of(wb.mod, a) + "-" +
                             label_of(wb.mod, b) + " differs between flavors";
                    return;
                }
            }
        }
    };
    contained(gs, gf, "semi");
    if (c.fail.empty()) contained(gt, gs, "star");
    return c;
}

Check check_coincidence(Workbench& wb) {
    Check c;
    c.hyp = true;
    const AnnGraph& gf = wb.graph(Flavor::full);
    const AnnGraph& gs = wb.graph(Flavor::semi);
    if (gf.verts != gs.verts) {
        c.fail = where(wb) + ": full graph has " + std::to_string(gf.verts.size()) +
                 " vertices " + join_labels(wb.mod, gf.verts) + " but semi graph has " +
                 std::to_string(gs.verts.size()) + " vertices " + join_labels(wb.mod, gs.verts);
    } else if (edge_elems(gf) != edge_elems(gs)) {
        c.fail = where(wb) + ": full and semi graphs share vertices but differ in edges";
    }
    return c;
}

Check check_zdg_oracle(Workbench& wb) {
    Check c;
    if (!mirrors_ring(wb)) return c;
    c.hyp = true;
    ZeroDivisorGraph zdg = zero_divisor_graph(wb.mod->ring);
    const AnnGraph& gf = wb.graph(Flavor::full);
    std::vector<std::pair<int, int>> ze;
    for (std::size_t i = 0; i < zdg.verts.size(); ++i)
        for (std::size_t j = i + 1; j < zdg.verts.size(); ++j)
            if (zdg.g.is_edge(static_cast<int>(i), static_cast<int>(j)))
                ze.emplace_back(zdg.verts[i], zdg.verts[j]);
    if (gf.verts != zdg.verts)
        c.fail = where(wb) + ": full graph vertices " + join_labels(wb.mod, gf.verts) +
                 " differ from zero-divisor vertices " + join_labels(wb.mod, zdg.verts);
    else if (edge_elems(gf) != ze)
        c.fail = where(wb) + ": full graph edges differ from zero-divisor edges";
    return c;
}

Check check_zdg_localization(Workbench& wb) {
    Check c;
    if (!mirrors_ring(wb)) return c;
    c.hyp = true;
    const RingPtr& ring = wb.mod->ring;
    DynBitset zd = zero_divisors_on_module(wb.mod);
    DynBitset t(static_cast<std::size_t>(ring->size));
    for (int r = 0; r < ring->size; ++r)
        if (!zd.test(static_cast<std::size_t>(r))) t.set(static_cast<std::size_t>(r));
    FractionRing fr = fraction_ring(ring, t);
    ZeroDivisorGraph a = zero_divisor_graph(ring);
    ZeroDivisorGraph b = zero_divisor_graph(fr.ring);
    if (!graph_isomorphic(a.g, b.g))
        c.fail = where(wb) + ": zero-divisor graph changes under localization at non-zero-divisors (" +
                 std::to_string(a.verts.size()) + " vs " + std::to_string(b.verts.size()) +
                 " vertices)";
    return c;
}

Check check_klein_golden(Workbench& wb) {
    Check c;
    if (!wb.integers() || !(wb.mod->factors == std::vector<ModuleFactor>{{2, 0}, {2, 0}}))
        return c;
    c.hyp = true;
    auto expect = [&](const AnnGraph& g, std::size_t verts, bool complete, const char* tag) {
        GraphShape sh = classify_shape(g.g);
        if (g.verts.size() != verts || (complete && !sh.complete)) {
            c.fail = where(wb) + ": " + tag + " expected " +
                     (complete ? "K_" + std::to_string(verts) : "empty graph") + ", got " +
                     std::to_string(g.verts.size()) + " vertices with " +
                     std::to_string(sh.edges) + " edges";
            return false;
        }
        return true;
    };
    if (!expect(wb.graph(Flavor::full), 3, true, "full")) return c;
    if (!expect(wb.graph(Flavor::semi), 3, true, "semi")) return c;
    if (!expect(wb.graph(Flavor::star), 0, false, "star")) return c;
    const FractionModule& fm = wb.frac();
    std::vector<int> denom_ids;
    fm.ring.denoms.for_each([&](std::size_t r) { denom_ids.push_back(static_cast<int>(r)); });
    if (denom_ids != std::vector<int>{1, 3}) {
        std::string got = "{";
        for (std::size_t i = 0; i < denom_ids.size(); ++i) {
            if (i) got += ",";
            got += fm.ring.base->labels[static_cast<std::size_t>(denom_ids[i])];
        }
        c.fail = where(wb) + ": expected odd denominators {1,3} over the reduction, got " + got + "}";
        return c;
    }
    if (!expect(wb.frac_graph(Flavor::full), 3, true, "localized full")) return c;
    if (!expect(wb.frac_graph(Flavor::semi), 3, true, "localized semi")) return c;
    expect(wb.frac_graph(Flavor::star), 0, false, "localized star");
    return c;
}

bool size_is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Check check_z_essential_nonsimple(Workbench& wb) {
    Check c;
    if (!wb.integers()) return c;
    c.hyp = true;
    const AnnGraph& gf = wb.graph(Flavor::full);
    if (size_is_prime(wb.mod->size)) {
        if (!gf.verts.empty())
            c.fail = where(wb) + ": simple group has a nonempty full graph " +
                     join_labels(wb.mod, gf.verts);
        return c;
    }
    if (gf.verts.empty()) {
        c.fail = where(wb) + ": non-simple group has an empty full graph";
        return c;
    }
    for (int v : gf.verts) {
        const Ideal& i = wb.colons()[static_cast<std::size_t>(v)];
        if (i.zgen == 0 || !is_essential_ideal(i)) {
            c.fail = where(wb) + ": vertex " + label_of(wb.mod, v) + " has colon ideal " +
                     i.describe() + " which is not essential";
            return c;
        }
    }
    return c;
}

Check check_z_essential_nonzero(Workbench& wb) {
    Check c;
    if (!wb.integers() || wb.graph(Flavor::full).verts.empty()) return c;
    c.hyp = true;
    for (int v : wb.graph(Flavor::full).verts) {
        const Ideal& i = wb.colons()[static_cast<std::size_t>(v)];
        bool ess = is_essential_ideal(i), nz = i.zgen != 0;
        if (ess != nz || !nz) {
            c.fail = where(wb) + ": vertex " + label_of(wb.mod, v) + " has colon " + i.describe() +
                     " with essential=" + (ess ? "yes" : "no") + ", nonzero=" + (nz ? "yes" : "no");
            return c;
        }
    }
    return c;
}

Check check_cyclic_lattice_essential(Workbench& wb) {
    Check c;
    if (!wb.all_cyclic()) return c;
    for (int v : wb.graph(Flavor::full).verts) {
        if (!is_essential_submodule(cyclic_submodule(wb.mod, v))) continue;
        c.hyp = true;
        const Ideal& i = wb.colons()[static_cast<std::size_t>(v)];
        if (!is_essential_ideal(i)) {
            c.fail = where(wb) + ": vertex " + label_of(wb.mod, v) +
                     " generates an essential submodule but [x:M] = " + i.describe() +
                     " is not an essential ideal";
            return c;
        }
    }
    return c;
}

Check check_cyclic_intersect_essential(Workbench& wb) {
    Check c;
    if (!wb.all_cyclic()) return c;
    for (int v : wb.graph(Flavor::full).verts) {
        Submodule rv = cyclic_submodule(wb.mod, v);
        bool meets_all = true;
        for (int y = 1; y < wb.mod->size && meets_all; ++y)
            if ((rv.elems & cyclic_submodule(wb.mod, y).elems).count() <= 1) meets_all = false;
        if (!meets_all) continue;
        c.hyp = true;
        const Ideal& i = wb.colons()[static_cast<std::size_t>(v)];
        if (!is_essential_ideal(i)) {
            c.fail = where(wb) + ": Rx for x = " + label_of(wb.mod, v) +
                     " meets every cyclic submodule but [x:M] = " + i.describe() +
                     " is not an essential ideal";
            return c;
        }
    }
    return c;
}

Check check_singular_quotient(Workbench& wb) {
    Check c;
    for (int v : wb.graph(Flavor::full).verts) {
        const Ideal& i = wb.colons()[static_cast<std::size_t>(v)];
        if (!is_essential_ideal(i)) continue;
        c.hyp = true;
        ModulePtr q;
        if (wb.integers()) {
            if (i.zgen == 1) continue;   /* R/R is the zero module */
            q = make_module(ring_integers(), {{i.zgen, 0}});
        } else {
            if (i.is_unit_ideal()) continue;
            ModulePtr rm = module_from_ring(wb.mod->ring);
            q = quotient_module(rm, Submodule{rm, i.elems});
        }
        StructureSubmodules st = structure_submodules(q);
        if (st.singular_set.count() != static_cast<std::size_t>(q->size)) {
            c.fail = where(wb) + ": R/[x:M] for x = " + label_of(wb.mod, v) +
                     " is not singular; Z(R/[x:M]) = " + bits_to_string(q, st.singular_set) +
                     " over [x:M] = " + i.describe();
            return c;
        }
    }
    return c;
}

Check check_injective_singular_simple(Workbench& wb) {
    Check c;
    if (wb.integers()) return c;
    if (wb.structure().essoc.is_zero() || !cyclics_meet_nonzero(wb)) return c;
    SingularSimpleScan scan = scan_singular_simple(wb);
    if (!scan.exists) return c;
    c.hyp = true;
    bool rhs = singular_set_ring(wb.mod->ring).is_zero();
    for (int v : wb.graph(Flavor::full).verts)
        if (rhs && !quotient_radical_zero(wb.mod->ring, wb.colons()[static_cast<std::size_t>(v)]))
            rhs = false;
    if (scan.all_injective != rhs)
        c.fail = where(wb) + ": every singular simple colon injective = " +
                 (scan.all_injective ? "yes" : "no") + " but Z(R)=0 and rad(R/[x:M])=0 = " +
                 (rhs ? "yes" : "no");
    return c;
}

Check check_injective_consequences(Workbench& wb) {
    Check c;
    if (wb.integers()) return c;
    if (wb.structure().essoc.is_zero() || !cyclics_meet_nonzero(wb)) return c;
    SingularSimpleScan scan = scan_singular_simple(wb);
    if (!scan.exists || !scan.all_injective) return c;
    c.hyp = true;
    const RingPtr& ring = wb.mod->ring;
    std::vector<Ideal> maxi = maximal_ideals(ring);
    RadicalIdeals rad = radical_ideals(ring);
    if (!ideal_product(rad.jacobson, rad.jacobson).is_zero()) {
        c.fail = where(wb) + ": J(R)^2 is nonzero";
        return c;
    }
    for (int v : wb.graph(Flavor::full).verts) {
        const Ideal& i = wb.colons()[static_cast<std::size_t>(v)];
        if (!(ideal_product(i, i) == i)) {
            c.fail = where(wb) + ": [x:M] for x = " + label_of(wb.mod, v) +
                     " is not idempotent: " + i.describe();
            return c;
        }
        Ideal meet = unit_ideal(ring);
        for (const Ideal& m : maxi)
            if (i.subset_of(m)) meet = ideal_intersect(meet, m);
        if (!(meet == i)) {
            c.fail = where(wb) + ": [x:M] for x = " + label_of(wb.mod, v) +
                     " is not an intersection of maximal ideals";
            return c;
        }
    }
    return c;
}

Check check_regular_idempotent_colon(Workbench& wb) {
    Check c;
    if (!wb.all_cyclic() || !cyclics_meet_nonzero(wb)) return c;
    const AnnGraph& gf = wb.graph(Flavor::full);
    if (gf.verts.empty()) return c;
    c.hyp = true;
    bool reg, ideals_idem;
    if (wb.integers()) {
        reg = is_regular_ring(wb.mod->ring);
        ideals_idem = false;   /* (2)(2) = (4) is a proper drop */
    } else {
        reg = is_regular_ring(wb.mod->ring);
        ideals_idem = true;
        for (const Ideal& a : enumerate_ideals(wb.mod->ring))
            if (!(ideal_product(a, a) == a)) {
                ideals_idem = false;
                break;
            }
    }
    bool colons_idem = true;
    for (int v : gf.verts) {
        const Ideal& i = wb.colons()[static_cast<std::size_t>(v)];
        if (!(ideal_product(i, i) == i)) {
            colons_idem = false;
            break;
        }
    }
    if (reg != ideals_idem || ideals_idem != colons_idem)
        c.fail = where(wb) + ": regular=" + (reg ? "yes" : "no") +
                 ", all ideals idempotent=" + (ideals_idem ? "yes" : "no") +
                 ", all vertex colons idempotent=" + (colons_idem ? "yes" : "no");
    return c;
}

Check check_injective_iff_regular(Workbench& wb) {
    Check c;
    if (wb.integers()) return c;
    if (wb.structure().essoc.is_zero() || !cyclics_meet_nonzero(wb)) return c;
    SingularSimpleScan scan = scan_singular_simple(wb);
    if (!scan.exists) return c;
    c.hyp = true;
    bool reg = is_regular_ring(wb.mod->ring);
    if (scan.all_injective != reg)
        c.fail = where(wb) + ": every singular simple colon injective = " +
                 (scan.all_injective ? "yes" : "no") + " but regular = " + (reg ? "yes" : "no");
    return c;
}

Check check_annihilator_membership(Workbench& wb) {
    Check c;
    const AnnGraph& gf = wb.graph(Flavor::full);
    if (gf.verts.empty()) return c;
    c.hyp = true;
    for (int x : gf.verts) {
        Submodule annx_m = ideal_times_module(wb.anns()[static_cast<std::size_t>(x)], wb.mod);
        for (int z : gf.verts) {
            if (!annx_m.contains(z)) continue;
            if (!prodzero(wb, x, z)) {
                c.fail = where(wb) + ": z = " + label_of(wb.mod, z) + " lies in ann(x)M for x = " +
                         label_of(wb.mod, x) + " = " + bits_to_string(wb.mod, annx_m.elems) +
                         " yet [x:M][z:M]M is nonzero";
                return c;
            }
        }
    }
    return c;
}

Check check_similar_square_flags(Workbench& wb) {
    Check c;
    const AnnGraph& gf = wb.graph(Flavor::full);
    auto pairs = open_similar_pairs(gf);
    if (pairs.empty()) return c;
    c.hyp = true;
    for (auto [i, j] : pairs) {
        int u = gf.verts[static_cast<std::size_t>(i)], v = gf.verts[static_cast<std::size_t>(j)];
        bool su = square_zero(wb, u), sv = square_zero(wb, v);
        if (su != sv) {
            c.fail = where(wb) + ": similar pair " + label_of(wb.mod, u) + "," +
                     label_of(wb.mod, v) + " has [x:M]^2 M zero flags " + (su ? "yes" : "no") +
                     " vs " + (sv ? "yes" : "no");
            return c;
        }
    }
    return c;
}

Check check_nbd_vs_submodule(Workbench& wb) {
    Check c;
    const AnnGraph& gf = wb.graph(Flavor::full);
    if (gf.verts.size() < 3 || !wb.multiplication()) return c;
    c.hyp = true;
    Partition nbd = nbd_classes(gf), sub = submodule_classes(gf);
    if (!(nbd == sub))
        c.fail = where(wb) + ": neighbourhood classes " + partition_to_string(wb.mod, nbd) +
                 " differ from submodule classes " + partition_to_string(wb.mod, sub);
    return c;
}

Check check_distance_vs_submodule(Workbench& wb) {
    Check c;
    const AnnGraph& gf = wb.graph(Flavor::full);
    if (gf.verts.size() < 3 || !wb.multiplication()) return c;
    c.hyp = true;
    Partition dist = distance_classes(gf);
    Partition formula = distance_classes_formula(gf);
    if (!(dist == formula)) {
        c.fail = where(wb) + ": BFS distance classes " + partition_to_string(wb.mod, dist) +
                 " differ from the edge-aware characterization " +
                 partition_to_string(wb.mod, formula);
        return c;
    }
    Partition sub = submodule_classes(gf);
    if (!(dist == sub))
        c.fail = where(wb) + ": distance classes " + partition_to_string(wb.mod, dist) +
                 " differ from submodule classes " + partition_to_string(wb.mod, sub);
    return c;
}

Check check_similar_adjacency(Workbench& wb) {
    Check c;
    const AnnGraph& gf = wb.graph(Flavor::full);
    if (gf.verts.size() < 3) return c;
    auto pairs = open_similar_pairs(gf);
    if (pairs.empty()) return c;
    c.hyp = true;
    for (auto [i, j] : pairs) {
        int u = gf.verts[static_cast<std::size_t>(i)], v = gf.verts[static_cast<std::size_t>(j)];
        bool adj = gf.g.is_edge(i, j);
        bool squares = square_zero(wb, u) && square_zero(wb, v);
        if (adj != squares) {
            c.fail = where(wb) + ": similar pair " + label_of(wb.mod, u) + "," +
                     label_of(wb.mod, v) + " adjacent=" + (adj ? "yes" : "no") +
                     " but both squares vanish=" + (squares ? "yes" : "no");
            return c;
        }
    }
    return c;
}

Check check_no_large_cycles(Workbench& wb) {
    Check c;
    c.hyp = true;
    GraphShape sh = classify_shape(wb.graph(Flavor::full).g);
    if (sh.cycle_len >= 5)
        c.fail = where(wb) + ": full graph is a " + std::to_string(sh.cycle_len) + "-cycle";
    return c;
}

Check check_nil_square_equivalence(Workbench& wb) {
    Check c;
    c.hyp = true;
    for (int x = 0; x < wb.mod->size; ++x) {
        bool kills_x = nil_member(wb, x);
        bool square = square_zero(wb, x);
        if (kills_x != square) {
            c.fail = where(wb) + ": x = " + label_of(wb.mod, x) + " with [x:M] = " +
                     wb.colons()[static_cast<std::size_t>(x)].describe() + " has [x:M]x=0 " +
                     (kills_x ? "yes" : "no") + " but [x:M]^2 M=0 " + (square ? "yes" : "no");
            return c;
        }
    }
    return c;
}

Check check_nil_consistency(Workbench& wb) {
    Check c;
    c.hyp = true;
    DynBitset formula = nil_bitset(wb);
    DynBitset meet = whole_submodule(wb.mod).elems;
    for (const Submodule& p : wb.distinguished().prime) meet &= p.elems;
    if (!(formula == meet))
        c.fail = where(wb) + ": formula set " + bits_to_string(wb.mod, formula) +
                 " differs from the intersection of prime submodules " +
                 bits_to_string(wb.mod, meet);
    return c;
}

/* shared hypothesis pieces for the nil-set results */
bool triangle_free(Workbench& wb) { return classify_shape(wb.graph(Flavor::full).g).triangle_free; }

Check check_nil_size_bounds(Workbench& wb) {
    Check c;
    const AnnGraph& gf = wb.graph(Flavor::full);
    if (gf.verts.empty() || !triangle_free(wb)) return c;
    DynBitset nil = nil_bitset(wb);
    if (nil.count() < 2) return c;
    auto pairs = open_similar_pairs(gf);
    if (pairs.empty()) return c;
    for (auto [i, j] : pairs)
        if (!common_neighbour(gf, i, j)) return c;
    c.hyp = true;
    int n = wb.mod->size;
    bool ok = (n >= 8 && n <= 16) || (n >= 17 && nil.count() == 2);
    if (!ok)
        c.fail = where(wb) + ": |M| = " + std::to_string(n) + " with nil set " +
                 bits_to_string(wb.mod, nil) + " escapes both allowed shapes";
    return c;
}

Check check_pendant_structure(Workbench& wb) {
    Check c;
    const AnnGraph& gf = wb.graph(Flavor::full);
    if (gf.verts.empty() || !triangle_free(wb)) return c;
    if (nil_bitset(wb).count() < 2) return c;
    const int n = static_cast<int>(gf.verts.size());
    std::vector<int> cls = nbd_class_ids(gf);
    for (int x = 0; x < n; ++x) {
        bool found = false;
        for (int u = 0; u < n && !found; ++u) {
            if (u == x || !gf.g.is_edge(x, u)) continue;
            for (int v = u + 1; v < n && !found; ++v)
                if (v != x && gf.g.is_edge(x, v) &&
                    cls[static_cast<std::size_t>(u)] == cls[static_cast<std::size_t>(v)])
                    found = true;
        }
        if (!found) return c;
    }
    c.hyp = true;
    for (int x = 0; x < n; ++x) {
        bool bad = false;
        int offender = -1;
        gf.g.adj[static_cast<std::size_t>(x)].for_each([&](std::size_t a) {
            if (gf.g.degree(static_cast<int>(a)) != 1) {
                bad = true;
                offender = static_cast<int>(a);
            }
        });
        if (bad) {
            c.fail = where(wb) + ": neighbour " +
                     label_of(wb.mod, gf.verts[static_cast<std::size_t>(offender)]) + " of " +
                     label_of(wb.mod, gf.verts[static_cast<std::size_t>(x)]) +
                     " has degree " + std::to_string(gf.g.degree(offender)) + ", not pendant";
            return c;
        }
    }
    return c;
}

Check check_decomposition(Workbench& wb) {
    Check c;
    const AnnGraph& gf = wb.graph(Flavor::full);
    if (gf.verts.empty() || !triangle_free(wb)) return c;
    const int n = static_cast<int>(gf.verts.size());
    std::vector<int> cls = nbd_class_ids(gf);
    for (int x = 0; x < n; ++x) {
        bool found = false;
        for (int u = 0; u < n && !found; ++u) {
            if (u == x || !gf.g.is_edge(x, u)) continue;
            for (int v = u + 1; v < n && !found; ++v)
                if (v != x && gf.g.is_edge(x, v) &&
                    cls[static_cast<std::size_t>(u)] != cls[static_cast<std::size_t>(v)])
                    found = true;
        }
        if (!found) return c;
    }
    c.hyp = true;
    if (!direct_sum_decomposition(wb.mod))
        c.fail = where(wb) + ": no nontrivial direct sum decomposition exists";
    return c;
}

Check check_star_structure(Workbench& wb) {
    Check c;
    const AnnGraph& gf = wb.graph(Flavor::full);
    if (gf.verts.empty() || !triangle_free(wb)) return c;
    const int n = static_cast<int>(gf.verts.size());
    std::vector<int> cls = nbd_class_ids(gf);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (gf.g.is_edge(u, v)) continue;
            if (cls[static_cast<std::size_t>(u)] != cls[static_cast<std::size_t>(v)] ||
                !common_neighbour(gf, u, v))
                return c;
        }
    c.hyp = true;
    GraphShape sh = classify_shape(gf.g);
    if (!sh.star)
        c.fail = where(wb) + ": graph on " + join_labels(wb.mod, gf.verts) + " with " +
                 std::to_string(sh.edges) + " edges is not a star";
    return c;
}

Check check_theta_classes(Workbench& wb) {
    Check c;
    const AnnGraph& gf = wb.graph(Flavor::full);
    auto pairs = open_similar_pairs(gf);
    if (pairs.empty()) return c;
    c.hyp = true;
    VertexInvariants inv = vertex_invariants(gf);
    for (auto [i, j] : pairs) {
        if (inv.theta[static_cast<std::size_t>(i)] != inv.theta[static_cast<std::size_t>(j)]) {
            int u = gf.verts[static_cast<std::size_t>(i)], v = gf.verts[static_cast<std::size_t>(j)];
            c.fail = where(wb) + ": similar pair " + label_of(wb.mod, u) + "," +
                     label_of(wb.mod, v) + " has |Rx| = " +
                     std::to_string(inv.theta[static_cast<std::size_t>(i)]) + " vs " +
                     std::to_string(inv.theta[static_cast<std::size_t>(j)]);
            return c;
        }
    }
    return c;
}

Check check_class_cardinality(Workbench& wb) {
    Check c;
    c.hyp = true;
    Partition a = submodule_classes(wb.base_graph(Flavor::full));
    Partition b = submodule_classes(wb.frac_graph(Flavor::full));
    if (a.class_sizes() != b.class_sizes())
        c.fail = where(wb) + ": submodule-class sizes " +
                 partition_to_string(wb.base(), a) + " vs localized " +
                 partition_to_string(wb.frac().mod, b);
    return c;
}

Check check_fraction_full(Workbench& wb) {
    Check c;
    c.hyp = true;
    const AnnGraph& a = wb.base_graph(Flavor::full);
    const AnnGraph& b = wb.frac_graph(Flavor::full);
    if (wb.base()->ring->size % wb.frac().ring.ring->size != 0) {
        c.fail = where(wb) + ": fraction ring order " +
                 std::to_string(wb.frac().ring.ring->size) + " does not divide ring order " +
                 std::to_string(wb.base()->ring->size);
        return c;
    }
    if (!graph_isomorphic(a.g, b.g))
        c.fail = where(wb) + ": full graphs differ after localization (" +
                 std::to_string(a.verts.size()) + " vertices/" + std::to_string(classify_shape(a.g).edges) +
                 " edges vs " + std::to_string(b.verts.size()) + "/" +
                 std::to_string(classify_shape(b.g).edges) + ")";
    return c;
}

Check check_fraction_semi_star(Workbench& wb) {
    Check c;
    c.hyp = true;
    for (Flavor f : {Flavor::semi, Flavor::star}) {
        const AnnGraph& a = wb.base_graph(f);
        const AnnGraph& b = wb.frac_graph(f);
        if (!graph_isomorphic(a.g, b.g)) {
            c.fail = where(wb) + ": " + flavor_name(f) + " graph changes under localization: " +
                     std::to_string(a.verts.size()) + " vertices " +
                     join_labels(wb.base(), a.verts) + " vs " + std::to_string(b.verts.size()) +
                     " vertices " + join_labels(wb.frac().mod, b.verts);
            return c;
        }
    }
    return c;
}

Check check_exp_reduction(Workbench& wb) {
    Check c;
    if (!wb.integers()) return c;
    c.hyp = true;
    for (Flavor f : {Flavor::full, Flavor::semi, Flavor::star}) {
        const AnnGraph& a = wb.graph(f);
        const AnnGraph& b = wb.base_graph(f);
        if (!graphs_equal_exact(a, b)) {
            c.fail = where(wb) + ": " + flavor_name(f) +
                     " graph changes under the finite reduction: vertices " +
                     join_labels(wb.mod, a.verts) + " vs " + join_labels(wb.base(), b.verts);
            return c;
        }
    }
    return c;
}

Check check_essential_modes(Workbench& wb) {
    Check c;
    c.hyp = true;
    if (!wb.integers()) {
        for (const Ideal& i : enumerate_ideals(wb.mod->ring)) {
            if (is_essential_ideal(i) != is_essential_ideal_full(i)) {
                c.fail = where(wb) + ": ideal " + i.describe() +
                         " splits the fast and lattice essentiality routes";
                return c;
            }
        }
    }
    const std::vector<Submodule>& lat = wb.lattice();
    for (const Submodule& n : lat) {
        if (is_essential_submodule(n) != is_essential_submodule_full(n, lat)) {
            c.fail = where(wb) + ": submodule " + n.describe() +
                     " splits the fast and lattice essentiality routes";
            return c;
        }
    }
    return c;
}

/* pair suites */

void warm_socle(Workbench& wb) {
    wb.graph(Flavor::full);
    wb.structure();
    wb.socle_mod();
}

Check pair_socle_from_graph(Workbench& a, Workbench& b) {
    Check c;
    const AnnGraph& ga = *a.graphs_[0];
    const AnnGraph& gb = *b.graphs_[0];
    if (ga.verts.empty() || gb.verts.empty()) return c;
    if (ga.verts.size() != gb.verts.size() || !graph_isomorphic(ga.g, gb.g)) return c;
    c.hyp = true;
    if (!module_isomorphic(*a.socle_mod_, *b.socle_mod_))
        c.fail = a.mod->name + " ~ " + b.mod->name +
                 ": full graphs isomorphic but socles are not (orders " +
                 std::to_string((*a.socle_mod_)->size) + " vs " +
                 std::to_string((*b.socle_mod_)->size) + ")";
    return c;
}

Check pair_semisimple_reconstruction(Workbench& a, Workbench& b) {
    Check c;
    if (!a.structure_->socle.is_whole() || !b.structure_->socle.is_whole()) return c;
    const AnnGraph& ga = *a.graphs_[0];
    const AnnGraph& gb = *b.graphs_[0];
    if (ga.verts.empty() || gb.verts.empty()) return c;
    if (ga.verts.size() != gb.verts.size() || !graph_isomorphic(ga.g, gb.g)) return c;
    c.hyp = true;
    if (!module_isomorphic(a.mod, b.mod))
        c.fail = a.mod->name + " ~ " + b.mod->name +
                 ": semisimple modules with isomorphic full graphs are not isomorphic";
    return c;
}

Check pair_essential_socle_transfer(Workbench& a, Workbench& b) {
    Check c;
    const AnnGraph& ga = *a.graphs_[0];
    const AnnGraph& gb = *b.graphs_[0];
    if (ga.verts.size() != gb.verts.size()) return c;
    if (!ga.verts.empty() && !graph_isomorphic(ga.g, gb.g)) return c;
    c.hyp = true;
    bool ea = !a.structure_->essoc.is_zero(), eb = !b.structure_->essoc.is_zero();
    if (ea != eb)
        c.fail = a.mod->name + " ~ " + b.mod->name + ": essential socle flags differ (" +
                 (ea ? "yes" : "no") + " vs " + (eb ? "yes" : "no") + ")";
    return c;
}

/* fixed instance: the worked 10-vertex example and its claimed class count */
SuiteReport run_fixed_graph_classes(std::vector<Workbench>&) {
    SimpleGraph g(10);
    const std::pair<int, int> edges[] = {{0, 1}, {0, 3}, {0, 4}, {0, 5}, {1, 2},
                                         {2, 3}, {3, 6}, {3, 7}, {3, 8}, {3, 9}};
    for (auto [u, v] : edges) g.add_edge(u, v);
    std::vector<int> cls(10, -1);
    int classes = 0;
    for (int i = 0; i < 10; ++i) {
        if (cls[static_cast<std::size_t>(i)] >= 0) continue;
        cls[static_cast<std::size_t>(i)] = classes;
        for (int j = i + 1; j < 10; ++j)
            if (g.adj[static_cast<std::size_t>(j)] == g.adj[static_cast<std::size_t>(i)])
                cls[static_cast<std::size_t>(j)] = classes;
        ++classes;
    }
    std::string partition;
    for (int k = 0; k < classes; ++k) {
        partition += k ? " {" : "{";
        bool first = true;
        for (int i = 0; i < 10; ++i)
            if (cls[static_cast<std::size_t>(i)] == k) {
                if (!first) partition += ",";
                partition += "v" + std::to_string(i + 1);
                first = false;
            }
        partition += "}";
    }
    SuiteReport rep;
    rep.suite = "fixed-graph-classes";
    rep.instances_checked = 1;
    rep.hypothesis_satisfied = 1;
    rep.assumptions = {"fixed 10-vertex worked example, partitioned by open neighbourhoods"};
    if (classes == 5) {
        rep.status = "pass";
    } else {
        rep.status = "counterexample";
        rep.witness = "computed " + std::to_string(classes) +
                      " neighbourhood classes " + partition + " vs 5 claimed";
    }
    return rep;
}

/* survey: intersection of vertex colons vs the essentially-cyclic reading */
SuiteReport run_essential_intersection_scan(std::vector<Workbench>& wbs) {
    struct Entry {
        bool hyp = false;
        std::string note;
    };
    std::vector<Entry> res(wbs.size());
    parallel_for(wbs.size(), [&](std::size_t k) {
        Workbench& wb = wbs[k];
        const AnnGraph& gf = wb.graph(Flavor::full);
        if (gf.verts.empty()) return;
        res[k].hyp = true;
        Ideal meet = wb.colons()[static_cast<std::size_t>(gf.verts[0])];
        for (std::size_t i = 1; i < gf.verts.size(); ++i)
            meet = ideal_intersect(meet, wb.colons()[static_cast<std::size_t>(gf.verts[i])]);
        bool lhs = is_essential_ideal(meet);
        bool rhs = true;
        for (const Submodule& n : wb.lattice()) {
            if (n.is_zero()) continue;
            bool found = false;
            n.elems.for_each([&](std::size_t x) {
                if (x == 0 || found) return;
                if (is_essential_submodule(cyclic_submodule(wb.mod, static_cast<int>(x))))
                    found = true;
            });
            if (!found) {
                rhs = false;
                break;
            }
        }
        if (lhs != rhs)
            res[k].note = where(wb) + ": intersection of vertex colons essential=" +
                          (lhs ? "yes" : "no") + " but every nonzero submodule contains an " +
                          "essential cyclic submodule=" + (rhs ? "yes" : "no");
    });
    SuiteReport rep;
    rep.suite = "essential-intersection-scan";
    rep.instances_checked = static_cast<int64_t>(wbs.size());
    rep.assumptions = {
        "survey only: the two sides are compared and reported, never asserted",
        "right side read as: every nonzero submodule contains a cyclic submodule essential in M"};
    int64_t disagreements = 0;
    std::string first;
    for (const Entry& e : res) {
        if (e.hyp) ++rep.hypothesis_satisfied;
        if (!e.note.empty()) {
            ++disagreements;
            if (first.empty()) first = e.note;
        }
    }
    rep.assumptions.push_back("disagreements: " + std::to_string(disagreements) + " of " +
                              std::to_string(rep.hypothesis_satisfied) + " nonempty-graph instances");
    if (!first.empty()) rep.assumptions.push_back("first disagreement: " + first);
    rep.status = rep.hypothesis_satisfied == 0 ? "hypothesis-never-satisfied" : "pass";
    return rep;
}

SuiteReport with_name(SuiteReport rep, const std::string& name) {
    rep.suite = name;
    return rep;
}

const std::vector<SuiteDef>& registry() {
    static const std::vector<SuiteDef> defs = [] {
        std::vector<SuiteDef> v;
        auto add = [&](std::string name, Runner run) {
            v.push_back({name, [name, run = std::move(run)](std::vector<Workbench>& wbs) {
                             return with_name(run(wbs), name);
                         }});
        };
        add("containment", scan_instances({}, check_containment));
        add("coincidence",
            scan_instances({"checks that the full and semi graphs have identical vertex and "
                            "edge sets"},
                           check_coincidence));
        add("zdg-oracle",
            scan_instances({"runs on instances whose module mirrors the ring acting on itself"},
                           check_zdg_oracle));
        add("klein-golden",
            scan_instances({"fixed instance [2,2] over Z; the localization side reduces to Z/4, "
                            "where the denominators are the odd classes"},
                           check_klein_golden));
        add("z-essential-nonsimple",
            scan_instances({"integers instances only"}, check_z_essential_nonsimple));
        add("z-essential-nonzero",
            scan_instances({"integers instances only",
                            "essentiality of nZ in Z amounts to n != 0 since nZ meets mZ in "
                            "lcm(n,m)Z"},
                           check_z_essential_nonzero));
        add("cyclic-lattice-essential",
            scan_instances({"hypothesis: every submodule cyclic and some vertex generates an "
                            "essential submodule"},
                           check_cyclic_lattice_essential));
        add("cyclic-intersect-essential",
            scan_instances({"hypothesis: every submodule cyclic and some vertex's Rx meets "
                            "every nonzero cyclic submodule"},
                           check_cyclic_intersect_essential));
        v.push_back({"essential-intersection-scan", run_essential_intersection_scan});
        add("singular-quotient",
            scan_instances({"vertices whose colon ideal is the whole ring quotient to the zero "
                            "module, which is trivially singular"},
                           check_singular_quotient));
        add("injective-singular-simple",
            scan_instances({"finite rings only; injectivity via the principal-ideal Baer test",
                            "hypothesis imports: nonzero essential socle, nonzero intersection "
                            "of nonzero cyclic submodules, at least one singular simple colon "
                            "ideal"},
                           check_injective_singular_simple));
        add("injective-consequences",
            scan_instances({"hypothesis imports match injective-singular-simple, including at "
                            "least one singular simple colon ideal",
                            "reading the injectivity premise vacuously instead makes [4] over Z "
                            "a counterexample via [x:M]^2 != [x:M]"},
                           check_injective_consequences));
        add("regular-idempotent-colon",
            scan_instances({"the cyclic-intersection hypothesis is read over nonzero x; over "
                            "all x it is always empty",
                            "instances with an empty full graph are excluded so the colon "
                            "clause has content",
                            "over the integers regularity and ideal idempotency are both "
                            "false, witnessed by (2)"},
                           check_regular_idempotent_colon));
        add("injective-iff-regular",
            scan_instances({"finite rings only; hypothesis imports match "
                            "injective-singular-simple"},
                           check_injective_iff_regular));
        add("annihilator-membership",
            scan_instances({"checks the one-sided implication: z in ann(x)M forces "
                            "[x:M][z:M]M = 0"},
                           check_annihilator_membership));
        add("similar-square-flags", scan_instances({}, check_similar_square_flags));
        add("nbd-vs-submodule",
            scan_instances({"hypothesis: multiplication module with at least 3 vertices"},
                           check_nbd_vs_submodule));
        add("distance-vs-submodule",
            scan_instances({"hypothesis: multiplication module with at least 3 vertices",
                            "also cross-checks the BFS partition against the edge-aware "
                            "characterization"},
                           check_distance_vs_submodule));
        add("similar-adjacency",
            scan_instances({"hypothesis: at least 3 vertices and one open-similar pair"},
                           check_similar_adjacency));
        add("no-large-cycles", scan_instances({}, check_no_large_cycles));
        add("nil-square-equivalence",
            scan_instances({"checked for every module element including zero"},
                           check_nil_square_equivalence));
        add("nil-consistency",
            scan_instances({"compares the formula set {x : [x:M]x = 0} with the intersection "
                            "of prime submodules",
                            "additive closure of the formula set is reported by the structure "
                            "operation, not assumed"},
                           check_nil_consistency));
        add("nil-size-bounds",
            scan_instances({"hypothesis imports: nonzero nil set, triangle-free graph, at "
                            "least one open-similar pair, and a common neighbour for every "
                            "similar pair",
                            "without the similar-pair import the quantifier is vacuous and "
                            "[4] over Z already fails the size bounds"},
                           check_nil_size_bounds));
        add("pendant-structure",
            scan_instances({"hypothesis: nonzero nil set, triangle-free graph, every vertex "
                            "adjacent to an open-similar pair"},
                           check_pendant_structure));
        add("decomposition",
            scan_instances({"hypothesis: triangle-free nonempty graph, every vertex adjacent "
                            "to two non-similar vertices",
                            "conclusion read as a nontrivial direct sum, both summands "
                            "nonzero"},
                           check_decomposition));
        add("star-structure",
            scan_instances({"hypothesis: triangle-free nonempty graph whose non-adjacent "
                            "pairs are all open-similar with a common neighbour",
                            "a single vertex counts as a star"},
                           check_star_structure));
        v.push_back({"fixed-graph-classes", run_fixed_graph_classes});
        add("theta-classes",
            scan_instances({"checks that |Rx| is constant on open-similar pairs"},
                           check_theta_classes));
        add("socle-from-graph",
            scan_pairs({"pairs over the same scalar ring with nonempty isomorphic full "
                        "graphs"},
                       warm_socle, pair_socle_from_graph));
        add("semisimple-reconstruction",
            scan_pairs({"pairs over the same scalar ring, both modules equal to their socle, "
                        "with nonempty isomorphic full graphs"},
                       warm_socle, pair_semisimple_reconstruction));
        add("essential-socle-transfer",
            scan_pairs({"pairs over the same scalar ring with isomorphic full graphs"},
                       warm_socle, pair_essential_socle_transfer));
        add("zdg-localization",
            scan_instances({"runs on instances whose module mirrors the ring acting on itself",
                            "denominators are the non-zero-divisors of the ring"},
                           check_zdg_localization));
        add("class-cardinality",
            scan_instances({"integers instances are reduced to Z/(exponent * smallest prime "
                            "factor) before localizing"},
                           check_class_cardinality));
        add("fraction-full",
            scan_instances({"integers instances are reduced to Z/(exponent * smallest prime "
                            "factor) before localizing",
                            "also reports when the fraction ring order fails to divide the "
                            "ring order"},
                           check_fraction_full));
        add("fraction-semi-star",
            scan_instances({"integers instances are reduced to Z/(exponent * smallest prime "
                            "factor) before localizing"},
                           check_fraction_semi_star));
        add("exp-reduction",
            scan_instances({"integers instances only; graphs must match element-for-element, "
                            "not merely up to isomorphism"},
                           check_exp_reduction));
        add("essential-modes",
            scan_instances({"the ring-ideal route runs on finite rings only"},
                           check_essential_modes));
        return v;
    }();
    return defs;
}

std::vector<Workbench> build_workbenches(const CorpusSpec& spec) {
    std::vector<InstanceSpec> instances = enumerate_corpus(spec);
    std::vector<Workbench> wbs(instances.size());
    for (std::size_t i = 0; i < instances.size(); ++i) wbs[i].ispec = instances[i];
    parallel_for(wbs.size(), [&](std::size_t i) { wbs[i].mod = instantiate(wbs[i].ispec); });
    return wbs;
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const SuiteDef& d : registry()) out.push_back(d.name);
        return out;
    }();
    return names;
}

SuiteReport run_suite(const std::string& name, const CorpusSpec& spec) {
    for (const SuiteDef& d : registry()) {
        if (d.name == name) {
            std::vector<Workbench> wbs = build_workbenches(spec);
            return d.run(wbs);
        }
    }
    throw std::invalid_argument("unknown suite: " + name);
}

std::vector<SuiteReport> run_all(const CorpusSpec& spec) {
    std::vector<Workbench> wbs = build_workbenches(spec);
    std::vector<SuiteReport> out;
    out.reserve(registry().size());
    for (const SuiteDef& d : registry()) out.push_back(d.run(wbs));
    return out;
}

std::string serialize_reports(const std::vector<SuiteReport>& reports) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const SuiteReport& r : reports) {
        nlohmann::ordered_json o;
        o["suite"] = r.suite;
        o["status"] = r.status;
        o["instances_checked"] = r.instances_checked;
        o["hypothesis_satisfied"] = r.hypothesis_satisfied;
        if (r.witness) o["witness"] = *r.witness;
        o["assumptions"] = r.assumptions;
        arr.push_back(std::move(o));
    }
    return arr.dump(2) + "\n";
}

} // namespace annigraph
