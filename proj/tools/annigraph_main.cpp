#include <cstdlib>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "annigraph/corpus.hpp"
#include "annigraph/equivalence.hpp"
#include "annigraph/export_format.hpp"
#include "annigraph/graphs.hpp"
#include "annigraph/ideal.hpp"
#include "annigraph/localization.hpp"
#include "annigraph/module.hpp"
#include "annigraph/ring.hpp"
#include "annigraph/suites.hpp"

namespace {

using namespace annigraph;

/* "2,4" or "2@0,3@1" for product rings */
std::vector<ModuleFactor> parse_factors(const std::string& text) {
    std::vector<ModuleFactor> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string tok = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
        if (tok.empty()) throw std::invalid_argument("empty factor in '" + text + "'");
        ModuleFactor f;
        std::size_t at = tok.find('@');
        std::size_t used = 0;
        f.order = std::stoll(tok.substr(0, at), &used);
        if (used != (at == std::string::npos ? tok.size() : at))
            throw std::invalid_argument("bad factor '" + tok + "'");
        if (at != std::string::npos) {
            f.comp = std::stoi(tok.substr(at + 1), &used);
            if (used != tok.size() - at - 1) throw std::invalid_argument("bad factor '" + tok + "'");
        }
        out.push_back(f);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

ModulePtr build(const std::string& ring_text, const std::string& factors_text) {
    return make_module(parse_ring(ring_text), parse_factors(factors_text));
}

Flavor parse_flavor(const std::string& s) {
    if (s == "f") return Flavor::full;
    if (s == "s") return Flavor::semi;
    if (s == "t") return Flavor::star;
    throw std::invalid_argument("flavor must be f, s or t");
}

void emit(const std::string& text, const std::string& out_file) {
    if (out_file.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_file, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open " + out_file);
    out << text;
}

int cmd_graph(const std::string& ring_text, const std::string& factors_text,
              const std::string& flavor, const std::string& format, const std::string& out_file) {
    ModulePtr mod = build(ring_text, factors_text);
    AnnGraph ag = build_graph(mod, parse_flavor(flavor));
    emit(format == "dot" ? dot_graph(ag) : json_graph(ag), out_file);
    return 0;
}

int cmd_verify(const std::string& which, const std::vector<std::string>& ring_kinds,
               int64_t max_order, const std::string& report_file) {
    CorpusSpec spec;
    if (!ring_kinds.empty()) {
        spec.integers = spec.zmod = spec.product = false;
        for (const std::string& k : ring_kinds) {
            if (k == "Integers") spec.integers = true;
            else if (k == "ZMod") spec.zmod = true;
            else if (k == "Product") spec.product = true;
            else throw std::invalid_argument("unknown ring kind: " + k);
        }
    }
    spec.max_module_order = max_order;

    std::vector<SuiteReport> reports;
    if (which == "all") reports = run_all(spec);
    else reports.push_back(run_suite(which, spec));

    bool failed = false;
    for (const SuiteReport& r : reports) {
        std::cout << r.suite << ": " << r.status << " (instances " << r.instances_checked
                  << ", hypothesis " << r.hypothesis_satisfied << ")\n";
        if (r.witness) std::cout << "  witness: " << *r.witness << "\n";
        for (const std::string& a : r.assumptions) std::cout << "  note: " << a << "\n";
        failed = failed || r.failed();
    }
    if (!report_file.empty()) emit(serialize_reports(reports), report_file);
    return failed ? 1 : 0;
}

int cmd_essential(const std::string& ring_text, const std::string& factors_text) {
    ModulePtr mod = build(ring_text, factors_text);
    AnnGraph ag = build_graph(mod, Flavor::full);
    std::cout << "M = " << mod->name << " (order " << mod->size << ")\n";
    std::cout << "ann(M) = " << ann_module(mod).describe() << "\n";
    std::cout << "full graph vertices: " << ag.verts.size() << "\n";
    for (int v : ag.verts) {
        Ideal colon = colon_element(mod, v);
        std::cout << "x = " << mod->labels[static_cast<std::size_t>(v)] << ": [x:M] = "
                  << colon.describe() << ", essential "
                  << (is_essential_ideal(colon) ? "yes" : "no") << ", Rx essential in M "
                  << (is_essential_submodule(cyclic_submodule(mod, v)) ? "yes" : "no") << "\n";
    }
    return 0;
}

std::string ring_elems(const RingPtr& ring, const DynBitset& set) {
    std::string s = "{";
    bool first = true;
    set.for_each([&](std::size_t r) {
        if (!first) s += ",";
        s += ring->labels[r];
        first = false;
    });
    return s + "}";
}

int cmd_localize(const std::string& ring_text, const std::string& factors_text) {
    ModulePtr mod = build(ring_text, factors_text);
    std::cout << "M = " << mod->name << " (order " << mod->size << ")\n";
    ModulePtr base = mod;
    if (!mod->ring->finite()) {
        base = reduce_to_finite(mod);
        std::cout << "reduced to " << base->name << " for localization\n";
    }
    const RingPtr& ring = base->ring;
    FractionModule fm = fraction_module(base);
    std::cout << "C(M) = " << ring_elems(ring, zero_divisors_on_module(base)) << "\n";
    std::cout << "T = " << ring_elems(ring, fm.ring.denoms) << "\n";
    std::cout << "kernel = " << ring_elems(ring, fm.ring.kernel) << "\n";
    std::cout << "fraction ring order: " << fm.ring.ring->size << "\n";
    std::cout << "fraction module order: " << fm.mod->size << "\n";
    for (Flavor f : {Flavor::full, Flavor::semi, Flavor::star}) {
        AnnGraph a = build_graph(base, f);
        AnnGraph b = build_graph(fm.mod, f);
        std::cout << flavor_name(f) << " graph: " << a.verts.size() << " vertices before, "
                  << b.verts.size() << " after, isomorphic "
                  << (graph_isomorphic(a.g, b.g) ? "yes" : "no") << "\n";
    }
    return 0;
}

int cmd_ideals(const std::string& ring_text) {
    RingPtr ring = parse_ring(ring_text);
    if (!ring->finite())
        throw std::invalid_argument("the integers have infinitely many ideals; use a finite ring");
    std::cout << "R = " << ring->name << " (order " << ring->size << ")\n";
    std::vector<Ideal> ideals = enumerate_ideals(ring);
    std::cout << "ideals: " << ideals.size() << "\n";
    for (const Ideal& i : ideals)
        std::cout << "  " << i.describe() << " = " << ring_elems(ring, i.elems)
                  << (is_essential_ideal(i) ? "  (essential)" : "") << "\n";
    RadicalIdeals rad = radical_ideals(ring);
    std::cout << "nil(R) = " << rad.nil.describe() << "\n";
    std::cout << "J(R) = " << rad.jacobson.describe() << "\n";
    std::cout << "Soc(R) = " << rad.socle.describe() << "\n";
    std::cout << "Z(R) = " << singular_set_ring(ring).describe() << "\n";
    std::cout << "regular: " << (is_regular_ring(ring) ? "yes" : "no") << "\n";
    std::string idem;
    for (int e : idempotents(ring)) {
        if (!idem.empty()) idem += ",";
        idem += ring->labels[static_cast<std::size_t>(e)];
    }
    std::cout << "idempotents: {" << idem << "}\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"annihilating-graph toolkit for finite modules over commutative rings"};
    app.require_subcommand(1);

    std::string ring_text, factors_text, flavor = "f", format = "json", out_file;
    std::string suite_name, report_file;
    std::vector<std::string> ring_kinds;
    int64_t max_order = 64;

    CLI::App* graph = app.add_subcommand("graph", "build one annihilating graph and export it");
    graph->add_option("ring", ring_text, "ring: Z, Z/n, or Z/n1 x Z/n2")->required();
    graph->add_option("factors", factors_text, "cyclic factor orders, comma separated")->required();
    graph->add_option("--flavor", flavor, "f (full), s (semi) or t (star)")
        ->check(CLI::IsMember({"f", "s", "t"}));
    graph->add_option("--format", format, "dot or json")->check(CLI::IsMember({"dot", "json"}));
    graph->add_option("--out", out_file, "output file (stdout when omitted)");

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite over the corpus");
    verify->add_option("suite", suite_name, "suite name or 'all'")->required();
    verify->add_option("--ring-kinds", ring_kinds, "subset of Integers, ZMod, Product")
        ->delimiter(',');
    verify->add_option("--max-order", max_order, "module order bound (default 64)");
    verify->add_option("--report", report_file, "write the JSON report here");

    CLI::App* essential = app.add_subcommand("essential", "colon ideals and essentiality per vertex");
    essential->add_option("ring", ring_text, "ring")->required();
    essential->add_option("factors", factors_text, "factors")->required();

    CLI::App* localize = app.add_subcommand("localize", "localize at T = R minus C(M)");
    localize->add_option("ring", ring_text, "ring")->required();
    localize->add_option("factors", factors_text, "factors")->required();

    CLI::App* ideals = app.add_subcommand("ideals", "ideal lattice and structural ideals");
    ideals->add_option("ring", ring_text, "finite ring")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (graph->parsed()) return cmd_graph(ring_text, factors_text, flavor, format, out_file);
        if (verify->parsed()) return cmd_verify(suite_name, ring_kinds, max_order, report_file);
        if (essential->parsed()) return cmd_essential(ring_text, factors_text);
        if (localize->parsed()) return cmd_localize(ring_text, factors_text);
        if (ideals->parsed()) return cmd_ideals(ring_text);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
