#include "annigraph/ring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace annigraph {

namespace {

std::string join_labels(const std::vector<int64_t>& c) {
    if (c.size() == 1) return std::to_string(c[0]);
    std::string s = "(";
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(c[i]);
    }
    s += ")";
    return s;
}

} // namespace

int Ring::neg(int a) const {
    for (int b = 0; b < size; ++b)
        if (addi(a, b) == 0) return b;
    throw std::logic_error("no additive inverse");
}

bool Ring::is_unit(int a) const {
    for (int b = 0; b < size; ++b)
        if (muli(a, b) == one) return true;
    return false;
}

std::vector<int64_t> Ring::coords(int a) const {
    if (moduli.empty()) throw std::logic_error("ring has no product form");
    std::vector<int64_t> c(moduli.size());
    int64_t v = a;
    for (std::size_t i = moduli.size(); i-- > 0;) {
        c[i] = v % moduli[i];
        v /= moduli[i];
    }
    return c;
}

int Ring::from_coords(const std::vector<int64_t>& c) const {
    if (c.size() != moduli.size()) throw std::logic_error("coordinate arity mismatch");
    int64_t v = 0;
    for (std::size_t i = 0; i < moduli.size(); ++i) v = v * moduli[i] + (c[i] % moduli[i]);
    return static_cast<int>(v);
}

RingPtr ring_integers() {
    static RingPtr z = [] {
        auto r = std::make_shared<Ring>();
        r->kind = RingKind::integers;
        r->name = "Z";
        return r;
    }();
    return z;
}

RingPtr ring_product(const std::vector<int64_t>& moduli) {
    if (moduli.empty()) throw std::invalid_argument("product ring needs at least one modulus");
    int64_t total = 1;
    for (int64_t n : moduli) {
        if (n < 2) throw std::invalid_argument("ring modulus must be at least 2");
        total *= n;
        if (total > 1 << 20) throw std::invalid_argument("ring too large");
    }
    auto r = std::make_shared<Ring>();
    r->kind = RingKind::finite;
    r->size = static_cast<int>(total);
    r->moduli = moduli;
    r->add.assign(static_cast<std::size_t>(total) * total, 0);
    r->mul.assign(static_cast<std::size_t>(total) * total, 0);
    r->labels.resize(total);

    std::vector<int64_t> ca, cb, cc(moduli.size());
    for (int a = 0; a < total; ++a) {
        ca = r->coords(a);
        r->labels[a] = join_labels(ca);
        for (int b = 0; b < total; ++b) {
            cb = r->coords(b);
            for (std::size_t i = 0; i < moduli.size(); ++i) cc[i] = (ca[i] + cb[i]) % moduli[i];
            r->add[static_cast<std::size_t>(a) * total + b] = r->from_coords(cc);
            for (std::size_t i = 0; i < moduli.size(); ++i) cc[i] = (ca[i] * cb[i]) % moduli[i];
            r->mul[static_cast<std::size_t>(a) * total + b] = r->from_coords(cc);
        }
    }
    r->one = r->from_coords(std::vector<int64_t>(moduli.size(), 1));

    std::ostringstream name;
    for (std::size_t i = 0; i < moduli.size(); ++i) {
        if (i) name << " x ";
        name << "Z/" << moduli[i];
    }
    r->name = name.str();
    return r;
}

RingPtr ring_zmod(int64_t n) { return ring_product({n}); }

RingPtr ring_from_tables(std::vector<int> add, std::vector<int> mul, int one,
                         std::vector<std::string> labels, std::string name) {
    auto r = std::make_shared<Ring>();
    r->kind = RingKind::finite;
    r->size = static_cast<int>(labels.size());
    r->add = std::move(add);
    r->mul = std::move(mul);
    r->one = one;
    r->labels = std::move(labels);
    r->name = std::move(name);
    check_ring_axioms(*r);
    return r;
}

void check_ring_axioms(const Ring& r) {
    if (!r.finite()) return;
    const int n = r.size;
    if (n <= 0) throw std::invalid_argument("empty ring");
    auto bad = [&](const char* what) { throw std::invalid_argument(std::string("ring axiom failed: ") + what); };
    for (int a = 0; a < n; ++a) {
        if (r.addi(a, 0) != a) bad("additive identity");
        if (r.muli(a, r.one) != a) bad("multiplicative identity");
        bool has_neg = false;
        for (int b = 0; b < n && !has_neg; ++b) has_neg = r.addi(a, b) == 0;
        if (!has_neg) bad("additive inverse");
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (r.addi(a, b) != r.addi(b, a)) bad("addition commutativity");
            if (r.muli(a, b) != r.muli(b, a)) bad("multiplication commutativity");
        }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                if (r.addi(r.addi(a, b), c) != r.addi(a, r.addi(b, c))) bad("addition associativity");
                if (r.muli(r.muli(a, b), c) != r.muli(a, r.muli(b, c))) bad("multiplication associativity");
                if (r.muli(a, r.addi(b, c)) != r.addi(r.muli(a, b), r.muli(a, c))) bad("distributivity");
            }
}

RingPtr parse_ring(const std::string& text) {
    // strip spaces, then split on 'x'
    std::string s;
    for (char ch : text)
        if (!isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s == "Z") return ring_integers();

    std::vector<int64_t> mods;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t next = s.find('x', pos);
        std::string part = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        if (part.rfind("Z/", 0) != 0)
            throw std::invalid_argument("cannot parse ring '" + text + "': expected Z or Z/n [x Z/m ...]");
        int64_t n;
        try {
            std::size_t used = 0;
            n = std::stoll(part.substr(2), &used);
            if (used != part.size() - 2) throw std::invalid_argument("");
        } catch (...) {
            throw std::invalid_argument("cannot parse ring modulus in '" + text + "'");
        }
        if (n < 2) throw std::invalid_argument("ring modulus must be at least 2");
        mods.push_back(n);
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    if (mods.empty()) throw std::invalid_argument("cannot parse ring '" + text + "'");
    return ring_product(mods);
}

} // namespace annigraph
