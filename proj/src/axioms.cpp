#include "hyperpoly/axioms.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>

#include "hyperpoly/errors.hpp"
#include "parallel.hpp"

namespace hyperpoly {

bool AxiomReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.passed; });
}

const AxiomCheck* AxiomReport::find(const std::string& axiom) const {
    for (const auto& c : checks)
        if (c.axiom == axiom) return &c;
    return nullptr;
}

std::vector<Element> sample_grid(const Hyperfield& f) {
    std::vector<Element> g;
    switch (f.kind()) {
        case Kind::tropical:
            for (const Rational& q : {Rational(-2), Rational(-1), Rational(-1, 2), Rational(0), Rational(1, 3),
                                      Rational(1), Rational(7, 2)})
                g.push_back(f.tropical_value(q));
            g.push_back(f.tropical_inf());
            break;
        case Kind::phase:
            g.push_back(f.zero());
            for (const Rational& q : {Rational(0), Rational(1, 3), Rational(1, 2), Rational(1), Rational(3, 2),
                                      Rational(5, 3)})
                g.push_back(f.phase_angle(q));
            break;
        case Kind::field_q:
            for (const Rational& q : {Rational(-2), Rational(-1), Rational(-1, 2), Rational(0), Rational(1, 3),
                                      Rational(1), Rational(7, 2)})
                g.push_back(f.rational(q));
            break;
        case Kind::field_fp: {
            auto p = static_cast<std::int64_t>(f.prime());
            for (std::int64_t r : {std::int64_t(0), std::int64_t(1), std::int64_t(2), std::int64_t(3),
                                   std::int64_t(5), p - 1, p - 2, (p + 1) / 2})
                g.push_back(f.residue(r));
            break;
        }
        default:
            return f.carrier();
    }
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
    return g;
}

namespace {

// ------------------------------------------------------------ table kernel

using Mask = std::vector<std::uint64_t>;

struct MaskTables {
    std::uint32_t n = 0;
    std::size_t words = 0;
    std::vector<Mask> add;  // n * n
    std::vector<std::uint32_t> mul;
    std::vector<std::uint32_t> neg;
    std::vector<std::uint32_t> inv;

    const Mask& sum(std::uint32_t a, std::uint32_t b) const { return add[a * n + b]; }
    std::uint32_t product(std::uint32_t a, std::uint32_t b) const { return mul[a * n + b]; }
    bool has(const Mask& m, std::uint32_t x) const { return (m[x / 64] >> (x % 64)) & 1u; }
    Mask single(std::uint32_t x) const {
        Mask m(words, 0);
        m[x / 64] |= std::uint64_t(1) << (x % 64);
        return m;
    }
    void merge(Mask& into, const Mask& m) const {
        for (std::size_t w = 0; w < words; ++w) into[w] |= m[w];
    }
    bool empty(const Mask& m) const {
        return std::all_of(m.begin(), m.end(), [](std::uint64_t w) { return w == 0; });
    }
    template <class F>
    void for_each(const Mask& m, F&& f) const {
        for (std::uint32_t x = 0; x < n; ++x)
            if (has(m, x)) f(x);
    }
};

// Built from the public element operations, so prime fields and table-backed
// instances go through the same code as everything else.
MaskTables build_masks(const Hyperfield& f) {
    MaskTables t;
    t.n = static_cast<std::uint32_t>(f.carrier_size());
    t.words = (t.n + 63) / 64;
    t.add.resize(std::size_t(t.n) * t.n);
    t.mul.resize(std::size_t(t.n) * t.n);
    t.neg.resize(t.n);
    t.inv.resize(t.n, 0);
    for (std::uint32_t a = 0; a < t.n; ++a) {
        Element ea = f.element_at(a);
        t.neg[a] = f.index_of(f.neg(ea));
        if (a != f.index_of(f.zero())) t.inv[a] = f.index_of(f.inv(ea));
        for (std::uint32_t b = 0; b < t.n; ++b) {
            Element eb = f.element_at(b);
            Mask m(t.words, 0);
            for (const auto& x : f.add(ea, eb).enumerate()) t.merge(m, t.single(f.index_of(x)));
            t.add[a * t.n + b] = std::move(m);
            t.mul[a * t.n + b] = f.index_of(f.mul(ea, eb));
        }
    }
    return t;
}

struct Recorder {
    AxiomReport& report;
    Exec exec;

    // `decode` turns a case index into the witness tuple
    template <class Pred, class Decode>
    void run(const std::string& axiom, std::size_t cases, Pred&& ok, Decode&& decode) {
        AxiomCheck c;
        c.axiom = axiom;
        c.cases = cases;
        if (auto bad = detail::first_failure(cases, exec, ok)) {
            c.passed = false;
            c.witness = decode(*bad);
        }
        report.checks.push_back(std::move(c));
    }
};

void check_table(const Hyperfield& f, AxiomReport& report, Exec exec) {
    const MaskTables t = build_masks(f);
    const std::uint32_t n = t.n;
    const std::uint32_t zero = f.index_of(f.zero());
    const std::uint32_t one = f.index_of(f.one());
    Recorder rec{report, exec};

    auto pair_of = [&](std::size_t i) {
        return std::vector<Element>{f.element_at(std::uint32_t(i / n)), f.element_at(std::uint32_t(i % n))};
    };
    auto triple_of = [&](std::size_t i) {
        return std::vector<Element>{f.element_at(std::uint32_t(i / (std::size_t(n) * n))),
                                    f.element_at(std::uint32_t((i / n) % n)), f.element_at(std::uint32_t(i % n))};
    };
    auto single_of = [&](std::size_t i) { return std::vector<Element>{f.element_at(std::uint32_t(i))}; };
    const std::size_t pairs = std::size_t(n) * n;
    const std::size_t triples = pairs * n;

    rec.run("nonempty sums", pairs, [&](std::size_t i) { return !t.empty(t.add[i]); }, pair_of);
    rec.run("commutativity", pairs,
            [&](std::size_t i) { return t.sum(std::uint32_t(i / n), std::uint32_t(i % n)) == t.sum(std::uint32_t(i % n), std::uint32_t(i / n)); },
            pair_of);
    rec.run("associativity", triples,
            [&](std::size_t i) {
                auto a = std::uint32_t(i / pairs), b = std::uint32_t((i / n) % n), c = std::uint32_t(i % n);
                Mask left(t.words, 0), right(t.words, 0);
                t.for_each(t.sum(b, c), [&](std::uint32_t d) { t.merge(left, t.sum(a, d)); });
                t.for_each(t.sum(a, b), [&](std::uint32_t d) { t.merge(right, t.sum(d, c)); });
                return left == right;
            },
            triple_of);
    rec.run("HG1 neutral element", n,
            [&](std::size_t i) {
                auto a = std::uint32_t(i);
                return t.sum(zero, a) == t.single(a) && t.sum(a, zero) == t.single(a);
            },
            single_of);
    rec.run("HG2 unique inverse", n,
            [&](std::size_t i) {
                auto a = std::uint32_t(i);
                std::uint32_t found = 0, which = 0;
                for (std::uint32_t x = 0; x < n; ++x)
                    if (t.has(t.sum(a, x), zero)) {
                        ++found;
                        which = x;
                    }
                return found == 1 && which == t.neg[a];
            },
            single_of);
    rec.run("HG3 reversibility", triples,
            [&](std::size_t i) {
                auto a = std::uint32_t(i / pairs), b = std::uint32_t((i / n) % n), c = std::uint32_t(i % n);
                return t.has(t.sum(b, c), a) == t.has(t.sum(t.neg[a], c), t.neg[b]);
            },
            triple_of);
    rec.run("HF2 multiplicative group", triples,
            [&](std::size_t i) {
                auto a = std::uint32_t(i / pairs), b = std::uint32_t((i / n) % n), c = std::uint32_t(i % n);
                if (a == zero || b == zero || c == zero) return true;
                return t.product(a, b) != zero && t.product(a, b) == t.product(b, a) &&
                       t.product(t.product(a, b), c) == t.product(a, t.product(b, c)) && t.product(one, a) == a &&
                       t.product(a, t.inv[a]) == one;
            },
            triple_of);
    rec.run("HF3 absorbing zero", n,
            [&](std::size_t i) {
                auto a = std::uint32_t(i);
                return t.product(a, zero) == zero && t.product(zero, a) == zero;
            },
            single_of);
    rec.run("HF4 distributivity", triples,
            [&](std::size_t i) {
                auto a = std::uint32_t(i / pairs), b = std::uint32_t((i / n) % n), c = std::uint32_t(i % n);
                Mask scaled(t.words, 0);
                t.for_each(t.sum(b, c), [&](std::uint32_t d) { t.merge(scaled, t.single(t.product(a, d))); });
                return scaled == t.sum(t.product(a, b), t.product(a, c));
            },
            triple_of);
}

// ------------------------------------------------------------ sampled kernel

void check_elements(const Hyperfield& f, const std::vector<Element>& g, AxiomReport& report, Exec exec) {
    const std::size_t n = g.size();
    const std::size_t pairs = n * n, triples = pairs * n;
    const Element zero = f.zero(), one = f.one();
    Recorder rec{report, exec};
    auto pair_of = [&](std::size_t i) { return std::vector<Element>{g[i / n], g[i % n]}; };
    auto triple_of = [&](std::size_t i) { return std::vector<Element>{g[i / pairs], g[(i / n) % n], g[i % n]}; };
    auto single_of = [&](std::size_t i) { return std::vector<Element>{g[i]}; };

    rec.run("nonempty sums", pairs,
            [&](std::size_t i) {
                HyperSet s = f.add(g[i / n], g[i % n]);
                if (const auto* ps = s.as_phase()) return !ps->empty();
                return true;  // finite sets and rays are nonempty by construction
            },
            pair_of);
    rec.run("commutativity", pairs, [&](std::size_t i) { return f.add(g[i / n], g[i % n]) == f.add(g[i % n], g[i / n]); },
            pair_of);
    rec.run("associativity", triples,
            [&](std::size_t i) {
                const Element &a = g[i / pairs], &b = g[(i / n) % n], &c = g[i % n];
                return f.add_to_set(f.add(b, c), a) == f.add_to_set(f.add(a, b), c);
            },
            triple_of);
    rec.run("HG1 neutral element", n,
            [&](std::size_t i) { return f.add(zero, g[i]) == f.singleton(g[i]) && f.add(g[i], zero) == f.singleton(g[i]); },
            single_of);
    rec.run("HG2 unique inverse", n,
            [&](std::size_t i) {
                const Element& a = g[i];
                Element minus = f.neg(a);
                if (!f.add(a, minus).contains(zero)) return false;
                for (const auto& x : g)
                    if (x != minus && f.add(a, x).contains(zero)) return false;
                return true;
            },
            single_of);
    rec.run("HG3 reversibility", triples,
            [&](std::size_t i) {
                const Element &a = g[i / pairs], &b = g[(i / n) % n], &c = g[i % n];
                return f.add(b, c).contains(a) == f.add(f.neg(a), c).contains(f.neg(b));
            },
            triple_of);
    rec.run("HF2 multiplicative group", triples,
            [&](std::size_t i) {
                const Element &a = g[i / pairs], &b = g[(i / n) % n], &c = g[i % n];
                if (a == zero || b == zero || c == zero) return true;
                Element ab = f.mul(a, b);
                return ab != zero && ab == f.mul(b, a) && f.mul(ab, c) == f.mul(a, f.mul(b, c)) && f.mul(one, a) == a &&
                       f.mul(a, f.inv(a)) == one;
            },
            triple_of);
    rec.run("HF3 absorbing zero", n, [&](std::size_t i) { return f.mul(g[i], zero) == zero && f.mul(zero, g[i]) == zero; },
            single_of);
    rec.run("HF4 distributivity", triples,
            [&](std::size_t i) {
                const Element &a = g[i / pairs], &b = g[(i / n) % n], &c = g[i % n];
                return f.scale(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c));
            },
            triple_of);
}

}  // namespace

AxiomReport check_axioms_on(const Hyperfield& field, const std::vector<Element>& elements, Exec exec) {
    AxiomReport report;
    report.field = field.name();
    report.exhaustive = false;
    for (const auto& e : elements) field.require(e);
    check_elements(field, elements, report, exec);
    return report;
}

AxiomReport check_axioms(const Hyperfield& field, Exec exec) {
    AxiomReport report;
    report.field = field.name();
    if (field.is_enumerable()) {
        report.exhaustive = true;
        check_table(field, report, exec);
    } else {
        auto grid = sample_grid(field);
        check_elements(field, grid, report, exec);
        report.notes.push_back("sampled on a grid of " + std::to_string(grid.size()) + " elements");
    }
    if (field.kind() == Kind::phase)
        report.notes.push_back("a ⊞ a = {a} for equal phases, taken from the quotient C/R>0");
    if (field.kind() == Kind::tropical) report.notes.push_back("min-plus convention, neutral element inf");
    return report;
}

}  // namespace hyperpoly
