#include "hyperpoly/sweep.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "hyperpoly/descartes.hpp"
#include "hyperpoly/instances.hpp"
#include "hyperpoly/rational_poly.hpp"
#include "hyperpoly/text.hpp"
#include "hyperpoly/tropical.hpp"
#include "parallel.hpp"

namespace hyperpoly {

namespace {

SweepResult run_sweep(std::string name, std::size_t count, Exec exec, const std::function<bool(std::size_t)>& ok,
                      const std::function<std::string(std::size_t)>& describe) {
    SweepResult r;
    r.name = std::move(name);
    r.cases = count;
    std::vector<char> failed(count, 0);
    detail::count_failures(count, exec, [&](std::size_t i) {
        failed[i] = !ok(i);
        return !failed[i];
    });
    r.failures = static_cast<std::size_t>(std::count(failed.begin(), failed.end(), 1));
    auto it = std::find(failed.begin(), failed.end(), 1);
    if (it != failed.end()) {
        r.first_failure = static_cast<std::size_t>(it - failed.begin());
        r.witness = describe(*r.first_failure);
    }
    return r;
}

// The i-th coefficient list over `carrier` in base |carrier|, c_0 lowest digit.
std::vector<Element> nth_tuple(const std::vector<Element>& carrier, std::size_t len, std::size_t i) {
    std::vector<Element> c;
    for (std::size_t k = 0; k < len; ++k, i /= carrier.size()) c.push_back(carrier[i % carrier.size()]);
    return c;
}

std::size_t power(std::size_t b, unsigned e) {
    std::size_t out = 1;
    while (e--) out *= b;
    return out;
}

std::string join(const std::vector<Rational>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + to_string(xs[i]);
    return out;
}

std::vector<std::vector<Rational>> split_root_corpus(std::size_t count, unsigned max_degree, std::uint64_t seed,
                                                     const std::vector<Rational>& pool) {
    std::mt19937_64 rng(seed);
    std::vector<std::vector<Rational>> out(count);
    for (auto& roots : out) {
        std::size_t n = 1 + rng() % max_degree;
        for (std::size_t k = 0; k < n; ++k) roots.push_back(pool[rng() % pool.size()]);
    }
    return out;
}

std::vector<std::vector<Element>> tropical_root_corpus(std::size_t count, unsigned max_size, std::uint64_t seed) {
    Hyperfield t = Hyperfield::tropical();
    const std::vector<Element> pool = {t.tropical_value(-2), t.tropical_value(-1), t.tropical_value(0),
                                       t.tropical_value(Rational(1, 3)), t.tropical_value(1), t.tropical_value(2),
                                       t.tropical_inf()};
    std::mt19937_64 rng(seed);
    std::vector<std::vector<Element>> out(count);
    for (auto& roots : out) {
        std::size_t n = 1 + rng() % max_size;
        for (std::size_t k = 0; k < n; ++k) roots.push_back(pool[rng() % pool.size()]);
        std::sort(roots.begin(), roots.end());
    }
    return out;
}

std::string format_roots(const std::vector<Element>& roots) {
    Hyperfield t = Hyperfield::tropical();
    std::string out;
    for (std::size_t i = 0; i < roots.size(); ++i) out += (i ? "," : "") + format_element(t, roots[i]);
    return out;
}

}  // namespace

SweepResult sweep_sign_multiplicity(unsigned max_degree, Exec exec) {
    Hyperfield s = Hyperfield::sign();
    const auto carrier = s.carrier();
    const std::size_t len = max_degree + 1;
    const Element one = s.one(), minus_one = s.sign_element(-1);
    auto make = [&](std::size_t i) { return Poly(s, nth_tuple(carrier, len, i)); };
    return run_sweep(
        "sign multiplicity equals sign changes", power(carrier.size(), len), exec,
        [&](std::size_t i) {
            Poly p = make(i);
            if (p.is_zero()) return true;
            return multiplicity(p, one).multiplicity == sign_changes(p) &&
                   multiplicity(p, minus_one).multiplicity == sign_changes(substitute_neg(p));
        },
        [&](std::size_t i) { return "p = " + format_poly(make(i)); });
}

SweepResult sweep_root_quotient(const Hyperfield& field, unsigned max_degree, Exec exec) {
    const auto carrier = field.carrier();
    const std::size_t len = max_degree + 1;
    const std::size_t polys = power(carrier.size(), len);
    auto make = [&](std::size_t i) { return Poly(field, nth_tuple(carrier, len, i / carrier.size())); };
    return run_sweep(
        "roots have linear quotients over " + field.name(), polys * carrier.size(), exec,
        [&](std::size_t i) {
            Poly p = make(i);
            if (p.is_zero()) return true;
            const Element& a = carrier[i % carrier.size()];
            return is_root(p, a) == !quotients(p, a).empty();
        },
        [&](std::size_t i) {
            return "p = " + format_poly(make(i)) + ", a = " + format_element(field, carrier[i % carrier.size()]);
        });
}

SweepResult sweep_krasner(std::size_t count, unsigned max_degree, std::uint64_t seed, Exec exec) {
    Hyperfield k = Hyperfield::krasner();
    std::mt19937_64 rng(seed);
    std::vector<std::pair<Poly, std::size_t>> corpus;
    for (std::size_t i = 0; i < count; ++i) {
        std::size_t n = 1 + rng() % max_degree;
        std::size_t r = rng() % (n + 1);
        std::vector<Element> c(n + 1, k.zero());
        c[r] = c[n] = k.one();
        for (std::size_t j = r + 1; j < n; ++j) c[j] = k.krasner_element(rng() % 2);
        corpus.emplace_back(Poly(k, std::move(c)), r);
    }
    return run_sweep(
        "Krasner multiplicities", count, exec,
        [&](std::size_t i) {
            const auto& [p, r] = corpus[i];
            auto n = static_cast<unsigned>(p.degree());
            return multiplicity(p, k.zero()).multiplicity == r && multiplicity(p, k.one()).multiplicity == n - r;
        },
        [&](std::size_t i) { return "p = " + format_poly(corpus[i].first); });
}

SweepResult sweep_descartes_split(std::size_t count, unsigned max_degree, std::uint64_t seed, Exec exec) {
    const std::vector<Rational> pool = {1, -1, 2, -2, 3, -3, Rational(1, 2), Rational(-1, 2), Rational(5, 3), Rational(-2, 7)};
    auto corpus = split_root_corpus(count, max_degree, seed, pool);
    std::mt19937_64 rng(seed ^ 0x5eed);
    std::vector<Poly> polys;
    for (const auto& roots : corpus) {
        Rational lead(static_cast<long>(rng() % 9) - 4);
        if (lead == 0) lead = 1;
        polys.push_back(to_poly(RatPoly::from_roots(roots, lead)));
    }
    return run_sweep(
        "Descartes bound attained on split polynomials", count, exec,
        [&](std::size_t i) {
            const Poly& p = polys[i];
            Poly s = sign_image(p);
            return count_positive_roots(p) == sign_changes(s) && count_negative_roots(p) == sign_changes(substitute_neg(s));
        },
        [&](std::size_t i) { return "p = " + format_poly(polys[i]) + ", roots " + join(corpus[i]); });
}

SweepResult sweep_newton_split(std::size_t count, unsigned max_degree, const std::vector<std::uint64_t>& primes,
                               std::uint64_t seed, Exec exec) {
    const std::vector<Rational> pool = {1, -1, 2, -2, 4, -4, Rational(1, 2), Rational(-1, 2), 3, -3};
    auto corpus = split_root_corpus(count, max_degree, seed, pool);
    std::vector<Poly> polys;
    for (const auto& roots : corpus) polys.push_back(to_poly(RatPoly::from_roots(roots)));
    return run_sweep(
        "Newton slopes count roots by valuation", count, exec,
        [&](std::size_t i) {
            for (auto prime : primes) {
                NewtonRuleReport r = newton_rule_verify(polys[i], prime, corpus[i]);
                if (!r.split || !r.passed || r.nu_total != corpus[i].size()) return false;
                for (const auto& c : r.slopes) {
                    unsigned n = 0;
                    for (const auto& x : corpus[i]) n += padic_valuation(x, prime) == c.s;
                    if (n != c.nu) return false;
                }
            }
            return true;
        },
        [&](std::size_t i) { return "roots " + join(corpus[i]); });
}

SweepResult sweep_tropical_roundtrip(std::size_t count, unsigned max_size, std::uint64_t seed, Exec exec) {
    auto corpus = tropical_root_corpus(count, max_size, seed);
    return run_sweep(
        "tropical roots of canonical expansions", count, exec,
        [&](std::size_t i) {
            const auto& roots = corpus[i];
            Poly p = canonical_expansion(roots);
            return tropical_roots(p) == roots && in_product(p, roots) && functional_equiv(p, roots);
        },
        [&](std::size_t i) { return "roots " + format_roots(corpus[i]); });
}

SweepResult sweep_tropical_negatives(std::size_t count, unsigned max_size, std::uint64_t seed, Exec exec) {
    Hyperfield t = Hyperfield::tropical();
    auto corpus = tropical_root_corpus(count, max_size, seed);
    std::mt19937_64 rng(seed ^ 0x7a9);
    std::vector<Poly> polys;
    for (const auto& roots : corpus) {
        Poly p = canonical_expansion(roots);
        auto c = p.coeffs();
        std::size_t i = rng() % (c.size() - 1);
        Rational drop(static_cast<long>(1 + rng() % 4), static_cast<long>(1 + rng() % 3));
        const auto& v = c[i].as<TropicalValue>().finite;
        // an inf bound is undercut by any finite value
        c[i] = v ? t.tropical_value(*v - drop) : t.tropical_value(drop);
        polys.emplace_back(t, std::move(c));
    }
    return run_sweep(
        "lowered coefficients leave the product", count, exec,
        [&](std::size_t i) { return !in_product(polys[i], corpus[i]) && !functional_equiv(polys[i], corpus[i]); },
        [&](std::size_t i) { return "p = " + format_poly(polys[i]) + ", roots " + format_roots(corpus[i]); });
}

}  // namespace hyperpoly
