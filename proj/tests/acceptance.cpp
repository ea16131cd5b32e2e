// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "hyperpoly/axioms.hpp"
#include "hyperpoly/errors.hpp"
#include "hyperpoly/instances.hpp"
#include "hyperpoly/sweep.hpp"
#include "hyperpoly/text.hpp"
#include "hyperpoly/tropical.hpp"

using namespace hyperpoly;

namespace {

constexpr std::uint64_t kSeed = 1;

struct Outcome {
    bool ok;
    std::string detail;
};

struct Criterion {
    int id;
    std::string title;
    double limit_ms;  // 0: no time limit
    std::function<Outcome()> run;
};

Outcome from_sweeps(const std::vector<SweepResult>& sweeps) {
    std::size_t cases = 0;
    for (const auto& s : sweeps) {
        cases += s.cases;
        if (!s.passed()) return {false, s.name + ": " + std::to_string(s.failures) + " failures, first " + s.witness};
    }
    return {true, std::to_string(cases) + " cases"};
}

std::set<std::string> formatted_set(const std::vector<Poly>& ps) {
    std::set<std::string> out;
    for (const auto& p : ps) out.insert(format_poly(p));
    return out;
}

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

Outcome newton_example() {
    Hyperfield t = Hyperfield::tropical();
    Poly p = parse_poly(t, "2,0,1,inf,-1,0");
    NewtonPolygon np = newton_polygon(p);
    const std::vector<NewtonSegment> expected = {{2, 1}, {Rational(1, 3), 3}, {-1, 1}};
    if (np.segments != expected) return {false, "segments differ"};
    if (nu(p, t.tropical_value(2)) != 1 || nu(p, t.tropical_value(Rational(1, 3))) != 3 || nu(p, t.tropical_value(-1)) != 1)
        return {false, "nu on a slope differs"};
    for (Rational s : {Rational(0), Rational(1), Rational(5), Rational(-2), Rational(1, 2), Rational(7, 3)})
        if (nu(p, t.tropical_value(s)) != 0) return {false, "nu off the slopes is nonzero at " + to_string(s)};
    if (nu(p, t.tropical_inf()) != 0) return {false, "nu at inf is nonzero"};
    return {true, "segments (2,1) (1/3,3) (-1,1)"};
}

Outcome quotient_regression() {
    Hyperfield s = Hyperfield::sign();
    auto qs = quotients(parse_poly(s, "1,-1,-1,1"), s.one());
    std::set<std::string> expected = {"-1,0,1", "-1,1,1", "-1,-1,1"};
    if (formatted_set(qs) != expected || qs.size() != 3) return {false, std::to_string(qs.size()) + " quotients"};
    return {true, "T^2 - 1, T^2 + T - 1, T^2 - T - 1"};
}

Outcome weak_sign_pathology() {
    Hyperfield w = Hyperfield::weak_sign();
    Poly p = parse_poly(w, "1,1,1");
    unsigned plus = multiplicity(p, w.one()).multiplicity;
    unsigned minus = multiplicity(p, w.sign_element(-1)).multiplicity;
    bool ok = plus == 2 && minus == 2 && plus + minus > static_cast<unsigned>(p.degree());
    return {ok, "mult_1 = " + std::to_string(plus) + ", mult_-1 = " + std::to_string(minus) + ", degree 2"};
}

Outcome association_example() {
    Hyperfield s = Hyperfield::sign();
    const Poly minus = parse_poly(s, "-1,1"), plus = parse_poly(s, "1,1");
    std::vector<Poly> factors = {minus, minus, plus};
    auto left = hyper_product(factors, AssocTree::parse("((1 2) 3)"));
    auto right = hyper_product(factors, AssocTree::parse("(1 (2 3))"));
    if (left.size() != 9 || right.size() != 5)
        return {false, "sizes " + std::to_string(left.size()) + " and " + std::to_string(right.size())};
    // intermediate products: {T^2 - T + 1} and {T^2 + aT - 1 : a in S}
    if (formatted_set(hyper_mul_poly(minus, minus)) != std::set<std::string>{"1,-1,1"}) return {false, "(T-1)(T-1) differs"};
    if (formatted_set(hyper_mul_poly(minus, plus)) != std::set<std::string>{"-1,0,1", "-1,1,1", "-1,-1,1"})
        return {false, "(T-1)(T+1) differs"};
    std::set<std::string> all, restricted;
    for (const auto& a : s.carrier())
        for (const auto& b : s.carrier()) {
            std::string text = format_poly(Poly(s, {s.one(), b, a, s.one()}));
            all.insert(text);
            if (a == s.sign_element(-1) || b == s.sign_element(-1)) restricted.insert(text);
        }
    if (formatted_set(left) != all) return {false, "left association set differs"};
    if (formatted_set(right) != restricted) return {false, "right association set differs"};
    return {true, "9 and 5 polynomials"};
}

Outcome phase_roots() {
    Hyperfield p = Hyperfield::phase();
    Poly f = parse_poly(p, "1,1,1");
    for (Rational q : {Rational(3, 5), Rational(1), Rational(7, 5)})
        if (!is_root(f, p.phase_angle(q))) return {false, "not a root at angle " + to_string(q) + " pi"};
    for (Rational q : {Rational(1, 2), Rational(3, 2), Rational(0)})
        if (is_root(f, p.phase_angle(q))) return {false, "unexpected root at angle " + to_string(q) + " pi"};
    return {true, "roots at 3/5, 1, 7/5; none at 1/2, 3/2, 0"};
}

Outcome axiom_suite() {
    std::vector<Hyperfield> fields = {Hyperfield::rationals(), Hyperfield::prime_field(5), Hyperfield::prime_field(7),
                                      Hyperfield::sign(),      Hyperfield::krasner(),       Hyperfield::weak_sign(),
                                      Hyperfield::phase(),     Hyperfield::tropical()};
    std::set<std::string> seen;
    std::size_t quotients = 0;
    for (std::uint64_t p = 2; p <= 31; ++p) {
        if (!is_prime(p)) continue;
        for (std::int64_t g = 1; g < static_cast<std::int64_t>(p); ++g) {
            Hyperfield q = build_quotient(p, {g});
            if (seen.insert(q.spec()).second) {
                fields.push_back(q);
                ++quotients;
            }
        }
    }
    for (const auto& f : fields) {
        AxiomReport r = check_axioms(f);
        if (!r.all_passed()) return {false, f.name() + " fails the axioms"};
    }
    if (!iso_to_named(build_quotient(7, {2}), Hyperfield::weak_sign())) return {false, "F7/squares is not isomorphic to W"};
    Hyperfield s = Hyperfield::sign();
    Hyperfield bad = Hyperfield::with_mutated_sum(s, s.one(), s.one(), {s.sign_element(-1)});
    AxiomReport r = check_axioms(bad);
    auto failed = std::find_if(r.checks.begin(), r.checks.end(), [](const AxiomCheck& c) { return !c.passed; });
    if (failed == r.checks.end()) return {false, "mutated S passes"};
    if (failed->witness.empty()) return {false, "mutated S failure has no witness"};
    std::string witness;
    for (const auto& x : failed->witness) witness += (witness.empty() ? "" : ", ") + format_element(bad, x);
    return {true, std::to_string(fields.size()) + " instances (" + std::to_string(quotients) + " quotients); mutated S fails " +
                      failed->axiom + " at (" + witness + ")"};
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "Newton polygon of (2,0,1,inf,-1,0) over T", 1, newton_example},
        {2, "sign multiplicities equal sign changes, degree <= 6", 30000,
         [] { return from_sweeps({sweep_sign_multiplicity(6)}); }},
        {3, "roots have linear quotients over S, K, W, F7/squares, degree <= 4", 60000,
         [] {
             std::vector<SweepResult> r;
             for (const auto& f : {Hyperfield::sign(), Hyperfield::krasner(), Hyperfield::weak_sign(), build_quotient(7, {2})})
                 r.push_back(sweep_root_quotient(f, 4));
             return from_sweeps(r);
         }},
        {4, "quotients of T^3 - T^2 - T + 1 by T - 1 over S", 0, quotient_regression},
        {5, "T^2 + T + 1 over W has root multiplicities summing past the degree", 0, weak_sign_pathology},
        {6, "Krasner multiplicities split as prefix and remainder", 0,
         [] { return from_sweeps({sweep_krasner(20, 8, kSeed)}); }},
        {7, "hyperproduct of (T-1),(T-1),(T+1) over S depends on association", 0, association_example},
        {8, "roots of T^2 + T + 1 over P", 0, phase_roots},
        {9, "Sturm root counts equal sign changes on split polynomials", 60000,
         [] { return from_sweeps({sweep_descartes_split(200, 6, kSeed)}); }},
        {10, "Newton slopes count roots by valuation for primes 2 and 3", 60000,
         [] { return from_sweeps({sweep_newton_split(100, 6, {2, 3}, kSeed)}); }},
        {11, "tropical roots round-trip; membership tests agree", 0,
         [] { return from_sweeps({sweep_tropical_roundtrip(500, 6, kSeed), sweep_tropical_negatives(200, 6, kSeed)}); }},
        {12, "axiom suite, F7/squares = W, mutated S rejected", 0, axiom_suite},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        if (c.limit_ms > 0 && ms >= c.limit_ms) {
            o.ok = false;
            o.detail += "; over the time limit";
        }
        char timing[64];
        if (c.limit_ms > 0) std::snprintf(timing, sizeof timing, "%.3f ms, limit %.0f ms", ms, c.limit_ms);
        else std::snprintf(timing, sizeof timing, "%.3f ms", ms);
        std::printf("%s %2d  %s: %s (%s)\n", o.ok ? "PASS" : "FAIL", c.id, c.title.c_str(), o.detail.c_str(), timing);
        failures += !o.ok;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures ? 1 : 0;
}
