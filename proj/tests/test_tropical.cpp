#include <doctest.h>

#include <algorithm>
#include <random>

#include "hyperpoly/errors.hpp"
#include "hyperpoly/instances.hpp"
#include "hyperpoly/rational_poly.hpp"
#include "hyperpoly/tropical.hpp"
#include "support.hpp"

using namespace hyperpoly;
using test_support::poly;

namespace {

const Hyperfield& trop() {
    static const Hyperfield t = Hyperfield::tropical();
    return t;
}

Element tv(const Rational& v) { return trop().tropical_value(v); }

std::vector<Element> random_roots(std::mt19937& rng, std::size_t max_size) {
    static const std::vector<Element> pool = {tv(-2), tv(-1), tv(0), tv(Rational(1, 3)), tv(1), tv(2), trop().tropical_inf()};
    std::vector<Element> r;
    for (std::size_t i = 0, n = 1 + rng() % max_size; i < n; ++i) r.push_back(pool[rng() % pool.size()]);
    std::sort(r.begin(), r.end());
    return r;
}

// c_{n-i} against the hypersum of every i-fold product, by subset enumeration.
bool in_product_brute(const Poly& p, const std::vector<Element>& roots) {
    const std::size_t n = roots.size();
    std::vector<std::vector<Element>> products(n + 1);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        Element prod = trop().one();
        unsigned size = 0;
        for (std::size_t k = 0; k < n; ++k)
            if (mask >> k & 1) {
                prod = trop().mul(prod, roots[k]);
                ++size;
            }
        products[size].push_back(prod);
    }
    for (std::size_t i = 1; i <= n; ++i)
        if (!trop().sum(products[i]).contains(p.coeff(n - i))) return false;
    return true;
}

Poly with_coeff(const Poly& p, std::size_t i, const Element& c) {
    auto v = p.coeffs();
    v[i] = c;
    return Poly(trop(), std::move(v));
}

}  // namespace

TEST_CASE("Newton polygon of the worked example") {
    Poly p = poly("T", "2,0,1,inf,-1,0");
    NewtonPolygon np = newton_polygon(p);
    CHECK(np.inf_prefix == 0);
    std::vector<NewtonSegment> expected = {{2, 1}, {Rational(1, 3), 3}, {-1, 1}};
    CHECK(np.segments == expected);
    CHECK(np.vertices.size() == 4);
    CHECK(nu(p, tv(2)) == 1);
    CHECK(nu(p, tv(Rational(1, 3))) == 3);
    CHECK(nu(p, tv(-1)) == 1);
    CHECK(nu(p, tv(5)) == 0);
    CHECK(nu(p, tv(0)) == 0);
    CHECK(nu(p, trop().tropical_inf()) == 0);
}

TEST_CASE("Newton polygon edge cases") {
    CHECK(newton_polygon(poly("T", "0,0")).segments == std::vector<NewtonSegment>{{0, 1}});
    std::vector<NewtonSegment> three = {{2, 1}, {1, 1}, {0, 1}};
    CHECK(newton_polygon(poly("T", "3,1,0,0")).segments == three);
    // collinear middle point is dropped
    CHECK(newton_polygon(poly("T", "2,1,0")).segments == std::vector<NewtonSegment>{{1, 2}});
    NewtonPolygon shifted = newton_polygon(poly("T", "inf,inf,1,0"));
    CHECK(shifted.inf_prefix == 2);
    CHECK(shifted.segments == std::vector<NewtonSegment>{{1, 1}});
    CHECK(nu(poly("T", "inf,inf,1,0"), trop().tropical_inf()) == 2);
    CHECK_THROWS_AS(newton_polygon(poly("T", "inf")), DomainError);
    CHECK_THROWS_AS(newton_polygon(poly("Q", "1,2")), DomainError);
}

TEST_CASE("tropical roots") {
    CHECK(tropical_roots(poly("T", "2,0,1,inf,-1,0")) ==
          std::vector<Element>{tv(-1), tv(Rational(1, 3)), tv(Rational(1, 3)), tv(Rational(1, 3)), tv(2)});
    CHECK(tropical_roots(poly("T", "11,4,0")) == std::vector<Element>{tv(4), tv(7)});
    CHECK(tropical_roots(poly("T", "inf,inf,0")) == std::vector<Element>{trop().tropical_inf(), trop().tropical_inf()});
    CHECK(tropical_roots(poly("T", "5")).empty());
}

TEST_CASE("function evaluation") {
    CHECK(eval_function(poly("T", "2,0,1,inf,-1,0"), 0) == -1);
    CHECK(eval_function(poly("T", "11,4,0"), 5) == 9);
    CHECK(eval_function(poly("T", "7/2"), -100) == Rational(7, 2));
    CHECK(eval_function(poly("T", "7/2"), 100) == Rational(7, 2));
}

TEST_CASE("elementary symmetric values agree with subset minima") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 200; ++trial) {
        auto r = random_roots(rng, 8);
        std::shuffle(r.begin(), r.end(), rng);
        auto s = elementary_symmetric(r);
        const std::size_t n = r.size();
        REQUIRE(s.size() == n + 1);
        for (std::size_t i = 0; i <= n; ++i) {
            std::optional<Element> best;
            for (unsigned mask = 0; mask < (1u << n); ++mask) {
                if (static_cast<std::size_t>(__builtin_popcount(mask)) != i) continue;
                Element prod = trop().one();
                for (std::size_t k = 0; k < n; ++k)
                    if (mask >> k & 1) prod = trop().mul(prod, r[k]);
                if (!best || prod < *best) best = prod;
            }
            CHECK(s[i] == *best);
        }
    }
}

TEST_CASE("membership in a product of linear factors") {
    Poly ex = poly("T", "2,0,1,inf,-1,0");
    auto ex_roots = tropical_roots(ex);
    CHECK(in_product(ex, ex_roots));
    CHECK(functional_equiv(ex, ex_roots));
    CHECK(in_product(poly("T", "11,4,0"), {tv(4), tv(7)}));
    CHECK_FALSE(in_product(poly("T", "11,4,0"), {tv(4), tv(8)}));
    CHECK(functional_equiv(poly("T", "11,4,0"), {tv(4), tv(7)}));
    CHECK_FALSE(functional_equiv(poly("T", "11,3,0"), {tv(4), tv(7)}));
    CHECK_FALSE(in_product(poly("T", "11,3,0"), {tv(4), tv(7)}));
    // a repeated root leaves the middle coefficient free above its bound
    CHECK(in_product(poly("T", "2,1,0"), {tv(1), tv(1)}));
    CHECK(in_product(poly("T", "2,5,0"), {tv(1), tv(1)}));
    CHECK(in_product(poly("T", "2,inf,0"), {tv(1), tv(1)}));
    CHECK_FALSE(in_product(poly("T", "2,0,0"), {tv(1), tv(1)}));
    CHECK_THROWS_AS(in_product(poly("T", "11,4,1"), {tv(4), tv(7)}), DomainError);
    CHECK_THROWS_AS(in_product(poly("T", "11,4,0"), {tv(4)}), DomainError);
}

TEST_CASE("functional comparison looks past the outermost root") {
    // agrees with b -> min(b, 0) + b at -1, 0 and 1, but bends again at b = 2
    Poly p = poly("T", "2,0,0");
    std::vector<Element> roots = {tv(0), trop().tropical_inf()};
    CHECK(eval_function(p, 3) != 3);
    CHECK_FALSE(functional_equiv(p, roots));
    CHECK_FALSE(in_product(p, roots));
}

TEST_CASE("functional sample covers the example points") {
    auto pts = functional_sample(poly("T", "11,4,0"), {tv(4), tv(7)});
    for (Rational b : {Rational(3), Rational(4), Rational(11, 2), Rational(7), Rational(8)})
        CHECK(std::find(pts.begin(), pts.end(), b) != pts.end());
    CHECK(std::is_sorted(pts.begin(), pts.end()));
}

TEST_CASE("closed-form membership matches subset enumeration") {
    std::mt19937 rng(43);
    for (int trial = 0; trial < 300; ++trial) {
        auto r = random_roots(rng, 7);
        Poly p = canonical_expansion(r);
        CHECK(in_product(p, r) == in_product_brute(p, r));
        // perturb one non-leading coefficient
        std::size_t i = rng() % (p.coeffs().size() - 1);
        static const std::vector<Element> shifts = {tv(-1), tv(Rational(1, 2)), tv(3)};
        Element c = trop().is_zero(p.coeff(i)) ? tv(static_cast<int>(rng() % 5) - 2) : trop().mul(p.coeff(i), shifts[rng() % 3]);
        if (rng() % 5 == 0) c = trop().tropical_inf();
        Poly q = with_coeff(p, i, c);
        CHECK(in_product(q, r) == in_product_brute(q, r));
    }
}

TEST_CASE("canonical expansion round-trips through the roots") {
    std::mt19937 rng(47);
    for (int trial = 0; trial < 500; ++trial) {
        auto r = random_roots(rng, 6);
        Poly p = canonical_expansion(r);
        CHECK(tropical_roots(p) == r);
        CHECK(in_product(p, r));
        CHECK(functional_equiv(p, r));
        unsigned total = 0;
        NewtonPolygon np = newton_polygon(p);
        for (const auto& seg : np.segments) total += seg.length;
        CHECK(total + np.inf_prefix == static_cast<std::size_t>(p.degree()));
    }
}

TEST_CASE("membership and functional equality agree") {
    std::mt19937 rng(53);
    int negatives = 0;
    for (int trial = 0; trial < 200; ++trial) {
        auto r = random_roots(rng, 6);
        Poly p = canonical_expansion(r);
        if (p.degree() > 0 && rng() % 2) {
            std::size_t i = rng() % static_cast<std::size_t>(p.degree());
            Element c = trop().is_zero(p.coeff(i)) ? tv(static_cast<int>(rng() % 7) - 3)
                                                   : trop().mul(p.coeff(i), tv(static_cast<int>(rng() % 5) - 2));
            p = with_coeff(p, i, c);
        }
        bool member = in_product(p, r);
        negatives += !member;
        CHECK(member == functional_equiv(p, r));
    }
    CHECK(negatives > 20);
}

TEST_CASE("raising free coefficients keeps membership, lowering breaks it") {
    std::mt19937 rng(59);
    for (int trial = 0; trial < 200; ++trial) {
        auto r = random_roots(rng, 6);
        Poly p = canonical_expansion(r);
        const std::size_t n = r.size();
        for (std::size_t i = 1; i <= n; ++i) {
            const Element& ci = p.coeff(n - i);
            bool forced = i == n || r[i - 1] < r[i];
            if (!forced && !trop().is_zero(ci)) {
                CHECK(in_product(with_coeff(p, n - i, trop().mul(ci, tv(Rational(5, 2)))), r));
                CHECK(in_product(with_coeff(p, n - i, trop().tropical_inf()), r));
            }
            if (!trop().is_zero(ci)) CHECK_FALSE(in_product(with_coeff(p, n - i, trop().mul(ci, tv(-1))), r));
        }
    }
}

TEST_CASE("linear quotients over T") {
    Poly ex = poly("T", "2,0,1,inf,-1,0");
    auto q = divide_linear(ex, tv(Rational(1, 3)));
    REQUIRE(q);
    CHECK(q->degree() == 4);
    CHECK(in_linear_product(ex, tv(Rational(1, 3)), *q));
    CHECK(tropical_roots(*q) == std::vector<Element>{tv(-1), tv(Rational(1, 3)), tv(Rational(1, 3)), tv(2)});
    CHECK_FALSE(divide_linear(ex, tv(5)));
    CHECK_FALSE(divide_linear(ex, trop().tropical_inf()));
    CHECK(divide_linear(poly("T", "inf,1,0"), trop().tropical_inf()) == poly("T", "1,0"));

    // the canonical quotient from the remaining roots need not be a member here
    Poly p = poly("T", "7,5,1,0");
    REQUIRE(tropical_roots(p) == std::vector<Element>{tv(1), tv(3), tv(3)});
    Poly canonical = canonical_expansion({tv(3), tv(3)});
    CHECK_FALSE(in_linear_product(p, tv(1), canonical));
    auto found = divide_linear(p, tv(1));
    REQUIRE(found);
    CHECK(in_linear_product(p, tv(1), *found));
    CHECK(tropical_roots(*found) == std::vector<Element>{tv(3), tv(3)});
}

TEST_CASE("tropical multiplicity with witness chains") {
    Poly ex = poly("T", "2,0,1,inf,-1,0");
    MultReport r = mult_tropical(ex, tv(Rational(1, 3)));
    CHECK(r.method == MultMethod::newton_polygon);
    CHECK(r.multiplicity == 3);
    CHECK(r.witness.size() == 3);
    CHECK(witness_chain_valid(ex, r));
    CHECK(mult_tropical(ex, tv(5)).multiplicity == 0);
    MultReport z = mult_tropical(poly("T", "inf,inf,0"), trop().tropical_inf());
    CHECK(z.multiplicity == 2);
    CHECK(witness_chain_valid(poly("T", "inf,inf,0"), z));
    CHECK(multiplicity(ex, tv(Rational(1, 3))).multiplicity == 3);
}

TEST_CASE("tropical multiplicity is invariant under scaling") {
    std::mt19937 rng(61);
    for (int trial = 0; trial < 150; ++trial) {
        std::vector<Element> c;
        for (std::size_t i = 0, n = 2 + rng() % 5; i < n; ++i)
            c.push_back(rng() % 6 == 0 ? trop().tropical_inf() : tv(Rational(static_cast<int>(rng() % 13) - 6, 1 + rng() % 2)));
        c.back() = tv(static_cast<int>(rng() % 7) - 3);
        Poly p(trop(), c);
        Poly m = make_monic(p);
        CHECK(m.leading() == trop().one());
        for (const auto& s : tropical_roots(p)) {
            MultReport a = mult_tropical(p, s);
            CHECK(a.multiplicity == mult_tropical(m, s).multiplicity);
            CHECK(witness_chain_valid(p, a));
        }
        CHECK(in_product(m, tropical_roots(p)));
    }
}

TEST_CASE("valuation image") {
    CHECK(valuation_image(poly("Q", "-8,14,-7,1"), 2) == poly("T", "3,1,0,0"));
    CHECK(valuation_image(poly("Q", "-2,0,1"), 2) == poly("T", "1,inf,0"));
    CHECK(valuation_image(poly("Q", "9/2,1"), 3) == poly("T", "2,0"));
}

TEST_CASE("Newton rule examples") {
    NewtonRuleReport r = newton_rule_verify(poly("Q", "-8,14,-7,1"), 2, std::vector<Rational>{1, 2, 4});
    CHECK(r.split);
    CHECK(r.passed);
    CHECK(r.nu_total == 3);
    REQUIRE(r.slopes.size() == 3);
    for (const auto& c : r.slopes) {
        CHECK(c.nu == 1);
        CHECK(c.roots == 1);
    }

    r = newton_rule_verify(poly("Q", "-2,0,1"), 2);
    CHECK(r.passed);
    CHECK_FALSE(r.split);
    REQUIRE(r.slopes.size() == 1);
    CHECK(r.slopes[0].s == tv(Rational(1, 2)));
    CHECK(r.slopes[0].nu == 2);
    CHECK(r.slopes[0].roots == 0);

    r = newton_rule_verify(poly("Q", "1,1"), 3, std::vector<Rational>{-1});
    CHECK(r.split);
    CHECK(r.passed);
    CHECK(r.slopes[0].s == tv(0));

    r = newton_rule_verify(poly("Q", "0,0,-2,0,1"), 2);
    CHECK(r.nu_total == 4);
    CHECK(r.polygon.inf_prefix == 2);

    CHECK_THROWS_AS(newton_rule_verify(poly("Q", "-8,14,-7,1"), 2, std::vector<Rational>{1, 2, 3}), DomainError);
    CHECK_THROWS_AS(newton_rule_verify(poly("Q", "0"), 2), DomainError);
}

TEST_CASE("Newton rule holds on split polynomials") {
    const std::vector<Rational> pool = {1, -1, 2, -2, 4, -4, Rational(1, 2), Rational(-1, 2), 3, -3};
    std::mt19937 rng(67);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Rational> roots;
        for (std::size_t i = 0, n = 1 + rng() % 6; i < n; ++i) roots.push_back(pool[rng() % pool.size()]);
        Poly p = to_poly(RatPoly::from_roots(roots, Rational(static_cast<int>(1 + rng() % 5))));
        for (std::uint64_t prime : {2u, 3u}) {
            NewtonRuleReport r = newton_rule_verify(p, prime, roots);
            CHECK(r.split);
            CHECK(r.passed);
            CHECK(r.nu_total == roots.size());
            for (const auto& c : r.slopes) {
                unsigned count = 0;
                for (const auto& x : roots) count += padic_valuation(x, prime) == c.s;
                CHECK(c.nu == count);
            }
        }
    }
}

TEST_CASE("plot data") {
    std::string out = plot_data(newton_polygon(poly("T", "2,0,1,inf,-1,0")));
    CHECK(out == "0 2\n1 0\n\n1 0\n4 -1\n\n4 -1\n5 0\n");
    CHECK(plot_data(newton_polygon(poly("T", "3"))).empty());
}
