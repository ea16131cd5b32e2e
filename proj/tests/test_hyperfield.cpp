#include <doctest.h>

#include <random>

#include "hyperpoly/axioms.hpp"
#include "hyperpoly/errors.hpp"
#include "hyperpoly/hyperfield.hpp"

using namespace hyperpoly;

namespace {

Rational q(long a, long b = 1) {
    Rational r(a, b);
    r.canonicalize();
    return r;
}

// n-ary sum by repeated union of partial sums, the defining recursion
HyperSet fold_sum(const Hyperfield& f, const std::vector<Element>& terms) {
    HyperSet acc = f.singleton(terms.at(0));
    for (std::size_t i = 1; i < terms.size(); ++i) acc = f.add_to_set(acc, terms[i]);
    return acc;
}

}  // namespace

TEST_CASE("rationals parse and print exactly") {
    CHECK(parse_rational("-6/4") == q(-3, 2));
    CHECK(to_string(q(7, 3)) == "7/3");
    CHECK(to_string(q(-4)) == "-4");
    CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK(ord_p(mpz_class(-8), 2) == 3);
    CHECK(reduce_angle(q(-1, 2)) == q(3, 2));
    CHECK(reduce_angle(q(5)) == q(1));
}

TEST_CASE("sign hyperfield addition table") {
    Hyperfield s = Hyperfield::sign();
    Element one = s.sign_element(1), minus = s.sign_element(-1), zero = s.zero();
    CHECK(s.add(one, one) == s.singleton(one));
    CHECK(s.add(minus, minus) == s.singleton(minus));
    CHECK(s.add(one, minus) == HyperSet::finite(s.id(), {zero, one, minus}));
    CHECK(s.add(zero, minus) == s.singleton(minus));
    CHECK(s.mul(minus, minus) == one);
    CHECK(s.neg(one) == minus);
}

TEST_CASE("weak sign and Krasner tables") {
    Hyperfield w = Hyperfield::weak_sign();
    Element one = w.sign_element(1), minus = w.sign_element(-1);
    CHECK(w.add(one, one) == HyperSet::finite(w.id(), {one, minus}));
    CHECK(w.add(one, minus).enumerate().size() == 3);

    Hyperfield k = Hyperfield::krasner();
    CHECK(k.add(k.one(), k.one()) == HyperSet::finite(k.id(), {k.zero(), k.one()}));
    CHECK(k.neg(k.one()) == k.one());
}

TEST_CASE("tropical binary rules") {
    Hyperfield t = Hyperfield::tropical();
    Element a = t.tropical_value(q(2)), b = t.tropical_value(q(-1, 3)), inf = t.tropical_inf();
    CHECK(t.add(a, b) == t.singleton(b));
    CHECK(t.add(a, inf) == t.singleton(a));
    CHECK(t.add(inf, inf) == t.singleton(inf));
    HyperSet ray = t.add(a, a);
    REQUIRE(ray.as_ray());
    CHECK(ray.as_ray()->min == q(2));
    CHECK(ray.contains(inf));
    CHECK(ray.contains(t.tropical_value(q(5))));
    CHECK_FALSE(ray.contains(t.tropical_value(q(1))));
    CHECK_THROWS_AS(ray.enumerate(), NonEnumerable);
    CHECK(t.mul(a, b) == t.tropical_value(q(5, 3)));
    CHECK(t.mul(a, inf) == inf);
    CHECK(t.neg(a) == a);
    CHECK(t.inv(b) == t.tropical_value(q(1, 3)));
}

TEST_CASE("tropical hypersum closed form agrees with the recursive union") {
    Hyperfield t = Hyperfield::tropical();
    std::vector<Element> pool = sample_grid(t);
    std::mt19937 rng(7);
    for (int trial = 0; trial < 400; ++trial) {
        std::size_t len = 1 + rng() % 5;
        std::vector<Element> terms;
        for (std::size_t i = 0; i < len; ++i) terms.push_back(pool[rng() % pool.size()]);
        HyperSet closed = t.sum(terms);
        CHECK(closed == fold_sum(t, terms));
        // contains inf iff the minimum repeats or every term is inf
        std::optional<Rational> m;
        int hits = 0;
        for (const auto& e : terms)
            if (auto v = e.as<TropicalValue>().finite) {
                if (!m || *v < *m) m = *v, hits = 1;
                else if (*v == *m) ++hits;
            }
        CHECK(closed.contains(t.tropical_inf()) == (!m || hits >= 2));
    }
}

TEST_CASE("phase hyperaddition") {
    Hyperfield p = Hyperfield::phase();
    Element a = p.phase_angle(q(0)), b = p.phase_angle(q(1, 2)), c = p.phase_angle(q(1));
    CHECK(p.add(a, a) == p.singleton(a));
    HyperSet ab = p.add(a, b);
    CHECK(ab.contains(p.phase_angle(q(1, 4))));
    CHECK_FALSE(ab.contains(a));
    CHECK_FALSE(ab.contains(p.zero()));
    HyperSet ac = p.add(a, c);
    CHECK(ac.contains(p.zero()));
    CHECK(ac.contains(a));
    CHECK(ac.contains(c));
    CHECK_FALSE(ac.contains(b));
    CHECK(ac.enumerate().size() == 3);
    // three directions not in any half-plane span everything
    std::vector<Element> spread = {a, p.phase_angle(q(2, 3)), p.phase_angle(q(4, 3))};
    HyperSet all = p.sum(spread);
    CHECK(all.contains(p.zero()));
    CHECK(all.contains(p.phase_angle(q(7, 5))));
    CHECK(p.mul(b, c) == p.phase_angle(q(3, 2)));
    CHECK(p.neg(b) == p.phase_angle(q(3, 2)));
}

TEST_CASE("phase hypersum agrees with the recursive union") {
    Hyperfield p = Hyperfield::phase();
    std::vector<Element> pool = {p.zero()};
    for (int k = 0; k < 12; ++k) pool.push_back(p.phase_angle(q(k, 6)));
    std::mt19937 rng(11);
    for (int trial = 0; trial < 400; ++trial) {
        std::size_t len = 1 + rng() % 4;
        std::vector<Element> terms;
        for (std::size_t i = 0; i < len; ++i) terms.push_back(pool[rng() % pool.size()]);
        CHECK(p.sum(terms) == fold_sum(p, terms));
    }
}

TEST_CASE("finite table hypersum agrees with the recursive union") {
    for (const Hyperfield& f : {Hyperfield::sign(), Hyperfield::weak_sign(), Hyperfield::krasner()}) {
        auto carrier = f.carrier();
        std::mt19937 rng(3);
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<Element> terms;
            for (std::size_t i = 0, len = 1 + rng() % 5; i < len; ++i) terms.push_back(carrier[rng() % carrier.size()]);
            CHECK(f.sum(terms) == fold_sum(f, terms));
        }
    }
}

TEST_CASE("elements of different instances do not mix") {
    Hyperfield s = Hyperfield::sign(), w = Hyperfield::weak_sign();
    CHECK(Hyperfield::sign() == s);
    CHECK_FALSE(s == w);
    CHECK_THROWS_AS(s.add(s.one(), w.one()), DomainError);
    CHECK_THROWS_AS(w.mul(s.one(), w.one()), DomainError);
    CHECK_THROWS_AS(s.add(s.one(), s.one()).contains(w.one()), DomainError);
    CHECK_THROWS_AS(s.inv(s.zero()), DomainError);
    CHECK_THROWS_AS(Hyperfield::prime_field(9), DomainError);
    CHECK_THROWS_AS(s.tropical_value(q(1)), DomainError);
}

TEST_CASE("axioms hold for the named hyperfields") {
    for (const Hyperfield& f : {Hyperfield::rationals(), Hyperfield::prime_field(5), Hyperfield::prime_field(7),
                                Hyperfield::sign(), Hyperfield::krasner(), Hyperfield::weak_sign(),
                                Hyperfield::phase(), Hyperfield::tropical(), Hyperfield::prime_field(211)}) {
        CAPTURE(f.name());
        AxiomReport r = check_axioms(f);
        CHECK(r.all_passed());
        CHECK(r.checks.size() == axiom_names().size());
        for (std::size_t i = 0; i < r.checks.size(); ++i) CHECK(r.checks[i].axiom == axiom_names()[i]);
        CHECK(r.exhaustive == f.is_enumerable());
    }
}

TEST_CASE("axiom report flags the equal-phase convention") {
    AxiomReport r = check_axioms(Hyperfield::phase());
    bool flagged = false;
    for (const auto& n : r.notes) flagged |= n.find("a ⊞ a = {a}") != std::string::npos;
    CHECK(flagged);
}

TEST_CASE("a corrupted sign table fails with a witness") {
    Hyperfield s = Hyperfield::sign();
    Element one = s.one();
    Hyperfield bad = Hyperfield::with_mutated_sum(s, one, one, {s.sign_element(-1)});
    AxiomReport r = check_axioms(bad, Exec::serial);
    CHECK_FALSE(r.all_passed());
    const AxiomCheck* hg3 = r.find("HG3 reversibility");
    REQUIRE(hg3);
    CHECK_FALSE(hg3->passed);
    REQUIRE(hg3->witness.size() == 3);
    // the reported triple really violates reversibility
    const Element &a = hg3->witness[0], &b = hg3->witness[1], &c = hg3->witness[2];
    CHECK(bad.add(b, c).contains(a) != bad.add(bad.neg(a), c).contains(bad.neg(b)));
    CHECK_FALSE(r.find("HF4 distributivity")->passed);
}

TEST_CASE("table kernel and element kernel agree") {
    Hyperfield s = Hyperfield::sign();
    std::vector<Hyperfield> fields = {s, Hyperfield::krasner(), Hyperfield::weak_sign(), Hyperfield::prime_field(7),
                                      Hyperfield::with_mutated_sum(s, s.one(), s.one(), {s.sign_element(-1)}),
                                      Hyperfield::with_mutated_sum(s, s.one(), s.sign_element(-1), {s.one()})};
    for (const auto& f : fields) {
        CAPTURE(f.name());
        AxiomReport table = check_axioms(f, Exec::serial);
        AxiomReport elements = check_axioms_on(f, f.carrier(), Exec::serial);
        REQUIRE(table.checks.size() == elements.checks.size());
        for (std::size_t i = 0; i < table.checks.size(); ++i) {
            CAPTURE(table.checks[i].axiom);
            CHECK(table.checks[i].passed == elements.checks[i].passed);
            CHECK(table.checks[i].cases == elements.checks[i].cases);
        }
    }
}

TEST_CASE("serial and parallel axiom checks report the same witnesses") {
    Hyperfield s = Hyperfield::weak_sign();
    Hyperfield bad = Hyperfield::with_mutated_sum(s, s.one(), s.sign_element(-1), {s.zero(), s.one()});
    for (const Hyperfield& f : {bad, Hyperfield::tropical(), Hyperfield::prime_field(13)}) {
        AxiomReport a = check_axioms(f, Exec::serial), b = check_axioms(f, Exec::parallel);
        REQUIRE(a.checks.size() == b.checks.size());
        for (std::size_t i = 0; i < a.checks.size(); ++i) {
            CHECK(a.checks[i].passed == b.checks[i].passed);
            CHECK(a.checks[i].witness == b.checks[i].witness);
        }
    }
}
