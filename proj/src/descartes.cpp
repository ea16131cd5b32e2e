#include "hyperpoly/descartes.hpp"

#include <stdexcept>

#include "hyperpoly/errors.hpp"
#include "hyperpoly/instances.hpp"

namespace hyperpoly {

namespace {

int variations(const std::vector<int>& signs) {
    int count = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

void require_sign_poly(const Poly& p) {
    if (p.field().kind() != Kind::sign) throw DomainError("expected a polynomial over S, got " + p.field().name());
    if (p.is_zero()) throw DomainError("sign changes of the zero polynomial");
}

// Distinct roots of a squarefree part with multiplicity weight, on one side of 0.
unsigned weighted_count(const RatPoly& p, bool positive) {
    if (p.is_zero()) throw DomainError("root count of the zero polynomial");
    RatPoly rest = divmod(p, RatPoly::monomial(p.low_order())).first;
    auto parts = squarefree_decomposition(rest);
    unsigned total = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i].degree() <= 0) continue;
        SturmChain chain(parts[i]);
        total += static_cast<unsigned>(i + 1) * static_cast<unsigned>(positive ? chain.positive_roots() : chain.negative_roots());
    }
    return total;
}

}  // namespace

SturmChain::SturmChain(const RatPoly& p) {
    if (p.is_zero()) throw DomainError("Sturm chain of the zero polynomial");
    chain_.push_back(p);
    RatPoly d = p.derivative();
    if (d.is_zero()) return;
    chain_.push_back(d);
    while (true) {
        RatPoly r = divmod(chain_[chain_.size() - 2], chain_.back()).second;
        if (r.is_zero()) break;
        chain_.push_back(-r);
    }
}

int SturmChain::variations_at_zero_plus() const {
    std::vector<int> s;
    for (const auto& q : chain_) s.push_back(sign_of(q.coeff(q.low_order())));
    return variations(s);
}

int SturmChain::variations_at_zero_minus() const {
    std::vector<int> s;
    for (const auto& q : chain_) {
        std::size_t k = q.low_order();
        s.push_back(sign_of(q.coeff(k)) * (k % 2 ? -1 : 1));
    }
    return variations(s);
}

int SturmChain::variations_at_plus_infinity() const {
    std::vector<int> s;
    for (const auto& q : chain_) s.push_back(sign_of(q.leading()));
    return variations(s);
}

int SturmChain::variations_at_minus_infinity() const {
    std::vector<int> s;
    for (const auto& q : chain_) s.push_back(sign_of(q.leading()) * (q.degree() % 2 ? -1 : 1));
    return variations(s);
}

unsigned sign_changes(const Poly& p) {
    require_sign_poly(p);
    std::vector<int> s;
    for (const auto& c : p.coeffs()) s.push_back(c.as<SignValue>().value);
    return static_cast<unsigned>(variations(s));
}

Poly substitute_neg(const Poly& p) {
    const Hyperfield& f = p.field();
    std::vector<Element> v = p.coeffs();
    for (std::size_t i = 1; i < v.size(); i += 2) v[i] = f.neg(v[i]);
    return Poly(f, std::move(v));
}

Poly sign_image(const Poly& p) {
    Hyperfield s = Hyperfield::sign();
    std::vector<Element> v;
    RatPoly rp = to_ratpoly(p);
    for (const auto& c : rp.coeffs()) v.push_back(sign_map(c));
    return Poly(s, std::move(v));
}

unsigned mult_one_direct(const Poly& p) { return sign_changes(p); }

unsigned mult_neg_one_direct(const Poly& p) { return sign_changes(substitute_neg(p)); }

MultReport mult_sign_direct(const Poly& p, const Element& a) {
    require_sign_poly(p);
    const Hyperfield& s = p.field();
    s.require(a);
    if (s.is_zero(a)) throw DomainError("sign-change count applies to the roots 1 and -1");
    auto count = [&](const Poly& q) { return a == s.one() ? mult_one_direct(q) : mult_neg_one_direct(q); };
    MultReport r{a, count(p), MultMethod::sign_changes, {}};
    Poly cur = p;
    for (unsigned k = 0; k < r.multiplicity; ++k) {
        const unsigned want = r.multiplicity - k - 1;
        bool stepped = false;
        for (const auto& q : quotients(cur, a))
            if (count(q) == want) {
                r.witness.push_back(q);
                cur = q;
                stepped = true;
                break;
            }
        if (!stepped) throw std::logic_error("no quotient lowers the sign-change count");
    }
    return r;
}

DescartesBound descartes_bound(const Poly& p) {
    Poly s = sign_image(p);
    if (s.is_zero()) throw DomainError("Descartes bound of the zero polynomial");
    return {sign_changes(s), sign_changes(substitute_neg(s))};
}

unsigned count_positive_roots(const Poly& p) { return weighted_count(to_ratpoly(p), true); }

unsigned count_negative_roots(const Poly& p) { return weighted_count(to_ratpoly(p), false); }

DescartesReport verify_descartes(const Poly& p, const std::optional<std::vector<Rational>>& split_hint) {
    RatPoly rp = to_ratpoly(p);
    if (rp.is_zero()) throw DomainError("Descartes check of the zero polynomial");
    DescartesReport r;
    if (split_hint) {
        if (RatPoly::from_roots(*split_hint, rp.leading()) != rp)
            throw DomainError("split hint does not expand to the polynomial");
        r.split = true;
    }
    r.bound = descartes_bound(p);
    r.positive_roots = count_positive_roots(p);
    r.negative_roots = count_negative_roots(p);
    r.zero_roots = static_cast<unsigned>(rp.low_order());
    if (r.split)
        r.passed = r.positive_roots == r.bound.positive && r.negative_roots == r.bound.negative;
    else
        r.passed = r.positive_roots <= r.bound.positive && r.negative_roots <= r.bound.negative;
    return r;
}

}  // namespace hyperpoly
