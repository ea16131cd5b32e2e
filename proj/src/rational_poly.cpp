#include "hyperpoly/rational_poly.hpp"

#include <algorithm>

#include "hyperpoly/errors.hpp"

namespace hyperpoly {

RatPoly::RatPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    for (auto& x : c_) x.canonicalize();
    trim();
}

void RatPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

RatPoly RatPoly::from_roots(const std::vector<Rational>& roots, const Rational& lead) {
    RatPoly p({lead});
    for (const auto& r : roots) p = p * RatPoly({-r, Rational(1)});
    return p;
}

RatPoly RatPoly::monomial(std::size_t k, const Rational& c) {
    std::vector<Rational> v(k + 1, Rational(0));
    v[k] = c;
    return RatPoly(std::move(v));
}

std::size_t RatPoly::low_order() const {
    if (is_zero()) throw DomainError("zero polynomial has no lowest coefficient");
    std::size_t k = 0;
    while (c_[k] == 0) ++k;
    return k;
}

Rational RatPoly::operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

RatPoly RatPoly::derivative() const {
    std::vector<Rational> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
    return RatPoly(std::move(d));
}

RatPoly RatPoly::monic() const {
    if (is_zero()) return *this;
    std::vector<Rational> v = c_;
    Rational lead = leading();
    for (auto& x : v) x /= lead;
    return RatPoly(std::move(v));
}

RatPoly RatPoly::reflect() const {
    std::vector<Rational> v = c_;
    for (std::size_t i = 1; i < v.size(); i += 2) v[i] = -v[i];
    return RatPoly(std::move(v));
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
    std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
    return RatPoly(std::move(v));
}

RatPoly operator-(const RatPoly& a) {
    std::vector<Rational> v = a.c_;
    for (auto& x : v) x = -x;
    return RatPoly(std::move(v));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) { return a + (-b); }

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    return RatPoly(std::move(v));
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero()) throw DomainError("division by the zero polynomial");
    std::vector<Rational> rem = a.coeffs();
    const int db = b.degree();
    if (a.degree() < db) return {RatPoly{}, a};
    std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - db + 1), Rational(0));
    for (int k = a.degree() - db; k >= 0; --k) {
        Rational t = rem[static_cast<std::size_t>(k + db)] / b.leading();
        quo[static_cast<std::size_t>(k)] = t;
        for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= t * b.coeffs()[static_cast<std::size_t>(j)];
    }
    return {RatPoly(std::move(quo)), RatPoly(std::move(rem))};
}

RatPoly gcd(const RatPoly& a, const RatPoly& b) {
    RatPoly x = a, y = b;
    while (!y.is_zero()) {
        RatPoly r = divmod(x, y).second;
        x = std::move(y);
        y = r.monic();
    }
    return x.monic();
}

std::vector<RatPoly> squarefree_decomposition(const RatPoly& p) {
    if (p.is_zero()) throw DomainError("squarefree decomposition of the zero polynomial");
    std::vector<RatPoly> out;
    if (p.degree() == 0) return out;
    RatPoly f = p.monic();
    RatPoly fd = f.derivative();
    RatPoly a = gcd(f, fd);
    RatPoly b = divmod(f, a).first;
    RatPoly c = divmod(fd, a).first;
    RatPoly d = c - b.derivative();
    while (b.degree() > 0) {
        RatPoly g = gcd(b, d);
        out.push_back(g);
        RatPoly b_next = divmod(b, g).first;
        c = divmod(d, g).first;
        b = b_next;
        d = c - b.derivative();
    }
    // trailing trivial factors carry no information
    while (!out.empty() && out.back().degree() == 0) out.pop_back();
    return out;
}

RatPoly to_ratpoly(const Poly& p) {
    if (p.field().kind() != Kind::field_q) throw DomainError("expected a polynomial over Q, got " + p.field().name());
    std::vector<Rational> v;
    for (const auto& c : p.coeffs()) v.push_back(c.as<Rational>());
    return RatPoly(std::move(v));
}

Poly to_poly(const RatPoly& p) {
    Hyperfield q = Hyperfield::rationals();
    std::vector<Element> v;
    for (const auto& c : p.coeffs()) v.push_back(q.rational(c));
    return Poly(q, std::move(v));
}

}  // namespace hyperpoly
