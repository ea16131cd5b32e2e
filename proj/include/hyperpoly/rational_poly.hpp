#pragma once

#include <utility>
#include <vector>

#include "hyperpoly/polynomial.hpp"
#include "hyperpoly/rational.hpp"

namespace hyperpoly {

/// Dense polynomial with exact rational coefficients, c_0 first. Trailing
/// zeros are removed, so the zero polynomial is empty.
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rational> coeffs);

    /// lead * (T - r_1) ... (T - r_k)
    static RatPoly from_roots(const std::vector<Rational>& roots, const Rational& lead = 1);
    static RatPoly monomial(std::size_t k, const Rational& c = 1);

    const std::vector<Rational>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const Rational& leading() const { return c_.back(); }
    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    /// Index of the lowest nonzero coefficient.
    std::size_t low_order() const;

    Rational operator()(const Rational& x) const;
    RatPoly derivative() const;
    RatPoly monic() const;
    /// p(-T)
    RatPoly reflect() const;

    friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator-(const RatPoly& a);
    friend bool operator==(const RatPoly&, const RatPoly&) = default;

private:
    void trim();
    std::vector<Rational> c_;
};

/// Quotient and remainder of Euclidean division; throws DomainError for b = 0.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);

/// Monic greatest common divisor (zero if both are zero).
RatPoly gcd(const RatPoly& a, const RatPoly& b);

/// Yun's decomposition: monic squarefree f_1, f_2, ... with p = lc(p) * prod f_i^i.
/// Entry i - 1 holds f_i (possibly 1).
std::vector<RatPoly> squarefree_decomposition(const RatPoly& p);

/// Conversions to and from polynomials over the hyperfield Q.
RatPoly to_ratpoly(const Poly& p);
Poly to_poly(const RatPoly& p);

}  // namespace hyperpoly
