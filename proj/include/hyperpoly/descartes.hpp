#pragma once

#include <optional>
#include <vector>

#include "hyperpoly/polynomial.hpp"
#include "hyperpoly/rational_poly.hpp"

namespace hyperpoly {

/// p_0 = p, p_1 = p', p_{i+1} = -rem(p_{i-1}, p_i), stopping at the last
/// nonzero remainder.
class SturmChain {
public:
    explicit SturmChain(const RatPoly& p);

    const std::vector<RatPoly>& polys() const { return chain_; }

    /// Sign variations just right of 0 (signs of the lowest nonzero coefficients).
    int variations_at_zero_plus() const;
    /// Sign variations just left of 0.
    int variations_at_zero_minus() const;
    int variations_at_plus_infinity() const;
    int variations_at_minus_infinity() const;

    /// Distinct roots in (0, inf), (-inf, 0) and on the whole line. For a
    /// squarefree p with p(0) != 0.
    int positive_roots() const { return variations_at_zero_plus() - variations_at_plus_infinity(); }
    int negative_roots() const { return variations_at_minus_infinity() - variations_at_zero_minus(); }
    int real_roots() const { return variations_at_minus_infinity() - variations_at_plus_infinity(); }

private:
    std::vector<RatPoly> chain_;
};

/// Number of pairs c_i, c_{i+k} of opposite nonzero sign with only zeros in
/// between. p must be a nonzero polynomial over S.
unsigned sign_changes(const Poly& p);

/// p(-T): flips the sign of odd-index coefficients.
Poly substitute_neg(const Poly& p);

/// Coefficientwise sign of a rational polynomial, as a polynomial over S.
Poly sign_image(const Poly& p);

/// sign_changes(p), the closed form of mult_1(p) over S.
unsigned mult_one_direct(const Poly& p);
/// sign_changes(p(-T)), the closed form of mult_{-1}(p) over S.
unsigned mult_neg_one_direct(const Poly& p);

/// Multiplicity over S at 1 or -1 from the sign-change count. The witness
/// chain is built by always stepping to a quotient with one sign change less.
MultReport mult_sign_direct(const Poly& p, const Element& a);

struct DescartesBound {
    unsigned positive = 0;
    unsigned negative = 0;
};

/// (sign changes of p, sign changes of p(-T)) for p over Q.
DescartesBound descartes_bound(const Poly& p);

/// Real roots in (0, inf) counted with multiplicity, exactly.
unsigned count_positive_roots(const Poly& p);
/// Real roots in (-inf, 0) counted with multiplicity, exactly.
unsigned count_negative_roots(const Poly& p);

struct DescartesReport {
    DescartesBound bound;
    unsigned positive_roots = 0;
    unsigned negative_roots = 0;
    unsigned zero_roots = 0;
    /// True when a root list was given and lc * prod (T - r) reproduces p.
    bool split = false;
    bool passed = false;
};

/// Checks positive_roots <= bound.positive (and the negative side). With a
/// split hint that expands to p, equality is required on both sides. Throws
/// DomainError when the hint does not expand to p.
DescartesReport verify_descartes(const Poly& p, const std::optional<std::vector<Rational>>& split_hint = std::nullopt);

}  // namespace hyperpoly
