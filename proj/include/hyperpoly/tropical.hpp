#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyperpoly/polynomial.hpp"
#include "hyperpoly/rational.hpp"

namespace hyperpoly {

struct NewtonVertex {
    std::size_t index;
    Rational value;
    friend bool operator==(const NewtonVertex&, const NewtonVertex&) = default;
};

/// A lower-hull edge of slope -s and horizontal length `length`.
struct NewtonSegment {
    Rational s;
    unsigned length;
    friend bool operator==(const NewtonSegment&, const NewtonSegment&) = default;
};

/// Lower convex hull of the points (i, c_i) with c_i finite. Coefficients
/// below `inf_prefix` are all inf and take no part in the hull.
struct NewtonPolygon {
    std::size_t inf_prefix = 0;
    std::vector<NewtonVertex> vertices;
    std::vector<NewtonSegment> segments;  // s strictly decreasing
};

/// Throws DomainError unless p is a nonzero polynomial over T.
NewtonPolygon newton_polygon(const Poly& p);

/// Length of the segment with slope -s, or 0 if there is none; for s = inf
/// the number of leading inf coefficients.
unsigned nu(const Poly& p, const Element& s);

/// Roots with multiplicity in ascending order (inf last); size deg p.
std::vector<Element> tropical_roots(const Poly& p);

/// min_i (c_i + i b) over the finite coefficients.
Rational eval_function(const Poly& p, const Rational& b);

/// s_0 = 0, s_i = sum of the i smallest roots (inf if any of them is inf).
std::vector<Element> elementary_symmetric(const std::vector<Element>& roots);

/// The monic polynomial with c_{n-i} = s_i, the canonical member of the
/// product of the (T ⊞ a_i).
Poly canonical_expansion(const std::vector<Element>& roots);

/// p divided by its leading coefficient (c_i - c_n).
Poly make_monic(const Poly& p);

/// p ∈ (T ⊞ a_1) ⊡ ... ⊡ (T ⊞ a_n) for monic p with deg p = n.
///
/// c_{n-i} must lie in the hypersum of all i-fold products. The minimum of
/// those products is s_i; it is attained once exactly when i = n or
/// a_i < a_{i+1} (sorted roots), which forces c_{n-i} = s_i. Otherwise any
/// c_{n-i} >= s_i is allowed, including inf.
bool in_product(const Poly& p, const std::vector<Element>& roots);

/// Compares the function of p with b -> sum min(b, a_i).
///
/// Both sides are concave and piecewise linear. The right side bends only at
/// the roots, and the left side only where two of its terms c_i + i b cross.
/// Checking every such point, the midpoints between them and one point beyond
/// each end therefore decides equality of the functions.
bool functional_equiv(const Poly& p, const std::vector<Element>& roots);

/// The sample points used by functional_equiv.
std::vector<Rational> functional_sample(const Poly& p, const std::vector<Element>& roots);

/// Some q with p ∈ (T ⊞ s) ⊡ q, or nullopt if s is not a root.
///
/// The admissible values of d_{i-1} given d_i are c_i ⊞ (s + d_i); unioned
/// over a whole range of d_i they stay a point or a ray, so the admissible sets
/// D_{n-1}, ..., D_0 are computed top-down. A solution exists iff c_0 - s is in
/// D_0, and it is rebuilt bottom-up picking the least admissible d_i each step.
std::optional<Poly> divide_linear(const Poly& p, const Element& s);

/// mult_s(p) = nu_s(p), with a chain of quotients from divide_linear.
MultReport mult_tropical(const Poly& p, const Element& s);

/// Coefficientwise p-adic valuation of a polynomial over Q, as a polynomial over T.
Poly valuation_image(const Poly& p, std::uint64_t prime);

struct SlopeCheck {
    Element s;            // a slope value, or inf for the root 0
    unsigned nu = 0;
    unsigned roots = 0;   // hinted roots of valuation s, with multiplicity
};

struct NewtonRuleReport {
    std::uint64_t prime = 0;
    NewtonPolygon polygon;
    std::vector<SlopeCheck> slopes;
    unsigned degree = 0;
    unsigned nu_total = 0;  // sum over all slopes plus the inf prefix
    bool split = false;     // the hint has deg p roots and expands to p
    bool passed = false;
};

/// Compares hinted roots, grouped by valuation, against the Newton polygon of
/// the valuation image: at most nu_s roots of valuation s, exactly nu_s when
/// the hint is a full splitting. The hint may list only some roots, but their
/// product must divide p; otherwise DomainError.
NewtonRuleReport newton_rule_verify(const Poly& p, std::uint64_t prime,
                                    const std::optional<std::vector<Rational>>& split_hint = std::nullopt);

/// "x y" per line for each hull edge, with a blank line between edges.
std::string plot_data(const NewtonPolygon& polygon);

}  // namespace hyperpoly
