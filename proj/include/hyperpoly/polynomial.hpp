#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyperpoly/hyperfield.hpp"

namespace hyperpoly {

/// Polynomial c_0 + c_1 T + ... + c_n T^n over a hyperfield. Trailing zero
/// coefficients are dropped on construction; the zero polynomial has no
/// coefficients and degree -1.
class Poly {
public:
    Poly(Hyperfield field, std::vector<Element> coeffs);

    static Poly zero(const Hyperfield& field) { return Poly(field, {}); }
    /// T - a
    static Poly linear(const Hyperfield& field, const Element& a);

    const Hyperfield& field() const { return field_; }
    const std::vector<Element>& coeffs() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    /// c_i, or zero past the degree.
    Element coeff(std::size_t i) const;
    const Element& leading() const { return coeffs_.back(); }

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
    }
    /// Lower degree first, then coefficients from c_0 upward.
    friend std::strong_ordering operator<=>(const Poly& a, const Poly& b);

private:
    Hyperfield field_;
    std::vector<Element> coeffs_;
};

/// c_0 ⊞ c_1 a ⊞ ... ⊞ c_n a^n.
HyperSet eval_hyperset(const Poly& p, const Element& a);

/// 0 ∈ eval_hyperset(p, a).
bool is_root(const Poly& p, const Element& a);

/// All q with p ∈ (T - a) ⊡ q, in canonical order.
///
/// Solved top-down: d_{n-1} = c_n, then d_{i-1} ranges over c_i ⊞ a d_i, and a
/// branch is kept iff c_0 = -a d_0. Each step is the reversed form of
/// c_i ∈ d_{i-1} ⊞ (-a d_i). For a = 0 the quotient is unique (shift) when
/// c_0 = 0. Throws NonEnumerable on T and P for a != 0.
std::vector<Poly> quotients(const Poly& p, const Element& a);

/// Coefficientwise membership p ∈ f ⊡ g. Works on every instance, since it
/// only needs membership tests.
bool in_hyper_product(const Poly& p, const Poly& f, const Poly& g);

/// p ∈ (T - a) ⊡ q.
bool in_linear_product(const Poly& p, const Element& a, const Poly& q);

enum class MultMethod { recursive, sign_changes, newton_polygon, zero_element_order };

std::string_view to_string(MultMethod method);

struct MultReport {
    Element element;
    unsigned multiplicity = 0;
    MultMethod method = MultMethod::recursive;
    /// q_1, ..., q_m with p ∈ (T - a) q_1 and q_k ∈ (T - a) q_{k+1}.
    std::vector<Poly> witness;
};

/// Memo table for the recursive multiplicity; reuse it across calls that share
/// a hyperfield to avoid recomputing common quotients.
class MultiplicityCache {
public:
    struct Entry {
        unsigned multiplicity;
        std::optional<Poly> next;
    };
    std::size_t size() const { return table_.size(); }

private:
    friend struct MultiplicityAccess;
    std::map<std::pair<Element, std::vector<Element>>, Entry> table_;
};

/// Multiplicity of a as a root of p, with a witness chain of quotients.
///
/// Uses the recursion mult = 1 + max over quotients on finite-sum instances,
/// the lowest nonzero index when a is the zero element, and the Newton polygon
/// on T. Throws DomainError on the zero polynomial and NonEnumerable on P for
/// a != 0.
MultReport multiplicity(const Poly& p, const Element& a, MultiplicityCache* cache = nullptr);

/// Replays a witness chain: every link is re-checked with in_linear_product.
bool witness_chain_valid(const Poly& p, const MultReport& report);

/// {sum e_i T^i : e_i ∈ c_i ⊞ d_i}.
std::vector<Poly> hyper_add_poly(const Poly& p, const Poly& q);

/// {sum e_i T^i : e_i ∈ ⊞_{k+l=i} c_k d_l}.
std::vector<Poly> hyper_mul_poly(const Poly& p, const Poly& q);

/// Association of a hyperproduct: a 1-based factor index, or a node whose
/// children are multiplied left to right.
struct AssocTree {
    std::size_t leaf = 0;  // 0 for inner nodes
    std::vector<AssocTree> children;

    /// Parses "((1 2) 3)", "(1 (2 3))", "1", ...
    static AssocTree parse(std::string_view text);
    /// ((1 2) 3) ... n, the left fold.
    static AssocTree left_fold(std::size_t n);
    std::string to_string() const;
};

/// Evaluates a hyperproduct of `factors` under the given association. The set
/// of results depends on the association, since ⊡ is not associative.
std::vector<Poly> hyper_product(const std::vector<Poly>& factors, const AssocTree& tree);

/// The union of f ⊡ g over f in `left` and g in `right`, in canonical order.
std::vector<Poly> hyper_mul_sets(const std::vector<Poly>& left, const std::vector<Poly>& right);

}  // namespace hyperpoly
