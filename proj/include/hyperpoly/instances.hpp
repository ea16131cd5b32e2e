#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperpoly/exec.hpp"
#include "hyperpoly/hyperfield.hpp"

namespace hyperpoly {

inline constexpr std::uint64_t kDefaultQuotientBound = 101;

/// F_p / G for the multiplicative subgroup G generated by `generators`.
///
/// Cosets are numbered by their least residue (0 -> [0], 1 -> G, ...), and
/// [a] ⊞ [b] is tabulated from all residue sums. The result is checked against
/// the hyperfield axioms before it is returned.
Hyperfield build_quotient(std::uint64_t p, const std::vector<std::int64_t>& generators,
                          std::uint64_t max_prime = kDefaultQuotientBound);

/// Sorted elements of the subgroup of F_p^x generated by `generators`.
std::vector<std::uint64_t> generated_subgroup(std::uint64_t p, const std::vector<std::int64_t>& generators);

/// The squares of F_p^x (for odd p).
std::vector<std::int64_t> squares_mod(std::uint64_t p);

/// Dense operation tables of any enumerable instance.
FiniteTable materialize_table(const Hyperfield& field);

using ElementMap = std::vector<std::pair<Element, Element>>;

/// A bijection that preserves 0, 1, products and hypersums, or nullopt.
/// Pairs are listed in the canonical order of the source carrier.
std::optional<ElementMap> iso_to_named(const Hyperfield& source, const Hyperfield& target);

/// Sign of a rational as an element of S.
Element sign_map(const Rational& x);

/// p-adic valuation of a rational as an element of T (0 maps to inf).
Element padic_valuation(const Rational& x, std::uint64_t p);

enum class HomRule { sign_map, padic, quotient_projection, custom };

struct Homomorphism {
    Hyperfield source;
    Hyperfield target;
    HomRule rule = HomRule::custom;
    std::uint64_t prime = 0;  // padic only
    ElementMap table;         // custom only

    static Homomorphism sign();
    static Homomorphism padic(std::uint64_t p);
    /// F_p -> F_p / G, residue to its coset.
    static Homomorphism quotient_projection(const Hyperfield& quotient);
    static Homomorphism custom(const Hyperfield& source, const Hyperfield& target, ElementMap table);

    Element operator()(const Element& x) const;
    std::string name() const;
};

struct LawCheck {
    std::string law;
    bool passed = true;
    std::size_t cases = 0;
    std::vector<Element> witness;
};

struct HomomorphismReport {
    std::string map;
    bool exhaustive = false;
    std::vector<LawCheck> checks;

    bool passed() const;
    const LawCheck* find(const std::string& law) const;
};

/// Law names, in report order.
const std::vector<std::string>& homomorphism_laws();

/// Checks f(0) = 0, f(1) = 1, f(ab) = f(a)f(b) and f(a + b) in f(a) ⊞ f(b).
/// Finite sources are checked exhaustively, Q on a fixed rational sample.
HomomorphismReport check_homomorphism(const Homomorphism& f, Exec exec = Exec::parallel);

/// The rational sample used for Q sources.
std::vector<Rational> rational_sample();

}  // namespace hyperpoly
