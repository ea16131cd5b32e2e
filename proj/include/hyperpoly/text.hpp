#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hyperpoly/hyperfield.hpp"
#include "hyperpoly/polynomial.hpp"

namespace hyperpoly {

/// "Q", "Fp:<p>", "S", "K", "W", "P", "T" or "quot:<p>:<g1,g2,...>".
Hyperfield parse_hyperfield(std::string_view spec);

/// Element syntax per instance:
///   Q      rational ("3", "-7/2")
///   Fp     integer, reduced mod p
///   S, W   "0", "1", "-1"
///   K      "0", "1"
///   T      rational or "inf"
///   P      "0" (zero), "1", "-1", or "e:<q>" for e^{i pi q}
///   quot   residue, optionally bracketed ("3" or "[3]")
Element parse_element(const Hyperfield& field, std::string_view text);
std::string format_element(const Hyperfield& field, const Element& e);

/// Finite sets as "{a, b}", tropical rays as "[m, inf]", phase sets as a
/// brace list mixing points and open arcs "arc(e:a, e:b)".
std::string format_set(const Hyperfield& field, const HyperSet& s);

/// Comma-separated coefficients, c_0 first, optionally parenthesized.
/// Trailing zero coefficients are dropped; `trimmed` reports whether any were.
Poly parse_poly(const Hyperfield& field, std::string_view text, bool* trimmed = nullptr);
std::string format_poly(const Poly& p);

/// Human-readable form, highest degree first ("T^2 - T + 1").
std::string pretty_poly(const Poly& p);

/// ';'-separated polynomials: "(-1,1);(-1,1);(1,1)".
std::vector<Poly> parse_poly_list(const Hyperfield& field, std::string_view text);

/// Comma-separated rationals.
std::vector<Rational> parse_rational_list(std::string_view text);

}  // namespace hyperpoly
