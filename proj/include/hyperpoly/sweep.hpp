#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyperpoly/exec.hpp"
#include "hyperpoly/hyperfield.hpp"

namespace hyperpoly {

/// Outcome of a batch of independent checks. Cases are generated up front from
/// the seed, so serial and parallel runs see the same corpus and report the
/// same first counterexample.
struct SweepResult {
    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::optional<std::size_t> first_failure;
    std::string witness;  // description of the first failing case
    bool passed() const { return failures == 0; }
    friend bool operator==(const SweepResult&, const SweepResult&) = default;
};

/// Every nonzero sign polynomial of degree <= max_degree: the recursive
/// multiplicity at 1 and -1 equals the sign-change count of p(T) and p(-T).
SweepResult sweep_sign_multiplicity(unsigned max_degree, Exec exec = Exec::parallel);

/// Every nonzero polynomial of degree <= max_degree over an enumerable field,
/// against every element: is_root(p, a) iff quotients(p, a) is nonempty.
SweepResult sweep_root_quotient(const Hyperfield& field, unsigned max_degree, Exec exec = Exec::parallel);

/// Random polynomials over K with lowest nonzero index r and degree n:
/// mult_0 = r and mult_1 = n - r.
SweepResult sweep_krasner(std::size_t count, unsigned max_degree, std::uint64_t seed, Exec exec = Exec::parallel);

/// Random split rational polynomials: exact positive and negative root counts
/// equal the sign changes of the sign image of p(T) and p(-T).
SweepResult sweep_descartes_split(std::size_t count, unsigned max_degree, std::uint64_t seed,
                                  Exec exec = Exec::parallel);

/// Random split rational polynomials: for each prime, every Newton slope
/// length equals the number of roots of that valuation, and the lengths sum
/// to the degree.
SweepResult sweep_newton_split(std::size_t count, unsigned max_degree, const std::vector<std::uint64_t>& primes,
                               std::uint64_t seed, Exec exec = Exec::parallel);

/// Random tropical root multisets: the roots of the canonical expansion are
/// the multiset again, and the expansion passes both membership tests.
SweepResult sweep_tropical_roundtrip(std::size_t count, unsigned max_size, std::uint64_t seed,
                                     Exec exec = Exec::parallel);

/// Canonical expansions with one coefficient lowered below its bound: both
/// membership tests must reject them.
SweepResult sweep_tropical_negatives(std::size_t count, unsigned max_size, std::uint64_t seed,
                                     Exec exec = Exec::parallel);

}  // namespace hyperpoly
