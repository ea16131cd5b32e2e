#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hyperpoly/exec.hpp"
#include "hyperpoly/hyperfield.hpp"

namespace hyperpoly {

struct AxiomCheck {
    std::string axiom;
    bool passed = true;
    std::size_t cases = 0;
    std::vector<Element> witness;  // counterexample tuple when !passed
};

struct AxiomReport {
    std::string field;
    bool exhaustive = false;  // false: checked on a fixed sample grid
    std::vector<AxiomCheck> checks;
    std::vector<std::string> notes;

    bool all_passed() const;
    const AxiomCheck* find(const std::string& axiom) const;
};

/// Axiom names, in report order.
inline const std::vector<std::string>& axiom_names() {
    static const std::vector<std::string> names = {
        "nonempty sums",  "commutativity",      "associativity",         "HG1 neutral element",
        "HG2 unique inverse", "HG3 reversibility", "HF2 multiplicative group", "HF3 absorbing zero",
        "HF4 distributivity"};
    return names;
}

/// Checks the hypergroup and hyperfield axioms. Enumerable instances are
/// checked exhaustively; Q, T, P and large prime fields on a fixed rational
/// sample grid (see sample_grid).
AxiomReport check_axioms(const Hyperfield& field, Exec exec = Exec::parallel);

/// Runs the same checks on an explicit element list, treating it as the
/// carrier. Sums are compared as sets, so results falling outside the list
/// still count.
AxiomReport check_axioms_on(const Hyperfield& field, const std::vector<Element>& elements,
                            Exec exec = Exec::parallel);

/// The deterministic sample grid used for instances that are not enumerated.
std::vector<Element> sample_grid(const Hyperfield& field);

}  // namespace hyperpoly
