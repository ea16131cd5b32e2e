#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hyperpoly/element.hpp"
#include "hyperpoly/hyperset.hpp"

namespace hyperpoly {

enum class Kind { field_q, field_fp, sign, krasner, weak_sign, phase, tropical, quotient };

std::string_view to_string(Kind kind);

/// Dense operation tables of a finite hyperfield, indexed 0 = zero, 1 = one.
struct FiniteTable {
    std::uint32_t size = 0;
    std::vector<std::uint32_t> mul;                 // size * size
    std::vector<std::vector<std::uint32_t>> add;    // size * size, sorted
    std::vector<std::uint32_t> neg;
    std::vector<std::uint32_t> inv;                 // inv[0] unused

    std::uint32_t product(std::uint32_t a, std::uint32_t b) const { return mul[a * size + b]; }
    const std::vector<std::uint32_t>& sum(std::uint32_t a, std::uint32_t b) const {
        return add[a * size + b];
    }
};

/// Coset data of a quotient F_p / G.
struct QuotientData {
    std::uint64_t prime = 0;
    std::vector<std::uint64_t> subgroup;           // sorted elements of G
    std::vector<std::uint32_t> coset_of_residue;   // residue -> coset index
    std::vector<std::uint64_t> representative;     // coset index -> least residue
};

/// Handle to an immutable hyperfield instance. Copies share the instance.
///
/// Instances are interned by their canonical spec string ("S", "Fp:7",
/// "quot:7:1,2,4", ...), so building the same hyperfield twice yields the same
/// instance id. Elements of one instance are rejected by every other instance.
class Hyperfield {
public:
    static Hyperfield rationals();
    static Hyperfield prime_field(std::uint64_t p);
    static Hyperfield sign();
    static Hyperfield krasner();
    static Hyperfield weak_sign();
    static Hyperfield phase();
    static Hyperfield tropical();

    /// Low-level constructor for table-backed instances (quotients, mutated
    /// tables). The table is taken as-is; no axioms are checked here.
    static Hyperfield from_table(Kind kind, std::string key, std::string name, FiniteTable table,
                                 std::shared_ptr<const QuotientData> quotient = nullptr);

    /// Copy of a table-backed instance in which a ⊞ b (and b ⊞ a) is replaced.
    /// The result is a fresh instance; meant for exercising the axiom checker.
    static Hyperfield with_mutated_sum(const Hyperfield& base, const Element& a, const Element& b,
                                       const std::vector<Element>& result);

    InstanceId id() const;
    Kind kind() const;
    const std::string& name() const;
    /// Canonical spec string, re-parseable by parse_hyperfield.
    const std::string& spec() const;
    std::uint64_t prime() const;

    /// True when the carrier is finite and small enough to list.
    bool is_enumerable() const;
    std::vector<Element> carrier() const;
    std::size_t carrier_size() const;
    const FiniteTable* table() const;
    const QuotientData* quotient_data() const;

    Element zero() const;
    Element one() const;
    bool is_zero(const Element& a) const;
    bool owns(const Element& a) const { return a.instance() == id(); }
    /// Throws DomainError unless `a` belongs to this instance.
    void require(const Element& a) const;

    // Element constructors; each throws DomainError on a kind mismatch.
    Element rational(const Rational& q) const;
    Element residue(std::int64_t r) const;
    Element sign_element(int s) const;
    Element krasner_element(bool one) const;
    Element tropical_value(const Rational& v) const;
    Element tropical_inf() const;
    Element phase_angle(const Rational& angle) const;
    Element coset_of(std::int64_t residue) const;
    Element coset(std::uint32_t index) const;

    /// Dense index of an element of a table-backed or prime-field instance.
    std::uint32_t index_of(const Element& a) const;
    Element element_at(std::uint32_t index) const;

    HyperSet add(const Element& a, const Element& b) const;
    Element mul(const Element& a, const Element& b) const;
    Element neg(const Element& a) const;
    Element inv(const Element& a) const;
    Element pow(const Element& a, unsigned k) const;

    /// n-ary hypersum; the empty sum is {0}.
    HyperSet sum(std::span<const Element> terms) const;
    /// Union of x ⊞ a over all x in s.
    HyperSet add_to_set(const HyperSet& s, const Element& a) const;
    /// {a x : x in s}.
    HyperSet scale(const Element& a, const HyperSet& s) const;
    HyperSet unite(const HyperSet& s, const HyperSet& t) const;
    HyperSet singleton(const Element& a) const;

    friend bool operator==(const Hyperfield& a, const Hyperfield& b) { return a.id() == b.id(); }

    struct Impl;

private:
    explicit Hyperfield(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

inline HyperSet hyperadd(const Hyperfield& f, const Element& a, const Element& b) {
    return f.add(a, b);
}
inline HyperSet hypersum(const Hyperfield& f, std::span<const Element> terms) {
    return f.sum(terms);
}

/// Positive cone of unit directions: phases of sum r_i e^{i pi q_i}, all r_i > 0.
PhaseSet phase_cone(std::vector<Rational> directions);

}  // namespace hyperpoly
