#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <variant>

#include "hyperpoly/rational.hpp"

namespace hyperpoly {

using InstanceId = std::uint32_t;

struct Residue {
    std::uint64_t value;
};

/// -1, 0 or 1. Used by both the sign and the weak sign hyperfield.
struct SignValue {
    int value;
};

struct KrasnerBit {
    bool one;
};

/// Min-plus tropical value; an empty optional is the additive neutral INF.
struct TropicalValue {
    std::optional<Rational> finite;
    bool is_inf() const { return !finite.has_value(); }
};

/// e^{i pi q} with q in [0, 2); an empty optional is the zero element.
struct PhaseValue {
    std::optional<Rational> angle;
    bool is_zero() const { return !angle.has_value(); }
};

/// Coset of a quotient hyperfield; index 0 is the class of 0, index 1 is G.
struct CosetIndex {
    std::uint32_t index;
};

using Value = std::variant<Rational, Residue, SignValue, KrasnerBit, TropicalValue, PhaseValue,
                           CosetIndex>;

/// A value of one specific hyperfield instance. Elements are plain values; the
/// owning Hyperfield validates the payload when it creates them.
class Element {
public:
    Element(InstanceId instance, Value value);

    InstanceId instance() const { return instance_; }
    const Value& value() const { return value_; }

    template <class T>
    const T& as() const;

    friend bool operator==(const Element& a, const Element& b);
    /// Canonical order: instance first, then 0 before units; signs as 0, 1, -1;
    /// tropical finite values ascending then INF; phases by angle.
    friend std::strong_ordering operator<=>(const Element& a, const Element& b);

private:
    InstanceId instance_;
    Value value_;
};

template <class T>
const T& Element::as() const {
    if (const T* v = std::get_if<T>(&value_)) return *v;
    throw std::bad_variant_access();
}

}  // namespace hyperpoly
