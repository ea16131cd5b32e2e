#pragma once

#include <utility>
#include <variant>
#include <vector>

#include "hyperpoly/element.hpp"

namespace hyperpoly {

/// {x : x >= min} together with INF, in the min-plus convention.
struct TropicalRay {
    Rational min;
    friend bool operator==(const TropicalRay&, const TropicalRay&) = default;
};

/// Open counter-clockwise arc from `from` to `to` (angles in units of pi).
struct PhaseArc {
    Rational from;
    Rational to;
    friend bool operator==(const PhaseArc&, const PhaseArc&) = default;
};

/// A subset of the phase hyperfield: optionally the zero element, plus a finite
/// union of points and open arcs on the unit circle.
///
/// Stored canonically as sorted cut angles with a membership flag at every cut
/// and on every open gap between consecutive cuts (cyclically). Redundant cuts
/// are removed, so two equal sets have identical representations.
class PhaseSet {
public:
    static PhaseSet none();
    static PhaseSet zero_only();
    static PhaseSet point(const Rational& angle);
    /// Open arc from `from` counter-clockwise to `to`; requires from != to.
    static PhaseSet arc(const Rational& from, const Rational& to);
    static PhaseSet circle();

    bool contains_zero() const { return zero_; }
    bool contains(const Rational& angle) const;
    bool empty() const;

    PhaseSet unite(const PhaseSet& other) const;
    PhaseSet with_zero(bool zero) const;
    PhaseSet rotate(const Rational& by) const;

    /// Isolated points, in ascending angle order.
    std::vector<Rational> points() const;
    /// Pairwise disjoint open arcs, each of angular length < 1, disjoint from
    /// points(). Long runs are split and the split angles reported as points.
    std::vector<PhaseArc> arcs() const;

    friend bool operator==(const PhaseSet&, const PhaseSet&) = default;

private:
    void normalize();
    Rational gap_midpoint(std::size_t k) const;

    bool zero_ = false;
    bool full_ = false;  // meaning of the circle when cuts_ is empty
    std::vector<Rational> cuts_;
    std::vector<bool> at_;
    std::vector<bool> after_;
};

/// Result of a hyperoperation.
class HyperSet {
public:
    using FiniteSet = std::vector<Element>;
    using Storage = std::variant<FiniteSet, TropicalRay, PhaseSet>;

    /// Finite set; sorted and deduplicated here. Must be nonempty.
    static HyperSet finite(InstanceId instance, std::vector<Element> elements);
    static HyperSet ray(InstanceId instance, Rational min);
    static HyperSet phase(InstanceId instance, PhaseSet set);

    InstanceId instance() const { return instance_; }
    const Storage& storage() const { return storage_; }

    bool is_finite() const { return std::holds_alternative<FiniteSet>(storage_); }
    const FiniteSet* finite_elements() const { return std::get_if<FiniteSet>(&storage_); }
    const TropicalRay* as_ray() const { return std::get_if<TropicalRay>(&storage_); }
    const PhaseSet* as_phase() const { return std::get_if<PhaseSet>(&storage_); }

    bool contains(const Element& x) const;
    /// All elements; throws NonEnumerable for rays and phase sets with arcs.
    std::vector<Element> enumerate() const;

    friend bool operator==(const HyperSet&, const HyperSet&) = default;

private:
    HyperSet(InstanceId instance, Storage storage);

    InstanceId instance_;
    Storage storage_;
};

inline bool set_contains(const HyperSet& s, const Element& x) { return s.contains(x); }
inline std::vector<Element> set_enumerate(const HyperSet& s) { return s.enumerate(); }

}  // namespace hyperpoly
