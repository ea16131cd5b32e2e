#include "hyperpoly/element.hpp"

#include <utility>

namespace hyperpoly {

namespace {

std::strong_ordering compare(const Rational& a, const Rational& b) {
    int c = cmp(a, b);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

int sign_rank(int s) { return s == 0 ? 0 : (s == 1 ? 1 : 2); }

struct PayloadCompare {
    std::strong_ordering operator()(const Rational& a, const Rational& b) const { return compare(a, b); }
    std::strong_ordering operator()(const Residue& a, const Residue& b) const { return a.value <=> b.value; }
    std::strong_ordering operator()(const SignValue& a, const SignValue& b) const {
        return sign_rank(a.value) <=> sign_rank(b.value);
    }
    std::strong_ordering operator()(const KrasnerBit& a, const KrasnerBit& b) const { return a.one <=> b.one; }
    std::strong_ordering operator()(const TropicalValue& a, const TropicalValue& b) const {
        if (a.is_inf() || b.is_inf()) return a.is_inf() <=> b.is_inf();
        return compare(*a.finite, *b.finite);
    }
    std::strong_ordering operator()(const PhaseValue& a, const PhaseValue& b) const {
        if (a.is_zero() || b.is_zero()) return b.is_zero() <=> a.is_zero();
        return compare(*a.angle, *b.angle);
    }
    std::strong_ordering operator()(const CosetIndex& a, const CosetIndex& b) const { return a.index <=> b.index; }
    template <class A, class B>
    std::strong_ordering operator()(const A&, const B&) const {
        return std::strong_ordering::equal;  // unreachable: indices compared first
    }
};

}  // namespace

Element::Element(InstanceId instance, Value value) : instance_(instance), value_(std::move(value)) {}

bool operator==(const Element& a, const Element& b) { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const Element& a, const Element& b) {
    if (auto c = a.instance_ <=> b.instance_; c != 0) return c;
    if (auto c = a.value_.index() <=> b.value_.index(); c != 0) return c;
    return std::visit(PayloadCompare{}, a.value_, b.value_);
}

}  // namespace hyperpoly
