#include "hyperpoly/hyperset.hpp"

#include <algorithm>
#include <tuple>

#include "hyperpoly/errors.hpp"

namespace hyperpoly {

// ---------------------------------------------------------------- PhaseSet

PhaseSet PhaseSet::none() { return PhaseSet{}; }

PhaseSet PhaseSet::zero_only() {
    PhaseSet s;
    s.zero_ = true;
    return s;
}

PhaseSet PhaseSet::point(const Rational& angle) {
    PhaseSet s;
    s.cuts_ = {reduce_angle(angle)};
    s.at_ = {true};
    s.after_ = {false};
    return s;
}

PhaseSet PhaseSet::arc(const Rational& from, const Rational& to) {
    Rational a = reduce_angle(from);
    Rational b = reduce_angle(to);
    if (a == b) throw DomainError("degenerate phase arc");
    PhaseSet s;
    if (a < b) {
        s.cuts_ = {a, b};
        s.after_ = {true, false};
    } else {
        s.cuts_ = {b, a};
        s.after_ = {false, true};
    }
    s.at_ = {false, false};
    return s;
}

PhaseSet PhaseSet::circle() {
    PhaseSet s;
    s.full_ = true;
    return s;
}

bool PhaseSet::contains(const Rational& angle) const {
    if (cuts_.empty()) return full_;
    Rational q = reduce_angle(angle);
    auto it = std::lower_bound(cuts_.begin(), cuts_.end(), q);
    if (it != cuts_.end() && *it == q) return at_[it - cuts_.begin()];
    // q lies in the gap that starts at the previous cut (cyclically)
    std::size_t k = it == cuts_.begin() ? cuts_.size() - 1 : static_cast<std::size_t>(it - cuts_.begin()) - 1;
    return after_[k];
}

bool PhaseSet::empty() const { return !zero_ && cuts_.empty() && !full_; }

Rational PhaseSet::gap_midpoint(std::size_t k) const {
    const Rational& lo = cuts_[k];
    Rational hi = k + 1 < cuts_.size() ? cuts_[k + 1] : cuts_[0] + 2;
    return reduce_angle((lo + hi) / 2);
}

void PhaseSet::normalize() {
    bool changed = true;
    while (changed && !cuts_.empty()) {
        changed = false;
        const std::size_t n = cuts_.size();
        for (std::size_t k = 0; k < n; ++k) {
            std::size_t prev = (k + n - 1) % n;
            if (at_[k] == after_[k] && after_[prev] == after_[k]) {
                if (n == 1) {
                    full_ = at_[0];
                    cuts_.clear();
                    at_.clear();
                    after_.clear();
                } else {
                    // the gap before k absorbs the gap after k
                    after_[prev] = after_[k];
                    cuts_.erase(cuts_.begin() + static_cast<std::ptrdiff_t>(k));
                    at_.erase(at_.begin() + static_cast<std::ptrdiff_t>(k));
                    after_.erase(after_.begin() + static_cast<std::ptrdiff_t>(k));
                }
                changed = true;
                break;
            }
        }
    }
    if (!cuts_.empty()) full_ = false;
}

PhaseSet PhaseSet::unite(const PhaseSet& other) const {
    PhaseSet out;
    out.zero_ = zero_ || other.zero_;
    std::vector<Rational> cuts = cuts_;
    cuts.insert(cuts.end(), other.cuts_.begin(), other.cuts_.end());
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    if (cuts.empty()) {
        out.full_ = full_ || other.full_;
        return out;
    }
    out.cuts_ = std::move(cuts);
    out.at_.resize(out.cuts_.size());
    out.after_.resize(out.cuts_.size());
    for (std::size_t k = 0; k < out.cuts_.size(); ++k) {
        out.at_[k] = contains(out.cuts_[k]) || other.contains(out.cuts_[k]);
        Rational mid = out.gap_midpoint(k);
        out.after_[k] = contains(mid) || other.contains(mid);
    }
    out.normalize();
    return out;
}

PhaseSet PhaseSet::with_zero(bool zero) const {
    PhaseSet out = *this;
    out.zero_ = zero;
    return out;
}

PhaseSet PhaseSet::rotate(const Rational& by) const {
    PhaseSet out;
    out.zero_ = zero_;
    out.full_ = full_;
    std::vector<std::tuple<Rational, bool, bool>> moved;
    for (std::size_t k = 0; k < cuts_.size(); ++k)
        moved.emplace_back(reduce_angle(cuts_[k] + by), at_[k], after_[k]);
    std::sort(moved.begin(), moved.end(),
              [](const auto& x, const auto& y) { return std::get<0>(x) < std::get<0>(y); });
    for (auto& [c, at, after] : moved) {
        out.cuts_.push_back(c);
        out.at_.push_back(at);
        out.after_.push_back(after);
    }
    return out;
}

std::vector<Rational> PhaseSet::points() const {
    std::vector<Rational> pts;
    if (cuts_.empty()) {
        if (full_) pts = {Rational(0), Rational(2, 3), Rational(4, 3)};
        return pts;
    }
    for (std::size_t k = 0; k < cuts_.size(); ++k) {
        if (at_[k]) pts.push_back(cuts_[k]);
        if (!after_[k]) continue;
        Rational lo = cuts_[k];
        Rational hi = k + 1 < cuts_.size() ? cuts_[k + 1] : cuts_[0] + 2;
        Rational len = hi - lo;
        if (len < 1) continue;
        // split into floor(len) + 1 pieces, each shorter than 1
        mpz_class pieces = len.get_num() / len.get_den() + 1;
        for (mpz_class j = 1; j < pieces; ++j) pts.push_back(reduce_angle(lo + len * Rational(j, pieces)));
    }
    std::sort(pts.begin(), pts.end());
    return pts;
}

std::vector<PhaseArc> PhaseSet::arcs() const {
    std::vector<PhaseArc> out;
    auto emit = [&out](const Rational& lo, const Rational& len) {
        mpz_class pieces = len.get_num() / len.get_den() + 1;
        for (mpz_class j = 0; j < pieces; ++j)
            out.push_back({reduce_angle(lo + len * Rational(j, pieces)),
                           reduce_angle(lo + len * Rational(j + 1, pieces))});
    };
    if (cuts_.empty()) {
        if (full_) emit(Rational(0), Rational(2));
        return out;
    }
    for (std::size_t k = 0; k < cuts_.size(); ++k) {
        if (!after_[k]) continue;
        Rational lo = cuts_[k];
        Rational hi = k + 1 < cuts_.size() ? cuts_[k + 1] : cuts_[0] + 2;
        emit(lo, hi - lo);
    }
    std::sort(out.begin(), out.end(), [](const PhaseArc& a, const PhaseArc& b) { return a.from < b.from; });
    return out;
}

// ---------------------------------------------------------------- HyperSet

HyperSet::HyperSet(InstanceId instance, Storage storage) : instance_(instance), storage_(std::move(storage)) {}

HyperSet HyperSet::finite(InstanceId instance, std::vector<Element> elements) {
    if (elements.empty()) throw DomainError("hyperoperation produced an empty set");
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    return HyperSet(instance, std::move(elements));
}

HyperSet HyperSet::ray(InstanceId instance, Rational min) { return HyperSet(instance, TropicalRay{std::move(min)}); }

HyperSet HyperSet::phase(InstanceId instance, PhaseSet set) { return HyperSet(instance, std::move(set)); }

bool HyperSet::contains(const Element& x) const {
    if (x.instance() != instance_) throw DomainError("membership test across hyperfield instances");
    if (const auto* fs = finite_elements()) return std::binary_search(fs->begin(), fs->end(), x);
    if (const auto* r = as_ray()) {
        const auto& t = x.as<TropicalValue>();
        return t.is_inf() || *t.finite >= r->min;
    }
    const auto& p = x.as<PhaseValue>();
    return p.is_zero() ? as_phase()->contains_zero() : as_phase()->contains(*p.angle);
}

std::vector<Element> HyperSet::enumerate() const {
    if (const auto* fs = finite_elements()) return *fs;
    if (as_ray()) throw NonEnumerable("tropical ray is an infinite set");
    const PhaseSet& ps = *as_phase();
    if (!ps.arcs().empty()) throw NonEnumerable("phase set contains an open arc");
    std::vector<Element> out;
    if (ps.contains_zero()) out.emplace_back(instance_, PhaseValue{});
    for (const auto& q : ps.points()) out.emplace_back(instance_, PhaseValue{q});
    return out;
}

}  // namespace hyperpoly
