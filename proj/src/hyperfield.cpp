#include "hyperpoly/hyperfield.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>

#include "hyperpoly/errors.hpp"

namespace hyperpoly {

struct Hyperfield::Impl {
    InstanceId id = 0;
    Kind kind = Kind::field_q;
    std::string key;
    std::string name;
    std::uint64_t prime = 0;
    std::shared_ptr<const FiniteTable> table;
    std::shared_ptr<const QuotientData> quotient;
};

namespace {

constexpr std::uint64_t kMaxEnumerablePrime = 101;

std::mutex& registry_mutex() {
    static std::mutex m;
    return m;
}

std::map<std::string, std::shared_ptr<const Hyperfield::Impl>>& registry() {
    static std::map<std::string, std::shared_ptr<const Hyperfield::Impl>> r;
    return r;
}

InstanceId next_id() {
    static std::atomic<InstanceId> counter{1};
    return counter++;
}

template <class Make>
std::shared_ptr<const Hyperfield::Impl> intern(const std::string& key, Make make) {
    std::lock_guard lock(registry_mutex());
    auto& r = registry();
    if (auto it = r.find(key); it != r.end()) return it->second;
    auto impl = std::make_shared<Hyperfield::Impl>(make());
    impl->id = next_id();
    impl->key = key;
    r.emplace(key, impl);
    return impl;
}

Hyperfield::Impl make_impl(Kind kind, std::string name, std::uint64_t prime = 0,
                           std::shared_ptr<const FiniteTable> table = nullptr,
                           std::shared_ptr<const QuotientData> quotient = nullptr) {
    Hyperfield::Impl impl;
    impl.kind = kind;
    impl.name = std::move(name);
    impl.prime = prime;
    impl.table = std::move(table);
    impl.quotient = std::move(quotient);
    return impl;
}

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    unsigned __int128 r = 1, x = b % m;
    while (e) {
        if (e & 1) r = r * x % m;
        x = x * x % m;
        e >>= 1;
    }
    return static_cast<std::uint64_t>(r);
}

// Sign-like tables (S and W) share indices 0 -> 0, 1 -> 1, 2 -> -1.
FiniteTable sign_like_table(bool weak) {
    FiniteTable t;
    t.size = 3;
    t.mul = {0, 0, 0, 0, 1, 2, 0, 2, 1};
    t.neg = {0, 2, 1};
    t.inv = {0, 1, 2};
    std::vector<std::uint32_t> all = {0, 1, 2};
    t.add = {{0}, {1}, {2},
             {1}, weak ? std::vector<std::uint32_t>{1, 2} : std::vector<std::uint32_t>{1}, all,
             {2}, all, weak ? std::vector<std::uint32_t>{1, 2} : std::vector<std::uint32_t>{2}};
    return t;
}

FiniteTable krasner_table() {
    FiniteTable t;
    t.size = 2;
    t.mul = {0, 0, 0, 1};
    t.neg = {0, 1};
    t.inv = {0, 1};
    t.add = {{0}, {1}, {1}, {0, 1}};
    return t;
}

const Rational& finite_of(const Element& a) {
    const auto& t = a.as<TropicalValue>();
    return *t.finite;
}

}  // namespace

std::string_view to_string(Kind kind) {
    switch (kind) {
        case Kind::field_q: return "FIELD_Q";
        case Kind::field_fp: return "FIELD_Fp";
        case Kind::sign: return "SIGN";
        case Kind::krasner: return "KRASNER";
        case Kind::weak_sign: return "WEAK_SIGN";
        case Kind::phase: return "PHASE";
        case Kind::tropical: return "TROPICAL";
        case Kind::quotient: return "QUOTIENT";
    }
    return "?";
}

// ---------------------------------------------------------------- construction

Hyperfield Hyperfield::rationals() {
    return Hyperfield(intern("Q", [] { return make_impl(Kind::field_q, "Q"); }));
}

Hyperfield Hyperfield::prime_field(std::uint64_t p) {
    if (!is_prime(p)) throw DomainError("Fp requires a prime, got " + std::to_string(p));
    std::string key = "Fp:" + std::to_string(p);
    return Hyperfield(intern(key, [&] { return make_impl(Kind::field_fp, "F" + std::to_string(p), p); }));
}

Hyperfield Hyperfield::sign() {
    return Hyperfield(intern("S", [] {
        return make_impl(Kind::sign, "S", 0, std::make_shared<FiniteTable>(sign_like_table(false)));
    }));
}

Hyperfield Hyperfield::weak_sign() {
    return Hyperfield(intern("W", [] {
        return make_impl(Kind::weak_sign, "W", 0, std::make_shared<FiniteTable>(sign_like_table(true)));
    }));
}

Hyperfield Hyperfield::krasner() {
    return Hyperfield(intern("K", [] {
        return make_impl(Kind::krasner, "K", 0, std::make_shared<FiniteTable>(krasner_table()));
    }));
}

Hyperfield Hyperfield::phase() {
    return Hyperfield(intern("P", [] { return make_impl(Kind::phase, "P"); }));
}

Hyperfield Hyperfield::tropical() {
    return Hyperfield(intern("T", [] { return make_impl(Kind::tropical, "T"); }));
}

Hyperfield Hyperfield::from_table(Kind kind, std::string key, std::string name, FiniteTable table,
                                  std::shared_ptr<const QuotientData> quotient) {
    if (kind != Kind::sign && kind != Kind::weak_sign && kind != Kind::krasner && kind != Kind::quotient)
        throw DomainError("table-backed instances must have a finite table kind");
    std::uint64_t p = quotient ? quotient->prime : 0;
    return Hyperfield(intern(key, [&] {
        return make_impl(kind, std::move(name), p, std::make_shared<FiniteTable>(std::move(table)), std::move(quotient));
    }));
}

Hyperfield Hyperfield::with_mutated_sum(const Hyperfield& base, const Element& a, const Element& b,
                                        const std::vector<Element>& result) {
    const FiniteTable* t = base.table();
    if (!t) throw DomainError("only table-backed instances can be mutated");
    FiniteTable copy = *t;
    std::vector<std::uint32_t> idx;
    for (const auto& x : result) idx.push_back(base.index_of(x));
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    std::uint32_t ia = base.index_of(a), ib = base.index_of(b);
    copy.add[ia * copy.size + ib] = idx;
    copy.add[ib * copy.size + ia] = idx;
    static std::atomic<unsigned> serial{0};
    std::string key = base.spec() + "#mutated" + std::to_string(serial++);
    return from_table(base.kind(), key, base.name() + "*", std::move(copy), base.impl_->quotient);
}

// ---------------------------------------------------------------- accessors

InstanceId Hyperfield::id() const { return impl_->id; }
Kind Hyperfield::kind() const { return impl_->kind; }
const std::string& Hyperfield::name() const { return impl_->name; }
const std::string& Hyperfield::spec() const { return impl_->key; }
std::uint64_t Hyperfield::prime() const { return impl_->prime; }
const FiniteTable* Hyperfield::table() const { return impl_->table.get(); }
const QuotientData* Hyperfield::quotient_data() const { return impl_->quotient.get(); }

bool Hyperfield::is_enumerable() const {
    if (impl_->table) return true;
    return impl_->kind == Kind::field_fp && impl_->prime <= kMaxEnumerablePrime;
}

std::size_t Hyperfield::carrier_size() const {
    if (impl_->table) return impl_->table->size;
    if (impl_->kind == Kind::field_fp) return impl_->prime;
    throw NonEnumerable(name() + " has an infinite carrier");
}

std::vector<Element> Hyperfield::carrier() const {
    if (!is_enumerable()) throw NonEnumerable(name() + " does not expose a carrier list");
    std::vector<Element> out;
    for (std::uint32_t i = 0; i < carrier_size(); ++i) out.push_back(element_at(i));
    std::sort(out.begin(), out.end());
    return out;
}

void Hyperfield::require(const Element& a) const {
    if (a.instance() != impl_->id) throw DomainError("element does not belong to hyperfield " + name());
}

// ---------------------------------------------------------------- elements

Element Hyperfield::zero() const {
    switch (impl_->kind) {
        case Kind::field_q: return Element(id(), Rational(0));
        case Kind::field_fp: return Element(id(), Residue{0});
        case Kind::sign:
        case Kind::weak_sign: return Element(id(), SignValue{0});
        case Kind::krasner: return Element(id(), KrasnerBit{false});
        case Kind::phase: return Element(id(), PhaseValue{});
        case Kind::tropical: return Element(id(), TropicalValue{});
        case Kind::quotient: return Element(id(), CosetIndex{0});
    }
    throw DomainError("unknown kind");
}

Element Hyperfield::one() const {
    switch (impl_->kind) {
        case Kind::field_q: return Element(id(), Rational(1));
        case Kind::field_fp: return Element(id(), Residue{1});
        case Kind::sign:
        case Kind::weak_sign: return Element(id(), SignValue{1});
        case Kind::krasner: return Element(id(), KrasnerBit{true});
        case Kind::phase: return Element(id(), PhaseValue{Rational(0)});
        case Kind::tropical: return Element(id(), TropicalValue{Rational(0)});
        case Kind::quotient: return Element(id(), CosetIndex{1});
    }
    throw DomainError("unknown kind");
}

bool Hyperfield::is_zero(const Element& a) const {
    require(a);
    return a == zero();
}

Element Hyperfield::rational(const Rational& q) const {
    if (kind() != Kind::field_q) throw DomainError(name() + " has no rational elements");
    Rational c = q;
    c.canonicalize();
    return Element(id(), c);
}

Element Hyperfield::residue(std::int64_t r) const {
    if (kind() != Kind::field_fp) throw DomainError(name() + " has no residue elements");
    auto p = static_cast<std::int64_t>(prime());
    return Element(id(), Residue{static_cast<std::uint64_t>(((r % p) + p) % p)});
}

Element Hyperfield::sign_element(int s) const {
    if (kind() != Kind::sign && kind() != Kind::weak_sign) throw DomainError(name() + " has no sign elements");
    if (s < -1 || s > 1) throw DomainError("sign must be -1, 0 or 1");
    return Element(id(), SignValue{s});
}

Element Hyperfield::krasner_element(bool one) const {
    if (kind() != Kind::krasner) throw DomainError(name() + " has no Krasner elements");
    return Element(id(), KrasnerBit{one});
}

Element Hyperfield::tropical_value(const Rational& v) const {
    if (kind() != Kind::tropical) throw DomainError(name() + " has no tropical elements");
    Rational c = v;
    c.canonicalize();
    return Element(id(), TropicalValue{c});
}

Element Hyperfield::tropical_inf() const {
    if (kind() != Kind::tropical) throw DomainError(name() + " has no tropical elements");
    return Element(id(), TropicalValue{});
}

Element Hyperfield::phase_angle(const Rational& angle) const {
    if (kind() != Kind::phase) throw DomainError(name() + " has no phase elements");
    return Element(id(), PhaseValue{reduce_angle(angle)});
}

Element Hyperfield::coset_of(std::int64_t r) const {
    const QuotientData* q = quotient_data();
    if (!q) throw DomainError(name() + " is not a quotient hyperfield");
    auto p = static_cast<std::int64_t>(q->prime);
    auto res = static_cast<std::size_t>(((r % p) + p) % p);
    return Element(id(), CosetIndex{q->coset_of_residue[res]});
}

Element Hyperfield::coset(std::uint32_t index) const {
    if (kind() != Kind::quotient) throw DomainError(name() + " is not a quotient hyperfield");
    if (index >= carrier_size()) throw DomainError("coset index out of range");
    return Element(id(), CosetIndex{index});
}

std::uint32_t Hyperfield::index_of(const Element& a) const {
    require(a);
    switch (kind()) {
        case Kind::sign:
        case Kind::weak_sign: {
            int s = a.as<SignValue>().value;
            return s == 0 ? 0u : (s == 1 ? 1u : 2u);
        }
        case Kind::krasner: return a.as<KrasnerBit>().one ? 1u : 0u;
        case Kind::quotient: return a.as<CosetIndex>().index;
        case Kind::field_fp: return static_cast<std::uint32_t>(a.as<Residue>().value);
        default: throw NonEnumerable(name() + " has no dense element index");
    }
}

Element Hyperfield::element_at(std::uint32_t i) const {
    switch (kind()) {
        case Kind::sign:
        case Kind::weak_sign: return Element(id(), SignValue{i == 0 ? 0 : (i == 1 ? 1 : -1)});
        case Kind::krasner: return Element(id(), KrasnerBit{i == 1});
        case Kind::quotient: return Element(id(), CosetIndex{i});
        case Kind::field_fp: return Element(id(), Residue{i});
        default: throw NonEnumerable(name() + " has no dense element index");
    }
}

// ---------------------------------------------------------------- operations

HyperSet Hyperfield::singleton(const Element& a) const {
    require(a);
    if (kind() == Kind::phase) {
        const auto& v = a.as<PhaseValue>();
        return HyperSet::phase(id(), v.is_zero() ? PhaseSet::zero_only() : PhaseSet::point(*v.angle));
    }
    return HyperSet::finite(id(), {a});
}

HyperSet Hyperfield::add(const Element& a, const Element& b) const {
    require(a);
    require(b);
    if (const FiniteTable* t = table()) {
        std::vector<Element> out;
        for (auto i : t->sum(index_of(a), index_of(b))) out.push_back(element_at(i));
        return HyperSet::finite(id(), std::move(out));
    }
    switch (kind()) {
        case Kind::field_q: return HyperSet::finite(id(), {Element(id(), Rational(a.as<Rational>() + b.as<Rational>()))});
        case Kind::field_fp:
            return HyperSet::finite(id(), {Element(id(), Residue{(a.as<Residue>().value + b.as<Residue>().value) % prime()})});
        case Kind::tropical: {
            const auto& x = a.as<TropicalValue>();
            const auto& y = b.as<TropicalValue>();
            if (x.is_inf()) return HyperSet::finite(id(), {b});
            if (y.is_inf()) return HyperSet::finite(id(), {a});
            int c = cmp(*x.finite, *y.finite);
            if (c == 0) return HyperSet::ray(id(), *x.finite);
            return HyperSet::finite(id(), {c < 0 ? a : b});
        }
        case Kind::phase: {
            const auto& x = a.as<PhaseValue>();
            const auto& y = b.as<PhaseValue>();
            if (x.is_zero()) return singleton(b);
            if (y.is_zero()) return singleton(a);
            return HyperSet::phase(id(), phase_cone({*x.angle, *y.angle}));
        }
        default: break;
    }
    throw DomainError("no addition rule for " + name());
}

Element Hyperfield::mul(const Element& a, const Element& b) const {
    require(a);
    require(b);
    if (const FiniteTable* t = table()) return element_at(t->product(index_of(a), index_of(b)));
    switch (kind()) {
        case Kind::field_q: return Element(id(), Rational(a.as<Rational>() * b.as<Rational>()));
        case Kind::field_fp: {
            unsigned __int128 v = static_cast<unsigned __int128>(a.as<Residue>().value) * b.as<Residue>().value;
            return Element(id(), Residue{static_cast<std::uint64_t>(v % prime())});
        }
        case Kind::tropical: {
            const auto& x = a.as<TropicalValue>();
            const auto& y = b.as<TropicalValue>();
            if (x.is_inf() || y.is_inf()) return zero();
            return Element(id(), TropicalValue{Rational(*x.finite + *y.finite)});
        }
        case Kind::phase: {
            const auto& x = a.as<PhaseValue>();
            const auto& y = b.as<PhaseValue>();
            if (x.is_zero() || y.is_zero()) return zero();
            return Element(id(), PhaseValue{reduce_angle(*x.angle + *y.angle)});
        }
        default: break;
    }
    throw DomainError("no multiplication rule for " + name());
}

Element Hyperfield::neg(const Element& a) const {
    require(a);
    if (const FiniteTable* t = table()) return element_at(t->neg[index_of(a)]);
    switch (kind()) {
        case Kind::field_q: return Element(id(), Rational(-a.as<Rational>()));
        case Kind::field_fp: {
            auto v = a.as<Residue>().value;
            return Element(id(), Residue{v == 0 ? 0 : prime() - v});
        }
        case Kind::tropical: return a;
        case Kind::phase: {
            const auto& x = a.as<PhaseValue>();
            if (x.is_zero()) return a;
            return Element(id(), PhaseValue{reduce_angle(*x.angle + 1)});
        }
        default: break;
    }
    throw DomainError("no negation rule for " + name());
}

Element Hyperfield::inv(const Element& a) const {
    if (is_zero(a)) throw DomainError("inverse of zero in " + name());
    if (const FiniteTable* t = table()) return element_at(t->inv[index_of(a)]);
    switch (kind()) {
        case Kind::field_q: return Element(id(), Rational(1 / a.as<Rational>()));
        case Kind::field_fp: return Element(id(), Residue{mod_pow(a.as<Residue>().value, prime() - 2, prime())});
        case Kind::tropical: return Element(id(), TropicalValue{Rational(-finite_of(a))});
        case Kind::phase: return Element(id(), PhaseValue{reduce_angle(-*a.as<PhaseValue>().angle)});
        default: break;
    }
    throw DomainError("no inversion rule for " + name());
}

Element Hyperfield::pow(const Element& a, unsigned k) const {
    Element r = one();
    for (unsigned i = 0; i < k; ++i) r = mul(r, a);
    return r;
}

HyperSet Hyperfield::unite(const HyperSet& s, const HyperSet& t) const {
    if (s.instance() != id() || t.instance() != id()) throw DomainError("set union across hyperfield instances");
    if (s.is_finite() && t.is_finite()) {
        std::vector<Element> all = *s.finite_elements();
        all.insert(all.end(), t.finite_elements()->begin(), t.finite_elements()->end());
        return HyperSet::finite(id(), std::move(all));
    }
    if (s.as_phase() && t.as_phase()) return HyperSet::phase(id(), s.as_phase()->unite(*t.as_phase()));
    // tropical: a ray absorbs every point at or above its minimum
    const HyperSet& ray_set = s.as_ray() ? s : t;
    const HyperSet& other = s.as_ray() ? t : s;
    const TropicalRay* r = ray_set.as_ray();
    if (const TropicalRay* r2 = other.as_ray()) return HyperSet::ray(id(), r->min < r2->min ? r->min : r2->min);
    for (const auto& x : *other.finite_elements())
        if (!ray_set.contains(x)) throw DomainError("tropical union is not a ray or a finite set");
    return HyperSet::ray(id(), r->min);
}

HyperSet Hyperfield::add_to_set(const HyperSet& s, const Element& a) const {
    require(a);
    if (s.instance() != id()) throw DomainError("set does not belong to hyperfield " + name());
    if (const auto* fs = s.finite_elements()) {
        std::optional<HyperSet> acc;
        for (const auto& x : *fs) {
            HyperSet part = add(x, a);
            acc = acc ? unite(*acc, part) : part;
        }
        return *acc;
    }
    if (const auto* r = s.as_ray()) {
        const auto& t = a.as<TropicalValue>();
        if (t.is_inf() || *t.finite >= r->min) return HyperSet::ray(id(), r->min);
        return HyperSet::finite(id(), {a});
    }
    const PhaseSet& ps = *s.as_phase();
    const auto& pa = a.as<PhaseValue>();
    if (pa.is_zero()) return s;
    PhaseSet acc = PhaseSet::none();
    if (ps.contains_zero()) acc = acc.unite(PhaseSet::point(*pa.angle));
    for (const auto& q : ps.points()) acc = acc.unite(phase_cone({q, *pa.angle}));
    // every x on an open arc shorter than a half-turn is a positive combination
    // of the arc's endpoints, so x ⊞ a ranges over the cone of all three
    for (const auto& arc : ps.arcs()) acc = acc.unite(phase_cone({arc.from, arc.to, *pa.angle}));
    return HyperSet::phase(id(), acc);
}

HyperSet Hyperfield::scale(const Element& a, const HyperSet& s) const {
    require(a);
    if (s.instance() != id()) throw DomainError("set does not belong to hyperfield " + name());
    if (is_zero(a)) return singleton(zero());
    if (const auto* fs = s.finite_elements()) {
        std::vector<Element> out;
        for (const auto& x : *fs) out.push_back(mul(a, x));
        return HyperSet::finite(id(), std::move(out));
    }
    if (const auto* r = s.as_ray()) return HyperSet::ray(id(), r->min + finite_of(a));
    return HyperSet::phase(id(), s.as_phase()->rotate(*a.as<PhaseValue>().angle));
}

HyperSet Hyperfield::sum(std::span<const Element> terms) const {
    for (const auto& t : terms) require(t);
    if (terms.empty()) return singleton(zero());
    switch (kind()) {
        case Kind::field_q: {
            Rational s = 0;
            for (const auto& t : terms) s += t.as<Rational>();
            return HyperSet::finite(id(), {Element(id(), s)});
        }
        case Kind::field_fp: {
            std::uint64_t s = 0;
            for (const auto& t : terms) s = (s + t.as<Residue>().value) % prime();
            return HyperSet::finite(id(), {Element(id(), Residue{s})});
        }
        case Kind::tropical: {
            // {m} if the minimum is attained once, [m, inf] if at least twice, {inf} if all terms are inf
            const Rational* best = nullptr;
            int hits = 0;
            for (const auto& t : terms) {
                const auto& v = t.as<TropicalValue>();
                if (v.is_inf()) continue;
                if (!best || *v.finite < *best) {
                    best = &*v.finite;
                    hits = 1;
                } else if (*v.finite == *best) {
                    ++hits;
                }
            }
            if (!best) return singleton(zero());
            if (hits == 1) return HyperSet::finite(id(), {Element(id(), TropicalValue{*best})});
            return HyperSet::ray(id(), *best);
        }
        case Kind::phase: {
            std::vector<Rational> dirs;
            for (const auto& t : terms)
                if (const auto& v = t.as<PhaseValue>(); !v.is_zero()) dirs.push_back(*v.angle);
            return HyperSet::phase(id(), phase_cone(std::move(dirs)));
        }
        default: break;
    }
    // finite tables: recursive union over partial sums, tracked as an index mask
    const FiniteTable& t = *table();
    std::vector<char> cur(t.size, 0), next(t.size, 0);
    cur[index_of(terms[0])] = 1;
    for (std::size_t k = 1; k < terms.size(); ++k) {
        std::fill(next.begin(), next.end(), 0);
        std::uint32_t b = index_of(terms[k]);
        for (std::uint32_t x = 0; x < t.size; ++x)
            if (cur[x])
                for (auto y : t.sum(x, b)) next[y] = 1;
        cur.swap(next);
    }
    std::vector<Element> out;
    for (std::uint32_t x = 0; x < t.size; ++x)
        if (cur[x]) out.push_back(element_at(x));
    return HyperSet::finite(id(), std::move(out));
}

// ---------------------------------------------------------------- phase cone

PhaseSet phase_cone(std::vector<Rational> dirs) {
    for (auto& d : dirs) d = reduce_angle(d);
    std::sort(dirs.begin(), dirs.end());
    dirs.erase(std::unique(dirs.begin(), dirs.end()), dirs.end());
    if (dirs.empty()) return PhaseSet::zero_only();
    if (dirs.size() == 1) return PhaseSet::point(dirs[0]);
    // the smallest arc covering all directions starts right after the largest gap
    std::size_t n = dirs.size(), after_gap = 0;
    Rational largest = -1;
    for (std::size_t k = 0; k < n; ++k) {
        Rational gap = (k + 1 < n ? dirs[k + 1] : dirs[0] + 2) - dirs[k];
        if (gap > largest) {
            largest = gap;
            after_gap = (k + 1) % n;
        }
    }
    Rational span = 2 - largest;
    const Rational& from = dirs[after_gap];
    if (span < 1) return PhaseSet::arc(from, from + span);
    if (span == 1) {
        if (n == 2) return PhaseSet::point(dirs[0]).unite(PhaseSet::point(dirs[1])).with_zero(true);
        return PhaseSet::arc(from, from + 1);
    }
    return PhaseSet::circle().with_zero(true);
}

}  // namespace hyperpoly
