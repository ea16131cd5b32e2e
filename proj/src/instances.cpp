#include "hyperpoly/instances.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "hyperpoly/axioms.hpp"
#include "hyperpoly/errors.hpp"
#include "parallel.hpp"

namespace hyperpoly {

namespace {

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::uint64_t residue_of(std::int64_t r, std::uint64_t p) {
    auto m = static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(((r % m) + m) % m);
}

std::string join(const std::vector<std::uint64_t>& xs, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + std::to_string(xs[i]);
    return out;
}

// Multiplicative order of a unit index in a finite table.
std::uint32_t order_of(const FiniteTable& t, std::uint32_t a) {
    std::uint32_t x = a, k = 1;
    while (x != 1) {
        x = t.product(x, a);
        if (++k > t.size) return 0;
    }
    return k;
}

bool preserves(const FiniteTable& s, const FiniteTable& t, const std::vector<std::uint32_t>& phi) {
    for (std::uint32_t a = 0; a < s.size; ++a)
        for (std::uint32_t b = 0; b < s.size; ++b) {
            if (phi[s.product(a, b)] != t.product(phi[a], phi[b])) return false;
            std::vector<std::uint32_t> image;
            for (auto x : s.sum(a, b)) image.push_back(phi[x]);
            std::sort(image.begin(), image.end());
            if (image != t.sum(phi[a], phi[b])) return false;
        }
    return true;
}

}  // namespace

std::vector<std::uint64_t> generated_subgroup(std::uint64_t p, const std::vector<std::int64_t>& generators) {
    if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
    std::vector<char> in(p, 0);
    std::vector<std::uint64_t> group = {1};
    in[1] = 1;
    for (std::int64_t g : generators)
        if (residue_of(g, p) == 0) throw DomainError("subgroup generator " + std::to_string(g) + " is zero mod " + std::to_string(p));
    // close {1} under multiplication by the generators
    for (std::size_t k = 0; k < group.size(); ++k)
        for (std::int64_t g : generators) {
            std::uint64_t x = static_cast<std::uint64_t>(static_cast<unsigned __int128>(group[k]) * residue_of(g, p) % p);
            if (!in[x]) {
                in[x] = 1;
                group.push_back(x);
            }
        }
    std::sort(group.begin(), group.end());
    return group;
}

std::vector<std::int64_t> squares_mod(std::uint64_t p) {
    std::vector<std::int64_t> out;
    for (std::uint64_t x = 1; x < p; ++x) out.push_back(static_cast<std::int64_t>(x * x % p));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Hyperfield build_quotient(std::uint64_t p, const std::vector<std::int64_t>& generators, std::uint64_t max_prime) {
    if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
    if (p > max_prime)
        throw DomainError("quotient of F_" + std::to_string(p) + " exceeds the table bound " + std::to_string(max_prime));
    auto data = std::make_shared<QuotientData>();
    data->prime = p;
    data->subgroup = generated_subgroup(p, generators);
    const auto& G = data->subgroup;

    // closure and inverses, checked rather than assumed
    std::vector<char> in(p, 0);
    for (auto g : G) in[g] = 1;
    for (auto a : G)
        for (auto b : G)
            if (!in[a * b % p]) throw std::logic_error("generated subgroup is not closed");
    for (auto a : G)
        if (std::none_of(G.begin(), G.end(), [&](std::uint64_t b) { return a * b % p == 1; }))
            throw std::logic_error("generated subgroup lacks an inverse");

    // cosets, numbered by least residue
    data->coset_of_residue.assign(p, UINT32_MAX);
    data->coset_of_residue[0] = 0;
    data->representative = {0};
    for (std::uint64_t r = 1; r < p; ++r) {
        if (data->coset_of_residue[r] != UINT32_MAX) continue;
        auto idx = static_cast<std::uint32_t>(data->representative.size());
        data->representative.push_back(r);
        for (auto g : G) data->coset_of_residue[r * g % p] = idx;
    }
    const auto n = static_cast<std::uint32_t>(data->representative.size());
    if ((p - 1) % G.size() != 0 || n - 1 != (p - 1) / G.size()) throw std::logic_error("cosets do not partition F_p^x");

    FiniteTable t;
    t.size = n;
    t.mul.resize(std::size_t(n) * n);
    t.add.resize(std::size_t(n) * n);
    t.neg.resize(n);
    t.inv.assign(n, 0);
    const auto& rep = data->representative;
    const auto& cls = data->coset_of_residue;
    for (std::uint32_t a = 0; a < n; ++a) {
        t.neg[a] = cls[(p - rep[a]) % p];
        for (std::uint32_t b = 0; b < n; ++b) t.mul[a * n + b] = cls[rep[a] * rep[b] % p];
    }
    for (std::uint32_t a = 1; a < n; ++a)
        for (std::uint32_t b = 1; b < n; ++b)
            if (t.mul[a * n + b] == 1) t.inv[a] = b;
    // [a] ⊞ [b] = classes of all a' + b'
    std::vector<std::vector<char>> hit(std::size_t(n) * n, std::vector<char>(n, 0));
    for (std::uint64_t x = 0; x < p; ++x)
        for (std::uint64_t y = 0; y < p; ++y) hit[cls[x] * n + cls[y]][cls[(x + y) % p]] = 1;
    for (std::size_t k = 0; k < hit.size(); ++k)
        for (std::uint32_t c = 0; c < n; ++c)
            if (hit[k][c]) t.add[k].push_back(c);

    std::string key = "quot:" + std::to_string(p) + ":" + join(G, ",");
    std::string name = "F" + std::to_string(p) + "/{" + join(G, ",") + "}";
    Hyperfield f = Hyperfield::from_table(Kind::quotient, key, name, std::move(t), data);
    AxiomReport report = check_axioms(f);
    if (!report.all_passed()) throw std::logic_error("quotient " + name + " violates the hyperfield axioms");
    return f;
}

FiniteTable materialize_table(const Hyperfield& f) {
    if (const FiniteTable* t = f.table()) return *t;
    if (!f.is_enumerable()) throw NonEnumerable(f.name() + " is not enumerable");
    FiniteTable t;
    t.size = static_cast<std::uint32_t>(f.carrier_size());
    t.mul.resize(std::size_t(t.size) * t.size);
    t.add.resize(std::size_t(t.size) * t.size);
    t.neg.resize(t.size);
    t.inv.assign(t.size, 0);
    // dense index 0 must be zero and 1 must be one, as for table instances
    if (f.index_of(f.zero()) != 0 || f.index_of(f.one()) != 1) throw std::logic_error("unexpected dense indexing");
    for (std::uint32_t a = 0; a < t.size; ++a) {
        Element ea = f.element_at(a);
        t.neg[a] = f.index_of(f.neg(ea));
        if (a != 0) t.inv[a] = f.index_of(f.inv(ea));
        for (std::uint32_t b = 0; b < t.size; ++b) {
            Element eb = f.element_at(b);
            t.mul[a * t.size + b] = f.index_of(f.mul(ea, eb));
            auto& s = t.add[a * t.size + b];
            for (const auto& x : f.add(ea, eb).enumerate()) s.push_back(f.index_of(x));
            std::sort(s.begin(), s.end());
        }
    }
    return t;
}

std::optional<ElementMap> iso_to_named(const Hyperfield& source, const Hyperfield& target) {
    if (!source.is_enumerable() || !target.is_enumerable())
        throw NonEnumerable("isomorphism search needs two finite hyperfields");
    const FiniteTable s = materialize_table(source);
    const FiniteTable t = materialize_table(target);
    if (s.size != t.size) return std::nullopt;
    const std::uint32_t n = s.size;

    auto to_map = [&](const std::vector<std::uint32_t>& phi) {
        ElementMap out;
        for (const auto& x : source.carrier()) out.emplace_back(x, target.element_at(phi[source.index_of(x)]));
        return out;
    };

    if (n <= 2) {
        std::vector<std::uint32_t> phi(n);
        std::iota(phi.begin(), phi.end(), 0u);
        return preserves(s, t, phi) ? std::optional(to_map(phi)) : std::nullopt;
    }

    // a cyclic unit group is determined by the image of one generator
    std::optional<std::uint32_t> gen;
    for (std::uint32_t a = 1; a < n && !gen; ++a)
        if (order_of(s, a) == n - 1) gen = a;
    if (gen) {
        for (std::uint32_t h = 1; h < n; ++h) {
            if (order_of(t, h) != n - 1) continue;
            std::vector<std::uint32_t> phi(n, 0);
            std::uint32_t x = 1, y = 1;
            for (std::uint32_t k = 0; k + 1 < n; ++k) {
                phi[x] = y;
                x = s.product(x, *gen);
                y = t.product(y, h);
            }
            if (phi[1] == 1 && preserves(s, t, phi)) return to_map(phi);
        }
        return std::nullopt;
    }
    if (n > 9) throw DomainError("isomorphism search needs a cyclic unit group beyond 9 elements");
    std::vector<std::uint32_t> phi(n);
    std::iota(phi.begin(), phi.end(), 0u);
    do {
        if (phi[0] == 0 && phi[1] == 1 && preserves(s, t, phi)) return to_map(phi);
    } while (std::next_permutation(phi.begin() + 1, phi.end()));
    return std::nullopt;
}

Element sign_map(const Rational& x) { return Hyperfield::sign().sign_element(sign_of(x)); }

Element padic_valuation(const Rational& x, std::uint64_t p) {
    if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
    Hyperfield t = Hyperfield::tropical();
    if (x == 0) return t.tropical_inf();
    return t.tropical_value(Rational(ord_p(x.get_num(), p) - ord_p(x.get_den(), p)));
}

// ---------------------------------------------------------------- homomorphisms

Homomorphism Homomorphism::sign() {
    return Homomorphism{Hyperfield::rationals(), Hyperfield::sign(), HomRule::sign_map, 0, {}};
}

Homomorphism Homomorphism::padic(std::uint64_t p) {
    if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
    return Homomorphism{Hyperfield::rationals(), Hyperfield::tropical(), HomRule::padic, p, {}};
}

Homomorphism Homomorphism::quotient_projection(const Hyperfield& quotient) {
    const QuotientData* q = quotient.quotient_data();
    if (!q) throw DomainError(quotient.name() + " is not a quotient hyperfield");
    return Homomorphism{Hyperfield::prime_field(q->prime), quotient, HomRule::quotient_projection, 0, {}};
}

Homomorphism Homomorphism::custom(const Hyperfield& source, const Hyperfield& target, ElementMap table) {
    if (!source.is_enumerable()) throw NonEnumerable("custom maps need a finite source");
    for (const auto& [x, y] : table) {
        source.require(x);
        target.require(y);
    }
    std::sort(table.begin(), table.end());
    for (const auto& x : source.carrier()) {
        auto it = std::lower_bound(table.begin(), table.end(), x,
                                   [](const auto& entry, const Element& key) { return entry.first < key; });
        if (it == table.end() || it->first != x) throw DomainError("custom map is not defined on every element");
        if (std::next(it) != table.end() && std::next(it)->first == x) throw DomainError("custom map lists an element twice");
    }
    return Homomorphism{source, target, HomRule::custom, 0, std::move(table)};
}

Element Homomorphism::operator()(const Element& x) const {
    source.require(x);
    switch (rule) {
        case HomRule::sign_map: return sign_map(x.as<Rational>());
        case HomRule::padic: return padic_valuation(x.as<Rational>(), prime);
        case HomRule::quotient_projection: return target.coset_of(static_cast<std::int64_t>(x.as<Residue>().value));
        case HomRule::custom: break;
    }
    auto it = std::lower_bound(table.begin(), table.end(), x,
                               [](const auto& entry, const Element& key) { return entry.first < key; });
    return it->second;
}

std::string Homomorphism::name() const {
    switch (rule) {
        case HomRule::sign_map: return "sign";
        case HomRule::padic: return "padic:" + std::to_string(prime);
        case HomRule::quotient_projection: return "projection " + source.name() + " -> " + target.name();
        case HomRule::custom: break;
    }
    return "table " + source.name() + " -> " + target.name();
}

bool HomomorphismReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const LawCheck& c) { return c.passed; });
}

const LawCheck* HomomorphismReport::find(const std::string& law) const {
    for (const auto& c : checks)
        if (c.law == law) return &c;
    return nullptr;
}

const std::vector<std::string>& homomorphism_laws() {
    static const std::vector<std::string> laws = {"preserves zero", "preserves one", "multiplicative",
                                                  "sums land in hypersums"};
    return laws;
}

std::vector<Rational> rational_sample() {
    std::vector<Rational> out;
    for (int k : {0, 1, 2, 3, 4, 6, 8, 9, 12, 14, 50}) {
        out.emplace_back(k);
        if (k) out.emplace_back(-k);
    }
    for (auto [a, b] : {std::pair{1, 2}, {3, 2}, {2, 3}, {9, 4}, {5, 8}, {7, 9}, {1, 12}, {25, 6}}) {
        out.emplace_back(a, b);
        out.emplace_back(-a, b);
    }
    for (auto& q : out) q.canonicalize();
    return out;
}

HomomorphismReport check_homomorphism(const Homomorphism& f, Exec exec) {
    HomomorphismReport report;
    report.map = f.name();
    std::vector<Element> xs;
    if (f.source.is_enumerable()) {
        report.exhaustive = true;
        xs = f.source.carrier();
    } else if (f.source.kind() == Kind::field_q) {
        for (const auto& q : rational_sample()) xs.push_back(f.source.rational(q));
    } else {
        for (const auto& x : sample_grid(f.source)) xs.push_back(x);
    }
    const Hyperfield& src = f.source;
    const Hyperfield& dst = f.target;
    const std::size_t n = xs.size();

    auto record = [&](const std::string& law, std::size_t cases, auto ok, auto witness) {
        LawCheck c{law, true, cases, {}};
        if (auto bad = detail::first_failure(cases, exec, ok)) {
            c.passed = false;
            c.witness = witness(*bad);
        }
        report.checks.push_back(std::move(c));
    };
    auto pair_of = [&](std::size_t i) { return std::vector<Element>{xs[i / n], xs[i % n]}; };

    record("preserves zero", 1, [&](std::size_t) { return f(src.zero()) == dst.zero(); },
           [&](std::size_t) { return std::vector<Element>{src.zero()}; });
    record("preserves one", 1, [&](std::size_t) { return f(src.one()) == dst.one(); },
           [&](std::size_t) { return std::vector<Element>{src.one()}; });
    record("multiplicative", n * n,
           [&](std::size_t i) {
               const Element &a = xs[i / n], &b = xs[i % n];
               return f(src.mul(a, b)) == dst.mul(f(a), f(b));
           },
           pair_of);
    record("sums land in hypersums", n * n,
           [&](std::size_t i) {
               const Element &a = xs[i / n], &b = xs[i % n];
               HyperSet image = dst.add(f(a), f(b));
               for (const auto& c : src.add(a, b).enumerate())
                   if (!image.contains(f(c))) return false;
               return true;
           },
           pair_of);
    return report;
}

}  // namespace hyperpoly
