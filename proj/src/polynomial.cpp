#include "hyperpoly/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "hyperpoly/errors.hpp"
#include "hyperpoly/tropical.hpp"

namespace hyperpoly {

struct MultiplicityAccess {
    static auto& table(MultiplicityCache& c) { return c.table_; }
};

namespace {

void require_same_field(const Poly& p, const Poly& q) {
    if (!(p.field() == q.field())) throw DomainError("polynomials over different hyperfields");
}

bool has_finite_sums(const Hyperfield& f) { return f.kind() != Kind::tropical && f.kind() != Kind::phase; }

void require_finite_sums(const Hyperfield& f, const char* what) {
    if (!has_finite_sums(f))
        throw NonEnumerable(std::string(what) + " over " + f.name() + " produces infinite sets");
}

void sort_unique(std::vector<Poly>& ps) {
    std::sort(ps.begin(), ps.end());
    ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
}

// Every polynomial whose i-th coefficient is drawn from choices[i].
std::vector<Poly> expand(const Hyperfield& f, const std::vector<std::vector<Element>>& choices) {
    std::vector<Poly> out;
    std::vector<Element> current;
    current.reserve(choices.size());
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == choices.size()) {
            out.emplace_back(f, current);
            return;
        }
        for (const auto& e : choices[i]) {
            current.push_back(e);
            self(self, i + 1);
            current.pop_back();
        }
    };
    rec(rec, 0);
    sort_unique(out);
    return out;
}

// Terms c_k d_l with k + l = i.
std::vector<Element> convolution_terms(const Poly& f, const Poly& g, std::size_t i) {
    std::vector<Element> terms;
    const auto& F = f.field();
    for (std::size_t k = 0; k <= i && k < f.coeffs().size(); ++k) {
        std::size_t l = i - k;
        if (l < g.coeffs().size()) terms.push_back(F.mul(f.coeffs()[k], g.coeffs()[l]));
    }
    return terms;
}

unsigned mult_recursive(const Poly& p, const Element& a, MultiplicityCache& cache) {
    auto& table = MultiplicityAccess::table(cache);
    auto key = std::make_pair(a, p.coeffs());
    if (auto it = table.find(key); it != table.end()) return it->second.multiplicity;
    MultiplicityCache::Entry entry{0, std::nullopt};
    if (is_root(p, a)) {
        auto qs = quotients(p, a);
        if (qs.empty()) throw std::logic_error("root without a quotient");
        for (const auto& q : qs) {
            unsigned m = 1 + mult_recursive(q, a, cache);
            if (m > entry.multiplicity) {
                entry.multiplicity = m;
                entry.next = q;
            }
        }
    }
    table.emplace(std::move(key), entry);
    return entry.multiplicity;
}

}  // namespace

// ---------------------------------------------------------------- Poly

Poly::Poly(Hyperfield field, std::vector<Element> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_) field_.require(c);
    while (!coeffs_.empty() && field_.is_zero(coeffs_.back())) coeffs_.pop_back();
}

Poly Poly::linear(const Hyperfield& field, const Element& a) { return Poly(field, {field.neg(a), field.one()}); }

Element Poly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : field_.zero(); }

std::strong_ordering operator<=>(const Poly& a, const Poly& b) {
    if (auto c = a.field_.id() <=> b.field_.id(); c != 0) return c;
    if (auto c = a.coeffs_.size() <=> b.coeffs_.size(); c != 0) return c;
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        if (auto c = a.coeffs_[i] <=> b.coeffs_[i]; c != 0) return c;
    return std::strong_ordering::equal;
}

// ---------------------------------------------------------------- roots

HyperSet eval_hyperset(const Poly& p, const Element& a) {
    const Hyperfield& f = p.field();
    f.require(a);
    std::vector<Element> terms;
    Element power = f.one();
    for (const auto& c : p.coeffs()) {
        terms.push_back(f.mul(c, power));
        power = f.mul(power, a);
    }
    return f.sum(terms);
}

bool is_root(const Poly& p, const Element& a) { return eval_hyperset(p, a).contains(p.field().zero()); }

std::vector<Poly> quotients(const Poly& p, const Element& a) {
    const Hyperfield& f = p.field();
    f.require(a);
    if (p.is_zero()) throw DomainError("quotients of the zero polynomial");
    const auto& c = p.coeffs();
    const std::size_t n = c.size() - 1;
    if (n == 0) return {};
    if (f.is_zero(a)) {
        if (!f.is_zero(c[0])) return {};
        return {Poly(f, std::vector<Element>(c.begin() + 1, c.end()))};
    }
    require_finite_sums(f, "quotient enumeration");

    std::vector<Poly> out;
    std::vector<Element> d(n, f.zero());
    d[n - 1] = c[n];
    const Element minus_a = f.neg(a);
    // choose d_{i-1} for i = n-1 .. 1
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == 0) {
            if (c[0] == f.mul(minus_a, d[0])) out.emplace_back(f, d);
            return;
        }
        for (const auto& x : f.add(c[i], f.mul(a, d[i])).enumerate()) {
            d[i - 1] = x;
            self(self, i - 1);
        }
    };
    rec(rec, n - 1);
    sort_unique(out);
    return out;
}

bool in_hyper_product(const Poly& p, const Poly& f, const Poly& g) {
    require_same_field(p, f);
    require_same_field(p, g);
    if (f.is_zero() || g.is_zero()) return p.is_zero();
    const std::size_t len = f.coeffs().size() + g.coeffs().size() - 1;
    if (p.coeffs().size() > len) return false;
    const Hyperfield& F = p.field();
    for (std::size_t i = 0; i < len; ++i)
        if (!F.sum(convolution_terms(f, g, i)).contains(p.coeff(i))) return false;
    return true;
}

bool in_linear_product(const Poly& p, const Element& a, const Poly& q) {
    return in_hyper_product(p, Poly::linear(p.field(), a), q);
}

// ---------------------------------------------------------------- multiplicity

std::string_view to_string(MultMethod method) {
    switch (method) {
        case MultMethod::recursive: return "RECURSIVE";
        case MultMethod::sign_changes: return "THEOREM_D";
        case MultMethod::newton_polygon: return "THEOREM_N";
        case MultMethod::zero_element_order: return "ZERO_ELEMENT_ORDER";
    }
    return "?";
}

MultReport multiplicity(const Poly& p, const Element& a, MultiplicityCache* cache) {
    const Hyperfield& f = p.field();
    f.require(a);
    if (p.is_zero()) throw DomainError("multiplicity is undefined for the zero polynomial");
    if (f.kind() == Kind::tropical) return mult_tropical(p, a);
    if (f.is_zero(a)) {
        MultReport r{a, 0, MultMethod::zero_element_order, {}};
        const auto& c = p.coeffs();
        while (f.is_zero(c[r.multiplicity])) {
            ++r.multiplicity;
            r.witness.emplace_back(f, std::vector<Element>(c.begin() + r.multiplicity, c.end()));
        }
        return r;
    }
    if (!has_finite_sums(f))
        throw NonEnumerable("multiplicity over " + f.name() + " at a nonzero element is not supported");

    MultiplicityCache local;
    MultiplicityCache& memo = cache ? *cache : local;
    MultReport r{a, mult_recursive(p, a, memo), MultMethod::recursive, {}};
    auto& table = MultiplicityAccess::table(memo);
    const Poly* cur = &p;
    for (unsigned k = 0; k < r.multiplicity; ++k) {
        const auto& entry = table.at({a, cur->coeffs()});
        r.witness.push_back(*entry.next);
        cur = &r.witness.back();
    }
    return r;
}

bool witness_chain_valid(const Poly& p, const MultReport& report) {
    if (report.witness.size() != report.multiplicity) return false;
    const Poly* cur = &p;
    for (const auto& q : report.witness) {
        if (!in_linear_product(*cur, report.element, q)) return false;
        cur = &q;
    }
    return true;
}

// ---------------------------------------------------------------- Pol(F)

std::vector<Poly> hyper_add_poly(const Poly& p, const Poly& q) {
    require_same_field(p, q);
    const Hyperfield& f = p.field();
    require_finite_sums(f, "polynomial hyperaddition");
    std::size_t len = std::max(p.coeffs().size(), q.coeffs().size());
    std::vector<std::vector<Element>> choices;
    for (std::size_t i = 0; i < len; ++i) choices.push_back(f.add(p.coeff(i), q.coeff(i)).enumerate());
    return expand(f, choices);
}

std::vector<Poly> hyper_mul_poly(const Poly& p, const Poly& q) {
    require_same_field(p, q);
    const Hyperfield& f = p.field();
    require_finite_sums(f, "polynomial hypermultiplication");
    if (p.is_zero() || q.is_zero()) return {Poly::zero(f)};
    std::size_t len = p.coeffs().size() + q.coeffs().size() - 1;
    std::vector<std::vector<Element>> choices;
    for (std::size_t i = 0; i < len; ++i) choices.push_back(f.sum(convolution_terms(p, q, i)).enumerate());
    return expand(f, choices);
}

std::vector<Poly> hyper_mul_sets(const std::vector<Poly>& left, const std::vector<Poly>& right) {
    std::vector<Poly> out;
    for (const auto& f : left)
        for (const auto& g : right)
            for (auto& h : hyper_mul_poly(f, g)) out.push_back(std::move(h));
    sort_unique(out);
    return out;
}

AssocTree AssocTree::parse(std::string_view text) {
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto node = [&](auto&& self) -> AssocTree {
        skip();
        if (pos >= text.size()) throw ParseError("association tree ends early");
        if (text[pos] == '(') {
            ++pos;
            AssocTree t;
            skip();
            while (pos < text.size() && text[pos] != ')') {
                t.children.push_back(self(self));
                skip();
            }
            if (pos >= text.size()) throw ParseError("unbalanced parentheses in association tree");
            ++pos;
            if (t.children.empty()) throw ParseError("empty group in association tree");
            if (t.children.size() == 1) return std::move(t.children[0]);
            return t;
        }
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) throw ParseError("unexpected character '" + std::string(1, text[pos]) + "' in association tree");
        AssocTree t;
        t.leaf = std::stoul(std::string(text.substr(start, pos - start)));
        if (t.leaf == 0) throw ParseError("factor indices start at 1");
        return t;
    };
    AssocTree t = node(node);
    skip();
    if (pos != text.size()) throw ParseError("trailing input after association tree");
    return t;
}

AssocTree AssocTree::left_fold(std::size_t n) {
    if (n == 0) throw DomainError("empty hyperproduct");
    AssocTree t{1, {}};
    for (std::size_t i = 2; i <= n; ++i) t = AssocTree{0, {std::move(t), AssocTree{i, {}}}};
    return t;
}

std::string AssocTree::to_string() const {
    if (leaf) return std::to_string(leaf);
    std::string out = "(";
    for (std::size_t i = 0; i < children.size(); ++i) out += (i ? " " : "") + children[i].to_string();
    return out + ")";
}

std::vector<Poly> hyper_product(const std::vector<Poly>& factors, const AssocTree& tree) {
    if (factors.empty()) throw DomainError("empty hyperproduct");
    for (const auto& f : factors) require_same_field(factors[0], f);
    std::vector<int> used(factors.size(), 0);
    auto mark = [&](auto&& self, const AssocTree& t) -> void {
        if (t.leaf) {
            if (t.leaf > factors.size())
                throw DomainError("association tree refers to factor " + std::to_string(t.leaf) + " of " +
                                  std::to_string(factors.size()));
            ++used[t.leaf - 1];
        }
        for (const auto& c : t.children) self(self, c);
    };
    mark(mark, tree);
    if (std::any_of(used.begin(), used.end(), [](int u) { return u != 1; }))
        throw DomainError("association tree must use every factor exactly once");

    auto eval = [&](auto&& self, const AssocTree& t) -> std::vector<Poly> {
        if (t.leaf) return {factors[t.leaf - 1]};
        std::vector<Poly> acc = self(self, t.children[0]);
        for (std::size_t i = 1; i < t.children.size(); ++i) acc = hyper_mul_sets(acc, self(self, t.children[i]));
        return acc;
    };
    return eval(eval, tree);
}

}  // namespace hyperpoly
