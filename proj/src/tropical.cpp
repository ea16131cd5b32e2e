#include "hyperpoly/tropical.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "hyperpoly/errors.hpp"
#include "hyperpoly/instances.hpp"
#include "hyperpoly/rational_poly.hpp"

namespace hyperpoly {

namespace {

void require_tropical(const Poly& p) {
    if (p.field().kind() != Kind::tropical) throw DomainError("expected a polynomial over T, got " + p.field().name());
    if (p.is_zero()) throw DomainError("the zero tropical polynomial has no Newton polygon");
}

const std::optional<Rational>& finite(const Element& e) { return e.as<TropicalValue>().finite; }

void require_monic(const Poly& p, const std::vector<Element>& roots) {
    require_tropical(p);
    if (*finite(p.leading()) != 0) throw DomainError("polynomial is not monic (leading coefficient must be 0)");
    if (roots.size() != static_cast<std::size_t>(p.degree()))
        throw DomainError("expected " + std::to_string(p.degree()) + " roots, got " + std::to_string(roots.size()));
    for (const auto& r : roots) p.field().require(r);
}

// The least element common to two admissible sets (each a point or a ray).
std::optional<Element> least_common(const Hyperfield& t, const HyperSet& a, const HyperSet& b) {
    std::vector<Element> candidates;
    for (const HyperSet* s : {&a, &b}) {
        if (const auto* r = s->as_ray()) candidates.push_back(t.tropical_value(r->min));
        else
            for (const auto& x : *s->finite_elements()) candidates.push_back(x);
    }
    std::sort(candidates.begin(), candidates.end());
    for (const auto& x : candidates)
        if (a.contains(x) && b.contains(x)) return x;
    return std::nullopt;
}

}  // namespace

NewtonPolygon newton_polygon(const Poly& p) {
    require_tropical(p);
    NewtonPolygon np;
    const auto& c = p.coeffs();
    while (!finite(c[np.inf_prefix])) ++np.inf_prefix;

    // monotone chain, keeping only strict left turns
    std::vector<NewtonVertex>& hull = np.vertices;
    for (std::size_t i = np.inf_prefix; i < c.size(); ++i) {
        const auto& v = finite(c[i]);
        if (!v) continue;
        NewtonVertex b{i, *v};
        while (hull.size() >= 2) {
            const NewtonVertex& o = hull[hull.size() - 2];
            const NewtonVertex& a = hull.back();
            Rational cross = Rational(static_cast<long>(a.index - o.index)) * (b.value - o.value) -
                             (a.value - o.value) * Rational(static_cast<long>(b.index - o.index));
            if (cross > 0) break;
            hull.pop_back();
        }
        hull.push_back(std::move(b));
    }
    for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
        auto dx = static_cast<long>(hull[k + 1].index - hull[k].index);
        Rational s = (hull[k].value - hull[k + 1].value) / dx;
        s.canonicalize();
        np.segments.push_back({s, static_cast<unsigned>(dx)});
    }
    return np;
}

unsigned nu(const Poly& p, const Element& s) {
    NewtonPolygon np = newton_polygon(p);
    p.field().require(s);
    const auto& v = finite(s);
    if (!v) return static_cast<unsigned>(np.inf_prefix);
    for (const auto& seg : np.segments)
        if (seg.s == *v) return seg.length;
    return 0;
}

std::vector<Element> tropical_roots(const Poly& p) {
    NewtonPolygon np = newton_polygon(p);
    const Hyperfield& t = p.field();
    std::vector<Element> roots;
    for (const auto& seg : np.segments)
        for (unsigned k = 0; k < seg.length; ++k) roots.push_back(t.tropical_value(seg.s));
    for (std::size_t k = 0; k < np.inf_prefix; ++k) roots.push_back(t.tropical_inf());
    std::sort(roots.begin(), roots.end());
    return roots;
}

Rational eval_function(const Poly& p, const Rational& b) {
    require_tropical(p);
    std::optional<Rational> best;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i)
        if (const auto& v = finite(p.coeffs()[i])) {
            Rational x = *v + b * static_cast<long>(i);
            if (!best || x < *best) best = x;
        }
    return *best;
}

std::vector<Element> elementary_symmetric(const std::vector<Element>& roots) {
    Hyperfield t = Hyperfield::tropical();
    std::vector<Element> sorted = roots;
    for (const auto& r : sorted) t.require(r);
    std::sort(sorted.begin(), sorted.end());
    std::vector<Element> s = {t.one()};
    for (const auto& r : sorted) s.push_back(t.mul(s.back(), r));
    return s;
}

Poly canonical_expansion(const std::vector<Element>& roots) {
    Hyperfield t = Hyperfield::tropical();
    auto s = elementary_symmetric(roots);
    std::vector<Element> c(s.rbegin(), s.rend());
    return Poly(t, std::move(c));
}

Poly make_monic(const Poly& p) {
    require_tropical(p);
    const Hyperfield& t = p.field();
    Element scale = t.inv(p.leading());
    std::vector<Element> c;
    for (const auto& x : p.coeffs()) c.push_back(t.mul(x, scale));
    return Poly(t, std::move(c));
}

bool in_product(const Poly& p, const std::vector<Element>& roots) {
    require_monic(p, roots);
    std::vector<Element> a = roots;
    std::sort(a.begin(), a.end());
    auto s = elementary_symmetric(a);
    const std::size_t n = a.size();
    for (std::size_t i = 1; i <= n; ++i) {
        std::optional<Rational> c = finite(p.coeff(n - i));
        const auto& si = finite(s[i]);
        if (!si) {
            if (c) return false;  // every i-fold product is inf
            continue;
        }
        bool unique = i == n || a[i - 1] < a[i];
        if (unique ? (!c || *c != *si) : (c && *c < *si)) return false;
    }
    return true;
}

std::vector<Rational> functional_sample(const Poly& p, const std::vector<Element>& roots) {
    std::vector<Rational> pts;
    for (const auto& r : roots)
        if (const auto& v = finite(r)) pts.push_back(*v);
    const auto& c = p.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = i + 1; j < c.size(); ++j)
            if (finite(c[i]) && finite(c[j])) {
                Rational b = (*finite(c[i]) - *finite(c[j])) / static_cast<long>(j - i);
                b.canonicalize();
                pts.push_back(b);
            }
    if (pts.empty()) pts.emplace_back(0);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    std::vector<Rational> out = {pts.front() - 1};
    for (std::size_t k = 0; k < pts.size(); ++k) {
        out.push_back(pts[k]);
        if (k + 1 < pts.size()) out.push_back((pts[k] + pts[k + 1]) / 2);
    }
    out.push_back(pts.back() + 1);
    return out;
}

bool functional_equiv(const Poly& p, const std::vector<Element>& roots) {
    require_monic(p, roots);
    for (const auto& b : functional_sample(p, roots)) {
        Rational rhs = 0;
        for (const auto& r : roots) {
            const auto& v = finite(r);
            rhs += v && *v < b ? *v : b;
        }
        if (eval_function(p, b) != rhs) return false;
    }
    return true;
}

std::optional<Poly> divide_linear(const Poly& p, const Element& s) {
    require_tropical(p);
    const Hyperfield& t = p.field();
    t.require(s);
    const auto& c = p.coeffs();
    const std::size_t n = c.size() - 1;
    if (n == 0) return std::nullopt;
    if (t.is_zero(s)) {
        if (!t.is_zero(c[0])) return std::nullopt;
        return Poly(t, std::vector<Element>(c.begin() + 1, c.end()));
    }
    // D[i]: admissible values of d_i
    std::vector<HyperSet> D;
    D.reserve(n);
    D.push_back(t.singleton(c[n]));
    for (std::size_t i = n - 1; i >= 1; --i) D.push_back(t.add_to_set(t.scale(s, D.back()), c[i]));
    std::reverse(D.begin(), D.end());

    std::vector<Element> d(n, t.zero());
    d[0] = t.mul(c[0], t.inv(s));
    if (!D[0].contains(d[0])) return std::nullopt;
    const Element minus_s = t.inv(s);
    for (std::size_t j = 1; j < n; ++j) {
        // c_j ∈ (s + d_j) ⊞ d_{j-1}  <=>  d_j ∈ (c_j ⊞ d_{j-1}) - s
        auto pick = least_common(t, t.scale(minus_s, t.add(c[j], d[j - 1])), D[j]);
        if (!pick) throw std::logic_error("admissible quotient coefficients do not connect");
        d[j] = *pick;
    }
    Poly q(t, std::move(d));
    if (!in_linear_product(p, s, q)) throw std::logic_error("constructed tropical quotient fails the membership check");
    return q;
}

MultReport mult_tropical(const Poly& p, const Element& s) {
    MultReport r{s, nu(p, s), MultMethod::newton_polygon, {}};
    Poly cur = p;
    for (unsigned k = 0; k < r.multiplicity; ++k) {
        auto q = divide_linear(cur, s);
        if (!q) throw std::logic_error("tropical root without a linear quotient");
        r.witness.push_back(*q);
        cur = *q;
    }
    return r;
}

Poly valuation_image(const Poly& p, std::uint64_t prime) {
    RatPoly rp = to_ratpoly(p);
    Hyperfield t = Hyperfield::tropical();
    std::vector<Element> c;
    for (const auto& x : rp.coeffs()) c.push_back(padic_valuation(x, prime));
    return Poly(t, std::move(c));
}

NewtonRuleReport newton_rule_verify(const Poly& p, std::uint64_t prime, const std::optional<std::vector<Rational>>& split_hint) {
    RatPoly rp = to_ratpoly(p);
    if (rp.is_zero()) throw DomainError("Newton rule check of the zero polynomial");
    NewtonRuleReport r;
    r.prime = prime;
    r.degree = static_cast<unsigned>(rp.degree());
    Poly image = valuation_image(p, prime);
    r.polygon = newton_polygon(image);
    Hyperfield t = Hyperfield::tropical();

    std::map<Element, unsigned> hinted;
    if (split_hint) {
        auto [quo, rem] = divmod(rp, RatPoly::from_roots(*split_hint));
        if (!rem.is_zero()) throw DomainError("split hint roots do not divide the polynomial");
        r.split = quo.degree() == 0;
        for (const auto& x : *split_hint) ++hinted[padic_valuation(x, prime)];
    }
    auto add_check = [&](const Element& s, unsigned nu_s) {
        auto it = hinted.find(s);
        unsigned roots = it == hinted.end() ? 0 : it->second;
        if (it != hinted.end()) hinted.erase(it);
        r.slopes.push_back({s, nu_s, roots});
        r.nu_total += nu_s;
    };
    for (const auto& seg : r.polygon.segments) add_check(t.tropical_value(seg.s), seg.length);
    if (r.polygon.inf_prefix > 0 || hinted.count(t.tropical_inf()))
        add_check(t.tropical_inf(), static_cast<unsigned>(r.polygon.inf_prefix));
    // valuations that match no slope at all
    for (const auto& [s, count] : hinted) r.slopes.push_back({s, 0, count});

    r.passed = std::all_of(r.slopes.begin(), r.slopes.end(), [&](const SlopeCheck& c) {
        return r.split ? c.roots == c.nu : c.roots <= c.nu;
    });
    if (r.nu_total != r.degree) r.passed = false;
    return r;
}

std::string plot_data(const NewtonPolygon& polygon) {
    std::string out;
    for (std::size_t k = 0; k + 1 < polygon.vertices.size(); ++k) {
        if (k) out += "\n";
        for (const auto* v : {&polygon.vertices[k], &polygon.vertices[k + 1]})
            out += std::to_string(v->index) + " " + to_string(v->value) + "\n";
    }
    return out;
}

}  // namespace hyperpoly
