#include "hyperpoly/text.hpp"

#include <algorithm>
#include <cctype>

#include "hyperpoly/errors.hpp"
#include "hyperpoly/instances.hpp"

namespace hyperpoly {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        auto pos = s.find(sep, start);
        parts.push_back(trim(s.substr(start, pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

std::string_view strip_parens(std::string_view s) {
    s = trim(s);
    if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = trim(s.substr(1, s.size() - 2));
    return s;
}

std::uint64_t parse_unsigned(std::string_view s, const char* what) {
    s = trim(s);
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw ParseError(std::string("expected ") + what + ", got '" + std::string(s) + "'");
    if (s.size() > 18) throw ParseError(std::string(what) + " is too large");
    return std::stoull(std::string(s));
}

std::int64_t parse_integer(std::string_view s) {
    Rational q = parse_rational(trim(s));
    if (q.get_den() != 1 || !q.get_num().fits_slong_p()) throw ParseError("expected an integer, got '" + std::string(s) + "'");
    return q.get_num().get_si();
}

}  // namespace

Hyperfield parse_hyperfield(std::string_view spec) {
    spec = trim(spec);
    if (spec == "Q") return Hyperfield::rationals();
    if (spec == "S") return Hyperfield::sign();
    if (spec == "K") return Hyperfield::krasner();
    if (spec == "W") return Hyperfield::weak_sign();
    if (spec == "P") return Hyperfield::phase();
    if (spec == "T") return Hyperfield::tropical();
    if (spec.starts_with("Fp:")) return Hyperfield::prime_field(parse_unsigned(spec.substr(3), "a prime"));
    if (spec.starts_with("quot:")) {
        std::string_view rest = spec.substr(5);
        auto colon = rest.find(':');
        if (colon == std::string_view::npos) throw ParseError("quotient spec must look like quot:<p>:<g1,g2,...>");
        std::uint64_t p = parse_unsigned(rest.substr(0, colon), "a prime");
        std::vector<std::int64_t> gens;
        for (auto g : split(rest.substr(colon + 1), ',')) gens.push_back(parse_integer(g));
        return build_quotient(p, gens);
    }
    throw ParseError("unknown hyperfield '" + std::string(spec) + "' (expected Q, Fp:<p>, S, K, W, P, T or quot:<p>:<gens>)");
}

Element parse_element(const Hyperfield& f, std::string_view text) {
    text = trim(text);
    auto bad = [&] { return ParseError("'" + std::string(text) + "' is not an element of " + f.name()); };
    switch (f.kind()) {
        case Kind::field_q: return f.rational(parse_rational(text));
        case Kind::field_fp: return f.residue(parse_integer(text));
        case Kind::sign:
        case Kind::weak_sign:
            if (text == "0" || text == "1" || text == "-1") return f.sign_element(text == "0" ? 0 : (text == "1" ? 1 : -1));
            throw bad();
        case Kind::krasner:
            if (text == "0" || text == "1") return f.krasner_element(text == "1");
            throw bad();
        case Kind::tropical:
            if (text == "inf") return f.tropical_inf();
            return f.tropical_value(parse_rational(text));
        case Kind::phase:
            if (text == "0") return f.zero();
            if (text == "1") return f.phase_angle(0);
            if (text == "-1") return f.phase_angle(1);
            if (text.starts_with("e:")) return f.phase_angle(parse_rational(trim(text.substr(2))));
            throw bad();
        case Kind::quotient: {
            std::string_view r = text;
            if (r.size() >= 2 && r.front() == '[' && r.back() == ']') r = r.substr(1, r.size() - 2);
            return f.coset_of(parse_integer(r));
        }
    }
    throw bad();
}

std::string format_element(const Hyperfield& f, const Element& e) {
    f.require(e);
    switch (f.kind()) {
        case Kind::field_q: return to_string(e.as<Rational>());
        case Kind::field_fp: return std::to_string(e.as<Residue>().value);
        case Kind::sign:
        case Kind::weak_sign: return std::to_string(e.as<SignValue>().value);
        case Kind::krasner: return e.as<KrasnerBit>().one ? "1" : "0";
        case Kind::tropical: {
            const auto& v = e.as<TropicalValue>();
            return v.is_inf() ? "inf" : to_string(*v.finite);
        }
        case Kind::phase: {
            const auto& v = e.as<PhaseValue>();
            if (v.is_zero()) return "0";
            if (*v.angle == 0) return "1";
            if (*v.angle == 1) return "-1";
            return "e:" + to_string(*v.angle);
        }
        case Kind::quotient:
            return "[" + std::to_string(f.quotient_data()->representative[e.as<CosetIndex>().index]) + "]";
    }
    return "?";
}

std::string format_set(const Hyperfield& f, const HyperSet& s) {
    if (const auto* r = s.as_ray()) return "[" + to_string(r->min) + ", inf]";
    std::vector<std::string> items;
    if (const auto* fs = s.finite_elements()) {
        for (const auto& x : *fs) items.push_back(format_element(f, x));
    } else {
        const PhaseSet& ps = *s.as_phase();
        if (ps.contains_zero()) items.push_back("0");
        std::vector<std::pair<Rational, std::string>> parts;
        for (const auto& q : ps.points()) parts.emplace_back(q, format_element(f, f.phase_angle(q)));
        for (const auto& a : ps.arcs())
            parts.emplace_back(a.from, "arc(" + format_element(f, f.phase_angle(a.from)) + ", " +
                                           format_element(f, f.phase_angle(a.to)) + ")");
        std::stable_sort(parts.begin(), parts.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        for (auto& [q, text] : parts) items.push_back(std::move(text));
    }
    std::string out = "{";
    for (std::size_t i = 0; i < items.size(); ++i) out += (i ? ", " : "") + items[i];
    return out + "}";
}

Poly parse_poly(const Hyperfield& f, std::string_view text, bool* trimmed) {
    text = strip_parens(text);
    if (text.empty()) throw ParseError("empty polynomial");
    std::vector<Element> c;
    for (auto part : split(text, ',')) {
        if (part.empty()) throw ParseError("empty coefficient in '" + std::string(text) + "'");
        c.push_back(parse_element(f, part));
    }
    std::size_t given = c.size();
    Poly p(f, std::move(c));
    if (trimmed) *trimmed = p.coeffs().size() != given && !(p.is_zero() && given == 1);
    return p;
}

std::string format_poly(const Poly& p) {
    if (p.is_zero()) return format_element(p.field(), p.field().zero());
    std::string out;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) out += (i ? "," : "") + format_element(p.field(), p.coeffs()[i]);
    return out;
}

std::string pretty_poly(const Poly& p) {
    const Hyperfield& f = p.field();
    if (p.is_zero()) return "0";
    auto power = [](std::size_t k) -> std::string {
        if (k == 0) return "";
        return k == 1 ? "T" : "T^" + std::to_string(k);
    };
    const bool tropical = f.kind() == Kind::tropical;
    std::string out;
    for (std::size_t k = p.coeffs().size(); k-- > 0;) {
        const Element& c = p.coeffs()[k];
        if (f.is_zero(c)) continue;
        std::string term;
        bool negative = false;
        if (tropical) {
            std::string v = format_element(f, c);
            term = k == 0 ? v : (c == f.one() ? power(k) : "(" + v + ")" + power(k));
        } else if (c == f.one() && k > 0) {
            term = power(k);
        } else if (c == f.neg(f.one()) && c != f.one()) {
            negative = true;
            term = k == 0 ? "1" : power(k);
        } else {
            std::string v = format_element(f, c);
            if (f.kind() == Kind::field_q && c.as<Rational>() < 0) {
                negative = true;
                v = to_string(-c.as<Rational>());
            }
            if (k > 0 && v.find_first_of("/:-") != std::string::npos) v = "(" + v + ")";
            term = k == 0 ? v : v + power(k);
        }
        if (out.empty()) out = (negative ? "-" : "") + term;
        else out += (tropical ? " ⊞ " : (negative ? " - " : " + ")) + term;
    }
    return out;
}

std::vector<Poly> parse_poly_list(const Hyperfield& f, std::string_view text) {
    std::vector<Poly> out;
    for (auto part : split(text, ';')) out.push_back(parse_poly(f, part));
    return out;
}

std::vector<Rational> parse_rational_list(std::string_view text) {
    std::vector<Rational> out;
    text = strip_parens(text);
    if (text.empty()) return out;
    for (auto part : split(text, ',')) out.push_back(parse_rational(part));
    return out;
}

}  // namespace hyperpoly
