#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hyperpoly/axioms.hpp"
#include "hyperpoly/descartes.hpp"
#include "hyperpoly/errors.hpp"
#include "hyperpoly/rational_poly.hpp"
#include "hyperpoly/sweep.hpp"
#include "hyperpoly/text.hpp"
#include "hyperpoly/tropical.hpp"

namespace hyperpoly::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
    std::string field = "Q";
    std::string poly;
    std::string at;
    std::string polys;
    std::string assoc;
    std::string hint;
    std::string plot;
    std::string kind = "all";
    std::string method = "recursive";
    std::string exec = "parallel";
    std::string format = "text";
    std::uint64_t prime = 0;
    std::size_t count = 0;
};

struct Output {
    Json json;
    std::string text;
    bool failed = false;  // a verification ran and did not pass
};

Exec exec_of(const Options& o) { return o.exec == "serial" ? Exec::serial : Exec::parallel; }

Poly require_poly(const Hyperfield& f, const Options& o) {
    if (o.poly.empty()) throw ParseError("--poly is required");
    return parse_poly(f, o.poly);
}

Element require_at(const Hyperfield& f, const Options& o) {
    if (o.at.empty()) throw ParseError("--at is required");
    return parse_element(f, o.at);
}

std::vector<std::string> poly_strings(const std::vector<Poly>& ps) {
    std::vector<std::string> out;
    for (const auto& p : ps) out.push_back(format_poly(p));
    return out;
}

std::string elements_string(const Hyperfield& f, const std::vector<Element>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + format_element(f, xs[i]);
    return out;
}

Json poly_json(const Poly& p) { return Json{{"coeffs", format_poly(p)}, {"pretty", pretty_poly(p)}}; }

std::string poly_line(const Poly& p) { return format_poly(p) + "    [" + pretty_poly(p) + "]"; }

Output do_axioms(const Options& o) {
    Hyperfield f = parse_hyperfield(o.field);
    AxiomReport r = check_axioms(f, exec_of(o));
    Output out;
    out.json["field"] = r.field;
    out.json["exhaustive"] = r.exhaustive;
    out.json["checks"] = Json::array();
    std::ostringstream text;
    text << "axioms for " << r.field << (r.exhaustive ? " (exhaustive)" : " (sampled)") << "\n";
    for (const auto& c : r.checks) {
        Json j{{"axiom", c.axiom}, {"passed", c.passed}, {"cases", c.cases}};
        if (!c.passed) {
            Json w = Json::array();
            for (const auto& x : c.witness) w.push_back(format_element(f, x));
            j["witness"] = w;
        }
        out.json["checks"].push_back(j);
        text << (c.passed ? "PASS " : "FAIL ") << c.axiom << " (" << c.cases << " cases)";
        if (!c.passed) text << ": witness " << elements_string(f, c.witness);
        text << "\n";
    }
    out.json["notes"] = r.notes;
    for (const auto& n : r.notes) text << "note: " << n << "\n";
    out.json["passed"] = r.all_passed();
    out.failed = !r.all_passed();
    out.text = text.str();
    return out;
}

Output do_roots(const Options& o) {
    Hyperfield f = parse_hyperfield(o.field);
    Poly p = require_poly(f, o);
    if (p.is_zero()) throw DomainError("every element is a root of the zero polynomial");
    Output out;
    out.json["field"] = f.name();
    out.json["poly"] = poly_json(p);
    std::vector<std::pair<Element, unsigned>> roots;
    if (f.kind() == Kind::tropical) {
        for (const auto& r : tropical_roots(p)) {
            if (!roots.empty() && roots.back().first == r) ++roots.back().second;
            else roots.emplace_back(r, 1);
        }
    } else {
        if (!f.is_enumerable())
            throw NonEnumerable("roots needs a finite carrier or T; " + f.name() + " is not enumerated (use mult --at)");
        MultiplicityCache cache;
        for (const auto& a : f.carrier())
            if (is_root(p, a)) roots.emplace_back(a, multiplicity(p, a, &cache).multiplicity);
    }
    std::ostringstream text;
    text << "p = " << poly_line(p) << "\n";
    out.json["roots"] = Json::array();
    unsigned total = 0;
    for (const auto& [a, m] : roots) {
        out.json["roots"].push_back(Json{{"element", format_element(f, a)}, {"multiplicity", m}});
        text << "root " << format_element(f, a) << " multiplicity " << m << "\n";
        total += m;
    }
    out.json["total_multiplicity"] = total;
    out.json["degree"] = p.degree();
    text << "total multiplicity " << total << ", degree " << p.degree() << "\n";
    out.text = text.str();
    return out;
}

Output do_mult(const Options& o) {
    Hyperfield f = parse_hyperfield(o.field);
    Poly p = require_poly(f, o);
    Element a = require_at(f, o);
    auto compute = [&] {
        if (o.method != "direct") return multiplicity(p, a);
        if (f.kind() == Kind::sign) return mult_sign_direct(p, a);
        if (f.kind() == Kind::tropical) return mult_tropical(p, a);
        throw DomainError("--method direct needs S or T");
    };
    MultReport r = compute();
    Output out;
    out.json["field"] = f.name();
    out.json["poly"] = poly_json(p);
    out.json["at"] = format_element(f, a);
    out.json["multiplicity"] = r.multiplicity;
    out.json["method"] = std::string(to_string(r.method));
    out.json["witness"] = poly_strings(r.witness);
    out.json["witness_valid"] = witness_chain_valid(p, r);
    std::ostringstream text;
    text << "mult = " << r.multiplicity << "\n";
    text << "method " << to_string(r.method) << "\n";
    for (std::size_t k = 0; k < r.witness.size(); ++k) text << "q" << k + 1 << " = " << poly_line(r.witness[k]) << "\n";
    out.text = text.str();
    return out;
}

Output do_quotients(const Options& o) {
    Hyperfield f = parse_hyperfield(o.field);
    Poly p = require_poly(f, o);
    Element a = require_at(f, o);
    auto qs = quotients(p, a);
    Output out;
    out.json["field"] = f.name();
    out.json["poly"] = poly_json(p);
    out.json["at"] = format_element(f, a);
    out.json["quotients"] = poly_strings(qs);
    std::ostringstream text;
    text << qs.size() << " quotients\n";
    for (const auto& q : qs) text << poly_line(q) << "\n";
    out.text = text.str();
    return out;
}

std::optional<std::vector<Rational>> hint_of(const Options& o) {
    if (o.hint.empty()) return std::nullopt;
    return parse_rational_list(o.hint);
}

Output do_descartes(const Options& o) {
    Hyperfield f = parse_hyperfield(o.field);
    if (f.kind() != Kind::field_q) throw DomainError("descartes works over Q, got " + f.name());
    Poly p = require_poly(f, o);
    DescartesReport r = verify_descartes(p, hint_of(o));
    Poly s = sign_image(p);
    Output out;
    out.json["poly"] = poly_json(p);
    out.json["sign_image"] = format_poly(s);
    out.json["sign_changes"] = {{"positive", r.bound.positive}, {"negative", r.bound.negative}};
    out.json["roots"] = {{"positive", r.positive_roots}, {"negative", r.negative_roots}, {"zero", r.zero_roots}};
    out.json["split"] = r.split;
    out.json["passed"] = r.passed;
    out.failed = !r.passed;
    std::ostringstream text;
    text << "p = " << poly_line(p) << "\n";
    text << "sign image " << format_poly(s) << "\n";
    text << "positive roots " << r.positive_roots << " <= sign changes " << r.bound.positive << "\n";
    text << "negative roots " << r.negative_roots << " <= sign changes " << r.bound.negative << "\n";
    text << "zero roots " << r.zero_roots << "\n";
    if (r.split) text << "split: equality required\n";
    text << (r.passed ? "PASS" : "FAIL") << "\n";
    out.text = text.str();
    return out;
}

Json polygon_json(const NewtonPolygon& np) {
    Json j;
    j["inf_prefix"] = np.inf_prefix;
    j["vertices"] = Json::array();
    for (const auto& v : np.vertices) j["vertices"].push_back(Json{{"x", v.index}, {"y", to_string(v.value)}});
    j["segments"] = Json::array();
    for (const auto& s : np.segments) j["segments"].push_back(Json{{"s", to_string(s.s)}, {"length", s.length}});
    return j;
}

void polygon_text(std::ostream& text, const NewtonPolygon& np) {
    if (np.inf_prefix) text << "inf prefix " << np.inf_prefix << "\n";
    for (const auto& v : np.vertices) text << "vertex (" << v.index << ", " << to_string(v.value) << ")\n";
    for (const auto& s : np.segments) text << "segment s = " << to_string(s.s) << ", length " << s.length << "\n";
}

void write_plot(const Options& o, const NewtonPolygon& np) {
    if (o.plot.empty()) return;
    std::ofstream file(o.plot);
    if (!file) throw DomainError("cannot write plot data to " + o.plot);
    file << plot_data(np);
}

Output do_newton(const Options& o) {
    Hyperfield f = parse_hyperfield(o.field);
    Poly p = require_poly(f, o);
    Output out;
    std::ostringstream text;
    if (f.kind() == Kind::tropical) {
        if (o.prime) throw DomainError("--prime applies to polynomials over Q");
        NewtonPolygon np = newton_polygon(p);
        out.json["poly"] = poly_json(p);
        out.json["polygon"] = polygon_json(np);
        Json roots = Json::array();
        for (const auto& r : tropical_roots(p)) roots.push_back(format_element(f, r));
        out.json["roots"] = roots;
        polygon_text(text, np);
        text << "roots " << elements_string(f, tropical_roots(p)) << "\n";
        write_plot(o, np);
    } else if (f.kind() == Kind::field_q) {
        if (!o.prime) throw DomainError("newton over Q needs --prime");
        NewtonRuleReport r = newton_rule_verify(p, o.prime, hint_of(o));
        Hyperfield t = Hyperfield::tropical();
        Poly image = valuation_image(p, o.prime);
        out.json["poly"] = poly_json(p);
        out.json["prime"] = o.prime;
        out.json["valuations"] = format_poly(image);
        out.json["polygon"] = polygon_json(r.polygon);
        out.json["slopes"] = Json::array();
        text << "valuations " << format_poly(image) << "\n";
        polygon_text(text, r.polygon);
        for (const auto& c : r.slopes) {
            out.json["slopes"].push_back(Json{{"s", format_element(t, c.s)}, {"nu", c.nu}, {"roots", c.roots}});
            text << "slope " << format_element(t, c.s) << ": nu " << c.nu << ", hinted roots " << c.roots << "\n";
        }
        out.json["degree"] = r.degree;
        out.json["nu_total"] = r.nu_total;
        out.json["split"] = r.split;
        out.json["passed"] = r.passed;
        out.failed = !r.passed;
        text << "sum of nu " << r.nu_total << ", degree " << r.degree << "\n";
        text << (r.passed ? "PASS" : "FAIL") << "\n";
        write_plot(o, r.polygon);
    } else {
        throw DomainError("newton needs T, or Q with --prime; got " + f.name());
    }
    out.text = text.str();
    return out;
}

Output do_factor(const Options& o) {
    Hyperfield f = parse_hyperfield(o.field);
    Poly p = require_poly(f, o);
    Output out;
    std::ostringstream text;
    out.json["poly"] = poly_json(p);
    if (f.kind() == Kind::tropical) {
        auto roots = tropical_roots(p);
        Poly monic = make_monic(p);
        bool member = in_product(monic, roots);
        std::string product = format_element(f, p.leading());
        for (const auto& r : roots) product += " ⊙ (T ⊞ " + format_element(f, r) + ")";
        Json rj = Json::array();
        for (const auto& r : roots) rj.push_back(format_element(f, r));
        out.json["leading"] = format_element(f, p.leading());
        out.json["roots"] = rj;
        out.json["monic"] = format_poly(monic);
        out.json["canonical"] = format_poly(canonical_expansion(roots));
        out.json["member"] = member;
        out.json["functional"] = functional_equiv(monic, roots);
        text << "p = " << product << "\n";
        text << "monic " << format_poly(monic) << (member ? " lies" : " does not lie") << " in the product\n";
        text << "canonical " << format_poly(canonical_expansion(roots)) << "\n";
        out.failed = !member;
    } else if (f.kind() == Kind::field_q) {
        RatPoly rp = to_ratpoly(p);
        if (rp.is_zero()) throw DomainError("cannot factor the zero polynomial");
        auto parts = squarefree_decomposition(rp);
        out.json["leading"] = to_string(rp.leading());
        out.json["squarefree"] = Json::array();
        text << "p = " << to_string(rp.leading());
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (parts[i].degree() == 0) continue;
            Poly part = to_poly(parts[i]);
            out.json["squarefree"].push_back(Json{{"power", i + 1}, {"factor", format_poly(part)}});
            text << " * (" << pretty_poly(part) << ")" << (i ? "^" + std::to_string(i + 1) : "");
        }
        text << "\n";
    } else {
        throw DomainError("factor needs T or Q, got " + f.name());
    }
    out.text = text.str();
    return out;
}

Output do_hyperprod(const Options& o) {
    Hyperfield f = parse_hyperfield(o.field);
    if (o.polys.empty()) throw ParseError("--polys is required");
    auto factors = parse_poly_list(f, o.polys);
    AssocTree tree = o.assoc.empty() ? AssocTree::left_fold(factors.size()) : AssocTree::parse(o.assoc);
    auto products = hyper_product(factors, tree);
    Output out;
    out.json["field"] = f.name();
    out.json["factors"] = poly_strings(factors);
    out.json["assoc"] = tree.to_string();
    out.json["count"] = products.size();
    out.json["products"] = poly_strings(products);
    std::ostringstream text;
    text << products.size() << " polynomials in " << tree.to_string() << "\n";
    for (const auto& q : products) text << poly_line(q) << "\n";
    out.text = text.str();
    return out;
}

std::uint64_t seed_from_env() {
    const char* s = std::getenv("HYPERPOLY_SEED");
    if (!s || !*s) return 1;
    std::string v(s);
    if (!std::all_of(v.begin(), v.end(), [](char c) { return c >= '0' && c <= '9'; }) || v.size() > 19)
        throw ParseError("HYPERPOLY_SEED must be a non-negative integer, got '" + v + "'");
    return std::stoull(v);
}

Output do_verify(const Options& o) {
    const std::uint64_t seed = seed_from_env();
    const Exec exec = exec_of(o);
    auto n = [&](std::size_t d) { return o.count ? o.count : d; };
    std::vector<SweepResult> results;
    auto want = [&](const char* k) { return o.kind == "all" || o.kind == k; };
    if (want("sign")) results.push_back(sweep_sign_multiplicity(6, exec));
    if (want("roots"))
        for (const char* spec : {"S", "K", "W", "quot:7:2"}) results.push_back(sweep_root_quotient(parse_hyperfield(spec), 4, exec));
    if (want("krasner")) results.push_back(sweep_krasner(n(20), 8, seed, exec));
    if (want("descartes")) results.push_back(sweep_descartes_split(n(200), 6, seed, exec));
    if (want("newton")) results.push_back(sweep_newton_split(n(100), 6, {2, 3}, seed, exec));
    if (want("tropical")) {
        results.push_back(sweep_tropical_roundtrip(n(500), 6, seed, exec));
        results.push_back(sweep_tropical_negatives(n(200), 6, seed, exec));
    }
    Output out;
    out.json["seed"] = seed;
    out.json["sweeps"] = Json::array();
    std::ostringstream text;
    for (const auto& r : results) {
        Json j{{"name", r.name}, {"cases", r.cases}, {"failures", r.failures}, {"passed", r.passed()}};
        if (!r.passed()) j["witness"] = r.witness;
        out.json["sweeps"].push_back(j);
        text << (r.passed() ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases)";
        if (!r.passed()) text << ": " << r.failures << " failures, first " << r.witness;
        text << "\n";
        out.failed = out.failed || !r.passed();
    }
    out.json["passed"] = !out.failed;
    out.text = text.str();
    return out;
}

const char* kFooter =
    "Coefficients are listed in ascending order, c_0 first: \"1,-1,-1,1\" is T^3 - T^2 - T + 1.\n"
    "Hyperfields: Q, Fp:<p>, S, K, W, P, T, quot:<p>:<g1,g2,...>.\n"
    "Elements: rationals \"a/b\"; T uses \"inf\"; P uses \"0\", \"1\", \"-1\" or \"e:<q>\" for e^(i pi q).\n"
    "Exit status: 0 ok, 1 domain error or failed check, 2 parse error.";

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Polynomials over hyperfields: roots, multiplicities, Descartes and Newton polygon checks.", "hyperpoly"};
    app.footer(kFooter);
    app.require_subcommand(1, 1);
    Options o;
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();

    auto field = [&](CLI::App* c) { c->add_option("--field", o.field, "Hyperfield spec")->capture_default_str(); };
    auto poly = [&](CLI::App* c) { c->add_option("--poly", o.poly, "Coefficients c_0,c_1,...")->required(); };
    auto exec = [&](CLI::App* c) {
        c->add_option("--exec", o.exec, "serial or parallel kernels")->check(CLI::IsMember({"serial", "parallel"}))->capture_default_str();
    };

    std::map<std::string, Output (*)(const Options&)> verbs;
    auto* axioms = app.add_subcommand("axioms", "Check the hyperfield axioms");
    field(axioms);
    exec(axioms);
    verbs["axioms"] = do_axioms;

    auto* roots = app.add_subcommand("roots", "List roots with multiplicities");
    field(roots);
    poly(roots);
    verbs["roots"] = do_roots;

    auto* mult = app.add_subcommand("mult", "Multiplicity of a root, with a witness chain");
    field(mult);
    poly(mult);
    mult->add_option("--at", o.at, "The element")->required();
    mult->add_option("--method", o.method, "recursive, or direct (sign changes on S, Newton polygon on T)")
        ->check(CLI::IsMember({"recursive", "direct"}))->capture_default_str();
    verbs["mult"] = do_mult;

    auto* quot = app.add_subcommand("quotients", "All q with p in (T - a) q");
    field(quot);
    poly(quot);
    quot->add_option("--at", o.at, "The element")->required();
    verbs["quotients"] = do_quotients;

    auto* desc = app.add_subcommand("descartes", "Compare real root counts with sign changes");
    field(desc);
    poly(desc);
    desc->add_option("--hint", o.hint, "All roots, comma-separated; requires equality");
    verbs["descartes"] = do_descartes;

    auto* newton = app.add_subcommand("newton", "Newton polygon over T, or the p-adic Newton rule over Q");
    field(newton);
    poly(newton);
    newton->add_option("--prime", o.prime, "Prime for the valuation (Q only)");
    newton->add_option("--hint", o.hint, "Known roots, comma-separated (Q only)");
    newton->add_option("--plot", o.plot, "Write hull edges as \"x y\" lines to this file");
    verbs["newton"] = do_newton;

    auto* factor = app.add_subcommand("factor", "Linear factors over T, squarefree parts over Q");
    field(factor);
    poly(factor);
    verbs["factor"] = do_factor;

    auto* prod = app.add_subcommand("hyperprod", "Hyperproduct of several polynomials");
    field(prod);
    prod->add_option("--polys", o.polys, "Factors separated by ';'")->required();
    prod->add_option("--assoc", o.assoc, "Association such as \"((1 2) 3)\"; default left to right");
    verbs["hyperprod"] = do_hyperprod;

    auto* verify = app.add_subcommand("verify", "Run the batch consistency checks (seed from HYPERPOLY_SEED)");
    verify->add_option("--kind", o.kind, "Which batch")
        ->check(CLI::IsMember({"all", "sign", "roots", "krasner", "descartes", "newton", "tropical"}))
        ->capture_default_str();
    verify->add_option("--count", o.count, "Cases per random batch");
    exec(verify);
    verbs["verify"] = do_verify;

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kParseError;
    }

    try {
        const std::string verb = app.get_subcommands().front()->get_name();
        Output result = verbs.at(verb)(o);
        if (o.format == "json") {
            Json doc{{"command", verb}};
            doc.update(result.json);
            out << doc.dump(2) << "\n";
        } else {
            out << result.text;
        }
        return result.failed ? kDomainError : kOk;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kParseError;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << "\n";
        return kDomainError;
    }
}

}  // namespace hyperpoly::cli
