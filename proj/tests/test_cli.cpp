#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "hyperpoly/text.hpp"

using namespace hyperpoly;
using Json = nlohmann::ordered_json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string read_golden(const std::string& name) {
    std::ifstream file(std::string(GOLDEN_DIR) + "/" + name);
    REQUIRE(file);
    std::stringstream s;
    s << file.rdbuf();
    return s.str();
}

// Every polynomial string in a JSON document must parse back to itself.
void check_round_trip(const Hyperfield& f, const Json& j, const std::string& key = "") {
    static const std::vector<std::string> poly_keys = {"coeffs", "quotients", "products", "factors", "witness",
                                                       "monic", "canonical", "sign_image", "valuations"};
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) check_round_trip(f, v, k);
    } else if (j.is_array()) {
        for (const auto& v : j) check_round_trip(f, v, key);
    } else if (j.is_string() && std::find(poly_keys.begin(), poly_keys.end(), key) != poly_keys.end()) {
        Hyperfield g = key == "sign_image" ? Hyperfield::sign() : key == "valuations" ? Hyperfield::tropical() : f;
        const auto text = j.get<std::string>();
        CHECK(format_poly(parse_poly(g, text)) == text);
    }
}

}  // namespace

TEST_CASE("golden JSON output") {
    struct Case {
        std::string golden;
        std::string field;
        std::vector<std::string> args;
    };
    const std::vector<Case> cases = {
        {"mult_sign.json", "S", {"mult", "--field", "S", "--poly", "1,-1,-1,1", "--at", "1"}},
        {"newton_tropical.json", "T", {"newton", "--field", "T", "--poly", "2,0,1,inf,-1,0"}},
        {"hyperprod_left.json", "S", {"hyperprod", "--field", "S", "--polys", "(-1,1);(-1,1);(1,1)", "--assoc", "((1 2) 3)"}},
        {"hyperprod_right.json", "S", {"hyperprod", "--field", "S", "--polys", "(-1,1);(-1,1);(1,1)", "--assoc", "(1 (2 3))"}},
        {"quotients_sign.json", "S", {"quotients", "--field", "S", "--poly", "1,-1,-1,1", "--at", "1"}},
        {"descartes.json", "Q", {"descartes", "--poly", "6,-7,0,1", "--hint", "1,2,-3"}},
        {"newton_padic.json", "Q", {"newton", "--field", "Q", "--prime", "2", "--poly", "-8,14,-7,1", "--hint", "1,2,4"}},
        {"axioms_quotient.json", "quot:7:2", {"axioms", "--field", "quot:7:2"}},
        {"roots_weak_sign.json", "W", {"roots", "--field", "W", "--poly", "1,1,1"}},
        {"factor_tropical.json", "T", {"factor", "--field", "T", "--poly", "3,2,1,1"}},
    };
    for (const auto& c : cases) {
        CAPTURE(c.golden);
        std::vector<std::string> args = {"--format", "json"};
        args.insert(args.end(), c.args.begin(), c.args.end());
        Result r = run(args);
        CHECK(r.code == cli::kOk);
        CHECK(r.out == read_golden(c.golden));
        check_round_trip(parse_hyperfield(c.field), Json::parse(r.out));
    }
}

TEST_CASE("verify uses the seed from the environment") {
    ::setenv("HYPERPOLY_SEED", "7", 1);
    Result r = run({"--format", "json", "verify", "--kind", "tropical", "--count", "50"});
    CHECK(r.code == cli::kOk);
    CHECK(r.out == read_golden("verify_tropical.json"));
    Result serial = run({"--format", "json", "verify", "--kind", "tropical", "--count", "50", "--exec", "serial"});
    CHECK(serial.out == r.out);
    ::setenv("HYPERPOLY_SEED", "seven", 1);
    CHECK(run({"verify", "--kind", "sign"}).code == cli::kParseError);
    ::unsetenv("HYPERPOLY_SEED");
}

TEST_CASE("text output") {
    Result r = run({"mult", "--field", "S", "--poly", "1,-1,-1,1", "--at", "1"});
    CHECK(r.code == cli::kOk);
    CHECK(r.out.starts_with("mult = 2\n"));
    CHECK(r.out.find("q2 = 1,1") != std::string::npos);
    r = run({"newton", "--field", "T", "--poly", "2,0,1,inf,-1,0"});
    CHECK(r.out.find("segment s = 1/3, length 3") != std::string::npos);
    r = run({"hyperprod", "--field", "S", "--polys", "(-1,1);(-1,1);(1,1)", "--assoc", "((1 2) 3)"});
    CHECK(r.out.starts_with("9 polynomials"));
    r = run({"--help"});
    CHECK(r.code == cli::kOk);
    CHECK(r.out.find("ascending order, c_0 first") != std::string::npos);
}

TEST_CASE("plot data file") {
    const std::string path = "newton_plot_test.txt";
    Result r = run({"newton", "--field", "T", "--poly", "2,0,1,inf,-1,0", "--plot", path});
    CHECK(r.code == cli::kOk);
    std::ifstream file(path);
    std::stringstream s;
    s << file.rdbuf();
    CHECK(s.str() == "0 2\n1 0\n\n1 0\n4 -1\n\n4 -1\n5 0\n");
    std::remove(path.c_str());
}

TEST_CASE("exit codes") {
    CHECK(run({"roots", "--field", "X", "--poly", "1"}).code == cli::kParseError);
    CHECK(run({"roots", "--field", "S", "--poly", "1,2"}).code == cli::kParseError);
    CHECK(run({"roots", "--field", "S"}).code == cli::kParseError);
    CHECK(run({"frobnicate"}).code == cli::kParseError);
    CHECK(run({"--format", "xml", "roots", "--poly", "1"}).code == cli::kParseError);
    CHECK(run({"roots", "--field", "Q", "--poly", "1,2"}).code == cli::kDomainError);
    CHECK(run({"newton", "--field", "S", "--poly", "1,1"}).code == cli::kDomainError);
    CHECK(run({"newton", "--field", "Q", "--poly", "1,1"}).code == cli::kDomainError);
    CHECK(run({"descartes", "--field", "T", "--poly", "1,1"}).code == cli::kDomainError);
    CHECK(run({"descartes", "--poly", "6,-7,0,1", "--hint", "1,2,3"}).code == cli::kDomainError);
    CHECK(run({"mult", "--field", "P", "--poly", "1,1,1", "--at", "e:1/2"}).code == cli::kDomainError);
    CHECK(run({"mult", "--field", "W", "--poly", "1,1,1", "--at", "1", "--method", "direct"}).code == cli::kDomainError);
    CHECK(run({"hyperprod", "--field", "S", "--polys", "1,1;1,1", "--assoc", "((1 2) 3)"}).code == cli::kDomainError);
    CHECK(run({"hyperprod", "--field", "S", "--polys", "1,1;1,1", "--assoc", "((1 2)"}).code == cli::kParseError);
    CHECK(run({"axioms", "--field", "Fp:9"}).code == cli::kDomainError);
}
