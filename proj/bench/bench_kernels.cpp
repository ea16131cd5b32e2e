// Times each batch kernel serially and with OpenMP, and checks that both
// runs produce the same result.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hyperpoly/axioms.hpp"
#include "hyperpoly/instances.hpp"
#include "hyperpoly/sweep.hpp"

using namespace hyperpoly;

namespace {

struct Kernel {
    std::string name;
    std::function<std::string(Exec)> run;  // returns a digest of the result
};

std::string digest(const SweepResult& r) {
    return std::to_string(r.cases) + "/" + std::to_string(r.failures) + "/" + r.witness;
}

std::string digest(const AxiomReport& r) {
    std::string out;
    for (const auto& c : r.checks) out += c.axiom + (c.passed ? "+" : "-") + std::to_string(c.witness.size()) + ";";
    return out;
}

double best_of(int repeat, const std::function<void()>& f) {
    double best = 0;
    for (int i = 0; i < repeat; ++i) {
        auto start = std::chrono::steady_clock::now();
        f();
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        if (i == 0 || ms < best) best = ms;
    }
    return best;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Serial versus OpenMP timings of the batch kernels"};
    int repeat = 3;
    unsigned scale = 1;
    app.add_option("--repeat", repeat, "Runs per kernel; the best time is reported")->capture_default_str();
    app.add_option("--scale", scale, "Multiplier for the random batch sizes")->capture_default_str();
    CLI11_PARSE(app, argc, argv);

    const std::uint64_t seed = 1;
    const std::vector<Kernel> kernels = {
        {"axioms F101 (table)", [](Exec e) { return digest(check_axioms(Hyperfield::prime_field(101), e)); }},
        {"axioms T (grid)", [](Exec e) { return digest(check_axioms(Hyperfield::tropical(), e)); }},
        {"axioms quot:31:5", [](Exec e) { return digest(check_axioms(build_quotient(31, {5}), e)); }},
        {"sign multiplicity deg 7", [](Exec e) { return digest(sweep_sign_multiplicity(7, e)); }},
        {"root quotients W deg 5", [](Exec e) { return digest(sweep_root_quotient(Hyperfield::weak_sign(), 5, e)); }},
        {"Krasner", [&](Exec e) { return digest(sweep_krasner(500 * scale, 10, seed, e)); }},
        {"Descartes split", [&](Exec e) { return digest(sweep_descartes_split(1000 * scale, 6, seed, e)); }},
        {"Newton split", [&](Exec e) { return digest(sweep_newton_split(1000 * scale, 6, {2, 3, 5}, seed, e)); }},
        {"tropical round-trip", [&](Exec e) { return digest(sweep_tropical_roundtrip(5000 * scale, 6, seed, e)); }},
    };

    std::printf("threads: %d\n", parallel_threads());
    std::printf("%-26s %12s %12s %8s  %s\n", "kernel", "serial ms", "parallel ms", "speedup", "results");
    int mismatches = 0;
    for (const auto& k : kernels) {
        std::string serial_digest, parallel_digest;
        double serial = best_of(repeat, [&] { serial_digest = k.run(Exec::serial); });
        double parallel = best_of(repeat, [&] { parallel_digest = k.run(Exec::parallel); });
        bool same = serial_digest == parallel_digest;
        mismatches += !same;
        std::printf("%-26s %12.2f %12.2f %7.2fx  %s\n", k.name.c_str(), serial, parallel, serial / parallel,
                    same ? "identical" : "DIFFER");
    }
    return mismatches ? 1 : 0;
}
