#include "besselnorm/json_io.hpp"
#include "besselnorm/norms.hpp"
#include "besselnorm/verify.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using nlohmann::json;
using namespace besselnorm;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitParseError = 2;
constexpr int kExitCapExceeded = 3;

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(12);
    os << x;
    return os.str();
}

void print_result_text(const std::string& which, const NormResult& r) {
    std::cout << which << " = " << fmt(r.value);
    if (r.is_exact())
        std::cout << "  [exact";
    else
        std::cout << "  [bracket " << fmt(r.lower) << " .. " << fmt(r.upper);
    std::cout << ", method: " << r.method << "]\n";
}

int run_norm(const std::string& input, const std::string& which, bool as_json,
             const KernelConfig& kc) {
    std::ifstream in(input);
    if (!in) {
        std::cerr << "error: cannot open " << input << "\n";
        return kExitParseError;
    }
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        std::cerr << "error: malformed JSON in " << input << ": " << e.what() << "\n";
        return kExitParseError;
    }

    try {
        auto parsed = tensor_input_from_json(j);
        CoeffTensor u = std::holds_alternative<CoeffTensor>(parsed)
                            ? std::get<CoeffTensor>(parsed)
                            : rank_rep_to_coeffs(std::get<RankRep>(parsed),
                                                 canonical_system(std::get<RankRep>(parsed).left),
                                                 canonical_system(std::get<RankRep>(parsed).right));
        json out;
        auto emit = [&](const std::string& name, const NormResult& r) {
            if (as_json)
                out[name] = norm_result_to_json(r);
            else
                print_result_text(name, r);
        };
        if (which == "bess" || which == "all") emit("bess", besselian_crossnorm(u, kc));
        if (which == "inj" || which == "all") emit("inj", injective_norm(u, kc));
        if (which == "proj" || which == "all") emit("proj", projective_norm(u, kc));
        if (which == "hs" || which == "all")
            emit("hs", NormResult::exact(hs_norm(u), "frobenius"));
        if (as_json) std::cout << out.dump(2) << "\n";
        return kExitOk;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParseError;
    } catch (const DimensionMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParseError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParseError;
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCapExceeded;
    }
}

int run_verify(const std::string& suite, const VerifyConfig& cfg) {
    std::vector<PropertyResult> results;
    if (suite == "axioms")
        results = verify_axioms(cfg);
    else if (suite == "paper")
        results = verify_paper(cfg);
    else if (suite == "lattice")
        results = verify_lattice(cfg);
    else if (suite == "frames")
        results = verify_frames(cfg);
    else
        results = verify_all(cfg);

    bool all_ok = true;
    for (const auto& r : results) {
        if (r.passed) {
            std::cout << "PASS " << r.name << "\n";
        } else {
            all_ok = false;
            std::cout << "FAIL " << r.name << ": " << r.detail << "\n";
        }
    }
    std::cout << (all_ok ? "suite ok" : "suite FAILED") << " (" << results.size()
              << " properties)\n";
    return all_ok ? kExitOk : kExitPropertyFailure;
}

int run_demo(bool as_json, const KernelConfig& kc) {
    UniformityDemo d = uniformity_violation_demo(kc);
    if (as_json) {
        json j;
        j["alpha_u"] = d.alpha_u;
        j["alpha_v"] = d.alpha_v;
        j["operator_bound"] = d.operator_bound;
        j["violated"] = d.violated;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "alpha(u)=" << fmt(d.alpha_u) << ", alpha(v)=" << fmt(d.alpha_v)
                  << ", bound=" << fmt(d.operator_bound) << ", "
                  << (d.violated ? "UNIFORMITY VIOLATED" : "uniformity holds") << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite-dimensional tensor-norm laboratory: Besselian crossnorm, "
                 "injective/projective/Hilbert-Schmidt norms, frame constants"};
    app.require_subcommand(1);

    std::uint64_t seed = 0xBE55;
    if (const char* env = std::getenv("BESSELNORM_SEED"))
        seed = std::strtoull(env, nullptr, 0);

    std::string input, which = "all", suite = "all";
    bool as_json = false;

    CLI::App* norm = app.add_subcommand("norm", "Compute norms of a tensor read from JSON");
    norm->add_option("--input", input, "JSON file: coefficient tensor or rank rep")
        ->required();
    norm->add_option("--which", which, "bess|inj|proj|hs|all")
        ->check(CLI::IsMember({"bess", "inj", "proj", "hs", "all"}));
    norm->add_flag("--json", as_json, "Emit a JSON report");

    CLI::App* verify = app.add_subcommand(
        "verify", "Run a property suite: axioms, published worked examples, lattice, frames");
    verify->add_option("--suite", suite, "axioms|paper|lattice|frames|all")
        ->check(CLI::IsMember({"axioms", "paper", "lattice", "frames", "all"}));
    verify->add_option("--seed", seed, "Generator seed (also via BESSELNORM_SEED)");

    CLI::App* demo =
        app.add_subcommand("demo-nonuniform", "Show the uniformity-condition violation");
    demo->add_flag("--json", as_json, "Emit a JSON report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitParseError;
    }

    KernelConfig kc;
    kc.seed = seed;

    if (norm->parsed()) return run_norm(input, which, as_json, kc);
    if (verify->parsed()) {
        VerifyConfig cfg;
        cfg.seed = seed;
        cfg.kernel = kc;
        return run_verify(suite, cfg);
    }
    return run_demo(as_json, kc);
}
