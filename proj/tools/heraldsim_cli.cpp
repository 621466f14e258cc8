// Command-line front end: herald probabilities and conditional states,
// Fig.-2-style parameter sweeps, the n=2 interference check, and rate
// estimates for a pulsed source.

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "heraldsim/formulas.hpp"
#include "heraldsim/herald.hpp"
#include "heraldsim/spdc.hpp"
#include "heraldsim/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

const double kPi = std::acos(-1.0);

void print_value(const char* label, double v) {
    std::printf("%s = %.17g\n", label, v);
}

void print_outcome(const heraldsim::HeraldOutcome& outcome) {
    print_value("P", outcome.probability);
    if (outcome.fidelity)
        print_value("F", *outcome.fidelity);
    else
        std::printf("F = undefined (zero probability)\n");
    for (const auto& branch : outcome.conditional.branches) {
        std::printf("branch weight = %.17g\n", branch.weight);
        std::fputs(branch.state.to_text().c_str(), stdout);
    }
}

int run_herald(int n_pairs, double theta_a, double theta_b, double eta) {
    auto input = heraldsim::psi_n(n_pairs);
    heraldsim::SetupParams setup{theta_a, theta_b};
    heraldsim::HeraldOutcome outcome =
        eta < 1.0 ? heraldsim::lossy_herald(input, setup, heraldsim::DetectorModel::uniform(eta))
                  : heraldsim::ideal_herald(input, setup);
    print_outcome(outcome);
    return kExitOk;
}

int run_hom_check() {
    // the two-pair component must never fire the fourfold coincidence
    double worst = 0.0;
    auto input = heraldsim::psi_n(2);
    for (int i = 0; i < 25; ++i) {
        double theta = kPi / 2.0 * (i + 1) / 26.0;
        auto outcome = heraldsim::ideal_herald(input, {theta, theta});
        worst = std::max(worst, outcome.probability);
    }
    print_value("max P(n=2)", worst);
    if (worst < 1e-12) {
        std::printf("hom-check: PASS\n");
        return kExitOk;
    }
    std::printf("hom-check: FAIL\n");
    return kExitCheckFailure;
}

int run_rate(double pair_prob, double rep_rate_hz, double theta, double eta,
             const std::string& meaning) {
    auto m = meaning == "at-least-one" ? heraldsim::PairProbMeaning::kAtLeastOne
                                       : heraldsim::PairProbMeaning::kExactlyOne;
    auto est = heraldsim::rate_estimate(pair_prob, rep_rate_hz, theta, eta, m);
    print_value("r", est.r);
    print_value("coincidence_probability", est.coincidence_probability);
    print_value("pairs_per_second", est.pairs_per_second);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Heralded polarization-entanglement simulator"};
    app.require_subcommand(1);

    int n_pairs = 3;
    double theta_a = std::acos(std::sqrt(1.0 / 3.0));
    double theta_b = std::acos(std::sqrt(1.0 / 3.0));
    double eta = 1.0;
    auto* herald = app.add_subcommand("herald", "Condition a source component on the fourfold coincidence");
    herald->add_option("--n-pairs", n_pairs, "Source component |Psi_n>")->check(CLI::Range(0, 4));
    herald->add_option("--theta-a", theta_a, "BS1 angle (radians)");
    herald->add_option("--theta-b", theta_b, "BS2 angle (radians)");
    herald->add_option("--eta", eta, "Uniform trigger-detector efficiency")->check(CLI::Range(0.0, 1.0));

    heraldsim::SweepSpec spec;
    std::string out_path;
    auto* sweep = app.add_subcommand("sweep", "Emit (P, F) curves over a theta grid as CSV");
    sweep->add_option("--theta-steps", spec.theta_count, "Number of theta grid points")
        ->check(CLI::Range(2, 100000));
    sweep->add_option("--eta", spec.etas, "Detector efficiencies")->delimiter(',');
    sweep->add_flag("--check", spec.check, "Assert simulation/formula agreement (1e-10)");
    sweep->add_option("--out", out_path, "Output CSV path")->required();

    auto* hom = app.add_subcommand("hom-check", "Verify the n=2 destructive-interference cancellation");

    double pair_prob = 0.05;
    double rep_rate_hz = 1e8;
    double rate_theta = std::acos(std::sqrt(1.0 / 3.0));
    double rate_eta = 1.0;
    std::string meaning = "at-least-one";
    auto* rate = app.add_subcommand("rate", "Coincidence probability and pairs/second for a pulsed source");
    rate->add_option("--pair-prob", pair_prob, "Single-pair probability")->required();
    rate->add_option("--rep-rate-hz", rep_rate_hz, "Pump repetition rate")->required();
    rate->add_option("--pair-prob-meaning", meaning, "exact-one | at-least-one")
        ->check(CLI::IsMember({"exact-one", "at-least-one"}));
    rate->add_option("--theta", rate_theta, "Beam splitter angle (radians)");
    rate->add_option("--eta", rate_eta, "Detector efficiency")->check(CLI::Range(0.0, 1.0));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (herald->parsed())
            return run_herald(n_pairs, theta_a, theta_b, eta);
        if (sweep->parsed()) {
            auto rows = heraldsim::run_sweep(spec);
            heraldsim::write_csv(out_path, rows);
            std::printf("wrote %zu rows to %s\n", rows.size(), out_path.c_str());
            return kExitOk;
        }
        if (hom->parsed())
            return run_hom_check();
        if (rate->parsed())
            return run_rate(pair_prob, rep_rate_hz, rate_theta, rate_eta, meaning);
    } catch (const heraldsim::CheckFailed& e) {
        std::fprintf(stderr, "check failed: %s\n", e.what());
        return kExitCheckFailure;
    } catch (const heraldsim::BadAngle& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const heraldsim::BadEfficiency& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const heraldsim::SimError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitCheckFailure;
    }
    return kExitUsage;
}
