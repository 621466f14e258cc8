#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "heraldsim/formulas.hpp"
#include "heraldsim/sweep.hpp"

using namespace heraldsim;

namespace {

const double kPi = std::acos(-1.0);
const double kThetaOpt = std::acos(std::sqrt(1.0 / 3.0));
const double kPOpt = std::pow(2.0 / 9.0, 3);

double maximize_lossy(double eta) {
    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = 0.0, hi = kPi / 2.0;
    while (hi - lo > 1e-10) {
        double x1 = hi - phi * (hi - lo);
        double x2 = lo + phi * (hi - lo);
        if (p_lossy_formula(x1, eta) < p_lossy_formula(x2, eta))
            lo = x1;
        else
            hi = x2;
    }
    return p_lossy_formula(0.5 * (lo + hi), eta);
}

}  // namespace

TEST_CASE("ideal probability formula values") {
    CHECK(std::abs(p_ideal_formula(kThetaOpt, kThetaOpt) - kPOpt) < 1e-14);
    CHECK(p_ideal_formula(0.0, 0.7) == 0.0);
    CHECK(std::abs(p_ideal_formula(kPi / 4.0, kPi / 4.0) - 1.0 / 128.0) < 1e-16);
    CHECK_THROWS_AS(p_ideal_formula(-0.1, 0.3), BadAngle);
    CHECK_THROWS_AS(p_ideal_formula(0.3, 2.0), BadAngle);
}

TEST_CASE("four-pair probability formula values") {
    CHECK(std::abs(p_n4_formula(kThetaOpt, kThetaOpt) - (13.0 / 5.0) * std::pow(2.0 / 9.0, 4)) <
          1e-14);
    CHECK(p_n4_formula(0.0, 0.0) == 0.0);
    CHECK(std::abs(p_n4_formula(kPi / 4.0, kPi / 4.0) - (13.0 / 5.0) / 256.0) < 1e-14);
}

TEST_CASE("lossy formulas and their limits") {
    // eta = 1 reduces to the ideal equal-angle expression
    for (double theta : {0.2, 0.5, 0.9, 1.3})
        CHECK(std::abs(p_lossy_formula(theta, 1.0) - p_ideal_formula(theta, theta)) < 1e-14);

    CHECK(p_lossy_formula(0.0, 0.8) == 0.0);
    CHECK(f_formula(0.0, 0.8) == 1.0);

    double theta = kPi / 4.0;  // sin^2 = 1/2
    CHECK(std::abs(p_lossy_formula(theta, 0.8) - 4.608e-3) < 1e-12);
    CHECK(std::abs(f_formula(theta, 0.8) - 0.5 / 0.6) < 1e-12);

    CHECK_THROWS_AS(p_lossy_formula(0.3, 1.5), BadEfficiency);
    CHECK_THROWS_AS(f_formula(-0.2, 0.5), BadAngle);
}

TEST_CASE("optimum sits at one-third power transmission") {
    double theta = optimal_theta();
    CHECK(std::abs(std::cos(theta) * std::cos(theta) - 1.0 / 3.0) < 1e-6);
    CHECK(std::abs(p_ideal_formula(theta, theta) - kPOpt) < 1e-12);
}

TEST_CASE("lossy maximum saturates at (2/9)^3 for eta >= 2/3") {
    for (double eta : {2.0 / 3.0, 0.7, 0.8, 0.9, 1.0})
        CHECK(std::abs(maximize_lossy(eta) - kPOpt) < 1e-8);
    CHECK(maximize_lossy(0.6) < kPOpt - 1e-4);
}

TEST_CASE("fidelity is strictly decreasing in theta below unit efficiency") {
    for (double eta : {0.5, 0.8, 0.95}) {
        double prev = f_formula(0.0, eta);
        for (int i = 1; i <= 200; ++i) {
            double theta = kPi / 2.0 * i / 200.0;
            double f = f_formula(theta, eta);
            CHECK(f < prev);
            prev = f;
        }
    }
}

TEST_CASE("rate estimate reproduces the quoted figures") {
    // default (at-least-one) reading: 7e-7 to one significant figure
    auto est = rate_estimate(0.05, 1e8, kThetaOpt, 1.0);
    CHECK(est.coincidence_probability > 6.5e-7);
    CHECK(est.coincidence_probability < 7.5e-7);
    // "a few dozens" per second at 100 MHz
    CHECK(est.pairs_per_second > 20.0);
    CHECK(est.pairs_per_second < 100.0);

    // the exactly-one-pair reading lands slightly higher
    auto exact = rate_estimate(0.05, 1e8, kThetaOpt, 1.0, PairProbMeaning::kExactlyOne);
    CHECK(exact.coincidence_probability > est.coincidence_probability);
    CHECK(exact.coincidence_probability < 8.0e-7);
    CHECK(exact.pairs_per_second < 100.0);
}

TEST_CASE("rate estimate edge cases") {
    auto tiny = rate_estimate(1e-6, 1e8, kThetaOpt, 1.0);
    CHECK(tiny.pairs_per_second < 1e-6);
    // lambda_1^2 peaks at 8/27 on the small-r branch
    CHECK_THROWS_AS(rate_estimate(0.5, 1e8, kThetaOpt, 1.0, PairProbMeaning::kExactlyOne),
                    NoRoot);
    CHECK_THROWS_AS(rate_estimate(0.05, 0.0, kThetaOpt, 1.0), SimError);
}

TEST_CASE("sweep rows pass the closed-form check") {
    SweepSpec spec;
    spec.theta_count = 21;
    spec.etas = {0.6, 1.0};
    spec.check = true;
    auto rows = run_sweep(spec);  // throws CheckFailed on any mismatch
    REQUIRE(rows.size() == 42);

    for (const auto& r : rows) {
        if (r.eta == 1.0)
            CHECK(std::abs(r.f_formula - 1.0) < 1e-14);
        if (r.theta == 0.0) {
            CHECK(r.p_sim == 0.0);
            CHECK(r.f_formula == 1.0);
        }
    }
    // eta = 0.6 stays strictly below the saturated maximum
    double max06 = 0.0;
    for (const auto& r : rows)
        if (r.eta == 0.6)
            max06 = std::max(max06, r.p_sim);
    CHECK(max06 < kPOpt);
}

TEST_CASE("sweep validates its grid") {
    SweepSpec spec;
    spec.theta_count = 1;
    CHECK_THROWS_AS(run_sweep(spec), SimError);
    spec.theta_count = 5;
    spec.theta_stop = 2.0;
    CHECK_THROWS_AS(run_sweep(spec), BadAngle);
}

TEST_CASE("CSV output is deterministic and round-trip stable") {
    SweepSpec spec;
    spec.theta_count = 7;
    spec.etas = {0.8};
    auto rows = run_sweep(spec);
    auto text1 = to_csv(rows);
    auto text2 = to_csv(run_sweep(spec));
    CHECK(text1 == text2);

    std::istringstream in(text1);
    std::string header;
    std::getline(in, header);
    CHECK(header == "theta,eta,p_sim,p_formula,f_sim,f_formula");

    auto path = std::filesystem::temp_directory_path() / "heraldsim_sweep_test.csv";
    write_csv(path.string(), rows);
    std::ifstream f(path, std::ios::binary);
    std::stringstream buf;
    buf << f.rdbuf();
    CHECK(buf.str() == text1);
    std::filesystem::remove(path);

    CHECK_THROWS_AS(write_csv("/nonexistent-dir/x.csv", rows), IoError);
}
