#include "heraldsim/spdc.hpp"

#include <cmath>

namespace heraldsim {

RegistryPtr source_registry() {
    static const RegistryPtr reg = make_registry({"a_x", "a_y", "b_x", "b_y"});
    return reg;
}

double pair_amplitude(double r, int n) {
    if (r < 0.0)
        throw SimError("interaction time r must be non-negative");
    if (n < 0)
        throw SimError("pair number must be non-negative");
    const double c = std::cosh(r);
    return std::sqrt(n + 1.0) * std::pow(std::tanh(r), n) / (c * c);
}

PureState psi_n(int n, int n_max) {
    if (n < 0)
        throw SimError("pair number must be non-negative");
    if (2 * n > n_max)
        throw TruncationExceeded("psi_n(" + std::to_string(n) + ") exceeds N_max");
    PureState state(source_registry(), n_max);
    const double norm = 1.0 / std::sqrt(n + 1.0);
    for (int m = 0; m <= n; ++m) {
        double sign = (m % 2 == 0) ? 1.0 : -1.0;
        state.add_term({n - m, m, m, n - m}, Complex{sign * norm, 0.0});
    }
    return state;
}

PureState truncated_source_state(const SourceParams& params, int n_max) {
    if (2 * params.n_max_pairs > n_max)
        throw TruncationExceeded("source truncation order exceeds N_max");
    PureState state(source_registry(), n_max);
    for (int n = 0; n <= params.n_max_pairs; ++n)
        state = state + psi_n(n, n_max) * Complex{pair_amplitude(params.r, n), 0.0};
    return state.compacted();
}

namespace {

double pair_probability_of(double r, PairProbMeaning meaning) {
    if (meaning == PairProbMeaning::kExactlyOne) {
        double l1 = pair_amplitude(r, 1);
        return l1 * l1;
    }
    double l0 = pair_amplitude(r, 0);
    return 1.0 - l0 * l0;
}

}  // namespace

double solve_interaction_time(double pair_probability, PairProbMeaning meaning) {
    if (pair_probability <= 0.0 || pair_probability >= 1.0)
        throw NoRoot("pair probability must lie in (0, 1)");
    // lambda_1^2 = 2 t (1-t)^2 with t = tanh^2 r peaks at t = 1/3; stay on
    // the rising small-r branch. 1 - lambda_0^2 is monotone, any bracket works.
    double hi = (meaning == PairProbMeaning::kExactlyOne) ? std::atanh(1.0 / std::sqrt(3.0))
                                                          : 20.0;
    if (pair_probability_of(hi, meaning) < pair_probability)
        throw NoRoot("pair probability not attainable on the small-r branch");
    double lo = 0.0;
    for (int i = 0; i < 200 && hi - lo > 1e-12; ++i) {
        double mid = 0.5 * (lo + hi);
        (pair_probability_of(mid, meaning) < pair_probability ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace heraldsim
