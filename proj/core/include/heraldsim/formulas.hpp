#pragma once

#include "heraldsim/spdc.hpp"

namespace heraldsim {

/// Closed-form references for the simulation (ideal and lossy herald
/// probabilities, fidelity), plus the optimum and rate bookkeeping built
/// on top of them.

/// P = 1/2 (sin^2 t_a cos t_a sin^2 t_b cos t_b)^2, fourfold coincidence
/// from the three-pair component with ideal detectors.
double p_ideal_formula(double theta_a, double theta_b);

/// Fourfold single-photon coincidence probability from the four-pair
/// component: 13/5 (sin t_a cos t_a sin t_b cos t_b)^4.
double p_n4_formula(double theta_a, double theta_b);

/// P = 1/2 (eta sin^2 t)^4 (1 - eta sin^2 t)^2, equal angles, uniform eta.
double p_lossy_formula(double theta, double eta);

/// F = cos^2 t / (1 - eta sin^2 t).
double f_formula(double theta, double eta);

/// argmax over theta of p_ideal_formula(theta, theta) by golden-section
/// search; the maximum sits at cos^2 theta = 1/3.
double optimal_theta();

struct RateEstimate {
    double r = 0.0;                       // interaction time matching the pair probability
    double coincidence_probability = 0.0; // lambda_3^2 * P(theta, eta) per pulse
    double pairs_per_second = 0.0;
};

/// The default reading of "pair probability" is 1 - lambda_0^2 (at least
/// one pair); pass kExactlyOne for the lambda_1^2 reading instead.
RateEstimate rate_estimate(double pair_probability, double rep_rate_hz, double theta,
                           double eta, PairProbMeaning meaning = PairProbMeaning::kAtLeastOne);

}  // namespace heraldsim
