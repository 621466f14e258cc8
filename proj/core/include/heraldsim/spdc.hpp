#pragma once

#include "heraldsim/fock.hpp"

namespace heraldsim {

/// Down-conversion source settings: dimensionless interaction time r and
/// the truncation order of the pair-number expansion.
struct SourceParams {
    double r = 0.0;
    int n_max_pairs = 3;
};

/// Which probability "pair probability" refers to when solving for r.
enum class PairProbMeaning {
    kExactlyOne,   // lambda_1^2
    kAtLeastOne,   // 1 - lambda_0^2
};

/// The four down-conversion polarization modes (a_x, a_y, b_x, b_y).
RegistryPtr source_registry();

/// lambda_n = sqrt(n+1) tanh^n(r) / cosh^2(r); sum_n lambda_n^2 = 1.
double pair_amplitude(double r, int n);

/// Normalized n-pair component: (1/sqrt(n+1)) sum_m (-1)^m |n-m, m; m, n-m>.
PureState psi_n(int n, int n_max = kDefaultNMax);

/// sum_{n <= n_max_pairs} lambda_n |Psi_n>; squared norm below 1 by the
/// truncated tail.
PureState truncated_source_state(const SourceParams& params, int n_max = kDefaultNMax);

/// Invert the chosen pair-probability reading for r (bisection, small-r
/// branch). Throws NoRoot when the target is not attainable there.
double solve_interaction_time(double pair_probability, PairProbMeaning meaning);

}  // namespace heraldsim
