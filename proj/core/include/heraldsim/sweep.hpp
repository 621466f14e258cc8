#pragma once

#include <string>
#include <vector>

#include "heraldsim/fock.hpp"

namespace heraldsim {

/// Grid for the (P, F) parametric curves: theta outer, eta inner.
struct SweepSpec {
    double theta_start = 0.0;
    double theta_stop = 0.0;   // defaults to pi/2 when <= theta_start
    int theta_count = 101;
    std::vector<double> etas{0.6, 0.7, 0.8, 0.9, 1.0};
    int n_pairs = 3;           // source component fed to the simulation
    bool check = false;        // assert simulation/formula agreement per row
};

struct SweepRow {
    double theta = 0.0;
    double eta = 0.0;
    double p_sim = 0.0;
    double p_formula = 0.0;
    double f_sim = 0.0;
    double f_formula = 0.0;
};

/// Simulate lossy_herald on |Psi_n> over the grid alongside the closed
/// forms. Rows where the coincidence probability vanishes report the
/// formula (limit) value in f_sim. With spec.check set, any |sim - formula|
/// above 1e-10 raises CheckFailed.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

/// Header "theta,eta,p_sim,p_formula,f_sim,f_formula"; 17 significant
/// digits, LF line endings, deterministic row order.
std::string to_csv(const std::vector<SweepRow>& rows);

void write_csv(const std::string& path, const std::vector<SweepRow>& rows);

}  // namespace heraldsim
