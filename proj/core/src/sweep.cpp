#include "heraldsim/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "heraldsim/formulas.hpp"
#include "heraldsim/herald.hpp"

namespace heraldsim {

namespace {

constexpr double kCheckTol = 1e-10;
const double kPi = std::acos(-1.0);

}  // namespace

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
    if (spec.theta_count < 2)
        throw SimError("theta grid needs at least 2 points");
    double start = spec.theta_start;
    double stop = spec.theta_stop > start ? spec.theta_stop : kPi / 2.0;
    if (start < 0.0 || stop > kPi / 2.0 + 1e-15)
        throw BadAngle("theta grid must lie within [0, pi/2]");

    PureState input = psi_n(spec.n_pairs);
    std::vector<SweepRow> rows;
    rows.reserve(static_cast<std::size_t>(spec.theta_count) * spec.etas.size());
    for (int i = 0; i < spec.theta_count; ++i) {
        double theta = start + (stop - start) * i / (spec.theta_count - 1);
        for (double eta : spec.etas) {
            SweepRow row;
            row.theta = theta;
            row.eta = eta;
            row.p_formula = p_lossy_formula(theta, eta);
            row.f_formula = f_formula(theta, eta);
            auto outcome = lossy_herald(input, {theta, theta}, DetectorModel::uniform(eta));
            row.p_sim = outcome.probability;
            row.f_sim = outcome.fidelity.value_or(row.f_formula);
            if (spec.check) {
                if (std::abs(row.p_sim - row.p_formula) > kCheckTol)
                    throw CheckFailed("P mismatch at theta=" + std::to_string(theta) +
                                      " eta=" + std::to_string(eta));
                if (outcome.fidelity && std::abs(row.f_sim - row.f_formula) > kCheckTol)
                    throw CheckFailed("F mismatch at theta=" + std::to_string(theta) +
                                      " eta=" + std::to_string(eta));
            }
            rows.push_back(row);
        }
    }
    return rows;
}

std::string to_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream os;
    os << "theta,eta,p_sim,p_formula,f_sim,f_formula\n";
    char buf[160];
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", r.theta,
                      r.eta, r.p_sim, r.p_formula, r.f_sim, r.f_formula);
        os << buf;
    }
    return os.str();
}

void write_csv(const std::string& path, const std::vector<SweepRow>& rows) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError("cannot open " + path + " for writing");
    out << to_csv(rows);
    if (!out)
        throw IoError("write failed: " + path);
}

}  // namespace heraldsim
