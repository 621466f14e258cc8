#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "heraldsim/fock.hpp"
#include "heraldsim/optics.hpp"

namespace heraldsim {

/// Beam-splitter angles; amplitude transmissions are cos(theta_a), cos(theta_b).
struct SetupParams {
    double theta_a = 0.0;
    double theta_b = 0.0;
};

/// Trigger-detector efficiencies, keyed by trigger mode label.
struct DetectorModel {
    std::map<std::string, double> efficiency;

    static DetectorModel uniform(double eta);
};

/// Required photon counts on the trigger modes.
struct HeraldPattern {
    std::map<std::string, int> required;

    /// One photon on each of e_x, e_y, f_xp, f_yp.
    static HeraldPattern fourfold();
};

struct HeraldOutcome {
    double probability = 0.0;
    StateEnsemble conditional;                 // on (c_x, c_y, d_x, d_y)
    std::optional<double> fidelity;            // unset when probability is 0
};

/// Mode labels of the heralded output and of the trigger detectors.
const std::vector<std::string>& output_modes();
const std::vector<std::string>& trigger_modes();

/// Source modes plus the vacuum input ports of BS1/BS2.
RegistryPtr setup_input_registry();

/// BS1 then BS2 then the half-wave rotation of the f modes;
/// (a_x,a_y,b_x,b_y, ports) -> (c_x,c_y,d_x,d_y,e_x,e_y,f_xp,f_yp).
LinearTransform setup_transform(const SetupParams& setup);

/// setup_transform with inefficient detection attached to the trigger modes.
LinearTransform lossy_setup_transform(const SetupParams& setup, const DetectorModel& detectors);

/// |Phi> = (|1,0;1,0> + |0,1;0,1>)/sqrt2 on the output modes.
PureState bell_target(int n_max = kDefaultNMax);

/// Propagate the input through the setup, condition on the pattern, and
/// reduce to the output modes. probability is the pattern probability;
/// with ideal detectors the conditional ensemble has a single branch.
HeraldOutcome ideal_herald(const PureState& input, const SetupParams& setup,
                           const HeraldPattern& pattern = HeraldPattern::fourfold());

/// Same, with detector loss: the undetected tilded modes are traced out by
/// grouping on their occupations, producing the mixed conditional ensemble.
HeraldOutcome lossy_herald(const PureState& input, const SetupParams& setup,
                           const DetectorModel& detectors,
                           const HeraldPattern& pattern = HeraldPattern::fourfold());

/// sqrt(<target|rho|target> / Tr rho); invariant under branch phases.
double fidelity(const StateEnsemble& ensemble, const PureState& target);

/// Apply only BS1 and condition on a partial pattern on the e modes,
/// leaving the b-side untouched: result lives on (c_x, c_y, b_x, b_y)
/// (plus any unprojected e modes). Unnormalized, as project_pattern.
PureState intermediate_collapse(const PureState& input, const SetupParams& setup,
                                const std::map<std::string, int>& e_pattern);

}  // namespace heraldsim
