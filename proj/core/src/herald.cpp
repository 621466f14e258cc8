#include "heraldsim/herald.hpp"

#include <cmath>

namespace heraldsim {

namespace {

constexpr double kZeroProbability = 1e-14;

}  // namespace

DetectorModel DetectorModel::uniform(double eta) {
    DetectorModel m;
    for (const auto& label : trigger_modes())
        m.efficiency[label] = eta;
    return m;
}

HeraldPattern HeraldPattern::fourfold() {
    HeraldPattern p;
    for (const auto& label : trigger_modes())
        p.required[label] = 1;
    return p;
}

const std::vector<std::string>& output_modes() {
    static const std::vector<std::string> modes{"c_x", "c_y", "d_x", "d_y"};
    return modes;
}

const std::vector<std::string>& trigger_modes() {
    static const std::vector<std::string> modes{"e_x", "e_y", "f_xp", "f_yp"};
    return modes;
}

RegistryPtr setup_input_registry() {
    static const RegistryPtr reg = make_registry(
        {"a_x", "a_y", "b_x", "b_y", "e_x_in", "e_y_in", "f_x_in", "f_y_in"});
    return reg;
}

LinearTransform setup_transform(const SetupParams& setup) {
    auto in = setup_input_registry();
    auto bs1 = beam_splitter(in, {"a_x", "e_x_in", "c_x", "e_x"},
                             {"a_y", "e_y_in", "c_y", "e_y"}, setup.theta_a);
    auto bs2 = beam_splitter(bs1.registry_out(), {"b_x", "f_x_in", "d_x", "f_x"},
                             {"b_y", "f_y_in", "d_y", "f_y"}, setup.theta_b);
    auto hwp = half_wave_rotation(bs2.registry_out(), "f_x", "f_y", "f_xp", "f_yp");
    return compose(hwp, compose(bs2, bs1));
}

LinearTransform lossy_setup_transform(const SetupParams& setup, const DetectorModel& detectors) {
    return attach_loss(setup_transform(setup), detectors.efficiency);
}

PureState bell_target(int n_max) {
    static const RegistryPtr reg = make_registry({"c_x", "c_y", "d_x", "d_y"});
    PureState phi(reg, n_max);
    const double h = 1.0 / std::sqrt(2.0);
    phi.add_term({1, 0, 1, 0}, Complex{h, 0.0});
    phi.add_term({0, 1, 0, 1}, Complex{h, 0.0});
    return phi;
}

namespace {

std::optional<double> ensemble_fidelity(const StateEnsemble& ensemble) {
    if (ensemble.branches.empty())
        return std::nullopt;
    PureState phi = bell_target();
    if (*ensemble.branches.front().state.registry() != *phi.registry())
        return std::nullopt;
    return fidelity(ensemble, phi);
}

}  // namespace

HeraldOutcome ideal_herald(const PureState& input, const SetupParams& setup,
                           const HeraldPattern& pattern) {
    auto t = setup_transform(setup);
    auto propagated = apply_transform(input.extended(t.registry_in()), t);
    auto reduced = project_pattern(propagated, pattern.required);

    HeraldOutcome out;
    out.probability = reduced.squared_norm();
    if (out.probability < kZeroProbability) {
        out.probability = 0.0;
        return out;
    }
    out.conditional.branches.push_back({out.probability, reduced.normalized()});
    out.fidelity = ensemble_fidelity(out.conditional);
    return out;
}

HeraldOutcome lossy_herald(const PureState& input, const SetupParams& setup,
                           const DetectorModel& detectors, const HeraldPattern& pattern) {
    auto t = lossy_setup_transform(setup, detectors);
    auto propagated = apply_transform(input.extended(t.registry_in()), t);
    auto reduced = project_pattern(propagated, pattern.required);

    HeraldOutcome out;
    out.probability = reduced.squared_norm();
    if (out.probability < kZeroProbability) {
        out.probability = 0.0;
        return out;
    }
    std::vector<std::string> tilded;
    for (const auto& [label, eta] : detectors.efficiency)
        tilded.push_back("~" + label);
    out.conditional = trace_out(reduced, tilded);
    out.fidelity = ensemble_fidelity(out.conditional);
    return out;
}

double fidelity(const StateEnsemble& ensemble, const PureState& target) {
    double trace = ensemble.trace();
    if (trace < kZeroProbability)
        throw ZeroTrace("ensemble has (numerically) zero trace");
    double overlap = 0.0;
    for (const auto& b : ensemble.branches)
        overlap += b.weight * std::norm(inner(target, b.state));
    return std::sqrt(overlap / trace);
}

PureState intermediate_collapse(const PureState& input, const SetupParams& setup,
                                const std::map<std::string, int>& e_pattern) {
    static const RegistryPtr reg =
        make_registry({"a_x", "a_y", "b_x", "b_y", "e_x_in", "e_y_in"});
    auto bs1 = beam_splitter(reg, {"a_x", "e_x_in", "c_x", "e_x"},
                             {"a_y", "e_y_in", "c_y", "e_y"}, setup.theta_a);
    auto propagated = apply_transform(input.extended(reg), bs1);
    return project_pattern(propagated, e_pattern);
}

}  // namespace heraldsim
