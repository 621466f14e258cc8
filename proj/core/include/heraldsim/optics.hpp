#pragma once

#include <Eigen/Dense>
#include <map>
#include <string>

#include "heraldsim/fock.hpp"

namespace heraldsim {

/// Unitary mode map. Convention: row i lists how input annihilation
/// operator a_i decomposes into output operators, a_i = sum_j U(i,j) b_j.
/// Input and output registries have equal size; vacuum input ports make
/// every element square.
class LinearTransform {
public:
    LinearTransform(RegistryPtr in, RegistryPtr out, Eigen::MatrixXcd u);

    const RegistryPtr& registry_in() const { return in_; }
    const RegistryPtr& registry_out() const { return out_; }
    const Eigen::MatrixXcd& matrix() const { return u_; }

private:
    RegistryPtr in_;
    RegistryPtr out_;
    Eigen::MatrixXcd u_;
};

LinearTransform identity_transform(const RegistryPtr& reg);

/// One polarization arm of a nonpolarizing beam splitter: `input` is the
/// incoming beam mode, `port` the vacuum input port; on output they are
/// relabeled `transmitted` / `reflected`.
struct SplitterArm {
    std::string input;
    std::string port;
    std::string transmitted;
    std::string reflected;
};

/// Polarization-preserving beam splitter with amplitude transmission
/// cos(theta). Block per arm (rows input,port x cols transmitted,reflected):
/// [[cos t, sin t], [-sin t, cos t]]; identity on all other modes.
LinearTransform beam_splitter(const RegistryPtr& reg, const SplitterArm& x,
                              const SplitterArm& y, double theta);

/// Half-wave plate at pi/4: f_x -> (f_x' + f_y')/sqrt2, f_y -> (f_x' - f_y')/sqrt2.
LinearTransform half_wave_rotation(const RegistryPtr& reg, const std::string& f_x,
                                   const std::string& f_y, const std::string& f_xp,
                                   const std::string& f_yp);

/// compose(t1, t2) acts as "t2 first, then t1":
/// apply_transform(s, compose(t1, t2)) == apply_transform(apply_transform(s, t2), t1).
LinearTransform compose(const LinearTransform& later, const LinearTransform& earlier);

/// Inefficient detection on the given output modes: each detected mode m is
/// replaced by sqrt(eta) m + sqrt(1-eta) ~m, with ~m an added undetected
/// mode (plus a matching vacuum input port ~m_in). Unitary on the enlarged
/// space.
LinearTransform attach_loss(const LinearTransform& t, const std::map<std::string, double>& efficiencies);

/// Rewrite every basis ket through the transform: a_i^dag -> sum_j conj(U(i,j)) b_j^dag,
/// expanded multinomially. Photon number and norm are preserved.
PureState apply_transform(const PureState& state, const LinearTransform& t);

}  // namespace heraldsim
