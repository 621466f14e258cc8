#include "heraldsim/optics.hpp"

#include <cmath>

namespace heraldsim {

namespace {

constexpr double kUnitarityTol = 1e-10;
const double kPi = std::acos(-1.0);

void require_unitary(const Eigen::MatrixXcd& u) {
    Eigen::MatrixXcd g = u.adjoint() * u;
    g -= Eigen::MatrixXcd::Identity(u.rows(), u.cols());
    if (g.cwiseAbs().maxCoeff() > kUnitarityTol)
        throw SimError("transform matrix is not unitary");
}

}  // namespace

LinearTransform::LinearTransform(RegistryPtr in, RegistryPtr out, Eigen::MatrixXcd u)
    : in_(std::move(in)), out_(std::move(out)), u_(std::move(u)) {
    if (!in_ || !out_)
        throw SimError("null registry");
    if (in_->size() != out_->size())
        throw RegistryMismatch("input and output registries differ in size");
    if (u_.rows() != static_cast<Eigen::Index>(in_->size()) || u_.rows() != u_.cols())
        throw RegistryMismatch("matrix shape does not match registries");
    require_unitary(u_);
}

LinearTransform identity_transform(const RegistryPtr& reg) {
    auto n = static_cast<Eigen::Index>(reg->size());
    return {reg, reg, Eigen::MatrixXcd::Identity(n, n)};
}

namespace {

/// Output registry obtained by renaming selected input labels.
RegistryPtr renamed(const RegistryPtr& reg, const std::map<std::string, std::string>& renames) {
    std::vector<std::string> names = reg->names();
    for (auto& n : names) {
        auto it = renames.find(n);
        if (it != renames.end())
            n = it->second;
    }
    return make_registry(std::move(names));
}

}  // namespace

LinearTransform beam_splitter(const RegistryPtr& reg, const SplitterArm& x,
                              const SplitterArm& y, double theta) {
    if (theta < 0.0 || theta > kPi / 2.0 + 1e-15)
        throw BadAngle("beam splitter angle must lie in [0, pi/2]");
    if (x.transmitted == x.reflected || y.transmitted == y.reflected ||
        x.transmitted == y.transmitted || x.transmitted == y.reflected ||
        x.reflected == y.transmitted || x.reflected == y.reflected)
        throw DuplicateMode("beam splitter output modes must be distinct");

    auto out = renamed(reg, {{x.input, x.transmitted},
                             {x.port, x.reflected},
                             {y.input, y.transmitted},
                             {y.port, y.reflected}});
    auto n = static_cast<Eigen::Index>(reg->size());
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(n, n);
    const double c = std::cos(theta), s = std::sin(theta);
    for (const auto* arm : {&x, &y}) {
        auto i = static_cast<Eigen::Index>(reg->index(arm->input));
        auto p = static_cast<Eigen::Index>(reg->index(arm->port));
        auto t = static_cast<Eigen::Index>(out->index(arm->transmitted));
        auto r = static_cast<Eigen::Index>(out->index(arm->reflected));
        u(i, i) = 0.0;
        u(p, p) = 0.0;
        u(i, t) = c;
        u(i, r) = s;
        // second row is the unitary completion for the vacuum port
        u(p, t) = -s;
        u(p, r) = c;
    }
    return {reg, out, std::move(u)};
}

LinearTransform half_wave_rotation(const RegistryPtr& reg, const std::string& f_x,
                                   const std::string& f_y, const std::string& f_xp,
                                   const std::string& f_yp) {
    if (f_xp == f_yp)
        throw DuplicateMode("rotated output modes must be distinct");
    auto out = renamed(reg, {{f_x, f_xp}, {f_y, f_yp}});
    auto n = static_cast<Eigen::Index>(reg->size());
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(n, n);
    auto ix = static_cast<Eigen::Index>(reg->index(f_x));
    auto iy = static_cast<Eigen::Index>(reg->index(f_y));
    auto ox = static_cast<Eigen::Index>(out->index(f_xp));
    auto oy = static_cast<Eigen::Index>(out->index(f_yp));
    const double h = 1.0 / std::sqrt(2.0);
    u(ix, ix) = 0.0;
    u(iy, iy) = 0.0;
    u(ix, ox) = h;
    u(ix, oy) = h;
    u(iy, ox) = h;
    u(iy, oy) = -h;
    return {reg, out, std::move(u)};
}

LinearTransform compose(const LinearTransform& later, const LinearTransform& earlier) {
    if (*later.registry_in() != *earlier.registry_out())
        throw RegistryMismatch("composition registries do not match");
    return {earlier.registry_in(), later.registry_out(), earlier.matrix() * later.matrix()};
}

LinearTransform attach_loss(const LinearTransform& t,
                            const std::map<std::string, double>& efficiencies) {
    for (const auto& [label, eta] : efficiencies) {
        if (eta < 0.0 || eta > 1.0)
            throw BadEfficiency("efficiency for mode " + label + " outside [0, 1]");
        t.registry_out()->index(label);  // throws on unknown mode
    }
    std::vector<std::string> in_names = t.registry_in()->names();
    std::vector<std::string> out_names = t.registry_out()->names();
    for (const auto& [label, eta] : efficiencies) {
        in_names.push_back("~" + label + "_in");
        out_names.push_back("~" + label);
    }
    auto in = make_registry(std::move(in_names));
    auto out = make_registry(std::move(out_names));

    auto n = static_cast<Eigen::Index>(t.registry_in()->size());
    auto k = static_cast<Eigen::Index>(efficiencies.size());
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(n + k, n + k);
    u.topLeftCorner(n, n) = t.matrix();

    Eigen::Index slot = n;
    for (const auto& [label, eta] : efficiencies) {
        auto j = static_cast<Eigen::Index>(t.registry_out()->index(label));
        const double se = std::sqrt(eta), sl = std::sqrt(1.0 - eta);
        // detected column splits into sqrt(eta) detected + sqrt(1-eta) tilded
        u.col(slot).head(n) = sl * u.col(j).head(n);
        u.col(j).head(n) *= se;
        // tilded vacuum port row: unitary completion
        u(slot, j) = -sl;
        u(slot, slot) = se;
        ++slot;
    }
    return {in, out, std::move(u)};
}

PureState apply_transform(const PureState& state, const LinearTransform& t) {
    if (*state.registry() != *t.registry_in())
        throw RegistryMismatch("state registry does not match transform input");
    const auto& u = t.matrix();
    const auto m = state.registry()->size();

    std::vector<std::vector<Complex>> rows(m, std::vector<Complex>(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            rows[i][j] = std::conj(u(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)));

    PureState result(t.registry_out(), state.n_max());
    for (const auto& [occ, amp] : state.terms()) {
        PureState acc = vacuum(t.registry_out(), state.n_max());
        double fact = 1.0;
        for (std::size_t i = 0; i < m; ++i) {
            for (int q = 0; q < occ[i]; ++q) {
                acc = apply_creation_combo(acc, rows[i]);
                fact *= q + 1;
            }
        }
        result = result + acc * (amp / std::sqrt(fact));
    }
    return result.compacted();
}

}  // namespace heraldsim
