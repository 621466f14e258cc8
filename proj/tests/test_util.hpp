#pragma once

#include <Eigen/Dense>
#include <random>
#include <string>
#include <vector>

#include "heraldsim/fock.hpp"

namespace heraldsim::testing {

inline RegistryPtr small_registry(std::size_t m) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < m; ++i)
        names.push_back("m" + std::to_string(i));
    return make_registry(std::move(names));
}

/// Random sparse state with up to `max_terms` terms of total photon number
/// <= `max_photons`. Not normalized unless requested.
inline PureState random_state(std::mt19937& rng, const RegistryPtr& reg, int max_photons,
                              int max_terms = 6, bool normalize = false, int n_max = kDefaultNMax) {
    std::uniform_int_distribution<int> nterms(1, max_terms);
    std::uniform_int_distribution<int> photon(0, max_photons);
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    PureState s(reg, n_max);
    int terms = nterms(rng);
    for (int t = 0; t < terms; ++t) {
        int total = photon(rng);
        Occupation occ(reg->size(), 0);
        std::uniform_int_distribution<std::size_t> mode(0, reg->size() - 1);
        for (int p = 0; p < total; ++p)
            occ[mode(rng)] += 1;
        s.add_term(occ, {coef(rng), coef(rng)});
    }
    if (normalize)
        return s.normalized();
    return s.compacted();
}

inline Eigen::MatrixXcd random_unitary(std::mt19937& rng, Eigen::Index n) {
    std::normal_distribution<double> g(0.0, 1.0);
    Eigen::MatrixXcd a(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            a(i, j) = Complex{g(rng), g(rng)};
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(a);
    Eigen::MatrixXcd q = qr.householderQ();
    return q;
}

inline double max_term_diff(const PureState& a, const PureState& b) {
    double worst = 0.0;
    for (const auto& [occ, amp] : a.terms())
        worst = std::max(worst, std::abs(amp - b.amplitude(occ)));
    for (const auto& [occ, amp] : b.terms())
        worst = std::max(worst, std::abs(amp - a.amplitude(occ)));
    return worst;
}

}  // namespace heraldsim::testing
