#pragma once

#include <complex>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "heraldsim/errors.hpp"

namespace heraldsim {

using Complex = std::complex<double>;

/// Photon counts per registry mode; doubles as the sparse-map key.
/// std::map keeps term iteration in lexicographic (canonical) order.
using Occupation = std::vector<int>;

inline constexpr int kDefaultNMax = 8;
inline constexpr double kPruneEpsilon = 1e-14;

/// Ordered, unique mode labels. States and transforms refer to modes by
/// index into a registry; label order is fixed at construction.
class ModeRegistry {
public:
    explicit ModeRegistry(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }
    bool contains(const std::string& label) const;
    std::size_t index(const std::string& label) const;

    bool operator==(const ModeRegistry& other) const { return names_ == other.names_; }
    bool operator!=(const ModeRegistry& other) const { return !(*this == other); }

private:
    std::vector<std::string> names_;
};

using RegistryPtr = std::shared_ptr<const ModeRegistry>;

RegistryPtr make_registry(std::vector<std::string> names);

/// Sparse multimode Fock state: occupation vector -> complex amplitude.
/// Total photon number of every term is bounded by n_max; exceeding it is
/// a hard TruncationExceeded, never a silent drop.
class PureState {
public:
    using TermMap = std::map<Occupation, Complex>;

    explicit PureState(RegistryPtr registry, int n_max = kDefaultNMax);

    const RegistryPtr& registry() const { return registry_; }
    int n_max() const { return n_max_; }
    const TermMap& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    Complex amplitude(const Occupation& occ) const;

    /// Accumulate amp onto a term; total photon number is checked against n_max.
    void add_term(const Occupation& occ, Complex amp);

    double squared_norm() const;
    double norm() const;

    PureState normalized() const;
    /// Drop terms with |amp| < eps.
    PureState compacted(double eps = kPruneEpsilon) const;

    /// Embed into a larger registry (zero occupation on the new modes).
    /// Every mode of the current registry must appear in `target`.
    PureState extended(const RegistryPtr& target) const;

    PureState operator+(const PureState& other) const;
    PureState operator-(const PureState& other) const;
    PureState operator*(Complex scale) const;

    /// One line per term: "<comma-separated counts> <re> <im>",
    /// lexicographic term order, 17 significant digits.
    std::string to_text() const;

private:
    RegistryPtr registry_;
    int n_max_;
    TermMap terms_;
};

PureState vacuum(const RegistryPtr& registry, int n_max = kDefaultNMax);

/// Creation operator on one mode: |n> -> sqrt(n+1) |n+1>, linear over terms.
PureState apply_creation(const PureState& state, std::size_t mode);
PureState apply_creation(const PureState& state, const std::string& mode);

/// Linear combination of creation operators, sum_j coeffs[j] b_j^dag.
PureState apply_creation_combo(const PureState& state, const std::vector<Complex>& coeffs);

/// <lhs|rhs>; conjugate-linear in lhs.
Complex inner(const PureState& lhs, const PureState& rhs);

/// Project the pattern modes onto the given photon counts and drop them
/// from the registry. The result is UNNORMALIZED: its squared norm is the
/// probability of observing the pattern. Remaining modes keep their order.
PureState project_pattern(const PureState& state, const std::map<std::string, int>& pattern);

struct EnsembleBranch {
    double weight = 0.0;
    PureState state;
};

/// Weighted list of normalized pure states (incoherent mixture).
struct StateEnsemble {
    std::vector<EnsembleBranch> branches;

    double trace() const;
};

/// Trace out the given modes by grouping terms on their occupations; each
/// group becomes one branch with weight = squared norm of the group.
/// Exact whenever the traced modes are never interfered afterwards.
StateEnsemble trace_out(const PureState& state, const std::vector<std::string>& modes);

}  // namespace heraldsim
