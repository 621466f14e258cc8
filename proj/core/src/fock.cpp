#include "heraldsim/fock.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <set>
#include <sstream>

namespace heraldsim {

ModeRegistry::ModeRegistry(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty())
        throw SimError("mode registry must not be empty");
    std::set<std::string> seen;
    for (const auto& n : names_)
        if (!seen.insert(n).second)
            throw DuplicateMode("duplicate mode label: " + n);
}

bool ModeRegistry::contains(const std::string& label) const {
    return std::find(names_.begin(), names_.end(), label) != names_.end();
}

std::size_t ModeRegistry::index(const std::string& label) const {
    auto it = std::find(names_.begin(), names_.end(), label);
    if (it == names_.end())
        throw RegistryMismatch("unknown mode label: " + label);
    return static_cast<std::size_t>(it - names_.begin());
}

RegistryPtr make_registry(std::vector<std::string> names) {
    return std::make_shared<const ModeRegistry>(std::move(names));
}

namespace {

void require_same_registry(const PureState& a, const PureState& b) {
    if (*a.registry() != *b.registry())
        throw RegistryMismatch("states live on different mode registries");
}

int total_photons(const Occupation& occ) {
    return std::accumulate(occ.begin(), occ.end(), 0);
}

}  // namespace

PureState::PureState(RegistryPtr registry, int n_max)
    : registry_(std::move(registry)), n_max_(n_max) {
    if (!registry_)
        throw SimError("null registry");
    if (n_max_ < 0)
        throw SimError("n_max must be non-negative");
}

Complex PureState::amplitude(const Occupation& occ) const {
    auto it = terms_.find(occ);
    return it == terms_.end() ? Complex{0.0, 0.0} : it->second;
}

void PureState::add_term(const Occupation& occ, Complex amp) {
    if (occ.size() != registry_->size())
        throw RegistryMismatch("occupation length does not match registry size");
    for (int c : occ)
        if (c < 0)
            throw SimError("negative occupation");
    if (total_photons(occ) > n_max_)
        throw TruncationExceeded("term exceeds N_max = " + std::to_string(n_max_));
    terms_[occ] += amp;
}

double PureState::squared_norm() const {
    double s = 0.0;
    for (const auto& [occ, amp] : terms_)
        s += std::norm(amp);
    return s;
}

double PureState::norm() const { return std::sqrt(squared_norm()); }

PureState PureState::normalized() const {
    double n = norm();
    if (n < kPruneEpsilon)
        throw ZeroTrace("cannot normalize a (numerically) zero state");
    return (*this * Complex{1.0 / n, 0.0}).compacted();
}

PureState PureState::compacted(double eps) const {
    PureState out(registry_, n_max_);
    for (const auto& [occ, amp] : terms_)
        if (std::abs(amp) >= eps)
            out.terms_[occ] = amp;
    return out;
}

PureState PureState::extended(const RegistryPtr& target) const {
    std::vector<std::size_t> where(registry_->size());
    for (std::size_t i = 0; i < registry_->size(); ++i)
        where[i] = target->index(registry_->name(i));
    PureState out(target, n_max_);
    for (const auto& [occ, amp] : terms_) {
        Occupation big(target->size(), 0);
        for (std::size_t i = 0; i < occ.size(); ++i)
            big[where[i]] = occ[i];
        out.terms_[big] = amp;
    }
    return out;
}

PureState PureState::operator+(const PureState& other) const {
    require_same_registry(*this, other);
    PureState out(registry_, std::max(n_max_, other.n_max_));
    out.terms_ = terms_;
    for (const auto& [occ, amp] : other.terms_)
        out.terms_[occ] += amp;
    return out;
}

PureState PureState::operator-(const PureState& other) const {
    return *this + (other * Complex{-1.0, 0.0});
}

PureState PureState::operator*(Complex scale) const {
    PureState out(registry_, n_max_);
    for (const auto& [occ, amp] : terms_)
        out.terms_[occ] = amp * scale;
    return out;
}

std::string PureState::to_text() const {
    std::ostringstream os;
    char buf[64];
    for (const auto& [occ, amp] : terms_) {
        for (std::size_t i = 0; i < occ.size(); ++i) {
            if (i) os << ',';
            os << occ[i];
        }
        std::snprintf(buf, sizeof buf, " %.17g %.17g", amp.real(), amp.imag());
        os << buf << '\n';
    }
    return os.str();
}

PureState vacuum(const RegistryPtr& registry, int n_max) {
    PureState s(registry, n_max);
    s.add_term(Occupation(registry->size(), 0), Complex{1.0, 0.0});
    return s;
}

PureState apply_creation(const PureState& state, std::size_t mode) {
    if (mode >= state.registry()->size())
        throw RegistryMismatch("mode index out of range");
    PureState out(state.registry(), state.n_max());
    for (const auto& [occ, amp] : state.terms()) {
        Occupation raised = occ;
        raised[mode] += 1;
        out.add_term(raised, amp * std::sqrt(static_cast<double>(raised[mode])));
    }
    return out;
}

PureState apply_creation(const PureState& state, const std::string& mode) {
    return apply_creation(state, state.registry()->index(mode));
}

PureState apply_creation_combo(const PureState& state, const std::vector<Complex>& coeffs) {
    if (coeffs.size() != state.registry()->size())
        throw RegistryMismatch("coefficient vector length does not match registry");
    PureState out(state.registry(), state.n_max());
    for (const auto& [occ, amp] : state.terms()) {
        for (std::size_t j = 0; j < coeffs.size(); ++j) {
            if (coeffs[j] == Complex{0.0, 0.0})
                continue;
            Occupation raised = occ;
            raised[j] += 1;
            out.add_term(raised, amp * coeffs[j] * std::sqrt(static_cast<double>(raised[j])));
        }
    }
    return out;
}

Complex inner(const PureState& lhs, const PureState& rhs) {
    require_same_registry(lhs, rhs);
    // iterate the smaller map
    const PureState& a = lhs.terms().size() <= rhs.terms().size() ? lhs : rhs;
    const PureState& b = &a == &lhs ? rhs : lhs;
    Complex s{0.0, 0.0};
    for (const auto& [occ, amp] : a.terms()) {
        auto it = b.terms().find(occ);
        if (it == b.terms().end())
            continue;
        if (&a == &lhs)
            s += std::conj(amp) * it->second;
        else
            s += std::conj(it->second) * amp;
    }
    return s;
}

PureState project_pattern(const PureState& state, const std::map<std::string, int>& pattern) {
    const auto& reg = *state.registry();
    std::vector<int> required(reg.size(), -1);  // -1: mode is kept
    for (const auto& [label, count] : pattern) {
        if (count < 0)
            throw SimError("pattern count must be non-negative");
        required[reg.index(label)] = count;
    }
    std::vector<std::string> kept;
    for (std::size_t i = 0; i < reg.size(); ++i)
        if (required[i] < 0)
            kept.push_back(reg.name(i));
    if (kept.empty())
        throw RegistryMismatch("pattern must leave at least one mode");
    if (pattern.empty())
        return state;

    auto out_reg = make_registry(kept);
    PureState out(out_reg, state.n_max());
    for (const auto& [occ, amp] : state.terms()) {
        bool match = true;
        Occupation reduced;
        reduced.reserve(kept.size());
        for (std::size_t i = 0; i < occ.size(); ++i) {
            if (required[i] >= 0) {
                if (occ[i] != required[i]) {
                    match = false;
                    break;
                }
            } else {
                reduced.push_back(occ[i]);
            }
        }
        if (match)
            out.add_term(reduced, amp);
    }
    return out;
}

double StateEnsemble::trace() const {
    double t = 0.0;
    for (const auto& b : branches)
        t += b.weight;
    return t;
}

StateEnsemble trace_out(const PureState& state, const std::vector<std::string>& modes) {
    const auto& reg = *state.registry();
    std::vector<bool> traced(reg.size(), false);
    for (const auto& label : modes)
        traced[reg.index(label)] = true;
    std::vector<std::string> kept;
    for (std::size_t i = 0; i < reg.size(); ++i)
        if (!traced[i])
            kept.push_back(reg.name(i));
    if (kept.empty())
        throw RegistryMismatch("trace_out must leave at least one mode");
    auto out_reg = make_registry(kept);

    // group terms by the occupation of the traced modes
    std::map<Occupation, PureState> groups;
    for (const auto& [occ, amp] : state.terms()) {
        Occupation key, reduced;
        for (std::size_t i = 0; i < occ.size(); ++i)
            (traced[i] ? key : reduced).push_back(occ[i]);
        auto [it, inserted] = groups.try_emplace(key, out_reg, state.n_max());
        it->second.add_term(reduced, amp);
    }

    StateEnsemble out;
    for (auto& [key, group] : groups) {
        double w = group.squared_norm();
        if (w < kPruneEpsilon * kPruneEpsilon)
            continue;
        out.branches.push_back({w, group.normalized()});
    }
    return out;
}

}  // namespace heraldsim
