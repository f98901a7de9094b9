#ifndef FOCKSIM_STATE_HPP
#define FOCKSIM_STATE_HPP

#include <vector>

#include "focksim/truncation.hpp"

namespace focksim {

enum class LadderKind { annihilation, creation };

// Pure state on the truncated tensor basis. Constructors and device unitaries
// keep the norm within norm_tolerance; intermediates produced by raw ladder
// action carry normalized = false.
struct PureState {
    Truncation trunc;
    std::vector<cplx> amp;
    double norm_tolerance = tol::norm;
    bool normalized = true;

    PureState() = default;
    PureState(Truncation t, std::vector<cplx> a, bool norm_flag = true)
        : trunc(std::move(t)), amp(std::move(a)), normalized(norm_flag) {
        if (amp.size() != trunc.size()) throw ShapeMismatch("amplitude count does not match truncation");
    }

    static PureState zeros(const Truncation& t) {
        return PureState(t, std::vector<cplx>(t.size(), cplx(0.0, 0.0)), false);
    }

    int mode_count() const { return trunc.mode_count(); }
    double norm_sq() const;
    cplx at(const std::vector<int>& ns) const { return amp[trunc.flat_index(ns)]; }
};

// Conjugate-linear in the first argument.
cplx inner(const PureState& s1, const PureState& s2);

double fidelity(const PureState& s1, const PureState& s2);

PureState normalize(const PureState& s);

// Exact ladder algebra; creation weight pushed past the cutoff is accumulated
// and rejected once it exceeds overflow_tol (relative to the input norm).
PureState apply_ladder(const PureState& s, int mode, LadderKind kind, int power,
                       double overflow_tol = tol::overflow);

PureState tensor(const std::vector<PureState>& states);
PureState tensor(const PureState& a, const PureState& b);

// Copy into a larger truncation (each cutoff >= old one).
PureState embed(const PureState& s, const Truncation& bigger);

// Population with level index above `top` on the given mode.
double population_above(const PureState& s, int mode, int top);

}  // namespace focksim

#endif
