#ifndef FOCKSIM_WITNESSES_HPP
#define FOCKSIM_WITNESSES_HPP

#include <optional>
#include <string>

#include "focksim/devices.hpp"

namespace focksim::witness {

enum class Verdict { detected, not_detected, inconclusive };

std::string to_string(Verdict v);

// One witness evaluation. margin = lhs - rhs with the sign convention that
// margin > margin_tolerance means detected; for duan_simon the margin is
// flipped so the same convention holds.
struct WitnessReport {
    std::string condition;
    int m = 0, n = 0;
    std::optional<double> xi;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
    Verdict verdict = Verdict::inconclusive;
};

WitnessReport make_report(std::string condition, double lhs, double rhs, double margin_tol = tol::margin);

// |<a^m bdag^n>|^2 > <adag^m a^m bdag^n b^n>
WitnessReport hz_product(const PureState& s, int m = 1, int n = 1, int mode_a = 0, int mode_b = 1,
                         double margin_tol = tol::margin);
WitnessReport hz_product(const DensityOperator& rho, int m = 1, int n = 1, int mode_a = 0, int mode_b = 1,
                         double margin_tol = tol::margin);
WitnessReport hz_product(const devices::MomentSet& set, double margin_tol = tol::margin);

// |<a^m b^n>|^2 > <adag^m a^m><bdag^n b^n>
WitnessReport hz_sum(const PureState& s, int m = 1, int n = 1, int mode_a = 0, int mode_b = 1,
                     double margin_tol = tol::margin);
WitnessReport hz_sum(const DensityOperator& rho, int m = 1, int n = 1, int mode_a = 0, int mode_b = 1,
                     double margin_tol = tol::margin);

// m = n = 1 product condition on the centered operators a - <a>, b - <b>.
WitnessReport hz_central(const PureState& s, int mode_a = 0, int mode_b = 1, double margin_tol = tol::margin);
WitnessReport hz_central(const DensityOperator& rho, int mode_a = 0, int mode_b = 1, double margin_tol = tol::margin);

// (Delta u)^2 + (Delta v)^2 < xi^2 + 1/xi^2. With xi unset the margin is
// maximized over xi, both signs included (the relative sign between the modes
// is part of the optimization).
WitnessReport duan_simon(const PureState& s, std::optional<double> xi = std::nullopt, int mode_a = 0, int mode_b = 1,
                         double margin_tol = tol::margin);
WitnessReport duan_simon(const DensityOperator& rho, std::optional<double> xi = std::nullopt, int mode_a = 0,
                         int mode_b = 1, double margin_tol = tol::margin);

struct TripartiteReport {
    WitnessReport ab;
    WitnessReport bc;
    bool genuine = false;
};

// Pairwise m = n = 1 product conditions on (a,b) and (b,c); both detections
// together rule out every biseparable form. One sided: genuine = false
// carries no claim. The mode triple can be relabeled.
TripartiteReport tripartite_genuine(const PureState& s, int mode_a = 0, int mode_b = 1, int mode_c = 2,
                                    double margin_tol = tol::margin);
TripartiteReport tripartite_genuine(const DensityOperator& rho, int mode_a = 0, int mode_b = 1, int mode_c = 2,
                                    double margin_tol = tol::margin);

// Single-mode input diagnostics that feed the device entanglement conditions.
struct InputPredicates {
    struct Entry {
        bool holds = false;
        double lhs = 0.0;
        double rhs = 0.0;
    };
    Entry sub_poissonian;   // <N> > (Delta N)^2
    Entry squeezing;        // |<a^2> - <a>^2| > <N> - |<a>|^2
    Entry fourth_moment;    // <N(N-1)>^2 > <N(N-1)(N-2)(N-3)>
    Entry pair_moment;      // |<a^2>| > <N>
};

InputPredicates input_predicates(const PureState& s, int mode = 0);
InputPredicates input_predicates(const DensityOperator& rho, int mode = 0);

struct DuanParametricResult {
    bool satisfied = false;
    double lhs = 0.0;
    double rhs = 0.0;
    double eta = 1.0;
};

// 2|s| sqrt(eta c^2 + |s|^2 - 1) < c |s + s*| sqrt(eta + 1),
// eta = 2(<N_a> - |<a>|^2) + 1 when computed from an input state.
DuanParametricResult duan_parametric_condition(double eta, const devices::SqueezerParams& p);
DuanParametricResult duan_parametric_condition(const PureState& input_a, const devices::SqueezerParams& p, int mode = 0);
DuanParametricResult duan_parametric_condition(const DensityOperator& input_a, const devices::SqueezerParams& p, int mode = 0);

// Same battery evaluated from closed-form amplifier moments.
WitnessReport hz_product(const devices::AmpWitnessMoments& m, double margin_tol = tol::margin);
WitnessReport hz_sum11(const devices::AmpWitnessMoments& m, double margin_tol = tol::margin);
WitnessReport hz_central(const devices::AmpWitnessMoments& m, double margin_tol = tol::margin);
WitnessReport duan_simon(const devices::AmpWitnessMoments& m, std::optional<double> xi = std::nullopt,
                         double margin_tol = tol::margin);

}  // namespace focksim::witness

#endif
