#ifndef FOCKSIM_DEVICES_HPP
#define FOCKSIM_DEVICES_HPP

#include <optional>
#include <utility>

#include "focksim/density.hpp"
#include "focksim/moments.hpp"
#include "focksim/state.hpp"

namespace focksim::devices {

// Beam splitter with Heisenberg map
//   a_out = t a + r b,   b_out = -r* a + t* b        (a_out = Udag a U)
// The Schroedinger action is fixed by U adag Udag = t adag - r* bdag,
// U bdag Udag = r adag + t* bdag; any consistent choice reproduces the moment
// results, this one is what the tests pin down.
struct BeamSplitterParams {
    cplx t, r;
    BeamSplitterParams(cplx t_, cplx r_) : t(t_), r(r_) {
        if (std::abs(std::norm(t) + std::norm(r) - 1.0) > 1e-12) throw Error("|t|^2 + |r|^2 must be 1");
    }
    static BeamSplitterParams balanced() { return {cplx(1.0 / std::sqrt(2.0), 0.0), cplx(1.0 / std::sqrt(2.0), 0.0)}; }
};

// Two-mode squeezer with Heisenberg map a_out = c a + s bdag, b_out = c b + s adag,
// c real >= 1, c^2 - |s|^2 = 1.
struct SqueezerParams {
    double c;
    cplx s;
    SqueezerParams(double c_, cplx s_) : c(c_), s(s_) {
        if (c < 1.0 || std::abs(c * c - std::norm(s) - 1.0) > 1e-12) throw Error("squeezer needs c^2 - |s|^2 = 1, c >= 1");
    }
    static SqueezerParams from_r(double r, double phase = 0.0) {
        return {std::cosh(r), std::exp(cplx(0.0, phase)) * std::sinh(r)};
    }
};

// Per-mode gain (A) and loss (C) rates of the phase-insensitive amplifier.
struct AmplifierParams {
    double A_a = 0.0, C_a = 0.0, A_b = 0.0, C_b = 0.0;
    double t = 0.0;
    bool degenerate_a() const { return std::abs(A_a - C_a) < 1e-12 * std::max({A_a, C_a, 1.0}); }
    bool degenerate_b() const { return std::abs(A_b - C_b) < 1e-12 * std::max({A_b, C_b, 1.0}); }
    void check() const {
        if (A_a < 0 || C_a < 0 || A_b < 0 || C_b < 0) throw NegativeRate("amplifier rates must be non-negative");
        if (t < 0) throw NegativeRate("evolution time must be non-negative");
    }
};

// The four moments evolved by the amplifier channel.
struct MomentSet {
    cplx ab_dagger;
    double n_a_n_b = 0.0;
    double n_a = 0.0;
    double n_b = 0.0;
};

MomentSet moment_set(const PureState& s, int mode_a = 0, int mode_b = 1);
MomentSet moment_set(const DensityOperator& rho, int mode_a = 0, int mode_b = 1);

// --- unitaries ------------------------------------------------------------

// b -> e^{-i phi} b; amplitude at photon number n picks up e^{-i n phi}.
PureState phase_shift(const PureState& s, int mode, double phi);
DensityOperator phase_shift(const DensityOperator& rho, int mode, double phi);

// Number conserving, so exact within total-photon blocks; the two cutoffs are
// enlarged to their sum so no block is clipped.
PureState beam_splitter(const PureState& s, int mode_a, int mode_b, const BeamSplitterParams& p);
DensityOperator beam_splitter(const DensityOperator& rho, int mode_a, int mode_b, const BeamSplitterParams& p);

// D(alpha) on one mode via the exponential of alpha adag - alpha* a truncated
// to the state's cutoff; the caller provides headroom (states::displaced does).
PureState displacement(const PureState& s, int mode, cplx alpha);

struct SqueezerOutput {
    PureState state;
    // population found above the sized target cutoffs; the deviation of the
    // returned state from the untruncated squeezer output is of this order
    double leakage;
};

// Cutoffs are inflated before the exponential so the two-mode-squeezed tail
// fits; leakage above the sized target is measured after the fact and
// rejected beyond tol::leakage.
SqueezerOutput two_mode_squeezer(const PureState& s, int mode_a, int mode_b, const SqueezerParams& p);

// --- closed-form moment maps ----------------------------------------------

struct AInputMoments {
    cplx a;         // <a>
    cplx a2;        // <a^2>
    double n = 0;   // <N>
    double n2 = 0;  // <N^2>
    cplx adag_a2;   // <adag a^2>, used by the coherent-input class only
};

AInputMoments a_input_moments(const PureState& s, int mode = 0);
AInputMoments a_input_moments(const DensityOperator& rho, int mode = 0);

enum class BsInputClass { vacuum_b, coherent_b };

struct BsMapResult {
    MomentSet exact;
    // leading-order witness term in the coherent-input class, with the
    // optimal phase of beta built in when requested
    std::optional<double> leading = std::nullopt;
};

BsMapResult beam_splitter_moment_map(const AInputMoments& in, const BeamSplitterParams& p, BsInputClass cls,
                                     cplx beta = cplx(0.0, 0.0));

struct SqueezerMapResult {
    MomentSet set;           // ab_dagger here is <a b^dag>_out
    cplx ab;                 // <ab>_out
    cplx a;                  // <a>_out
    cplx b;                  // <b>_out
    cplx a2;                 // <a^2>_out
    cplx b2;                 // <b^2>_out
    cplx adag_b;             // <adag b>_out
    double a2b2_abs2;        // |<a^2 b^2>_out|^2
    double adag2_a2;         // <adag^2 a^2>_out
    double bdag2_b2;         // <bdag^2 b^2>_out
    double m2_condition;     // 2(1 - |s|^2/c^2)<N_a> + (1 - |s|^4/c^4)
};

// b mode in vacuum.
SqueezerMapResult squeezer_moment_map(const AInputMoments& in, const SqueezerParams& p);

// --- linear amplifier -------------------------------------------------------

MomentSet linear_amp_moments(const MomentSet& m0, const AmplifierParams& p);

// Everything the witness battery needs, evolved in closed form.
struct AmpWitnessMoments {
    cplx ab_dagger, ab, a, b, a2, b2;
    double n_a = 0, n_b = 0, n_a_n_b = 0;
};

AmpWitnessMoments amp_witness_moments(const PureState& s, int mode_a = 0, int mode_b = 1);
AmpWitnessMoments evolve(const AmpWitnessMoments& m0, const AmplifierParams& p);

DensityOperator lindblad_evolve(const DensityOperator& rho, const AmplifierParams& p,
                                std::optional<double> dt_override = std::nullopt);

// Smallest t with e^{(A-C)t} >= A/C per mode; empty when A <= C or C = 0.
struct ClassicalityThreshold {
    std::optional<double> t_a, t_b;
    bool separable_after(double t) const { return t_a && t_b && t >= *t_a && t >= *t_b; }
};

ClassicalityThreshold classicality_threshold(const AmplifierParams& p);

// Phase shifter + balanced splitter circuit run at phi = 0 and phi = -pi/2;
// the two number-difference readings reconstruct <a bdag>.
cplx measure_ab_dagger(const PureState& s, int mode_a = 0, int mode_b = 1);
cplx measure_ab_dagger(const DensityOperator& rho, int mode_a = 0, int mode_b = 1);

}  // namespace focksim::devices

#endif
