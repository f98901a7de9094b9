#ifndef FOCKSIM_PAPER_FORMULAS_HPP
#define FOCKSIM_PAPER_FORMULAS_HPP

#include <optional>

#include "focksim/devices.hpp"

namespace focksim::formulas {

// Closed-form expressions kept exactly as published, serving as oracles for
// the numerical pipeline. Where two printed variants exist they are both
// implemented and adjudicated against the Fock computation elsewhere.

// Photon-added coherent pair: <Na Nb> - |<a bdag>|^2 in the published form,
// bracket over (|alpha+beta|^2 + 2). Negative means the product witness
// detects.
double photon_added_witness(cplx alpha, cplx beta);

// Same bracket over the squared normalization. The Fock oracle certifies this
// scaling, not the published one; the adjudication is part of the
// reproduction manifest.
double photon_added_witness_adjudicated(cplx alpha, cplx beta);

struct CatWitnessResult {
    double general;                      // the general printed form
    std::optional<double> real_branch;   // the alpha beta* real-positive specialization
    bool real_branch_applicable;
};

// <Na Nb> - |<a bdag>|^2 for the symmetric two-mode coherent superposition.
// require_real_branch throws DomainViolation when alpha beta* is not real
// positive instead of returning an empty branch value.
CatWitnessResult cat_witness(cplx alpha, cplx beta, bool require_real_branch = false);

struct NumberPairValues {
    double lhs;              // (k1!)^2 / (4 (k2!)^2)
    double rhs;              // k1!/(2 k2 - k1)! on the 2 k2 >= k1 branch, else 0
    bool high_branch;        // 2 k2 >= k1
    bool detect_boundary;    // k1! (2 k2 - k1)! > 4 (k2!)^2 on the high branch, always true otherwise
};

NumberPairValues number_pair_values(int k1, int k2);

// Output moments for an arbitrary a mode against vacuum.
devices::MomentSet bs_output_moments_vacuum(const devices::AInputMoments& a, cplx t, cplx r);

struct BsM2Values {
    double lhs;        // |<a^2 bdag^2>_out|^2
    double rhs;        // <adag^2 a^2 bdag^2 b^2>_out
    double reduced_lhs;  // <N(N-1)>^2
    double reduced_rhs;  // <N(N-1)(N-2)(N-3)>
};

struct AInputMoments4 {
    double n, n2, n3, n4;  // <N>, <N^2>, <N^3>, <N^4>
};

BsM2Values bs_m2_moments(const AInputMoments4& a, cplx t, cplx r);

// Highest-order-in-beta term of |<a bdag>|^2 - <Na Nb> at the splitter output,
// with phi = 2(theta_t - theta_r - theta_beta).
double bs_coherent_leading(cplx beta, cplx t, cplx r, const devices::AInputMoments& a);

struct DuanBsChain {
    double expression;     // (Du)^2 + (Dv)^2 at the given xi
    double minimized;      // +-[t r* (<a^2>-<a>^2) + c.c.] + 2|rt|(<N>-|<a>|^2), sign minimizing
    bool squeezing;        // |<a^2> - <a>^2| > <N> - |<a>|^2
};

DuanBsChain duan_bs_chain(const devices::AInputMoments& a, cplx t, cplx r, double xi = 1.0);

struct AmpWitnessForms {
    std::optional<double> loss_scaled;          // e^{-(Ca+Cb)t}(|<ab+>|^2 - <NaNb>)_0, loss-only branch
    std::optional<double> high_gain_bracket;    // G_ab^2 coefficient, gain-dominated branch
};

AmpWitnessForms amp_witness_forms(const devices::MomentSet& m0, const devices::AmplifierParams& p);

double factorial(int k);

}  // namespace focksim::formulas

#endif
