#ifndef FOCKSIM_MOMENTS_HPP
#define FOCKSIM_MOMENTS_HPP

#include <utility>
#include <vector>

#include "focksim/density.hpp"
#include "focksim/state.hpp"

namespace focksim {

// Normally ordered monomial: per mode i the factor (adag_i)^p_i a_i^q_i.
struct MonomialMoment {
    struct Powers {
        int creation = 0;
        int annihilation = 0;
    };
    std::vector<Powers> modes;

    MonomialMoment() = default;
    explicit MonomialMoment(int mode_count) : modes(static_cast<std::size_t>(mode_count)) {}

    MonomialMoment& set(int mode, int p, int q) {
        if (p < 0 || q < 0) throw Error("monomial powers must be non-negative");
        modes.at(static_cast<std::size_t>(mode)) = Powers{p, q};
        return *this;
    }

    MonomialMoment adjoint() const {
        MonomialMoment m = *this;
        for (auto& pw : m.modes) std::swap(pw.creation, pw.annihilation);
        return m;
    }
};

// <prod_i (adag_i)^p_i a_i^q_i>, evaluated with annihilators only: the bra
// copy absorbs the creation powers, the ket copy the annihilation powers, so
// every normally ordered monomial is exact within the truncated subspace.
cplx expect(const PureState& s, const MonomialMoment& m);
cplx expect(const DensityOperator& rho, const MonomialMoment& m);

// Same monomial with each a_i replaced by a_i - <a_i> (creators conjugately),
// expanded exactly through the binomial sum into plain moments.
cplx central_expect(const PureState& s, const MonomialMoment& m);
cplx central_expect(const DensityOperator& rho, const MonomialMoment& m);

// Variances of u = |xi| x_a + x_b / xi and v = |xi| p_a - p_b / xi with
// x = (adag + a)/sqrt(2), p = i(adag - a)/sqrt(2). Negative xi flips the
// relative sign between the modes, which the minimization over xi exploits.
std::pair<double, double> quadrature_uv_variance(const PureState& s, double xi, int mode_a = 0, int mode_b = 1);
std::pair<double, double> quadrature_uv_variance(const DensityOperator& rho, double xi, int mode_a = 0, int mode_b = 1);

// Convenience single-mode / pair monomials.
MonomialMoment monomial_pair(int mode_count, int mode_a, int pa, int qa, int mode_b, int pb, int qb);
MonomialMoment monomial_single(int mode_count, int mode, int p, int q);

}  // namespace focksim

#endif
