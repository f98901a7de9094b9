#ifndef FOCKSIM_DENSITY_HPP
#define FOCKSIM_DENSITY_HPP

#include <vector>

#include "focksim/state.hpp"

namespace focksim {

// Operator on the truncated tensor basis, stored as a flat 2n-axis tensor:
// ket axes first, then bra axes, each with the per-mode dims of `trunc`.
// matrix[j*N + k] = <j|rho|k> with j, k flat basis indices.
struct DensityOperator {
    Truncation trunc;
    std::vector<cplx> matrix;

    DensityOperator() = default;
    DensityOperator(Truncation t, std::vector<cplx> m) : trunc(std::move(t)), matrix(std::move(m)) {
        if (matrix.size() != trunc.size() * trunc.size()) throw ShapeMismatch("density matrix size mismatch");
    }

    static DensityOperator zeros(const Truncation& t) {
        return DensityOperator(t, std::vector<cplx>(t.size() * t.size(), cplx(0.0, 0.0)));
    }

    int mode_count() const { return trunc.mode_count(); }
    std::size_t dim() const { return trunc.size(); }
    cplx trace() const;
    cplx& at(std::size_t j, std::size_t k) { return matrix[j * dim() + k]; }
    cplx at(std::size_t j, std::size_t k) const { return matrix[j * dim() + k]; }
};

struct DensityCheck {
    double hermiticity_defect;  // max |rho - rho^dag|
    double trace_defect;        // |tr(rho) - 1|
    double min_eigenvalue;
    bool physical(double herm_tol = tol::hermiticity, double psd_tol = tol::psd) const {
        return hermiticity_defect <= herm_tol && trace_defect <= herm_tol && min_eigenvalue >= -psd_tol;
    }
};

DensityOperator to_density(const PureState& s);

// Convex combination sum_i w[i] |states[i]><states[i]|; weights renormalized.
DensityOperator mix(const std::vector<PureState>& states, const std::vector<double>& weights);

DensityOperator partial_trace(const DensityOperator& rho, const std::vector<int>& keep_modes);

DensityOperator embed(const DensityOperator& rho, const Truncation& bigger);

DensityCheck validate(const DensityOperator& rho);

void hermitize(DensityOperator& rho);

// <phi|rho|phi>
double fidelity(const PureState& phi, const DensityOperator& rho);

// Truncated single-mode thermal state with mean occupation nbar, renormalized.
DensityOperator thermal_density(double nbar, int cutoff);

double population_above(const DensityOperator& rho, int mode, int top);

}  // namespace focksim

#endif
