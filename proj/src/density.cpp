#include "focksim/density.hpp"

#include <Eigen/Dense>

#include <cmath>

namespace focksim {

cplx DensityOperator::trace() const {
    cplx t(0.0, 0.0);
    const std::size_t d = dim();
    for (std::size_t j = 0; j < d; ++j) t += matrix[j * d + j];
    return t;
}

DensityOperator to_density(const PureState& s) {
    const std::size_t d = s.amp.size();
    DensityOperator rho = DensityOperator::zeros(s.trunc);
    for (std::size_t j = 0; j < d; ++j) {
        if (s.amp[j] == cplx(0.0, 0.0)) continue;
        for (std::size_t k = 0; k < d; ++k) rho.matrix[j * d + k] = s.amp[j] * std::conj(s.amp[k]);
    }
    return rho;
}

DensityOperator mix(const std::vector<PureState>& states, const std::vector<double>& weights) {
    if (states.empty() || states.size() != weights.size()) throw ShapeMismatch("mix needs matching states and weights");
    double wsum = 0.0;
    for (double w : weights) {
        if (w < 0.0) throw Error("mixture weights must be non-negative");
        wsum += w;
    }
    if (wsum <= 0.0) throw Error("mixture weights sum to zero");
    DensityOperator rho = DensityOperator::zeros(states.front().trunc);
    const std::size_t d = rho.dim();
    for (std::size_t s = 0; s < states.size(); ++s) {
        if (states[s].trunc != rho.trunc) throw ShapeMismatch("mixture states need one truncation");
        const double w = weights[s] / wsum;
        for (std::size_t j = 0; j < d; ++j) {
            const cplx aj = states[s].amp[j];
            if (aj == cplx(0.0, 0.0)) continue;
            for (std::size_t k = 0; k < d; ++k) rho.matrix[j * d + k] += w * aj * std::conj(states[s].amp[k]);
        }
    }
    return rho;
}

DensityOperator partial_trace(const DensityOperator& rho, const std::vector<int>& keep_modes) {
    const int n = rho.mode_count();
    std::vector<bool> kept(static_cast<std::size_t>(n), false);
    std::vector<int> keep_cutoffs;
    for (int m : keep_modes) {
        if (m < 0 || m >= n) throw InvalidMode("partial_trace mode out of range");
        if (kept[static_cast<std::size_t>(m)]) throw InvalidMode("partial_trace repeated mode");
        kept[static_cast<std::size_t>(m)] = true;
    }
    for (int m = 0; m < n; ++m)
        if (kept[static_cast<std::size_t>(m)]) keep_cutoffs.push_back(rho.trunc.cutoffs[static_cast<std::size_t>(m)]);
    if (keep_cutoffs.empty()) throw ShapeMismatch("partial_trace must keep at least one mode");

    Truncation out_t(keep_cutoffs);
    DensityOperator out = DensityOperator::zeros(out_t);
    const std::size_t d = rho.dim();
    std::vector<int> js, ks, jo, ko;
    jo.resize(keep_cutoffs.size());
    ko.resize(keep_cutoffs.size());
    for (std::size_t j = 0; j < d; ++j) {
        js = rho.trunc.unflatten(j);
        for (std::size_t k = 0; k < d; ++k) {
            ks = rho.trunc.unflatten(k);
            bool diagonal_on_traced = true;
            for (int m = 0; m < n; ++m)
                if (!kept[static_cast<std::size_t>(m)] && js[static_cast<std::size_t>(m)] != ks[static_cast<std::size_t>(m)]) {
                    diagonal_on_traced = false;
                    break;
                }
            if (!diagonal_on_traced) continue;
            std::size_t p = 0;
            for (int m = 0; m < n; ++m)
                if (kept[static_cast<std::size_t>(m)]) {
                    jo[p] = js[static_cast<std::size_t>(m)];
                    ko[p] = ks[static_cast<std::size_t>(m)];
                    ++p;
                }
            out.at(out_t.flat_index(jo), out_t.flat_index(ko)) += rho.matrix[j * d + k];
        }
    }
    return out;
}

DensityOperator embed(const DensityOperator& rho, const Truncation& bigger) {
    if (bigger.mode_count() != rho.mode_count()) throw ShapeMismatch("embed mode count mismatch");
    for (int m = 0; m < rho.mode_count(); ++m)
        if (bigger.cutoffs[static_cast<std::size_t>(m)] < rho.trunc.cutoffs[static_cast<std::size_t>(m)])
            throw ShapeMismatch("embed target smaller than source");
    DensityOperator out = DensityOperator::zeros(bigger);
    const std::size_t d = rho.dim(), D = out.dim();
    for (std::size_t j = 0; j < d; ++j) {
        const std::size_t jb = bigger.flat_index(rho.trunc.unflatten(j));
        for (std::size_t k = 0; k < d; ++k) {
            const cplx v = rho.matrix[j * d + k];
            if (v == cplx(0.0, 0.0)) continue;
            out.matrix[jb * D + bigger.flat_index(rho.trunc.unflatten(k))] = v;
        }
    }
    return out;
}

DensityCheck validate(const DensityOperator& rho) {
    const std::size_t d = rho.dim();
    double herm = 0.0;
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = j; k < d; ++k)
            herm = std::max(herm, std::abs(rho.at(j, k) - std::conj(rho.at(k, j))));
    const double trace_defect = std::abs(rho.trace() - cplx(1.0, 0.0));

    Eigen::MatrixXcd m(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k)
            m(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) =
                0.5 * (rho.at(j, k) + std::conj(rho.at(k, j)));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
    const double min_ev = solver.eigenvalues().minCoeff();
    return DensityCheck{herm, trace_defect, min_ev};
}

void hermitize(DensityOperator& rho) {
    const std::size_t d = rho.dim();
    for (std::size_t j = 0; j < d; ++j) {
        rho.at(j, j) = cplx(rho.at(j, j).real(), 0.0);
        for (std::size_t k = j + 1; k < d; ++k) {
            const cplx avg = 0.5 * (rho.at(j, k) + std::conj(rho.at(k, j)));
            rho.at(j, k) = avg;
            rho.at(k, j) = std::conj(avg);
        }
    }
}

double fidelity(const PureState& phi, const DensityOperator& rho) {
    if (phi.trunc != rho.trunc) throw ShapeMismatch("fidelity truncation mismatch");
    const std::size_t d = rho.dim();
    cplx acc(0.0, 0.0);
    for (std::size_t j = 0; j < d; ++j) {
        if (phi.amp[j] == cplx(0.0, 0.0)) continue;
        for (std::size_t k = 0; k < d; ++k) acc += std::conj(phi.amp[j]) * rho.at(j, k) * phi.amp[k];
    }
    return acc.real();
}

DensityOperator thermal_density(double nbar, int cutoff) {
    if (nbar < 0.0) throw Error("thermal occupation must be non-negative");
    Truncation t({cutoff});
    DensityOperator rho = DensityOperator::zeros(t);
    double norm = 0.0;
    std::vector<double> p(static_cast<std::size_t>(cutoff) + 1);
    const double ratio = nbar / (1.0 + nbar);
    double w = 1.0 / (1.0 + nbar);
    for (int n = 0; n <= cutoff; ++n) {
        p[static_cast<std::size_t>(n)] = w;
        norm += w;
        w *= ratio;
    }
    for (int n = 0; n <= cutoff; ++n) rho.at(static_cast<std::size_t>(n), static_cast<std::size_t>(n)) = p[static_cast<std::size_t>(n)] / norm;
    return rho;
}

double population_above(const DensityOperator& rho, int mode, int top) {
    const std::size_t d = rho.dim();
    double pop = 0.0;
    for (std::size_t j = 0; j < d; ++j) {
        const auto ns = rho.trunc.unflatten(j);
        if (ns[static_cast<std::size_t>(mode)] > top) pop += rho.at(j, j).real();
    }
    return pop;
}

}  // namespace focksim
