#include "focksim/expm.hpp"

#include <cmath>

namespace focksim {

namespace {

double frob_norm(const std::vector<cplx>& v) {
    double s = 0.0;
    for (const cplx& x : v) s += std::norm(x);
    return std::sqrt(s);
}

struct AxisInfo {
    int dim;
    std::size_t stride;
};

// Apply one polynomial term's ladder string to a flat buffer. `raise_map`
// tells whether a creation factor maps to the raising shift (ket side) or to
// the lowering shift (right multiplication on the bra side).
void apply_term(const std::vector<cplx>& in, std::vector<cplx>& out, std::vector<cplx>& scratch,
                const GenTerm& term, const std::vector<AxisInfo>& axes, bool ket_side) {
    out = in;
    for (const auto& f : term.factors) {
        const AxisInfo& ax = axes[static_cast<std::size_t>(f.mode)];
        const bool raise = ket_side ? (f.kind == LadderKind::creation) : (f.kind == LadderKind::annihilation);
        if (raise)
            detail::axis_raise(out, scratch, ax.dim, ax.stride);
        else
            detail::axis_lower(out, scratch, ax.dim, ax.stride);
        out.swap(scratch);
    }
    for (cplx& x : out) x *= term.coeff;
}

double norm_bound(const Generator& g, const std::vector<AxisInfo>& axes) {
    double bound = 0.0;
    for (const auto& t : g) {
        double factor = std::abs(t.coeff);
        for (const auto& f : t.factors) factor *= std::sqrt(static_cast<double>(axes[static_cast<std::size_t>(f.mode)].dim));
        bound += factor;
    }
    return bound;
}

void exp_action(std::vector<cplx>& data, const Generator& g, const std::vector<AxisInfo>& axes, bool ket_side) {
    const double bound = norm_bound(g, axes);
    const int steps = std::max(1, static_cast<int>(std::ceil(bound / 0.5)));
    const double inv_steps = 1.0 / static_cast<double>(steps);

    std::vector<cplx> term, acc, applied, scratch;
    for (int s = 0; s < steps; ++s) {
        acc = data;
        term = data;
        for (int k = 1; k <= 40; ++k) {
            // term <- (G/steps) term / k
            std::vector<cplx> next(term.size(), cplx(0.0, 0.0));
            for (const auto& t : g) {
                apply_term(term, applied, scratch, t, axes, ket_side);
                for (std::size_t i = 0; i < next.size(); ++i) next[i] += applied[i];
            }
            const double scale = inv_steps / static_cast<double>(k);
            for (cplx& x : next) x *= scale;
            term.swap(next);
            for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += term[i];
            if (frob_norm(term) <= 1e-16 * frob_norm(acc)) break;
        }
        data.swap(acc);
    }
}

}  // namespace

void apply_exp_generator(PureState& s, const Generator& g) {
    std::vector<AxisInfo> axes(static_cast<std::size_t>(s.mode_count()));
    for (int m = 0; m < s.mode_count(); ++m) axes[static_cast<std::size_t>(m)] = AxisInfo{s.trunc.dim(m), s.trunc.stride(m)};
    exp_action(s.amp, g, axes, true);
}

void apply_exp_generator(DensityOperator& rho, const Generator& g) {
    const std::size_t d = rho.dim();
    std::vector<AxisInfo> ket(static_cast<std::size_t>(rho.mode_count()));
    std::vector<AxisInfo> bra(static_cast<std::size_t>(rho.mode_count()));
    for (int m = 0; m < rho.mode_count(); ++m) {
        ket[static_cast<std::size_t>(m)] = AxisInfo{rho.trunc.dim(m), rho.trunc.stride(m) * d};
        bra[static_cast<std::size_t>(m)] = AxisInfo{rho.trunc.dim(m), rho.trunc.stride(m)};
    }
    exp_action(rho.matrix, g, ket, true);
    Generator neg = g;
    for (auto& t : neg) t.coeff = -t.coeff;
    exp_action(rho.matrix, neg, bra, false);
}

}  // namespace focksim
