#include "focksim/state.hpp"

#include <cmath>

namespace focksim {

namespace detail {

void axis_lower(const std::vector<cplx>& in, std::vector<cplx>& out, int dim, std::size_t stride) {
    out.assign(in.size(), cplx(0.0, 0.0));
    const std::size_t block = static_cast<std::size_t>(dim) * stride;
    for (std::size_t base = 0; base < in.size(); base += block) {
        for (int n = 0; n + 1 < dim; ++n) {
            const double c = std::sqrt(static_cast<double>(n + 1));
            const std::size_t dst = base + static_cast<std::size_t>(n) * stride;
            const std::size_t src = dst + stride;
            for (std::size_t i = 0; i < stride; ++i) out[dst + i] = c * in[src + i];
        }
    }
}

double axis_raise(const std::vector<cplx>& in, std::vector<cplx>& out, int dim, std::size_t stride) {
    out.assign(in.size(), cplx(0.0, 0.0));
    const std::size_t block = static_cast<std::size_t>(dim) * stride;
    double dropped = 0.0;
    for (std::size_t base = 0; base < in.size(); base += block) {
        for (int n = dim - 1; n >= 1; --n) {
            const double c = std::sqrt(static_cast<double>(n));
            const std::size_t dst = base + static_cast<std::size_t>(n) * stride;
            const std::size_t src = dst - stride;
            for (std::size_t i = 0; i < stride; ++i) out[dst + i] = c * in[src + i];
        }
        // weight of the component that would land on level dim
        const std::size_t top = base + static_cast<std::size_t>(dim - 1) * stride;
        for (std::size_t i = 0; i < stride; ++i) dropped += static_cast<double>(dim) * std::norm(in[top + i]);
    }
    return dropped;
}

void axis_scale(std::vector<cplx>& data, int dim, std::size_t stride, const std::vector<cplx>& factor) {
    const std::size_t block = static_cast<std::size_t>(dim) * stride;
    for (std::size_t base = 0; base < data.size(); base += block) {
        for (int n = 0; n < dim; ++n) {
            const cplx f = factor[static_cast<std::size_t>(n)];
            const std::size_t off = base + static_cast<std::size_t>(n) * stride;
            for (std::size_t i = 0; i < stride; ++i) data[off + i] *= f;
        }
    }
}

}  // namespace detail

double PureState::norm_sq() const {
    double s = 0.0;
    for (const cplx& a : amp) s += std::norm(a);
    return s;
}

cplx inner(const PureState& s1, const PureState& s2) {
    if (s1.trunc != s2.trunc) throw ShapeMismatch("inner product needs matching truncations");
    cplx acc(0.0, 0.0);
    for (std::size_t i = 0; i < s1.amp.size(); ++i) acc += std::conj(s1.amp[i]) * s2.amp[i];
    return acc;
}

double fidelity(const PureState& s1, const PureState& s2) { return std::norm(inner(s1, s2)); }

PureState normalize(const PureState& s) {
    const double n = std::sqrt(s.norm_sq());
    if (n == 0.0) throw Error("cannot normalize the zero vector");
    PureState out = s;
    for (cplx& a : out.amp) a /= n;
    out.normalized = true;
    return out;
}

PureState apply_ladder(const PureState& s, int mode, LadderKind kind, int power, double overflow_tol) {
    if (mode < 0 || mode >= s.mode_count()) throw InvalidMode("ladder mode out of range");
    if (power < 0) throw Error("ladder power must be non-negative");
    PureState out = s;
    out.normalized = false;
    const int dim = s.trunc.dim(mode);
    const std::size_t stride = s.trunc.stride(mode);
    const double ref = s.norm_sq();
    std::vector<cplx> scratch;
    double dropped = 0.0;
    for (int k = 0; k < power; ++k) {
        if (kind == LadderKind::annihilation) {
            detail::axis_lower(out.amp, scratch, dim, stride);
        } else {
            dropped += detail::axis_raise(out.amp, scratch, dim, stride);
        }
        out.amp.swap(scratch);
    }
    if (kind == LadderKind::creation && ref > 0.0 && dropped / ref > overflow_tol)
        throw TruncationOverflow("creation pushed weight " + std::to_string(dropped / ref) + " past the cutoff");
    return out;
}

PureState tensor(const PureState& a, const PureState& b) { return tensor(std::vector<PureState>{a, b}); }

PureState tensor(const std::vector<PureState>& states) {
    if (states.empty()) throw ShapeMismatch("tensor of nothing");
    std::vector<int> cutoffs;
    for (const auto& s : states)
        for (int c : s.trunc.cutoffs) cutoffs.push_back(c);
    Truncation t(cutoffs);
    std::vector<cplx> amp(t.size(), cplx(1.0, 0.0));
    std::size_t block = t.size();
    for (const auto& s : states) {
        const std::size_t n = s.amp.size();
        block /= n;
        for (std::size_t i = 0; i < t.size(); ++i) amp[i] *= s.amp[(i / block) % n];
    }
    bool norm_flag = true;
    for (const auto& s : states) norm_flag = norm_flag && s.normalized;
    return PureState(t, std::move(amp), norm_flag);
}

PureState embed(const PureState& s, const Truncation& bigger) {
    if (bigger.mode_count() != s.mode_count()) throw ShapeMismatch("embed mode count mismatch");
    for (int m = 0; m < s.mode_count(); ++m)
        if (bigger.cutoffs[static_cast<std::size_t>(m)] < s.trunc.cutoffs[static_cast<std::size_t>(m)])
            throw ShapeMismatch("embed target smaller than source");
    PureState out = PureState::zeros(bigger);
    out.normalized = s.normalized;
    const std::size_t n = s.trunc.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (s.amp[i] == cplx(0.0, 0.0)) continue;
        out.amp[bigger.flat_index(s.trunc.unflatten(i))] = s.amp[i];
    }
    return out;
}

double population_above(const PureState& s, int mode, int top) {
    const int dim = s.trunc.dim(mode);
    const std::size_t stride = s.trunc.stride(mode);
    const std::size_t block = static_cast<std::size_t>(dim) * stride;
    double p = 0.0;
    for (std::size_t base = 0; base < s.amp.size(); base += block)
        for (int n = top + 1; n < dim; ++n) {
            const std::size_t off = base + static_cast<std::size_t>(n) * stride;
            for (std::size_t i = 0; i < stride; ++i) p += std::norm(s.amp[off + i]);
        }
    return p;
}

}  // namespace focksim
