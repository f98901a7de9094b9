#include "focksim/moments.hpp"

#include <cmath>

namespace focksim {

namespace {

void check_modes(const MonomialMoment& m, int mode_count) {
    if (static_cast<int>(m.modes.size()) != mode_count) throw ShapeMismatch("monomial mode count mismatch");
}

// Repeatedly lower one tensor axis.
void lower_axis_power(std::vector<cplx>& data, int dim, std::size_t stride, int power) {
    std::vector<cplx> scratch;
    for (int k = 0; k < power; ++k) {
        detail::axis_lower(data, scratch, dim, stride);
        data.swap(scratch);
    }
}

double binom(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
    return r;
}

cplx ipow(cplx z, int k) {
    cplx r(1.0, 0.0);
    for (int i = 0; i < k; ++i) r *= z;
    return r;
}

template <typename StateLike>
cplx central_expect_impl(const StateLike& s, const MonomialMoment& m, int mode_count) {
    check_modes(m, mode_count);
    std::vector<cplx> mean(static_cast<std::size_t>(mode_count));
    for (int i = 0; i < mode_count; ++i) mean[static_cast<std::size_t>(i)] = expect(s, monomial_single(mode_count, i, 0, 1));

    // Expand prod_i (adag - mu*)^p (a - mu)^q over all sub-powers.
    cplx total(0.0, 0.0);
    MonomialMoment plain(mode_count);
    std::vector<int> j(static_cast<std::size_t>(mode_count), 0), k(static_cast<std::size_t>(mode_count), 0);

    // odometer over (j_i <= p_i, k_i <= q_i)
    auto advance = [&]() -> bool {
        for (int i = 0; i < mode_count; ++i) {
            auto iu = static_cast<std::size_t>(i);
            if (k[iu] < m.modes[iu].annihilation) {
                ++k[iu];
                return true;
            }
            k[iu] = 0;
            if (j[iu] < m.modes[iu].creation) {
                ++j[iu];
                return true;
            }
            j[iu] = 0;
        }
        return false;
    };

    bool more = true;
    while (more) {
        cplx coeff(1.0, 0.0);
        for (int i = 0; i < mode_count; ++i) {
            auto iu = static_cast<std::size_t>(i);
            const int p = m.modes[iu].creation, q = m.modes[iu].annihilation;
            coeff *= binom(p, j[iu]) * binom(q, k[iu]);
            coeff *= ipow(-std::conj(mean[iu]), p - j[iu]) * ipow(-mean[iu], q - k[iu]);
            plain.set(i, j[iu], k[iu]);
        }
        total += coeff * expect(s, plain);
        more = advance();
    }
    return total;
}

template <typename StateLike>
std::pair<double, double> quadrature_impl(const StateLike& s, double xi, int mode_count, int mode_a, int mode_b) {
    if (xi == 0.0) throw ZeroXi("xi must be nonzero");
    if (mode_a == mode_b || mode_a < 0 || mode_b < 0 || mode_a >= mode_count || mode_b >= mode_count)
        throw InvalidMode("quadrature needs two distinct valid modes");

    const cplx a = expect(s, monomial_single(mode_count, mode_a, 0, 1));
    const cplx b = expect(s, monomial_single(mode_count, mode_b, 0, 1));
    const cplx a2 = expect(s, monomial_single(mode_count, mode_a, 0, 2));
    const cplx b2 = expect(s, monomial_single(mode_count, mode_b, 0, 2));
    const double na = expect(s, monomial_single(mode_count, mode_a, 1, 1)).real();
    const double nb = expect(s, monomial_single(mode_count, mode_b, 1, 1)).real();
    const cplx ab = expect(s, monomial_pair(mode_count, mode_a, 0, 1, mode_b, 0, 1));
    const cplx abd = expect(s, monomial_pair(mode_count, mode_a, 0, 1, mode_b, 1, 0));

    // x = (adag + a)/sqrt2, p = i(adag - a)/sqrt2
    const double sqrt2 = std::sqrt(2.0);
    const double exa = sqrt2 * a.real(), exb = sqrt2 * b.real();
    const double epa = sqrt2 * a.imag(), epb = sqrt2 * b.imag();
    const double vxa = 0.5 * (2.0 * na + 1.0 + 2.0 * a2.real()) - exa * exa;
    const double vxb = 0.5 * (2.0 * nb + 1.0 + 2.0 * b2.real()) - exb * exb;
    const double vpa = 0.5 * (2.0 * na + 1.0 - 2.0 * a2.real()) - epa * epa;
    const double vpb = 0.5 * (2.0 * nb + 1.0 - 2.0 * b2.real()) - epb * epb;
    const double cxx = ab.real() + abd.real() - exa * exb;
    const double cpp = -ab.real() + abd.real() - epa * epb;

    const double s2 = xi * xi;
    const double sg = xi > 0.0 ? 1.0 : -1.0;
    const double var_u = s2 * vxa + vxb / s2 + 2.0 * sg * cxx;
    const double var_v = s2 * vpa + vpb / s2 - 2.0 * sg * cpp;
    return {var_u, var_v};
}

}  // namespace

MonomialMoment monomial_pair(int mode_count, int mode_a, int pa, int qa, int mode_b, int pb, int qb) {
    MonomialMoment m(mode_count);
    m.set(mode_a, pa, qa);
    m.set(mode_b, pb, qb);
    return m;
}

MonomialMoment monomial_single(int mode_count, int mode, int p, int q) {
    MonomialMoment m(mode_count);
    m.set(mode, p, q);
    return m;
}

cplx expect(const PureState& s, const MonomialMoment& m) {
    check_modes(m, s.mode_count());
    std::vector<cplx> bra = s.amp, ket = s.amp;
    for (int i = 0; i < s.mode_count(); ++i) {
        const auto& pw = m.modes[static_cast<std::size_t>(i)];
        const int dim = s.trunc.dim(i);
        const std::size_t stride = s.trunc.stride(i);
        lower_axis_power(bra, dim, stride, pw.creation);
        lower_axis_power(ket, dim, stride, pw.annihilation);
    }
    cplx acc(0.0, 0.0);
    for (std::size_t i = 0; i < bra.size(); ++i) acc += std::conj(bra[i]) * ket[i];
    return acc;
}

cplx expect(const DensityOperator& rho, const MonomialMoment& m) {
    check_modes(m, rho.mode_count());
    // tr(rho adag^p a^q) = tr(a^q rho adag^p): annihilators on the ket axes,
    // adag from the right acts as the same lowering shift on the bra axes.
    std::vector<cplx> work = rho.matrix;
    const std::size_t d = rho.dim();
    for (int i = 0; i < rho.mode_count(); ++i) {
        const auto& pw = m.modes[static_cast<std::size_t>(i)];
        const int dim = rho.trunc.dim(i);
        const std::size_t ket_stride = rho.trunc.stride(i) * d;
        const std::size_t bra_stride = rho.trunc.stride(i);
        lower_axis_power(work, dim, ket_stride, pw.annihilation);
        lower_axis_power(work, dim, bra_stride, pw.creation);
    }
    cplx acc(0.0, 0.0);
    for (std::size_t j = 0; j < d; ++j) acc += work[j * d + j];
    return acc;
}

cplx central_expect(const PureState& s, const MonomialMoment& m) { return central_expect_impl(s, m, s.mode_count()); }
cplx central_expect(const DensityOperator& rho, const MonomialMoment& m) { return central_expect_impl(rho, m, rho.mode_count()); }

std::pair<double, double> quadrature_uv_variance(const PureState& s, double xi, int mode_a, int mode_b) {
    return quadrature_impl(s, xi, s.mode_count(), mode_a, mode_b);
}
std::pair<double, double> quadrature_uv_variance(const DensityOperator& rho, double xi, int mode_a, int mode_b) {
    return quadrature_impl(rho, xi, rho.mode_count(), mode_a, mode_b);
}

}  // namespace focksim
