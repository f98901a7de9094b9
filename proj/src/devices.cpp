#include "focksim/devices.hpp"

#include <cmath>

#include "focksim/expm.hpp"

namespace focksim::devices {

namespace {

double real_checked(cplx v, const char* what) {
    if (std::abs(v.imag()) > 1e-9 * std::max(1.0, std::abs(v.real())))
        throw Error(std::string("expected a real moment for ") + what);
    return v.real();
}

std::vector<cplx> phase_factors(int dim, double phi) {
    std::vector<cplx> f(static_cast<std::size_t>(dim));
    for (int n = 0; n < dim; ++n) f[static_cast<std::size_t>(n)] = std::exp(cplx(0.0, -phi * n));
    return f;
}

void check_pair(int mode_a, int mode_b, int count) {
    if (mode_a == mode_b || mode_a < 0 || mode_b < 0 || mode_a >= count || mode_b >= count)
        throw InvalidMode("need two distinct valid modes");
}

Generator bs_rotation(int mode_a, int mode_b, double mu) {
    return Generator{
        GenTerm{cplx(mu, 0.0), {{mode_a, LadderKind::creation}, {mode_b, LadderKind::annihilation}}},
        GenTerm{cplx(-mu, 0.0), {{mode_a, LadderKind::annihilation}, {mode_b, LadderKind::creation}}},
    };
}

template <typename StateLike>
StateLike beam_splitter_impl(const StateLike& in, int mode_a, int mode_b, const BeamSplitterParams& p) {
    const double theta_t = std::arg(p.t);
    const double theta_r = std::arg(p.r);
    const double mu = std::atan2(std::abs(p.r), std::abs(p.t));

    StateLike s = phase_shift(in, mode_a, -theta_t);
    s = phase_shift(s, mode_b, -theta_r);
    apply_exp_generator(s, bs_rotation(mode_a, mode_b, mu));
    s = phase_shift(s, mode_b, theta_r + theta_t);
    return s;
}

MomentSet moment_set_from(cplx abd, cplx nanb, cplx na, cplx nb) {
    MomentSet m;
    m.ab_dagger = abd;
    m.n_a_n_b = real_checked(nanb, "<Na Nb>");
    m.n_a = real_checked(na, "<Na>");
    m.n_b = real_checked(nb, "<Nb>");
    if (m.n_a < -1e-10 || m.n_b < -1e-10 || m.n_a_n_b < -1e-10) throw Error("negative photon-number moment");
    m.n_a = std::max(0.0, m.n_a);
    m.n_b = std::max(0.0, m.n_b);
    m.n_a_n_b = std::max(0.0, m.n_a_n_b);
    return m;
}

template <typename StateLike>
MomentSet moment_set_impl(const StateLike& s, int n_modes, int mode_a, int mode_b) {
    check_pair(mode_a, mode_b, n_modes);
    return moment_set_from(expect(s, monomial_pair(n_modes, mode_a, 0, 1, mode_b, 1, 0)),
                           expect(s, monomial_pair(n_modes, mode_a, 1, 1, mode_b, 1, 1)),
                           expect(s, monomial_single(n_modes, mode_a, 1, 1)),
                           expect(s, monomial_single(n_modes, mode_b, 1, 1)));
}

}  // namespace

MomentSet moment_set(const PureState& s, int mode_a, int mode_b) { return moment_set_impl(s, s.mode_count(), mode_a, mode_b); }
MomentSet moment_set(const DensityOperator& rho, int mode_a, int mode_b) { return moment_set_impl(rho, rho.mode_count(), mode_a, mode_b); }

PureState phase_shift(const PureState& s, int mode, double phi) {
    if (mode < 0 || mode >= s.mode_count()) throw InvalidMode("phase shift mode out of range");
    PureState out = s;
    detail::axis_scale(out.amp, s.trunc.dim(mode), s.trunc.stride(mode), phase_factors(s.trunc.dim(mode), phi));
    return out;
}

DensityOperator phase_shift(const DensityOperator& rho, int mode, double phi) {
    if (mode < 0 || mode >= rho.mode_count()) throw InvalidMode("phase shift mode out of range");
    DensityOperator out = rho;
    const std::size_t d = rho.dim();
    detail::axis_scale(out.matrix, rho.trunc.dim(mode), rho.trunc.stride(mode) * d, phase_factors(rho.trunc.dim(mode), phi));
    detail::axis_scale(out.matrix, rho.trunc.dim(mode), rho.trunc.stride(mode), phase_factors(rho.trunc.dim(mode), -phi));
    return out;
}

PureState beam_splitter(const PureState& s, int mode_a, int mode_b, const BeamSplitterParams& p) {
    check_pair(mode_a, mode_b, s.mode_count());
    std::vector<int> cutoffs = s.trunc.cutoffs;
    const int sum = cutoffs[static_cast<std::size_t>(mode_a)] + cutoffs[static_cast<std::size_t>(mode_b)];
    cutoffs[static_cast<std::size_t>(mode_a)] = sum;
    cutoffs[static_cast<std::size_t>(mode_b)] = sum;
    PureState big = embed(s, Truncation(cutoffs));
    return beam_splitter_impl(big, mode_a, mode_b, p);
}

DensityOperator beam_splitter(const DensityOperator& rho, int mode_a, int mode_b, const BeamSplitterParams& p) {
    check_pair(mode_a, mode_b, rho.mode_count());
    std::vector<int> cutoffs = rho.trunc.cutoffs;
    const int sum = cutoffs[static_cast<std::size_t>(mode_a)] + cutoffs[static_cast<std::size_t>(mode_b)];
    cutoffs[static_cast<std::size_t>(mode_a)] = sum;
    cutoffs[static_cast<std::size_t>(mode_b)] = sum;
    DensityOperator big = embed(rho, Truncation(cutoffs));
    return beam_splitter_impl(big, mode_a, mode_b, p);
}

PureState displacement(const PureState& s, int mode, cplx alpha) {
    if (mode < 0 || mode >= s.mode_count()) throw InvalidMode("displacement mode out of range");
    PureState out = s;
    Generator g{
        GenTerm{alpha, {{mode, LadderKind::creation}}},
        GenTerm{-std::conj(alpha), {{mode, LadderKind::annihilation}}},
    };
    apply_exp_generator(out, g);
    if (population_above(out, mode, s.trunc.cutoffs[static_cast<std::size_t>(mode)] - 2) > tol::leakage &&
        s.trunc.cutoffs[static_cast<std::size_t>(mode)] >= 2)
        throw TruncationOverflow("displacement amplitude exceeds the available headroom");
    return out;
}

SqueezerOutput two_mode_squeezer(const PureState& s, int mode_a, int mode_b, const SqueezerParams& p) {
    check_pair(mode_a, mode_b, s.mode_count());
    const double abs_s = std::abs(p.s);
    const double zeta_mag = std::acosh(p.c);

    // target sizing: multiplicative spread of what is already there plus the
    // two-mode-squeezed tail generated from the vacuum component
    int extra = std::max(8, static_cast<int>(std::ceil(4.0 * abs_s * abs_s)));
    if (abs_s > 0.0) {
        const double ratio = abs_s / p.c;  // tanh of the squeeze parameter
        extra = std::max(extra, static_cast<int>(std::ceil(std::log(1e-11) / (2.0 * std::log(ratio)))));
    }
    constexpr int guard = 8;

    std::vector<int> cutoffs = s.trunc.cutoffs;
    std::vector<int> targets(cutoffs.size(), 0);
    for (int m : {mode_a, mode_b}) {
        const int cut = cutoffs[static_cast<std::size_t>(m)];
        targets[static_cast<std::size_t>(m)] = static_cast<int>(std::ceil(p.c * p.c * (cut + 1))) + extra;
        cutoffs[static_cast<std::size_t>(m)] = targets[static_cast<std::size_t>(m)] + guard;
    }
    PureState big = embed(s, Truncation(cutoffs));

    const cplx zeta = zeta_mag * std::exp(cplx(0.0, std::arg(p.s)));
    Generator g{
        GenTerm{zeta, {{mode_a, LadderKind::creation}, {mode_b, LadderKind::creation}}},
        GenTerm{-std::conj(zeta), {{mode_a, LadderKind::annihilation}, {mode_b, LadderKind::annihilation}}},
    };
    apply_exp_generator(big, g);

    const double leak = population_above(big, mode_a, targets[static_cast<std::size_t>(mode_a)]) +
                        population_above(big, mode_b, targets[static_cast<std::size_t>(mode_b)]);
    if (leak > tol::leakage)
        throw LeakageExceeded("squeezer leakage " + std::to_string(leak) + " above the sized cutoff");
    return SqueezerOutput{std::move(big), leak};
}

AInputMoments a_input_moments(const PureState& s, int mode) {
    const int n = s.mode_count();
    return AInputMoments{expect(s, monomial_single(n, mode, 0, 1)), expect(s, monomial_single(n, mode, 0, 2)),
                         real_checked(expect(s, monomial_single(n, mode, 1, 1)), "<N>"),
                         real_checked(expect(s, monomial_single(n, mode, 1, 1)), "<N>") +
                             real_checked(expect(s, monomial_single(n, mode, 2, 2)), "<N(N-1)>"),
                         expect(s, monomial_single(n, mode, 1, 2))};
}

AInputMoments a_input_moments(const DensityOperator& rho, int mode) {
    const int n = rho.mode_count();
    return AInputMoments{expect(rho, monomial_single(n, mode, 0, 1)), expect(rho, monomial_single(n, mode, 0, 2)),
                         real_checked(expect(rho, monomial_single(n, mode, 1, 1)), "<N>"),
                         real_checked(expect(rho, monomial_single(n, mode, 1, 1)), "<N>") +
                             real_checked(expect(rho, monomial_single(n, mode, 2, 2)), "<N(N-1)>"),
                         expect(rho, monomial_single(n, mode, 1, 2))};
}

BsMapResult beam_splitter_moment_map(const AInputMoments& in, const BeamSplitterParams& p, BsInputClass cls, cplx beta) {
    const cplx t = p.t, r = p.r;
    const double T = std::norm(t), R = std::norm(r);
    const cplx m1 = in.a, m2 = in.a2, m21 = in.adag_a2;
    const double n = in.n, n2 = in.n2;

    if (cls == BsInputClass::vacuum_b) {
        MomentSet m;
        m.ab_dagger = -r * t * n;
        m.n_a_n_b = T * R * (n2 - n);
        m.n_a = T * n;
        m.n_b = R * n;
        return BsMapResult{m, std::nullopt};
    }
    if (cls != BsInputClass::coherent_b) throw UnknownInputClass("beam splitter map knows vacuum_b and coherent_b");

    const double B = std::norm(beta);
    const cplx bc = std::conj(beta);
    MomentSet m;
    m.ab_dagger = r * t * (B - n) + t * t * bc * m1 - r * r * beta * std::conj(m1);
    m.n_a = T * n + R * B + 2.0 * (std::conj(t) * r * std::conj(m1) * beta).real();
    m.n_b = R * n + T * B - 2.0 * (r * std::conj(t) * std::conj(m1) * beta).real();

    const cplx rtc = r * std::conj(t);   // r t*
    const cplx trc = t * std::conj(r);   // t r*
    cplx nanb(0.0, 0.0);
    nanb += T * R * n2;
    nanb += T * T * n * B;
    nanb -= T * rtc * (std::conj(m21) + std::conj(m1)) * beta;
    nanb -= T * std::conj(rtc) * m21 * bc;
    nanb += R * R * n * B;
    nanb += R * T * (B * B + B);
    nanb -= R * rtc * std::conj(m1) * beta * B;
    nanb -= R * std::conj(rtc) * m1 * bc * (B + 1.0);
    nanb += std::conj(trc) * R * std::conj(m21) * beta;
    nanb += std::conj(trc) * T * std::conj(m1) * beta * (B + 1.0);
    nanb -= r * r * std::conj(t) * std::conj(t) * std::conj(m2) * beta * beta;
    nanb -= T * R * n * (B + 1.0);
    nanb += trc * R * (m21 + m1) * bc;
    nanb += trc * T * m1 * bc * B;
    nanb -= T * R * (n + 1.0) * B;
    nanb -= t * t * std::conj(r) * std::conj(r) * m2 * bc * bc;
    m.n_a_n_b = real_checked(nanb, "<Na Nb> map");

    // highest-order-in-beta witness term
    const cplx sig = m1 * m1 - m2;  // <a>^2 - <a^2>
    const double leading = B * (R * R + T * T) * (std::norm(m1) - n) - 2.0 * (trc * trc * bc * bc * sig).real();
    return BsMapResult{m, leading};
}

SqueezerMapResult squeezer_moment_map(const AInputMoments& in, const SqueezerParams& p) {
    const double c = p.c;
    const cplx s = p.s;
    const double S2 = std::norm(s);
    const double n = in.n;
    const double ff = in.n2 - in.n;  // <adag^2 a^2>

    SqueezerMapResult out;
    out.set.ab_dagger = c * std::conj(s) * in.a2;
    out.set.n_a = c * c * n + S2;
    out.set.n_b = S2 * (n + 1.0);
    out.set.n_a_n_b = c * c * S2 * (in.n2 + n) + (c * c * S2 + S2 * S2) * (n + 1.0);
    out.ab = c * s * (n + 1.0);
    out.a = c * in.a;
    out.b = s * std::conj(in.a);
    out.a2 = c * c * in.a2;
    out.b2 = s * s * std::conj(in.a2);
    out.adag_b = c * s * std::conj(in.a2);
    const double quart = ff + 4.0 * n + 2.0;  // <a^2 adag^2>
    out.a2b2_abs2 = std::norm(c * c * s * s) * quart * quart;
    out.adag2_a2 = c * c * c * c * ff + 4.0 * c * c * S2 * n + 2.0 * S2 * S2;
    out.bdag2_b2 = S2 * S2 * quart;
    out.m2_condition = 2.0 * (1.0 - S2 / (c * c)) * n + (1.0 - S2 * S2 / (c * c * c * c));
    return out;
}

namespace {

double growth_factor(double A, double C, double t, bool degenerate) {
    // A (e^{(A-C)t} - 1)/(A-C), with the A = C limit A t
    if (degenerate) return A * t;
    return A * (std::exp((A - C) * t) - 1.0) / (A - C);
}

}  // namespace

MomentSet linear_amp_moments(const MomentSet& m0, const AmplifierParams& p) {
    p.check();
    const double ka = p.A_a - p.C_a, kb = p.A_b - p.C_b;
    const double fa = growth_factor(p.A_a, p.C_a, p.t, p.degenerate_a());
    const double fb = growth_factor(p.A_b, p.C_b, p.t, p.degenerate_b());
    MomentSet m;
    m.ab_dagger = std::exp((ka + kb) * p.t / 2.0) * m0.ab_dagger;
    m.n_a_n_b = std::exp((ka + kb) * p.t) * m0.n_a_n_b + fa * std::exp(kb * p.t) * m0.n_b +
                fb * std::exp(ka * p.t) * m0.n_a + fa * fb;
    m.n_a = std::exp(ka * p.t) * m0.n_a + fa;
    m.n_b = std::exp(kb * p.t) * m0.n_b + fb;
    return m;
}

AmpWitnessMoments amp_witness_moments(const PureState& s, int mode_a, int mode_b) {
    const int n = s.mode_count();
    check_pair(mode_a, mode_b, n);
    AmpWitnessMoments m;
    m.ab_dagger = expect(s, monomial_pair(n, mode_a, 0, 1, mode_b, 1, 0));
    m.ab = expect(s, monomial_pair(n, mode_a, 0, 1, mode_b, 0, 1));
    m.a = expect(s, monomial_single(n, mode_a, 0, 1));
    m.b = expect(s, monomial_single(n, mode_b, 0, 1));
    m.a2 = expect(s, monomial_single(n, mode_a, 0, 2));
    m.b2 = expect(s, monomial_single(n, mode_b, 0, 2));
    m.n_a = expect(s, monomial_single(n, mode_a, 1, 1)).real();
    m.n_b = expect(s, monomial_single(n, mode_b, 1, 1)).real();
    m.n_a_n_b = expect(s, monomial_pair(n, mode_a, 1, 1, mode_b, 1, 1)).real();
    return m;
}

AmpWitnessMoments evolve(const AmpWitnessMoments& m0, const AmplifierParams& p) {
    p.check();
    const double ka = p.A_a - p.C_a, kb = p.A_b - p.C_b;
    MomentSet set0;
    set0.ab_dagger = m0.ab_dagger;
    set0.n_a_n_b = m0.n_a_n_b;
    set0.n_a = m0.n_a;
    set0.n_b = m0.n_b;
    const MomentSet set = linear_amp_moments(set0, p);
    AmpWitnessMoments m;
    m.ab_dagger = set.ab_dagger;
    m.n_a_n_b = set.n_a_n_b;
    m.n_a = set.n_a;
    m.n_b = set.n_b;
    m.ab = std::exp((ka + kb) * p.t / 2.0) * m0.ab;
    m.a = std::exp(ka * p.t / 2.0) * m0.a;
    m.b = std::exp(kb * p.t / 2.0) * m0.b;
    m.a2 = std::exp(ka * p.t) * m0.a2;
    m.b2 = std::exp(kb * p.t) * m0.b2;
    return m;
}

namespace {

// L(rho) for the two-mode gain/loss channel.
void liouvillian(const DensityOperator& rho, const AmplifierParams& p, DensityOperator& out) {
    const std::size_t d = rho.dim();
    out.matrix.assign(rho.matrix.size(), cplx(0.0, 0.0));
    std::vector<cplx> tmp1, tmp2;
    const double rates[2][2] = {{p.A_a, p.C_a}, {p.A_b, p.C_b}};
    for (int mode = 0; mode < 2; ++mode) {
        const int dim = rho.trunc.dim(mode);
        const std::size_t ket_stride = rho.trunc.stride(mode) * d;
        const std::size_t bra_stride = rho.trunc.stride(mode);
        const double A = rates[mode][0], C = rates[mode][1];

        if (A > 0.0) {
            // (A/2)(2 adag rho a - a adag rho - rho a adag)
            detail::axis_raise(rho.matrix, tmp1, dim, ket_stride);        // adag rho
            detail::axis_raise(tmp1, tmp2, dim, bra_stride);              // adag rho a
            for (std::size_t i = 0; i < out.matrix.size(); ++i) out.matrix[i] += A * tmp2[i];
            tmp1 = rho.matrix;
            std::vector<cplx> diag_k(static_cast<std::size_t>(dim)), diag_b(static_cast<std::size_t>(dim));
            for (int nn = 0; nn < dim; ++nn) diag_k[static_cast<std::size_t>(nn)] = cplx(nn + 1.0, 0.0);
            detail::axis_scale(tmp1, dim, ket_stride, diag_k);            // (N+1) rho
            for (std::size_t i = 0; i < out.matrix.size(); ++i) out.matrix[i] -= 0.5 * A * tmp1[i];
            tmp1 = rho.matrix;
            detail::axis_scale(tmp1, dim, bra_stride, diag_k);            // rho (N+1)
            for (std::size_t i = 0; i < out.matrix.size(); ++i) out.matrix[i] -= 0.5 * A * tmp1[i];
        }
        if (C > 0.0) {
            // (C/2)(2 a rho adag - adag a rho - rho adag a)
            detail::axis_lower(rho.matrix, tmp1, dim, ket_stride);        // a rho
            detail::axis_lower(tmp1, tmp2, dim, bra_stride);              // a rho adag
            for (std::size_t i = 0; i < out.matrix.size(); ++i) out.matrix[i] += C * tmp2[i];
            tmp1 = rho.matrix;
            std::vector<cplx> diag(static_cast<std::size_t>(dim));
            for (int nn = 0; nn < dim; ++nn) diag[static_cast<std::size_t>(nn)] = cplx(static_cast<double>(nn), 0.0);
            detail::axis_scale(tmp1, dim, ket_stride, diag);              // N rho
            for (std::size_t i = 0; i < out.matrix.size(); ++i) out.matrix[i] -= 0.5 * C * tmp1[i];
            tmp1 = rho.matrix;
            detail::axis_scale(tmp1, dim, bra_stride, diag);              // rho N
            for (std::size_t i = 0; i < out.matrix.size(); ++i) out.matrix[i] -= 0.5 * C * tmp1[i];
        }
    }
}

}  // namespace

DensityOperator lindblad_evolve(const DensityOperator& rho0, const AmplifierParams& p, std::optional<double> dt_override) {
    p.check();
    if (rho0.mode_count() != 2) throw WrongModeCount("the amplifier channel acts on two modes");
    const double max_rate = std::max({p.A_a, p.C_a, p.A_b, p.C_b});
    double dt = dt_override.value_or(std::min(0.01, max_rate > 0.0 ? 0.1 / max_rate : 0.01));
    if (dt <= 0.0) throw Error("step size must be positive");
    if (p.t == 0.0 || max_rate == 0.0) return rho0;

    DensityOperator rho = rho0;
    DensityOperator k1 = DensityOperator::zeros(rho.trunc), k2 = k1, k3 = k1, k4 = k1;
    DensityOperator stage = k1;

    double remaining = p.t;
    while (remaining > 1e-15) {
        const double h = std::min(dt, remaining);
        remaining -= h;

        liouvillian(rho, p, k1);
        stage = rho;
        for (std::size_t i = 0; i < stage.matrix.size(); ++i) stage.matrix[i] += 0.5 * h * k1.matrix[i];
        liouvillian(stage, p, k2);
        stage = rho;
        for (std::size_t i = 0; i < stage.matrix.size(); ++i) stage.matrix[i] += 0.5 * h * k2.matrix[i];
        liouvillian(stage, p, k3);
        stage = rho;
        for (std::size_t i = 0; i < stage.matrix.size(); ++i) stage.matrix[i] += h * k3.matrix[i];
        liouvillian(stage, p, k4);
        for (std::size_t i = 0; i < rho.matrix.size(); ++i)
            rho.matrix[i] += (h / 6.0) * (k1.matrix[i] + 2.0 * k2.matrix[i] + 2.0 * k3.matrix[i] + k4.matrix[i]);

        hermitize(rho);
        const double drift = std::abs(rho.trace() - cplx(1.0, 0.0));
        if (drift > tol::trace_drift) throw TraceDrift("trace drifted by " + std::to_string(drift));
        for (int mode = 0; mode < 2; ++mode)
            if (population_above(rho, mode, rho.trunc.cutoffs[static_cast<std::size_t>(mode)] - 1) > tol::leakage)
                throw TruncationOverflow("gain populated the cutoff level beyond tolerance");
    }
    return rho;
}

ClassicalityThreshold classicality_threshold(const AmplifierParams& p) {
    auto single = [](double A, double C) -> std::optional<double> {
        if (A <= C || C <= 0.0) return std::nullopt;
        return std::log(A / C) / (A - C);
    };
    return ClassicalityThreshold{single(p.A_a, p.C_a), single(p.A_b, p.C_b)};
}

namespace {

template <typename StateLike>
cplx measure_impl(const StateLike& s, int mode_a, int mode_b) {
    auto difference = [&](double phi) {
        StateLike shifted = phase_shift(s, mode_b, phi);
        StateLike out = beam_splitter(shifted, mode_a, mode_b, BeamSplitterParams::balanced());
        const int n = out.mode_count();
        const double na = expect(out, monomial_single(n, mode_a, 1, 1)).real();
        const double nb = expect(out, monomial_single(n, mode_b, 1, 1)).real();
        return na - nb;
    };
    const double d0 = difference(0.0);
    const double dq = difference(-std::acos(0.0));  // phi = -pi/2
    return 0.5 * cplx(d0, dq);
}

}  // namespace

cplx measure_ab_dagger(const PureState& s, int mode_a, int mode_b) { return measure_impl(s, mode_a, mode_b); }
cplx measure_ab_dagger(const DensityOperator& rho, int mode_a, int mode_b) { return measure_impl(rho, mode_a, mode_b); }

}  // namespace focksim::devices
