#include "focksim/paper_formulas.hpp"

#include <cmath>

namespace focksim::formulas {

double factorial(int k) {
    if (k < 0) throw Error("factorial of a negative number");
    if (k <= 20) {
        double r = 1.0;
        for (int i = 2; i <= k; ++i) r *= static_cast<double>(i);
        return r;
    }
    return std::exp(std::lgamma(static_cast<double>(k) + 1.0));
}

namespace {

double photon_added_bracket(cplx alpha, cplx beta) {
    const double cross = (std::conj(alpha) * beta + alpha * std::conj(beta)).real();
    return -4.0 * std::norm(alpha) * std::norm(beta) - cross * (std::norm(alpha) + std::norm(beta)) -
           2.0 * cross - 1.0;
}

}  // namespace

double photon_added_witness(cplx alpha, cplx beta) {
    return photon_added_bracket(alpha, beta) / (std::norm(alpha + beta) + 2.0);
}

double photon_added_witness_adjudicated(cplx alpha, cplx beta) {
    const double d = std::norm(alpha + beta) + 2.0;
    return photon_added_bracket(alpha, beta) / (d * d);
}

CatWitnessResult cat_witness(cplx alpha, cplx beta, bool require_real_branch) {
    const cplx overlap = std::exp(-0.5 * std::norm(alpha) - 0.5 * std::norm(beta) + std::conj(alpha) * beta);
    const double x = std::norm(overlap);
    const double denom = 4.0 * (1.0 + x) * (1.0 + x);

    const cplx anti = std::conj(alpha) * beta - alpha * std::conj(beta);   // purely imaginary
    const double cross = (alpha * std::conj(beta) + std::conj(alpha) * beta).real();
    const double abs2a = std::norm(alpha), abs2b = std::norm(beta);
    const double general =
        (-(anti * anti).real() + 2.0 * x * (4.0 * abs2a * abs2b - cross * (abs2a + abs2b)) -
         x * x * (abs2a - abs2b) * (abs2a - abs2b)) /
        denom;

    const cplx ab_conj = alpha * std::conj(beta);
    const bool applicable = std::abs(ab_conj.imag()) <= 1e-12 * std::max(1.0, std::abs(ab_conj.real())) &&
                            ab_conj.real() >= 0.0;
    if (require_real_branch && !applicable)
        throw DomainViolation("the specialized cat form needs alpha beta* real and non-negative");

    std::optional<double> branch;
    if (applicable) {
        const double mod_ab = std::abs(alpha) * std::abs(beta);
        const double diff = std::abs(alpha) - std::abs(beta);
        branch = (-2.0 * x * mod_ab * diff * diff - x * x * (abs2a - abs2b) * (abs2a - abs2b)) / denom;
    }
    return CatWitnessResult{general, branch, applicable};
}

NumberPairValues number_pair_values(int k1, int k2) {
    if (k2 < 0 || k1 <= k2) throw InvalidOrder("number pair needs k1 > k2 >= 0");
    NumberPairValues v{};
    const double f1 = factorial(k1), f2 = factorial(k2);
    v.lhs = (f1 * f1) / (4.0 * f2 * f2);
    v.high_branch = 2 * k2 >= k1;
    v.rhs = v.high_branch ? f1 / factorial(2 * k2 - k1) : 0.0;
    v.detect_boundary = v.high_branch ? (f1 * factorial(2 * k2 - k1) > 4.0 * f2 * f2) : true;
    return v;
}

devices::MomentSet bs_output_moments_vacuum(const devices::AInputMoments& a, cplx t, cplx r) {
    devices::MomentSet m;
    m.ab_dagger = -r * t * a.n;
    m.n_a_n_b = std::norm(t * r) * (a.n2 - a.n);
    m.n_a = std::norm(t) * a.n;
    m.n_b = std::norm(r) * a.n;
    return m;
}

BsM2Values bs_m2_moments(const AInputMoments4& a, cplx t, cplx r) {
    BsM2Values v{};
    const double tr2 = std::norm(t * r);
    const double nn1 = a.n2 - a.n;  // <N(N-1)>
    // <N^2(N-1)^2> - 4<N(N-1)^2> + 2<N(N-1)>
    const double quart = (a.n4 - 2.0 * a.n3 + a.n2) - 4.0 * (a.n3 - 2.0 * a.n2 + a.n) + 2.0 * (a.n2 - a.n);
    v.lhs = tr2 * tr2 * nn1 * nn1;
    v.rhs = tr2 * tr2 * quart;
    v.reduced_lhs = nn1 * nn1;
    v.reduced_rhs = a.n4 - 6.0 * a.n3 + 11.0 * a.n2 - 6.0 * a.n;  // <N(N-1)(N-2)(N-3)>
    return v;
}

double bs_coherent_leading(cplx beta, cplx t, cplx r, const devices::AInputMoments& a) {
    const double B = std::norm(beta);
    const double R = std::norm(r), T = std::norm(t);
    const cplx sig = a.a * a.a - a.a2;  // <a>^2 - <a^2>
    if (std::abs(T - 0.5) < 1e-12 && std::abs(R - 0.5) < 1e-12) {
        const double phi = 2.0 * (std::arg(t) - std::arg(r) - std::arg(beta));
        const cplx e(std::cos(phi), std::sin(phi));
        return (B / 4.0) * (2.0 * (std::norm(a.a) - a.n) - (e * sig).real() - (std::conj(e) * std::conj(sig)).real());
    }
    const cplx trc = t * std::conj(r);
    return B * (R * R + T * T) * (std::norm(a.a) - a.n) -
           2.0 * (trc * trc * std::conj(beta) * std::conj(beta) * sig).real();
}

DuanBsChain duan_bs_chain(const devices::AInputMoments& a, cplx t, cplx r, double xi) {
    if (xi == 0.0) throw ZeroXi("xi must be nonzero");
    DuanBsChain out{};
    const cplx sig2 = a.a2 - a.a * a.a;
    const double spread = a.n - std::norm(a.a);
    const double S = 2.0 * (t * std::conj(r) * sig2).real();  // t r*(<a^2>-<a>^2) + c.c.
    const double xi2 = xi * xi;
    const double sg = xi > 0.0 ? 1.0 : -1.0;

    out.expression = -2.0 * sg * S + (std::norm(t) * xi2 + std::norm(r) / xi2) * (2.0 * spread + 1.0) +
                     (std::norm(r) * xi2 + std::norm(t) / xi2);
    out.minimized = -std::abs(S) + 2.0 * std::abs(r * t) * spread;
    out.squeezing = std::abs(sig2) > spread;
    return out;
}

AmpWitnessForms amp_witness_forms(const devices::MomentSet& m0, const devices::AmplifierParams& p) {
    p.check();
    AmpWitnessForms f;
    const double w0 = std::norm(m0.ab_dagger) - m0.n_a_n_b;
    if (p.A_a == 0.0 && p.A_b == 0.0) {
        f.loss_scaled = std::exp(-(p.C_a + p.C_b) * p.t) * w0;
    }
    if (p.A_a > p.C_a && p.A_b > p.C_b) {
        const double ga = p.A_a / (p.A_a - p.C_a);
        const double gb = p.A_b / (p.A_b - p.C_b);
        f.high_gain_bracket = w0 - ga * m0.n_b - gb * m0.n_a - ga * gb;
    }
    if (!f.loss_scaled && !f.high_gain_bracket)
        throw BranchViolation("amplifier witness forms need either zero gain or gain above loss on both modes");
    return f;
}

}  // namespace focksim::formulas
