#include "focksim/states.hpp"

#include <cmath>

#include "focksim/devices.hpp"

namespace focksim::states {

int coherent_cutoff(double abs_alpha, double tail) {
    const double lambda = abs_alpha * abs_alpha;
    if (lambda == 0.0) return 0;
    double term = std::exp(-lambda);  // P(0)
    double below = term;
    int n = 0;
    while (n < 4096) {
        // bound the remaining tail by a geometric extension of the next term
        const double next = term * lambda / static_cast<double>(n + 1);
        const double q = lambda / static_cast<double>(n + 2);
        if (q < 1.0 && next / (1.0 - q) < tail) return n;
        term = next;
        below += term;
        ++n;
    }
    throw TruncationOverflow("coherent amplitude too large for cutoff search");
}

int squeezed_cutoff(double r, double tail) {
    if (r == 0.0) return 0;
    const double t2 = std::tanh(r) * std::tanh(r);
    double p = 1.0 / std::cosh(r);  // |c_0|^2
    int m = 0;
    while (m < 4096) {
        const double next = p * t2 * static_cast<double>(2 * m + 1) / static_cast<double>(2 * m + 2);
        if (next / (1.0 - t2) < tail) return 2 * m;
        p = next;
        ++m;
    }
    throw TruncationOverflow("squeeze parameter too large for cutoff search");
}

PureState vacuum(int cutoff) {
    PureState s = PureState::zeros(Truncation({cutoff}));
    s.amp[0] = cplx(1.0, 0.0);
    s.normalized = true;
    return s;
}

PureState coherent_at(cplx alpha, int cutoff) {
    PureState s = PureState::zeros(Truncation({cutoff}));
    cplx c = std::exp(cplx(-0.5 * std::norm(alpha), 0.0));
    for (int n = 0; n <= cutoff; ++n) {
        s.amp[static_cast<std::size_t>(n)] = c;
        c *= alpha / std::sqrt(static_cast<double>(n + 1));
    }
    return normalize(s);
}

PureState coherent(cplx alpha, CutoffPolicy policy) {
    return coherent_at(alpha, coherent_cutoff(std::abs(alpha), policy.tail) + policy.headroom);
}

PureState number(int n, int extra_headroom) {
    if (n < 0) throw Error("photon number must be non-negative");
    PureState s = PureState::zeros(Truncation({n + extra_headroom}));
    s.amp[static_cast<std::size_t>(n)] = cplx(1.0, 0.0);
    s.normalized = true;
    return s;
}

PureState photon_added_pair(cplx alpha, cplx beta, CutoffPolicy policy) {
    CutoffPolicy inflated = policy;
    inflated.headroom = policy.headroom + 1;  // the (adag+bdag) action shifts weight up one photon
    PureState base = tensor(coherent(alpha, inflated), coherent(beta, inflated));
    PureState added_a = apply_ladder(base, 0, LadderKind::creation, 1);
    PureState added_b = apply_ladder(base, 1, LadderKind::creation, 1);
    for (std::size_t i = 0; i < added_a.amp.size(); ++i) added_a.amp[i] += added_b.amp[i];
    return normalize(added_a);
}

PureState cat_pair(cplx alpha, cplx beta, CutoffPolicy policy) {
    const int cut = std::max(coherent_cutoff(std::abs(alpha), policy.tail),
                             coherent_cutoff(std::abs(beta), policy.tail)) +
                    policy.headroom;
    PureState c1 = tensor(coherent_at(alpha, cut), coherent_at(beta, cut));
    PureState c2 = tensor(coherent_at(beta, cut), coherent_at(alpha, cut));
    for (std::size_t i = 0; i < c1.amp.size(); ++i) c1.amp[i] += c2.amp[i];
    return normalize(c1);
}

PureState number_pair(int k1, int k2, int extra_headroom) {
    if (k2 < 0 || k1 <= k2) throw InvalidOrder("number_pair requires k1 > k2 >= 0");
    const int cut = k1 + extra_headroom;
    PureState s = PureState::zeros(Truncation({cut, cut}));
    const double c = 1.0 / std::sqrt(2.0);
    s.amp[s.trunc.flat_index({k1, k2})] = c;
    s.amp[s.trunc.flat_index({k2, k1})] = c;
    s.normalized = true;
    return s;
}

PureState single_photon_bell() {
    PureState s = PureState::zeros(Truncation({1, 1}));
    const double c = 1.0 / std::sqrt(2.0);
    s.amp[s.trunc.flat_index({0, 1})] = c;
    s.amp[s.trunc.flat_index({1, 0})] = c;
    s.normalized = true;
    return s;
}

PureState displaced(const PureState& s, const std::vector<cplx>& alphas, CutoffPolicy policy) {
    if (static_cast<int>(alphas.size()) != s.mode_count()) throw ShapeMismatch("one displacement per mode");
    std::vector<int> cutoffs = s.trunc.cutoffs;
    for (int m = 0; m < s.mode_count(); ++m)
        cutoffs[static_cast<std::size_t>(m)] += coherent_cutoff(std::abs(alphas[static_cast<std::size_t>(m)]), policy.tail * 0.1) + policy.headroom;
    PureState out = embed(s, Truncation(cutoffs));
    for (int m = 0; m < s.mode_count(); ++m)
        if (alphas[static_cast<std::size_t>(m)] != cplx(0.0, 0.0)) out = devices::displacement(out, m, alphas[static_cast<std::size_t>(m)]);
    return out;
}

PureState w_single_photon() {
    PureState s = PureState::zeros(Truncation({1, 1, 1}));
    const double c = 1.0 / std::sqrt(3.0);
    s.amp[s.trunc.flat_index({0, 0, 1})] = c;
    s.amp[s.trunc.flat_index({0, 1, 0})] = c;
    s.amp[s.trunc.flat_index({1, 0, 0})] = c;
    s.normalized = true;
    return s;
}

PureState w_coherent(cplx alpha, CutoffPolicy policy) {
    const int cut = coherent_cutoff(std::abs(alpha), policy.tail) + policy.headroom;
    PureState coh = coherent_at(alpha, cut);
    PureState vac = vacuum(cut);
    PureState sum = tensor({vac, vac, coh});
    PureState t2 = tensor({vac, coh, vac});
    PureState t3 = tensor({coh, vac, vac});
    for (std::size_t i = 0; i < sum.amp.size(); ++i) sum.amp[i] += t2.amp[i] + t3.amp[i];
    return normalize(sum);
}

PureState squeezed_vacuum(double r, double theta, CutoffPolicy policy) {
    if (r < 0.0) throw Error("squeeze magnitude must be non-negative");
    const int cut = squeezed_cutoff(r, policy.tail) + policy.headroom;
    PureState s = PureState::zeros(Truncation({cut}));
    const cplx phase = -std::exp(cplx(0.0, theta)) * std::tanh(r);
    cplx c = cplx(1.0 / std::sqrt(std::cosh(r)), 0.0);
    for (int m = 0; 2 * m <= cut; ++m) {
        s.amp[static_cast<std::size_t>(2 * m)] = c;
        // c_{2(m+1)} = c_{2m} * phase * sqrt((2m+1)(2m+2)) / (2(m+1))
        c *= phase * std::sqrt(static_cast<double>((2 * m + 1) * (2 * m + 2))) / (2.0 * static_cast<double>(m + 1));
    }
    return normalize(s);
}

namespace {

cplx param(const StateSpec& spec, const std::string& key, bool required = true, cplx fallback = cplx(0.0, 0.0)) {
    auto it = spec.params.find(key);
    if (it == spec.params.end()) {
        if (required) throw ConfigError("state family '" + spec.family + "' needs parameter '" + key + "'");
        return fallback;
    }
    return it->second;
}

int int_param(const StateSpec& spec, const std::string& key) {
    const cplx v = param(spec, key);
    const double re = v.real();
    const int n = static_cast<int>(std::llround(re));
    if (std::abs(re - n) > 1e-9 || v.imag() != 0.0) throw ConfigError("parameter '" + key + "' must be an integer");
    return n;
}

}  // namespace

PureState build(const StateSpec& spec, CutoffPolicy policy) {
    const std::string& f = spec.family;
    if (f == "vacuum") return vacuum();
    if (f == "coherent") return coherent(param(spec, "alpha"), policy);
    if (f == "number") return number(int_param(spec, "n"));
    if (f == "photon_added_pair") return photon_added_pair(param(spec, "alpha"), param(spec, "beta"), policy);
    if (f == "cat_pair") return cat_pair(param(spec, "alpha"), param(spec, "beta"), policy);
    if (f == "number_pair") return number_pair(int_param(spec, "k1"), int_param(spec, "k2"));
    if (f == "single_photon_bell") return single_photon_bell();
    if (f == "squeezed_vacuum")
        return squeezed_vacuum(param(spec, "r").real(), param(spec, "theta", false).real(), policy);
    if (f == "w_single_photon") return w_single_photon();
    if (f == "w_coherent") return w_coherent(param(spec, "alpha"), policy);
    throw ConfigError("unknown state family '" + f + "'");
}

}  // namespace focksim::states
