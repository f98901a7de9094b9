#include "doctest.h"

#include <cmath>
#include <random>

#include "focksim/devices.hpp"
#include "focksim/paper_formulas.hpp"
#include "focksim/states.hpp"
#include "focksim/witnesses.hpp"

using namespace focksim;
namespace st = focksim::states;
namespace dv = focksim::devices;
namespace wt = focksim::witness;
namespace pf = focksim::formulas;

namespace {

PureState random_single(std::mt19937& rng) {
    std::uniform_int_distribution<int> pick(0, 3);
    std::uniform_real_distribution<double> amp(0.0, 1.0);
    switch (pick(rng)) {
        case 0: return st::coherent(cplx(amp(rng), amp(rng) - 0.5));
        case 1: return st::number(pick(rng), 2);
        case 2: return st::squeezed_vacuum(0.6 * amp(rng), 6.28 * amp(rng));
        default: {
            std::normal_distribution<double> g;
            PureState s = PureState::zeros(Truncation({4}));
            for (auto& a : s.amp) a = cplx(g(rng), g(rng));
            return normalize(s);
        }
    }
}

}  // namespace

TEST_CASE("product condition on coherent pairs is inconclusive") {
    PureState coh = tensor(st::coherent(cplx(1, 0)), st::coherent(cplx(0.6, 0.3)));
    auto rep = wt::hz_product(coh);
    CHECK(std::abs(rep.margin) < 1e-9);
    CHECK(rep.verdict != wt::Verdict::detected);
}

TEST_CASE("sum condition detects squeezer output, coherent pairs stay flat") {
    PureState coh = tensor(st::coherent(cplx(0.9, 0)), st::coherent(cplx(0.2, 0.4)));
    auto rep = wt::hz_sum(coh);
    CHECK(std::abs(rep.margin) < 1e-9);

    auto out = dv::two_mode_squeezer(tensor(st::vacuum(0), st::vacuum(0)), 0, 1, dv::SqueezerParams::from_r(0.5));
    CHECK(wt::hz_sum(out.state).verdict == wt::Verdict::detected);

    // splitter output of a state with |<a^2>| > <N> (sum condition route)
    PureState sq = st::squeezed_vacuum(1.0, 0.0);
    PureState bs = dv::beam_splitter(tensor(sq, st::vacuum(0)), 0, 1, dv::BeamSplitterParams::balanced());
    CHECK(wt::hz_sum(bs).verdict == wt::Verdict::detected);
}

TEST_CASE("central condition matches plain one at zero mean") {
    PureState bell = st::single_photon_bell();
    CHECK(wt::hz_central(bell).margin == doctest::Approx(wt::hz_product(bell).margin).epsilon(1e-12));
}

TEST_CASE("duan-simon on the two-mode squeezed vacuum") {
    auto out = dv::two_mode_squeezer(tensor(st::vacuum(0), st::vacuum(0)), 0, 1, dv::SqueezerParams::from_r(1.0));

    // at |xi| = 1 the helpful sign gives 2 e^{-2}, the harmful one 2 e^{2}
    auto [u_neg, v_neg] = quadrature_uv_variance(out.state, -1.0);
    CHECK(u_neg + v_neg == doctest::Approx(2.0 * std::exp(-2.0)).epsilon(1e-7));
    auto [u_pos, v_pos] = quadrature_uv_variance(out.state, 1.0);
    CHECK(u_pos + v_pos == doctest::Approx(2.0 * std::exp(2.0)).epsilon(1e-7));

    auto rep = wt::duan_simon(out.state);
    CHECK(rep.verdict == wt::Verdict::detected);
    // optimum 4 s (c - s) = 4 sinh(1) e^{-1}
    CHECK(rep.margin == doctest::Approx(4.0 * std::sinh(1.0) * std::exp(-1.0)).epsilon(1e-6));
    CHECK(std::abs(*rep.xi) == doctest::Approx(1.0).epsilon(1e-4));

    // purely imaginary s never satisfies the quadrature condition
    auto out_im = dv::two_mode_squeezer(tensor(st::vacuum(0), st::vacuum(0)), 0, 1,
                                        dv::SqueezerParams::from_r(1.0, std::acos(-1.0) / 2.0));
    auto rep_im = wt::duan_simon(out_im.state);
    CHECK(rep_im.verdict == wt::Verdict::not_detected);
    CHECK(wt::hz_sum(out_im.state).verdict == wt::Verdict::detected);

    // vacuum saturates
    auto vac_rep = wt::duan_simon(tensor(st::vacuum(1), st::vacuum(1)), 1.0);
    CHECK(vac_rep.verdict == wt::Verdict::inconclusive);
    CHECK_THROWS_AS(wt::duan_simon(tensor(st::vacuum(1), st::vacuum(1)), 0.0), ZeroXi);
}

TEST_CASE("tripartite genuine detection") {
    auto trip = wt::tripartite_genuine(st::w_single_photon());
    CHECK(trip.ab.margin == doctest::Approx(1.0 / 9.0).epsilon(1e-12));
    CHECK(trip.bc.margin == doctest::Approx(1.0 / 9.0).epsilon(1e-12));
    CHECK(trip.genuine);

    PureState prod = tensor({st::coherent(cplx(0.5, 0)), st::coherent(cplx(0.5, 0)), st::coherent(cplx(0.5, 0))});
    auto trip2 = wt::tripartite_genuine(prod);
    CHECK(!trip2.genuine);
    CHECK(std::abs(trip2.ab.margin) < 1e-9);

    auto trip3 = wt::tripartite_genuine(st::w_coherent(cplx(1.0, 0.0)));
    CHECK(trip3.genuine);
    const double e1 = std::exp(-1.0);
    const double eta2 = 1.0 / (3.0 * (1.0 + 2.0 * e1));
    CHECK(trip3.ab.margin == doctest::Approx(eta2 * e1 * eta2 * e1).epsilon(1e-9));

    CHECK_THROWS_AS(wt::tripartite_genuine(st::single_photon_bell()), WrongModeCount);
}

TEST_CASE("input predicates") {
    auto p3 = wt::input_predicates(st::number(3, 1));
    CHECK(p3.sub_poissonian.holds);
    CHECK(p3.sub_poissonian.lhs == doctest::Approx(3.0));
    CHECK(p3.sub_poissonian.rhs == doctest::Approx(0.0));

    // (|0> + |3>)/sqrt(2): super-Poissonian but fourth-moment detectable
    PureState zp3 = PureState::zeros(Truncation({3}));
    zp3.amp[0] = 1.0 / std::sqrt(2.0);
    zp3.amp[3] = 1.0 / std::sqrt(2.0);
    zp3.normalized = true;
    auto pz = wt::input_predicates(zp3);
    CHECK(!pz.sub_poissonian.holds);
    CHECK(pz.sub_poissonian.rhs == doctest::Approx(2.25));
    CHECK(pz.sub_poissonian.lhs == doctest::Approx(1.5));
    CHECK(pz.fourth_moment.holds);
    CHECK(pz.fourth_moment.lhs == doctest::Approx(9.0));
    CHECK(pz.fourth_moment.rhs == doctest::Approx(0.0));

    auto ps = wt::input_predicates(st::squeezed_vacuum(1.0, 0.0));
    CHECK(ps.squeezing.holds);
    CHECK(ps.pair_moment.holds);
    CHECK(ps.pair_moment.lhs == doctest::Approx(std::sinh(1.0) * std::cosh(1.0)).epsilon(1e-9));
    CHECK(ps.pair_moment.rhs == doctest::Approx(std::sinh(1.0) * std::sinh(1.0)).epsilon(1e-9));
}

TEST_CASE("parametric quadrature condition") {
    const auto real_s = dv::SqueezerParams::from_r(0.8);
    const auto imag_s = dv::SqueezerParams::from_r(0.8, std::acos(-1.0) / 2.0);

    for (double eta : {1.0, 1.5, 3.0, 10.0}) {
        CHECK(wt::duan_parametric_condition(eta, real_s).satisfied);
        CHECK(!wt::duan_parametric_condition(eta, imag_s).satisfied);
    }
    // vacuum input reduces to |s| < c
    auto vac = wt::duan_parametric_condition(1.0, real_s);
    CHECK(vac.lhs == doctest::Approx(2.0 * std::abs(real_s.s) * std::sqrt(2.0) * std::abs(real_s.s)));
    CHECK(vac.rhs == doctest::Approx(2.0 * real_s.c * std::sqrt(2.0) * std::abs(real_s.s)));

    CHECK_THROWS_AS(wt::duan_parametric_condition(0.5, real_s), InvalidEta);

    auto from_state = wt::duan_parametric_condition(st::number(2, 0), real_s);
    CHECK(from_state.eta == doctest::Approx(5.0));
}

TEST_CASE("local phase invariance of the margins") {
    PureState s = st::photon_added_pair(cplx(1, 0), cplx(0.7, 0.2));
    const double base_prod = wt::hz_product(s).margin;
    const double base_sum = wt::hz_sum(s).margin;
    for (double phi : {0.4, 1.9}) {
        PureState rotated = dv::phase_shift(dv::phase_shift(s, 0, phi), 1, -0.3 * phi);
        CHECK(wt::hz_product(rotated).margin == doctest::Approx(base_prod).epsilon(1e-12));
        CHECK(wt::hz_sum(rotated).margin == doctest::Approx(base_sum).epsilon(1e-12));
    }
}

TEST_CASE("displacement covariance of the central condition") {
    PureState bell = st::single_photon_bell();
    const double base = wt::hz_central(bell).margin;
    PureState moved = st::displaced(bell, {cplx(1.2, -0.4), cplx(0.0, 0.9)});
    CHECK(wt::hz_central(moved).margin == doctest::Approx(base).epsilon(1e-9));
}

TEST_CASE("measurement scheme consistency") {
    PureState cat = st::cat_pair(cplx(1, 0), cplx(0.5, 0));
    const cplx direct = expect(cat, monomial_pair(2, 0, 0, 1, 1, 1, 0));
    CHECK(std::abs(dv::measure_ab_dagger(cat) - direct) < 1e-10);
}

TEST_CASE("number-pair boundary matches the factorial rule exhaustively") {
    for (int k1 = 1; k1 <= 10; ++k1) {
        for (int k2 = 0; k2 < k1; ++k2) {
            const int m = k1 - k2;
            PureState s = st::number_pair(k1, k2, 2);
            auto rep = wt::hz_product(s, m, m);
            const auto v = pf::number_pair_values(k1, k2);
            CHECK(rep.lhs == doctest::Approx(v.lhs).epsilon(1e-9));
            CHECK(rep.rhs == doctest::Approx(v.rhs).epsilon(1e-9));
            const bool detected = rep.verdict == wt::Verdict::detected;
            CHECK(detected == v.detect_boundary);
            if (2 * k2 >= k1) {
                const bool rule = pf::factorial(k1) * pf::factorial(2 * k2 - k1) > 4.0 * pf::factorial(k2) * pf::factorial(k2);
                CHECK(detected == rule);
            } else {
                CHECK(detected);
            }
        }
    }
}

TEST_CASE("no witness fires on separable states") {
    std::mt19937 rng(101);
    for (int rep = 0; rep < 25; ++rep) {
        PureState a = random_single(rng), b = random_single(rng);
        PureState prod = tensor(a, b);
        CHECK(wt::hz_product(prod).margin <= 1e-10);
        CHECK(wt::hz_product(prod, 2, 2).margin <= 1e-10);
        CHECK(wt::hz_sum(prod).margin <= 1e-10);
        CHECK(wt::hz_central(prod).margin <= 1e-10);
        CHECK(wt::duan_simon(prod).margin <= 1e-10);
    }
}

TEST_CASE("witnesses from amplifier moment bundles") {
    PureState bell = st::single_photon_bell();
    auto m0 = dv::amp_witness_moments(bell);
    dv::AmplifierParams p{0.0, 0.2, 0.0, 0.3, 1.0};
    auto mt = dv::evolve(m0, p);
    auto rep = wt::hz_product(mt);
    CHECK(rep.margin == doctest::Approx(0.25 * std::exp(-0.5)).epsilon(1e-12));
    CHECK(wt::hz_central(mt).margin == doctest::Approx(rep.margin).epsilon(1e-12));
    CHECK(wt::hz_sum11(mt).margin < 1e-12);
    CHECK(wt::duan_simon(mt).verdict != wt::Verdict::detected);
}
