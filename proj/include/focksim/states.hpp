#ifndef FOCKSIM_STATES_HPP
#define FOCKSIM_STATES_HPP

#include <map>
#include <string>

#include "focksim/state.hpp"

namespace focksim::states {

// Cutoff selection for amplitude-parametrized states: smallest N whose
// occupation tail falls below `tail`, plus `headroom` levels for whatever the
// pipeline will add on top (photon addition, displacement, squeezing).
struct CutoffPolicy {
    double tail = 1e-12;
    int headroom = 4;
};

int coherent_cutoff(double abs_alpha, double tail = 1e-12);
int squeezed_cutoff(double r, double tail = 1e-12);

PureState vacuum(int cutoff = 0);
PureState coherent(cplx alpha, CutoffPolicy policy = {});
PureState coherent_at(cplx alpha, int cutoff);
PureState number(int n, int extra_headroom = 0);

// (adag + bdag)|alpha>|beta>, renormalized numerically; the analytic
// prefactor 1/sqrt(|alpha+beta|^2 + 2) is kept as a cross-check only.
PureState photon_added_pair(cplx alpha, cplx beta, CutoffPolicy policy = {});

// (|alpha,beta> + |beta,alpha>)/sqrt(2(1+x)), x = |<alpha|beta>|^2,
// renormalized numerically.
PureState cat_pair(cplx alpha, cplx beta, CutoffPolicy policy = {});

// (|k1,k2> + |k2,k1>)/sqrt(2), requires k1 > k2 >= 0.
PureState number_pair(int k1, int k2, int extra_headroom = 0);

// (|0,1> + |1,0>)/sqrt(2)
PureState single_photon_bell();

// D(alpha_i) on every mode, with the truncation enlarged first so the
// displaced state fits.
PureState displaced(const PureState& s, const std::vector<cplx>& alphas, CutoffPolicy policy = {});

// (|0,0,1> + |0,1,0> + |1,0,0>)/sqrt(3)
PureState w_single_photon();

// eta (|0,0,alpha> + |0,alpha,0> + |alpha,0,0>), renormalized numerically.
PureState w_coherent(cplx alpha, CutoffPolicy policy = {});

// Even-photon expansion; <N> = sinh^2 r, <a^2> = -e^{i theta} sinh r cosh r.
PureState squeezed_vacuum(double r, double theta, CutoffPolicy policy = {});

// CLI-facing family record.
struct StateSpec {
    std::string family;
    std::map<std::string, cplx> params;
};

PureState build(const StateSpec& spec, CutoffPolicy policy = {});

}  // namespace focksim::states

#endif
