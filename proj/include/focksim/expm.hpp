#ifndef FOCKSIM_EXPM_HPP
#define FOCKSIM_EXPM_HPP

#include <vector>

#include "focksim/density.hpp"
#include "focksim/state.hpp"

namespace focksim {

// One term of an operator polynomial: coeff * prod of single ladder factors,
// applied left to right. Factors on different modes commute; factors on the
// same mode are applied in the listed order.
struct GenTerm {
    cplx coeff;
    struct Factor {
        int mode;
        LadderKind kind;
    };
    std::vector<Factor> factors;
};

using Generator = std::vector<GenTerm>;

// |psi> <- exp(G)|psi| for anti-Hermitian G, via scaled Taylor stepping.
// Creation weight past the cutoff is dropped by the ladder shifts, so the
// caller provides enough headroom for the generator at hand.
void apply_exp_generator(PureState& s, const Generator& g);

// rho <- exp(G) rho exp(-G) (unitary conjugation for anti-Hermitian G).
void apply_exp_generator(DensityOperator& rho, const Generator& g);

}  // namespace focksim

#endif
