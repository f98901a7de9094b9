#ifndef FOCKSIM_TRUNCATION_HPP
#define FOCKSIM_TRUNCATION_HPP

#include <complex>
#include <cstddef>
#include <vector>

#include "focksim/errors.hpp"

namespace focksim {

using cplx = std::complex<double>;

// Per-mode photon-number cutoffs (inclusive). Mode i runs over 0..cutoff[i],
// so the tensor dimension is prod(cutoff[i] + 1).
struct Truncation {
    std::vector<int> cutoffs;

    Truncation() = default;
    explicit Truncation(std::vector<int> c) : cutoffs(std::move(c)) {
        if (cutoffs.empty()) throw ShapeMismatch("truncation needs at least one mode");
        for (int k : cutoffs)
            if (k < 0) throw ShapeMismatch("negative cutoff");
    }

    int mode_count() const { return static_cast<int>(cutoffs.size()); }
    int dim(int mode) const { return cutoffs[static_cast<std::size_t>(mode)] + 1; }

    std::size_t size() const {
        std::size_t n = 1;
        for (int k : cutoffs) n *= static_cast<std::size_t>(k + 1);
        return n;
    }

    // Row-major layout, mode 0 slowest.
    std::size_t stride(int mode) const {
        std::size_t s = 1;
        for (int m = mode_count() - 1; m > mode; --m) s *= static_cast<std::size_t>(dim(m));
        return s;
    }

    std::size_t flat_index(const std::vector<int>& ns) const {
        std::size_t idx = 0;
        for (int m = 0; m < mode_count(); ++m) idx = idx * static_cast<std::size_t>(dim(m)) + static_cast<std::size_t>(ns[static_cast<std::size_t>(m)]);
        return idx;
    }

    std::vector<int> unflatten(std::size_t idx) const {
        std::vector<int> ns(static_cast<std::size_t>(mode_count()));
        for (int m = mode_count() - 1; m >= 0; --m) {
            ns[static_cast<std::size_t>(m)] = static_cast<int>(idx % static_cast<std::size_t>(dim(m)));
            idx /= static_cast<std::size_t>(dim(m));
        }
        return ns;
    }

    bool operator==(const Truncation& o) const { return cutoffs == o.cutoffs; }
    bool operator!=(const Truncation& o) const { return !(*this == o); }
};

namespace detail {

// Ladder shifts along one axis of a flat tensor buffer. The same two
// primitives cover kets and both sides of a density operator because the
// coefficients are real:
//   axis_lower: out[n] = sqrt(n+1) * in[n+1]   (a on a ket axis, or rho*adag on a bra axis)
//   axis_raise: out[n] = sqrt(n)   * in[n-1]   (adag on a ket axis, or rho*a on a bra axis)
// axis_raise returns the probability weight pushed past the top level.
void axis_lower(const std::vector<cplx>& in, std::vector<cplx>& out, int dim, std::size_t stride);
double axis_raise(const std::vector<cplx>& in, std::vector<cplx>& out, int dim, std::size_t stride);

// Multiply amplitudes by f(n) along one axis (n = level index).
void axis_scale(std::vector<cplx>& data, int dim, std::size_t stride, const std::vector<cplx>& factor);

}  // namespace detail

}  // namespace focksim

#endif
