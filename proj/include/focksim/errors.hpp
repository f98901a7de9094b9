#ifndef FOCKSIM_ERRORS_HPP
#define FOCKSIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace focksim {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct TruncationOverflow : Error {
    explicit TruncationOverflow(const std::string& msg) : Error(msg) {}
};

struct InvalidMode : Error {
    explicit InvalidMode(const std::string& msg) : Error(msg) {}
};

struct ShapeMismatch : Error {
    explicit ShapeMismatch(const std::string& msg) : Error(msg) {}
};

struct ZeroXi : Error {
    explicit ZeroXi(const std::string& msg) : Error(msg) {}
};

struct InvalidOrder : Error {
    explicit InvalidOrder(const std::string& msg) : Error(msg) {}
};

struct LeakageExceeded : Error {
    explicit LeakageExceeded(const std::string& msg) : Error(msg) {}
};

struct TraceDrift : Error {
    explicit TraceDrift(const std::string& msg) : Error(msg) {}
};

struct NegativeRate : Error {
    explicit NegativeRate(const std::string& msg) : Error(msg) {}
};

struct UnknownInputClass : Error {
    explicit UnknownInputClass(const std::string& msg) : Error(msg) {}
};

struct DomainViolation : Error {
    explicit DomainViolation(const std::string& msg) : Error(msg) {}
};

struct BranchViolation : Error {
    explicit BranchViolation(const std::string& msg) : Error(msg) {}
};

struct InvalidEta : Error {
    explicit InvalidEta(const std::string& msg) : Error(msg) {}
};

struct WrongModeCount : Error {
    explicit WrongModeCount(const std::string& msg) : Error(msg) {}
};

struct ConfigError : Error {
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

namespace tol {
// Shared numeric tolerances. Margin ties inside the margin tolerance are
// reported inconclusive, never detected.
inline constexpr double norm = 1e-10;
inline constexpr double hermiticity = 1e-10;
inline constexpr double psd = 1e-10;
inline constexpr double margin = 1e-10;
inline constexpr double overflow = 1e-10;
inline constexpr double leakage = 1e-8;
inline constexpr double trace_drift = 1e-6;
}  // namespace tol

}  // namespace focksim

#endif
