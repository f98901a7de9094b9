#ifndef FOCKSIM_CONFIG_HPP
#define FOCKSIM_CONFIG_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "focksim/states.hpp"

namespace focksim::cli {

// Run description parsed from the key-value config format:
//   [state]      spec = <family> key=value ...       (one line per mode group)
//   [truncation] cutoff = n[,n...]; tail = x; headroom = n
//   [pipeline]   step = <op> key=value ...           (ordered)
//   [witnesses]  witness = <name> [m=..] [n=..] [xi=..|auto]
//   [amplifier]  A_a/C_a/A_b/C_b/t/dt/method
//   [scan]       axis = <target> from=.. to=.. steps=..
//   [output]     format = csv|json; path = ...
struct PipelineStep {
    std::string op;
    std::map<std::string, cplx> params;
};

struct WitnessSpec {
    std::string name;
    int m = 1, n = 1;
    std::optional<double> xi;  // empty means auto
};

struct ScanAxis {
    std::string target;
    double from = 0.0, to = 0.0;
    int steps = 1;
};

struct AmplifierSpec {
    double A_a = 0, C_a = 0, A_b = 0, C_b = 0, t = 0;
    std::optional<double> dt;
    std::string method = "closed_form";  // or "rk4"
};

struct OutputSpec {
    std::string format = "csv";  // csv | json
    std::string path;            // empty: environment directory or stdout
};

struct RunConfig {
    std::vector<states::StateSpec> state_specs;
    std::optional<std::vector<int>> cutoff_override;
    double tail = 1e-12;
    int headroom = 4;
    std::optional<double> tolerance_override;  // witness margin tolerance
    std::vector<PipelineStep> pipeline;
    std::vector<WitnessSpec> witnesses;
    std::optional<AmplifierSpec> amplifier;
    std::vector<ScanAxis> axes;
    OutputSpec output;
};

RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);
std::string serialize_config(const RunConfig& cfg);

cplx parse_complex(const std::string& text);
std::string format_complex(cplx v);

// Fixed 12-significant-digit scientific formatting used for every emitted
// float, so identical configs give byte-identical files.
std::string format_sci(double v);

}  // namespace focksim::cli

#endif
