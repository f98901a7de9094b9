#ifndef FOCKSIM_RUNNER_HPP
#define FOCKSIM_RUNNER_HPP

#include <iosfwd>

#include "focksim/config.hpp"
#include "focksim/witnesses.hpp"

namespace focksim::cli {

struct ResultRow {
    std::vector<std::pair<std::string, double>> axes;
    witness::WitnessReport report;
};

// Build the configured state, push it through the pipeline, evaluate the
// witness list. The same entry point serves single runs and scan points.
std::vector<ResultRow> run_witness(const RunConfig& cfg);

// Scan points evaluate concurrently; rows come back in lexicographic axis
// order regardless of completion order.
std::vector<ResultRow> run_scan(const RunConfig& cfg);

// Closed-form or RK4 amplifier evolution, then the witness list; rows carry
// the evolution time as an axis column.
std::vector<ResultRow> run_evolve(const RunConfig& cfg);

std::string run_formula(const std::string& id, const std::map<std::string, cplx>& params);

std::string emit_csv(const std::vector<ResultRow>& rows);
std::string emit_json(const std::vector<ResultRow>& rows);

// argv-style front end; returns the process exit code (0 ok, 2 config error,
// 3 numerical failure).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace focksim::cli

#endif
