#pragma once

#include "ratroot/convergence.hpp"
#include "ratroot/iteration.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ratroot {

struct OutputStep {
    int n = 0;
    std::string exact;
    std::string decimal;
    std::string residual;
    std::optional<std::string> sexagesimal;
};

/// Render-ready view of a solved problem: exact fraction strings plus decimal
/// (and optionally base-60) projections, all truncated, never rounded.
struct OutputRecord {
    std::string radicand;
    int degree = 2;
    std::string x0;
    std::vector<OutputStep> steps;
    bool converged = false;
    int iterations = 0;
    std::string observed_order; // "2.0000" or "undetermined"
};

OutputRecord make_output_record(const IterationTrace& trace, const ConvergenceReport& report,
                                int display_digits, std::optional<int> sexagesimal_places);

std::string render_table(const OutputRecord& record);
std::string render_json(const OutputRecord& record);
std::string render_csv(const OutputRecord& record);

/// Full command-line front end. Exit codes: 0 converged, 2 invalid input
/// (diagnostic on `err`), 3 non-convergence (partial trace still on `out`).
/// Data goes to `out` only, diagnostics to `err` only.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace ratroot
