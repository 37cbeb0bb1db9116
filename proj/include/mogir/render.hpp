#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mogir/comparison.hpp"
#include "mogir/config.hpp"
#include "mogir/verify.hpp"

namespace mogir {

/// Tables print 6 significant digits.
std::string fmt6(double v);

/// JSON carries 12 significant digits; values are rounded through text
/// so both renderings show the same numbers at their printed precision.
double sig12(double v);

void render_analyze(std::ostream& os, OutputFormat format, const ModelParams& p);

void render_simulate(std::ostream& os, OutputFormat format, const RunConfig& cfg,
                     Strategy strategy, const Moments& moments);

/// Per-period CSV dump (columns t,x,pi,y_pot,y,i); paths are emitted
/// consecutively and t restarts at 0 on each path boundary.
void render_dump_paths(std::ostream& os, const std::vector<std::vector<EconState>>& paths);

void render_compare(std::ostream& os, OutputFormat format, const RunConfig& cfg,
                    const ComparisonReport& report);

void render_verify(std::ostream& os, OutputFormat format, const std::vector<VerifyCheck>& checks);

}  // namespace mogir
