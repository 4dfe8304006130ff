#pragma once

#include <stdexcept>
#include <string>

#include "linecollab/model.hpp"

namespace linecollab::plot {

class PlotError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Time-space diagram: time runs left to right over [0, C_max], space bottom
/// to top over the positions touched, 5% margins. The server is a solid line,
/// clients dotted, rendezvous white circles, completions (tau > 0) black
/// circles. Byte-identical output for identical input. Throws PlotError
/// listing the violations when the solution is infeasible.
std::string render_svg(const Instance& instance, const Solution& solution);

}  // namespace linecollab::plot
