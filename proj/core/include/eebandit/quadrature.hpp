#pragma once

#include <cstddef>
#include <functional>
#include <span>

namespace eebandit {

struct QuadratureOptions {
    double rel_tol = 1e-8;
    double abs_tol = 0.0;
    std::size_t max_subdivisions = std::size_t{1} << 20;
};

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;  ///< estimated absolute error
    std::size_t subdivisions = 0;
};

/// Globally adaptive Simpson rule over the panels delimited by `breakpoints`
/// (sorted, at least two). The panel with the largest error estimate is
/// bisected until the total estimate meets max(abs_tol, rel_tol * |value|).
/// Throws NumericError once max_subdivisions bisections have been spent.
QuadratureResult adaptive_simpson(const std::function<double(double)>& f,
                                  std::span<const double> breakpoints,
                                  const QuadratureOptions& options = {});

QuadratureResult adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                                  const QuadratureOptions& options = {});

} // namespace eebandit
