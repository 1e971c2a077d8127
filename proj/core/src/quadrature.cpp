#include "eebandit/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

#include "eebandit/errors.hpp"

namespace eebandit {

namespace {

struct Panel {
    double a, b;
    double fa, flm, fm, frm, fb;  // samples at a, a+h/4, a+h/2, a+3h/4, b
    double coarse;   // Simpson on [a, b]
    double refined;  // Simpson on both halves, Richardson-corrected
    double error;
};

Panel make_panel(const std::function<double(double)>& f, double a, double b, double fa,
                 double fm, double fb)
{
    const double m = 0.5 * (a + b);
    const double h = b - a;
    const double flm = f(0.5 * (a + m));
    const double frm = f(0.5 * (m + b));
    const double coarse = h / 6.0 * (fa + 4.0 * fm + fb);
    const double fine = h / 12.0 * (fa + 4.0 * flm + 2.0 * fm + 4.0 * frm + fb);
    return Panel{a, b, fa, flm, fm, frm, fb, coarse,
                 fine + (fine - coarse) / 15.0, std::abs(fine - coarse) / 15.0};
}

struct ByError {
    bool operator()(const Panel& x, const Panel& y) const { return x.error < y.error; }
};

} // namespace

QuadratureResult adaptive_simpson(const std::function<double(double)>& f,
                                  std::span<const double> breakpoints,
                                  const QuadratureOptions& options)
{
    if (breakpoints.size() < 2) {
        throw NumericError("adaptive_simpson: need at least two breakpoints");
    }
    std::priority_queue<Panel, std::vector<Panel>, ByError> heap;
    double total = 0.0;
    double total_err = 0.0;
    double f_left = f(breakpoints[0]);
    for (std::size_t i = 1; i < breakpoints.size(); ++i) {
        const double a = breakpoints[i - 1];
        const double b = breakpoints[i];
        if (!(b > a)) {
            throw NumericError("adaptive_simpson: breakpoints must be strictly increasing");
        }
        const double f_right = f(b);
        Panel p = make_panel(f, a, b, f_left, f(0.5 * (a + b)), f_right);
        total += p.refined;
        total_err += p.error;
        heap.push(p);
        f_left = f_right;
    }

    std::size_t subdivisions = 0;
    while (total_err > std::max(options.abs_tol, options.rel_tol * std::abs(total))) {
        if (subdivisions >= options.max_subdivisions) {
            throw NumericError("adaptive_simpson: subdivision cap reached without convergence");
        }
        const Panel worst = heap.top();
        heap.pop();
        const double m = 0.5 * (worst.a + worst.b);
        Panel left = make_panel(f, worst.a, m, worst.fa, worst.flm, worst.fm);
        Panel right = make_panel(f, m, worst.b, worst.fm, worst.frm, worst.fb);
        total += left.refined + right.refined - worst.refined;
        total_err += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++subdivisions;
    }

    // Re-sum from scratch so incremental cancellation does not leak into the result.
    QuadratureResult result;
    result.subdivisions = subdivisions;
    while (!heap.empty()) {
        result.value += heap.top().refined;
        result.error += heap.top().error;
        heap.pop();
    }
    if (!std::isfinite(result.value)) {
        throw NumericError("adaptive_simpson: non-finite integral");
    }
    return result;
}

QuadratureResult adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                                  const QuadratureOptions& options)
{
    const double bounds[] = {a, b};
    return adaptive_simpson(f, bounds, options);
}

} // namespace eebandit
