#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace mdkit {

// Natural cubic spline through strictly increasing knots. Two knots fall
// back to linear interpolation, one knot to a constant.
class CubicSpline {
public:
    CubicSpline(std::span<const double> x, std::span<const double> y);

    double operator()(double q) const;

    // Evaluate at q = start, start+1, ..., start+count-1. Knot intervals are
    // walked in lockstep with the queries, so this is O(count + knots).
    void sample_grid(double start, std::size_t count, double* out) const;

private:
    std::vector<double> x_, a_, b_, c_, d_;  // per-interval coefficients
    std::size_t find_interval(double q) const;
};

}  // namespace mdkit
