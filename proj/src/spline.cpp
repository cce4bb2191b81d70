#include "mdkit/spline.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace mdkit {

CubicSpline::CubicSpline(std::span<const double> x, std::span<const double> y) {
    const std::size_t n = x.size();
    if (n == 0 || y.size() != n) {
        throw std::invalid_argument("spline: empty knots or size mismatch");
    }
    for (std::size_t i = 1; i < n; ++i) {
        if (!(x[i] > x[i - 1])) {
            throw std::invalid_argument("spline: knots must be strictly increasing");
        }
    }
    x_.assign(x.begin(), x.end());
    a_.assign(y.begin(), y.end());
    b_.assign(n, 0.0);
    c_.assign(n, 0.0);
    d_.assign(n, 0.0);
    if (n == 1) return;
    if (n == 2) {
        b_[0] = (a_[1] - a_[0]) / (x_[1] - x_[0]);
        return;
    }

    // Tridiagonal solve for second-derivative coefficients, natural ends.
    std::vector<double> h(n - 1), alpha(n, 0.0), l(n), mu(n), z(n);
    for (std::size_t i = 0; i + 1 < n; ++i) h[i] = x_[i + 1] - x_[i];
    for (std::size_t i = 1; i + 1 < n; ++i) {
        alpha[i] = 3.0 * ((a_[i + 1] - a_[i]) / h[i] - (a_[i] - a_[i - 1]) / h[i - 1]);
    }
    l[0] = 1.0;
    mu[0] = 0.0;
    z[0] = 0.0;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        l[i] = 2.0 * (x_[i + 1] - x_[i - 1]) - h[i - 1] * mu[i - 1];
        mu[i] = h[i] / l[i];
        z[i] = (alpha[i] - h[i - 1] * z[i - 1]) / l[i];
    }
    l[n - 1] = 1.0;
    z[n - 1] = 0.0;
    c_[n - 1] = 0.0;
    for (std::size_t j = n - 1; j-- > 0;) {
        c_[j] = z[j] - mu[j] * c_[j + 1];
        b_[j] = (a_[j + 1] - a_[j]) / h[j] - h[j] * (c_[j + 1] + 2.0 * c_[j]) / 3.0;
        d_[j] = (c_[j + 1] - c_[j]) / (3.0 * h[j]);
    }
}

std::size_t CubicSpline::find_interval(double q) const {
    // Clamp outside the knot span to the boundary polynomials.
    if (q <= x_.front()) return 0;
    if (q >= x_.back()) return x_.size() >= 2 ? x_.size() - 2 : 0;
    auto it = std::upper_bound(x_.begin(), x_.end(), q);
    return static_cast<std::size_t>(it - x_.begin()) - 1;
}

double CubicSpline::operator()(double q) const {
    if (x_.size() == 1) return a_[0];
    const std::size_t i = find_interval(q);
    const double dx = q - x_[i];
    return a_[i] + dx * (b_[i] + dx * (c_[i] + dx * d_[i]));
}

void CubicSpline::sample_grid(double start, std::size_t count, double* out) const {
    if (x_.size() == 1) {
        std::fill(out, out + count, a_[0]);
        return;
    }
    std::size_t i = find_interval(start);
    const std::size_t last = x_.size() - 2;
    for (std::size_t k = 0; k < count; ++k) {
        const double q = start + static_cast<double>(k);
        while (i < last && q >= x_[i + 1]) ++i;
        const double dx = q - x_[i];
        out[k] = a_[i] + dx * (b_[i] + dx * (c_[i] + dx * d_[i]));
    }
}

}  // namespace mdkit
