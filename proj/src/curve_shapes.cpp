#include <cmath>
#include <complex>
#include <vector>

#include "scat/curve.hpp"
#include "scat/errors.hpp"

namespace scat {

namespace {
constexpr double kTwoPi = 6.28318530717958647692;
}

FourierCurve make_cavity(double a, double b, double alpha, int n_modes) {
    if (!(a > 0.0) || !(b > 0.0) || !(alpha > 0.0)) {
        throw ValidationError("make_cavity: parameters must be positive");
    }
    if (n_modes <= 0) n_modes = 401;
    const int n_dense = std::max(8 * n_modes, 4096);

    // log z along the ellipse with the argument unwrapped continuously;
    // the ellipse is centered at (20, 0) so it never encircles the origin.
    std::vector<double> log_r(n_dense), arg(n_dense);
    double prev_arg = 0.0;
    double max_log_r = -1e300;
    for (int i = 0; i < n_dense; ++i) {
        const double t = kTwoPi * i / n_dense;
        const std::complex<double> z(20.0 + a * std::cos(t), b * std::sin(t));
        log_r[i] = std::log(std::abs(z));
        double ph = std::arg(z);
        if (i > 0) {
            while (ph - prev_arg > 3.14159265358979323846) ph -= kTwoPi;
            while (ph - prev_arg < -3.14159265358979323846) ph += kTwoPi;
        }
        arg[i] = ph;
        prev_arg = ph;
        max_log_r = std::max(max_log_r, log_r[i]);
    }
    std::vector<Eigen::Vector2d> pts(n_dense);
    for (int i = 0; i < n_dense; ++i) {
        const double mod = std::exp(2.0 * alpha * (log_r[i] - max_log_r));
        const double ph = 2.0 * alpha * arg[i];
        pts[i] = {mod * std::cos(ph), mod * std::sin(ph)};
    }
    FourierCurve curve = resample_arclength(pts, n_modes);
    const SampledCurve sc = sample_n(curve, std::max(2 * n_modes, 600));
    if (polyline_self_intersects(sc.x, sc.y, 1e-12 * curve.length())) {
        throw NumericalError("make_cavity: generated boundary self-intersects");
    }
    return curve;
}

FourierCurve make_random_circle(SplitMix64& rng) {
    const double radius = 0.5 + rng.uniform01();
    const double cx = rng.uniform01() - 0.5;
    const double cy = rng.uniform01() - 0.5;
    return FourierCurve::circle(cx, cy, radius);
}

}  // namespace scat
