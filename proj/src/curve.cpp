#include "scat/curve.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "scat/errors.hpp"

namespace scat {
namespace {

constexpr double kTwoPi = 6.28318530717958647692;

// Real-form mode coefficients of the d-th derivative: f(t) = a0 +
// sum_j a_j cos(j u) + b_j sin(j u), u = 2 pi t / L, from complex modes.
struct RealModes {
    double a0 = 0.0;
    std::vector<double> a, b;  // index 1..M
};

RealModes to_real_modes(const std::vector<std::complex<double>>& c, double length,
                        int deriv_order) {
    const int m_max = (static_cast<int>(c.size()) - 1) / 2;
    const double omega = kTwoPi / length;
    RealModes rm;
    rm.a.assign(m_max + 1, 0.0);
    rm.b.assign(m_max + 1, 0.0);
    for (int j = 1; j <= m_max; ++j) {
        std::complex<double> cj = c[m_max + j];
        // multiply by (i omega j)^deriv
        for (int d = 0; d < deriv_order; ++d) cj *= std::complex<double>(0.0, omega * j);
        rm.a[j] = 2.0 * cj.real();
        rm.b[j] = -2.0 * cj.imag();
    }
    rm.a0 = (deriv_order == 0) ? c[m_max].real() : 0.0;
    return rm;
}

// Evaluate a real trigonometric polynomial at angles u (recurrence on
// cos(j u), sin(j u)).
void eval_real_modes(const RealModes& rm, const Eigen::ArrayXd& u,
                     Eigen::ArrayXd& out) {
    const int n = static_cast<int>(u.size());
    const int m_max = static_cast<int>(rm.a.size()) - 1;
    out.resize(n);
    for (int i = 0; i < n; ++i) {
        const double cu = std::cos(u[i]);
        const double su = std::sin(u[i]);
        double cj = cu, sj = su;
        double acc = rm.a0;
        for (int j = 1; j <= m_max; ++j) {
            acc += rm.a[j] * cj + rm.b[j] * sj;
            const double cn = cj * cu - sj * su;
            sj = sj * cu + cj * su;
            cj = cn;
        }
        out[i] = acc;
    }
}

// DFT of real equispaced samples: modes 0..m_max of (1/N) sum f_m e^{-i j u_m}.
std::vector<std::complex<double>> dft_modes(const Eigen::ArrayXd& f, int m_max) {
    const int n = static_cast<int>(f.size());
    std::vector<std::complex<double>> acc(m_max + 1, {0.0, 0.0});
    for (int m = 0; m < n; ++m) {
        const double um = kTwoPi * m / n;
        const std::complex<double> w(std::cos(um), -std::sin(um));
        std::complex<double> p(1.0, 0.0);
        const double fm = f[m];
        for (int j = 0; j <= m_max; ++j) {
            acc[j] += fm * p;
            p *= w;
        }
    }
    for (auto& v : acc) v /= static_cast<double>(n);
    return acc;
}

// Symmetric coefficient vector (modes -M..M) from the nonnegative modes of
// a real signal.
std::vector<std::complex<double>> symmetrize(const std::vector<std::complex<double>>& half) {
    const int m_max = static_cast<int>(half.size()) - 1;
    std::vector<std::complex<double>> full(2 * m_max + 1);
    full[m_max] = {half[0].real(), 0.0};
    for (int j = 1; j <= m_max; ++j) {
        full[m_max + j] = half[j];
        full[m_max - j] = std::conj(half[j]);
    }
    return full;
}

double shoelace_area(const std::vector<Eigen::Vector2d>& pts) {
    double acc = 0.0;
    const size_t n = pts.size();
    for (size_t i = 0; i < n; ++i) {
        const auto& p = pts[i];
        const auto& q = pts[(i + 1) % n];
        acc += p.x() * q.y() - q.x() * p.y();
    }
    return 0.5 * acc;
}

}  // namespace

FourierCurve::FourierCurve(std::vector<std::complex<double>> coeffs_x,
                           std::vector<std::complex<double>> coeffs_y, double length)
    : cx_(std::move(coeffs_x)), cy_(std::move(coeffs_y)), length_(length) {
    validate();
}

FourierCurve FourierCurve::circle(double center_x, double center_y, double radius,
                                  int n_modes) {
    if (radius <= 0.0) throw ValidationError("circle: radius must be positive");
    if (n_modes < 5) n_modes = 5;
    if (n_modes % 2 == 0) ++n_modes;
    const int m_max = (n_modes - 1) / 2;
    std::vector<std::complex<double>> cx(n_modes, {0.0, 0.0}), cy(n_modes, {0.0, 0.0});
    cx[m_max] = {center_x, 0.0};
    cy[m_max] = {center_y, 0.0};
    cx[m_max + 1] = {0.5 * radius, 0.0};
    cx[m_max - 1] = {0.5 * radius, 0.0};
    cy[m_max + 1] = {0.0, -0.5 * radius};
    cy[m_max - 1] = {0.0, 0.5 * radius};
    return FourierCurve(std::move(cx), std::move(cy), kTwoPi * radius);
}

std::complex<double> FourierCurve::coeff_x(int j) const {
    const int m_max = max_mode();
    if (j < -m_max || j > m_max) return {0.0, 0.0};
    return cx_[m_max + j];
}

std::complex<double> FourierCurve::coeff_y(int j) const {
    const int m_max = max_mode();
    if (j < -m_max || j > m_max) return {0.0, 0.0};
    return cy_[m_max + j];
}

void FourierCurve::eval(const Eigen::ArrayXd& t, int deriv_order, Eigen::ArrayXd& out_x,
                        Eigen::ArrayXd& out_y) const {
    const Eigen::ArrayXd u = t * (kTwoPi / length_);
    eval_real_modes(to_real_modes(cx_, length_, deriv_order), u, out_x);
    eval_real_modes(to_real_modes(cy_, length_, deriv_order), u, out_y);
}

Eigen::Vector2d FourierCurve::point(double t) const {
    Eigen::ArrayXd ts(1), ox, oy;
    ts[0] = t;
    eval(ts, 0, ox, oy);
    return {ox[0], oy[0]};
}

void FourierCurve::validate() const {
    if (cx_.size() != cy_.size()) throw ValidationError("curve: coefficient size mismatch");
    if (cx_.size() < 5 || cx_.size() % 2 == 0) {
        throw ValidationError("curve: mode count must be odd and >= 5");
    }
    if (!(length_ > 0.0) || !std::isfinite(length_)) {
        throw ValidationError("curve: length must be positive and finite");
    }
    const int m_max = max_mode();
    for (const auto* c : {&cx_, &cy_}) {
        double scale = 1e-300;
        for (const auto& v : *c) {
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
                throw ValidationError("curve: non-finite coefficient");
            }
            scale = std::max(scale, std::abs(v));
        }
        for (int j = 1; j <= m_max; ++j) {
            if (std::abs((*c)[m_max + j] - std::conj((*c)[m_max - j])) > 1e-9 * scale) {
                throw ValidationError("curve: coefficients are not conjugate-symmetric");
            }
        }
        if (std::abs((*c)[m_max].imag()) > 1e-9 * scale) {
            throw ValidationError("curve: mean coefficient must be real");
        }
    }
}

int sample_count_rule(double length, double k) {
    if (!(length > 0.0) || !(k > 0.0)) {
        throw ValidationError("sample_count_rule: length and frequency must be positive");
    }
    const double per_wavelength = 20.0 * length * k / kTwoPi;
    return std::max(300, static_cast<int>(std::ceil(per_wavelength)));
}

int curve_mode_rule(double k) {
    const int band = std::max(20, static_cast<int>(std::floor(2.0 * k)));
    const int update = std::max(10, static_cast<int>(std::floor(2.0 * k)));
    return std::max(63, 2 * band + 2 * update + 1);
}

SampledCurve sample_n(const FourierCurve& curve, int n) {
    if (n < 8) throw ValidationError("sample_n: too few nodes");
    curve.validate();
    const double length = curve.length();
    Eigen::ArrayXd t(n);
    for (int i = 0; i < n; ++i) t[i] = length * i / n;
    SampledCurve sc;
    Eigen::ArrayXd dx, dy, ddx, ddy;
    curve.eval(t, 0, sc.x, sc.y);
    curve.eval(t, 1, dx, dy);
    curve.eval(t, 2, ddx, ddy);
    const Eigen::ArrayXd speed = (dx.square() + dy.square()).sqrt();
    sc.tx = dx / speed;
    sc.ty = dy / speed;
    sc.nx = sc.ty;
    sc.ny = -sc.tx;
    sc.kappa = (dx * ddy - dy * ddx) / speed.cube();
    sc.spacing = length / n;
    sc.parent = curve;
    return sc;
}

SampledCurve sample_equispaced(const FourierCurve& curve, double k) {
    return sample_n(curve, sample_count_rule(curve.length(), k));
}

namespace {

// State of the arclength reparametrization: symmetric modes of x and y over
// u in [0, 2 pi) plus the current length estimate.
struct ReparamState {
    std::vector<std::complex<double>> cx, cy;
    double length = 0.0;
};

// Fit modes -M..M from closed samples (any smooth parametrization).
ReparamState fit_modes(const std::vector<Eigen::Vector2d>& pts, int m_max) {
    const int n = static_cast<int>(pts.size());
    Eigen::ArrayXd xs(n), ys(n);
    for (int i = 0; i < n; ++i) {
        xs[i] = pts[i].x();
        ys[i] = pts[i].y();
    }
    ReparamState st;
    st.cx = symmetrize(dft_modes(xs, m_max));
    st.cy = symmetrize(dft_modes(ys, m_max));
    return st;
}

struct SpeedSpectrum {
    std::vector<std::complex<double>> v;  // modes 0..m_f of |z'(u)|
    double mean = 0.0;                    // v_0
    double dev = 0.0;                     // max relative deviation of speed from mean
};

SpeedSpectrum speed_spectrum(const ReparamState& st, int n_fine) {
    const int m_max = (static_cast<int>(st.cx.size()) - 1) / 2;
    Eigen::ArrayXd u(n_fine);
    for (int i = 0; i < n_fine; ++i) u[i] = kTwoPi * i / n_fine;
    // u-derivative: unit length so omega = 1
    Eigen::ArrayXd dx, dy;
    eval_real_modes(to_real_modes(st.cx, kTwoPi, 1), u, dx);
    eval_real_modes(to_real_modes(st.cy, kTwoPi, 1), u, dy);
    const Eigen::ArrayXd speed = (dx.square() + dy.square()).sqrt();
    SpeedSpectrum sp;
    const int m_f = std::min(n_fine / 2 - 1, 2 * m_max + 32);
    sp.v = dft_modes(speed, m_f);
    sp.mean = sp.v[0].real();
    if (!(sp.mean > 0.0)) throw NumericalError("resample_arclength: degenerate curve (zero mean speed)");
    sp.dev = ((speed - sp.mean).abs() / sp.mean).maxCoeff();
    return sp;
}

double arc_s(const SpeedSpectrum& sp, double u) {
    double acc = sp.mean * u;
    // antiderivative of sum 2 Re(v_j e^{iju}) is sum 2 Re(v_j (e^{iju}-1)/(ij))
    const std::complex<double> eu(std::cos(u), std::sin(u));
    std::complex<double> p = eu;
    for (size_t j = 1; j < sp.v.size(); ++j) {
        const std::complex<double> integ = (p - 1.0) / std::complex<double>(0.0, static_cast<double>(j));
        acc += 2.0 * (sp.v[j] * integ).real();
        p *= eu;
    }
    return acc;
}

double arc_speed(const SpeedSpectrum& sp, double u) {
    double acc = sp.mean;
    const std::complex<double> eu(std::cos(u), std::sin(u));
    std::complex<double> p = eu;
    for (size_t j = 1; j < sp.v.size(); ++j) {
        acc += 2.0 * (sp.v[j] * p).real();
        p *= eu;
    }
    return acc;
}

}  // namespace

FourierCurve resample_arclength(const std::vector<Eigen::Vector2d>& points, int n_modes) {
    if (n_modes < 5) throw ValidationError("resample_arclength: need at least 5 modes");
    if (n_modes % 2 == 0) ++n_modes;
    std::vector<Eigen::Vector2d> pts = points;
    if (pts.size() >= 2 && (pts.front() - pts.back()).norm() <
                               1e-9 * (pts[pts.size() / 2] - pts.front()).norm() + 1e-300) {
        pts.pop_back();
    }
    const int m_max = (n_modes - 1) / 2;
    if (static_cast<int>(pts.size()) < 2 * n_modes) {
        throw ValidationError("resample_arclength: need at least 2 x n_modes points");
    }
    if (shoelace_area(pts) < 0.0) std::reverse(pts.begin(), pts.end());

    // Very uneven spacing: pre-resample by chord length so the initial fit
    // sees a tame parametrization.
    {
        double cmin = 1e300, cmax = 0.0;
        for (size_t i = 0; i < pts.size(); ++i) {
            const double c = (pts[(i + 1) % pts.size()] - pts[i]).norm();
            cmin = std::min(cmin, c);
            cmax = std::max(cmax, c);
        }
        if (cmax > 3.0 * cmin) {
            std::vector<double> cum(pts.size() + 1, 0.0);
            for (size_t i = 0; i < pts.size(); ++i) {
                cum[i + 1] = cum[i] + (pts[(i + 1) % pts.size()] - pts[i]).norm();
            }
            const int n_pre = std::max(16 * n_modes, 16384);
            std::vector<Eigen::Vector2d> re(n_pre);
            size_t seg = 0;
            for (int i = 0; i < n_pre; ++i) {
                const double target = cum.back() * i / n_pre;
                while (seg + 1 < pts.size() && cum[seg + 1] < target) ++seg;
                const double w = (target - cum[seg]) / (cum[seg + 1] - cum[seg]);
                re[i] = (1.0 - w) * pts[seg] + w * pts[(seg + 1) % pts.size()];
            }
            pts = std::move(re);
        }
    }

    ReparamState st = fit_modes(pts, m_max);
    const int n_fine = std::max(4 * n_modes, 256);
    double prev_length = -1.0;
    for (int sweep = 0; sweep < 100; ++sweep) {
        const SpeedSpectrum sp = speed_spectrum(st, n_fine);
        const double length = kTwoPi * sp.mean;
        if (sp.dev < 5e-7 && prev_length > 0.0 &&
            std::abs(length - prev_length) < 1e-10 * length) {
            FourierCurve out(st.cx, st.cy, length);
            return out;
        }
        prev_length = length;
        // invert s(u): nodes equispaced in arclength
        std::vector<Eigen::Vector2d> resampled(n_fine);
        Eigen::ArrayXd unew(n_fine);
        double u_lo = 0.0;
        for (int i = 0; i < n_fine; ++i) {
            const double target = length * i / n_fine;
            double u = (i == 0) ? 0.0 : std::max(u_lo, unew[i - 1]);
            if (i > 0) {
                // initial guess: advance by the target increment / local speed
                const double v = std::max(arc_speed(sp, u), 1e-6 * sp.mean);
                u += (length / n_fine) / v;
            }
            for (int it = 0; it < 30; ++it) {
                const double f = arc_s(sp, u) - target;
                const double v = arc_speed(sp, u);
                const double step = f / std::max(v, 1e-6 * sp.mean);
                u -= step;
                if (std::abs(step) < 1e-14 * kTwoPi) break;
            }
            unew[i] = u;
            u_lo = u;
        }
        Eigen::ArrayXd nx, ny;
        eval_real_modes(to_real_modes(st.cx, kTwoPi, 0), unew, nx);
        eval_real_modes(to_real_modes(st.cy, kTwoPi, 0), unew, ny);
        for (int i = 0; i < n_fine; ++i) resampled[i] = {nx[i], ny[i]};
        st = fit_modes(resampled, m_max);
    }
    throw NumericalError("resample_arclength: no convergence after 100 sweeps");
}

CurvatureSpectrum curvature_spectrum(const SampledCurve& sc) {
    const FourierCurve& curve = sc.parent;
    const int m_max = curve.max_mode();
    const int n = std::max({4 * m_max + 2, 256, 0});
    Eigen::ArrayXd t(n);
    const double length = curve.length();
    for (int i = 0; i < n; ++i) t[i] = length * i / n;
    Eigen::ArrayXd dx, dy, ddx, ddy;
    curve.eval(t, 1, dx, dy);
    curve.eval(t, 2, ddx, ddy);
    const Eigen::ArrayXd speed = (dx.square() + dy.square()).sqrt();
    const Eigen::ArrayXd kappa = (dx * ddy - dy * ddx) / speed.cube();

    CurvatureSpectrum out;
    out.values = sc.kappa;
    out.max_mode = 2 * m_max;
    out.coeffs = symmetrize(dft_modes(kappa, out.max_mode));
    return out;
}

ElasticEnergies elastic_energies(const CurvatureSpectrum& spectrum, int m) {
    if (m < 0) throw ValidationError("elastic_energies: band limit must be >= 0");
    ElasticEnergies en;
    const int m_max = spectrum.max_mode;
    for (int j = -m_max; j <= m_max; ++j) {
        const double mag2 = std::norm(spectrum.coeffs[m_max + j]);
        en.total += mag2;
        if (std::abs(j) <= m) en.bandlimited += mag2;
    }
    return en;
}

int ConstraintParams::bandlimit(double k) const {
    return std::max(bandlimit_floor, static_cast<int>(std::floor(bandlimit_factor * k)));
}

void ConstraintParams::validate() const {
    if (!(eps_kappa > 0.0) || !(eps_kappa < 1.0)) {
        throw ValidationError("constraints: eps_kappa must lie in (0, 1)");
    }
    if (bandlimit_floor < 1) throw ValidationError("constraints: band limit floor must be >= 1");
}

bool polyline_self_intersects(const Eigen::ArrayXd& x, const Eigen::ArrayXd& y,
                              double tol) {
    const int n = static_cast<int>(x.size());
    if (n < 3) return false;
    struct Seg {
        double x0, y0, x1, y1, minx, maxx, miny, maxy;
        int id;
    };
    std::vector<Seg> segs(n);
    for (int i = 0; i < n; ++i) {
        const int j = (i + 1) % n;
        segs[i] = {x[i], y[i], x[j], y[j],
                   std::min(x[i], x[j]), std::max(x[i], x[j]),
                   std::min(y[i], y[j]), std::max(y[i], y[j]), i};
    }
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return segs[a].minx < segs[b].minx; });

    const auto cross = [](double ax, double ay, double bx, double by) {
        return ax * by - ay * bx;
    };
    const auto intersects = [&](const Seg& a, const Seg& b) {
        if (a.maxx < b.minx - tol || b.maxx < a.minx - tol) return false;
        if (a.maxy < b.miny - tol || b.maxy < a.miny - tol) return false;
        const double d1 = cross(b.x1 - b.x0, b.y1 - b.y0, a.x0 - b.x0, a.y0 - b.y0);
        const double d2 = cross(b.x1 - b.x0, b.y1 - b.y0, a.x1 - b.x0, a.y1 - b.y0);
        const double d3 = cross(a.x1 - a.x0, a.y1 - a.y0, b.x0 - a.x0, b.y0 - a.y0);
        const double d4 = cross(a.x1 - a.x0, a.y1 - a.y0, b.x1 - a.x0, b.y1 - a.y0);
        const double la = std::hypot(a.x1 - a.x0, a.y1 - a.y0);
        const double lb = std::hypot(b.x1 - b.x0, b.y1 - b.y0);
        const double ea = tol * lb, eb = tol * la;
        if (((d1 > ea && d2 < -ea) || (d1 < -ea && d2 > ea)) &&
            ((d3 > eb && d4 < -eb) || (d3 < -eb && d4 > eb))) {
            return true;  // proper crossing
        }
        // collinear / touching within tolerance
        const auto on_segment = [&](const Seg& s, double px, double py, double e) {
            return px >= s.minx - e && px <= s.maxx + e && py >= s.miny - e &&
                   py <= s.maxy + e;
        };
        if (std::abs(d1) <= ea && on_segment(b, a.x0, a.y0, tol)) return true;
        if (std::abs(d2) <= ea && on_segment(b, a.x1, a.y1, tol)) return true;
        if (std::abs(d3) <= eb && on_segment(a, b.x0, b.y0, tol)) return true;
        if (std::abs(d4) <= eb && on_segment(a, b.x1, b.y1, tol)) return true;
        return false;
    };

    std::vector<int> active;
    for (const int idx : order) {
        const Seg& cur = segs[idx];
        active.erase(std::remove_if(active.begin(), active.end(),
                                    [&](int a) { return segs[a].maxx < cur.minx - tol; }),
                     active.end());
        for (const int a : active) {
            const int d = std::abs(segs[a].id - cur.id);
            if (d == 1 || d == n - 1) continue;  // adjacent segments share a node
            if (intersects(segs[a], cur)) return true;
        }
        active.push_back(idx);
    }
    return false;
}

Admissibility is_admissible(const FourierCurve& curve, double k,
                            const ConstraintParams& params) {
    params.validate();
    const SampledCurve sc = sample_equispaced(curve, k);
    Admissibility adm;
    const CurvatureSpectrum spec = curvature_spectrum(sc);
    const ElasticEnergies en = elastic_energies(spec, params.bandlimit(k));
    adm.energy_fraction = en.total > 0.0 ? en.bandlimited / en.total : 1.0;
    if (polyline_self_intersects(sc.x, sc.y, 1e-12 * curve.length())) {
        adm.ok = false;
        adm.reason = AdmissibilityReason::self_intersection;
        return adm;
    }
    if (en.bandlimited < (1.0 - params.eps_kappa) * en.total) {
        adm.ok = false;
        adm.reason = AdmissibilityReason::energy;
        return adm;
    }
    adm.ok = true;
    adm.reason = AdmissibilityReason::admissible;
    return adm;
}

PerturbationCoeffs::PerturbationCoeffs(Eigen::VectorXd coeffs) : c(std::move(coeffs)) {
    validate();
}

PerturbationCoeffs PerturbationCoeffs::zero(int n_h) {
    PerturbationCoeffs p;
    p.c = Eigen::VectorXd::Zero(2 * n_h + 1);
    p.validate();
    return p;
}

void PerturbationCoeffs::validate() const {
    if (c.size() < 3 || c.size() % 2 == 0) {
        throw ValidationError("perturbation: coefficient count must be odd and >= 3");
    }
    if (!c.allFinite()) throw ValidationError("perturbation: non-finite coefficient");
}

Eigen::ArrayXd PerturbationCoeffs::evaluate(const Eigen::ArrayXd& t, double length) const {
    const int nh = n_h();
    const int n = static_cast<int>(t.size());
    Eigen::ArrayXd out(n);
    for (int i = 0; i < n; ++i) {
        const double u = kTwoPi * t[i] / length;
        const double cu = std::cos(u), su = std::sin(u);
        double cj = cu, sj = su, acc = c[0];
        for (int m = 1; m <= nh; ++m) {
            acc += c[m] * cj + c[nh + m] * sj;
            const double cn = cj * cu - sj * su;
            sj = sj * cu + cj * su;
            cj = cn;
        }
        out[i] = acc;
    }
    return out;
}

FourierCurve apply_normal_update(const FourierCurve& curve,
                                 const PerturbationCoeffs& coeffs, double k) {
    coeffs.validate();
    const int n_out = std::max(curve.mode_count(), curve_mode_rule(k));
    const int n_samples =
        std::max(sample_count_rule(curve.length(), k), 2 * n_out + 2);
    const SampledCurve sc = sample_n(curve, n_samples);
    Eigen::ArrayXd t(n_samples);
    for (int i = 0; i < n_samples; ++i) t[i] = curve.length() * i / n_samples;
    const Eigen::ArrayXd h = coeffs.evaluate(t, curve.length());
    std::vector<Eigen::Vector2d> pts(n_samples);
    for (int i = 0; i < n_samples; ++i) {
        pts[i] = {sc.x[i] + h[i] * sc.nx[i], sc.y[i] + h[i] * sc.ny[i]};
    }
    return resample_arclength(pts, n_out);
}

}  // namespace scat
