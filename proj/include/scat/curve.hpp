#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "scat/rng.hpp"

namespace scat {

/// Closed planar curve stored as a truncated Fourier series of its
/// arclength parametrization,
///
///     gamma(t) = sum_{|j| <= M} (cx_j, cy_j) exp(2 pi i j t / L),  t in [0, L).
///
/// The mode range is symmetric (odd mode count), coefficients are
/// conjugate-symmetric (the curve is real), and the parametrization is kept
/// counterclockwise with |gamma'| = 1 to within 1e-6 at sample nodes.
class FourierCurve {
public:
    FourierCurve() = default;

    /// Coefficients for modes -M..M in ascending order (size 2M+1, odd).
    FourierCurve(std::vector<std::complex<double>> coeffs_x,
                 std::vector<std::complex<double>> coeffs_y, double length);

    /// Circle of given center and radius (exactly three nonzero modes),
    /// zero-padded to n_modes.
    static FourierCurve circle(double center_x, double center_y, double radius,
                               int n_modes = 5);

    int mode_count() const { return static_cast<int>(cx_.size()); }
    int max_mode() const { return (mode_count() - 1) / 2; }
    double length() const { return length_; }

    /// Coefficient of mode j (zero outside the stored range).
    std::complex<double> coeff_x(int j) const;
    std::complex<double> coeff_y(int j) const;
    const std::vector<std::complex<double>>& coeffs_x() const { return cx_; }
    const std::vector<std::complex<double>>& coeffs_y() const { return cy_; }

    /// Evaluate the curve or its derivative (order 0..2, with respect to t)
    /// at arbitrary parameters.
    void eval(const Eigen::ArrayXd& t, int deriv_order, Eigen::ArrayXd& out_x,
              Eigen::ArrayXd& out_y) const;
    Eigen::Vector2d point(double t) const;

    /// Throws ValidationError on non-finite coefficients, broken conjugate
    /// symmetry, L <= 0, or fewer than 5 modes.
    void validate() const;

    bool operator==(const FourierCurve& other) const = default;

private:
    std::vector<std::complex<double>> cx_, cy_;  // modes -M..M
    double length_ = 0.0;
};

/// Equispaced-in-arclength samples of a curve with per-node frame data.
/// Normals point outward (the stored orientation is counterclockwise);
/// curvature is positive for a counterclockwise circle.
struct SampledCurve {
    Eigen::ArrayXd x, y;    // node positions, t_i = i L / N
    Eigen::ArrayXd tx, ty;  // unit tangents
    Eigen::ArrayXd nx, ny;  // unit outward normals
    Eigen::ArrayXd kappa;   // signed curvature
    double spacing = 0.0;   // L / N
    FourierCurve parent;

    int size() const { return static_cast<int>(x.size()); }
    double length() const { return parent.length(); }
};

/// Node-count rule: max(300, ceil(20 L k / (2 pi))), i.e. at least 20 points
/// per wavelength.
int sample_count_rule(double length, double k);

/// Default mode budget for curves maintained at frequency k: room for the
/// curvature band limit plus the update band.
int curve_mode_rule(double k);

/// Sample with the node-count rule for frequency k.
SampledCurve sample_equispaced(const FourierCurve& curve, double k);

/// Sample with an explicit node count.
SampledCurve sample_n(const FourierCurve& curve, int n);

/// Fit a closed point sequence with an n_modes-term Fourier series and
/// iterate the arclength reparametrization until successive length
/// estimates agree to 1e-10 L (at most 100 sweeps).  The input is
/// canonicalized to counterclockwise orientation.  n_modes is rounded up
/// to odd; the input must have at least 2 n_modes points.
FourierCurve resample_arclength(const std::vector<Eigen::Vector2d>& points,
                                int n_modes);

/// Curvature values at the nodes of `sc` together with the curvature
/// Fourier coefficients over the symmetric range |j| <= 2 max_mode
/// (products of two mode-limited series).  The spectrum is computed from
/// the parent curve at a node count that avoids aliasing.
struct CurvatureSpectrum {
    Eigen::ArrayXd values;                     // kappa at the nodes of sc
    std::vector<std::complex<double>> coeffs;  // modes -2M..2M
    int max_mode = 0;
};
CurvatureSpectrum curvature_spectrum(const SampledCurve& sc);

/// Elastic energies: total = sum over all modes of |kappa_j|^2,
/// bandlimited = sum over |j| <= m.
struct ElasticEnergies {
    double total = 0.0;
    double bandlimited = 0.0;
};
ElasticEnergies elastic_energies(const CurvatureSpectrum& spectrum, int m);

/// Constraint-set parameters: admissible curves are simple and carry at
/// least (1 - eps_kappa) of their elastic energy below mode
/// M(k) = max(bandlimit_floor, floor(bandlimit_factor * k)).
struct ConstraintParams {
    double eps_kappa = 0.1;
    int bandlimit_floor = 20;
    double bandlimit_factor = 2.0;

    int bandlimit(double k) const;
    void validate() const;
};

enum class AdmissibilityReason { admissible, self_intersection, energy };

struct Admissibility {
    bool ok = false;
    AdmissibilityReason reason = AdmissibilityReason::admissible;
    double energy_fraction = 0.0;  // E^{M(k)} / E (1 if E = 0)
    explicit operator bool() const { return ok; }
};

/// Tests (a) that the node polygon at frequency k has no self-intersection
/// and (b) the curvature band-limit energy condition.
Admissibility is_admissible(const FourierCurve& curve, double k,
                            const ConstraintParams& params);

/// Segment-pair sweep over a closed node polygon; tolerance is absolute.
bool polyline_self_intersects(const Eigen::ArrayXd& x, const Eigen::ArrayXd& y,
                              double tol);

/// Real coefficients of the normal perturbation
///   h(t) = c[0] + sum_m c[m] cos(2 pi m t/L) + c[N_h+m] sin(2 pi m t/L),
/// stored as (constant, cos 1..N_h, sin 1..N_h); size 2 N_h + 1.
struct PerturbationCoeffs {
    Eigen::VectorXd c;

    PerturbationCoeffs() = default;
    explicit PerturbationCoeffs(Eigen::VectorXd coeffs);
    static PerturbationCoeffs zero(int n_h);

    int n_h() const { return (static_cast<int>(c.size()) - 1) / 2; }
    double norm() const { return c.norm(); }
    /// h(t) for parameters t on a curve of length `length`.
    Eigen::ArrayXd evaluate(const Eigen::ArrayXd& t, double length) const;
    void validate() const;
};

/// gamma + h(t; c) nu evaluated at sample nodes, then reparametrized to
/// arclength.  The result is not guaranteed admissible; callers filter.
FourierCurve apply_normal_update(const FourierCurve& curve,
                                 const PerturbationCoeffs& coeffs, double k);

/// Symmetric mean nearest-neighbor distance between two node sets.
double chamfer_distance(const SampledCurve& a, const SampledCurve& b);
double chamfer_points(const std::vector<Eigen::Vector2d>& a,
                      const std::vector<Eigen::Vector2d>& b);

/// Relative area of the symmetric difference of the node polygons,
/// normalized by the truth polygon area.
double area_error(const SampledCurve& truth, const SampledCurve& approx);

/// One reconstruction attempt retained in an ensemble.
struct EnsembleEntry {
    FourierCurve curve;
    std::uint64_t seed = 0;
    double final_residual = 0.0;
    std::vector<int> path;  // frequency indices visited (empty for plain runs)
};
using CurveEnsemble = std::vector<EnsembleEntry>;

/// Per-reference-node standard deviation (population) over ensemble members
/// of the distance from the node to the member's nearest node.  Large
/// values flag boundary regions where the ensemble disagrees.
Eigen::ArrayXd pointwise_spread(const CurveEnsemble& ensemble,
                                const SampledCurve& reference);

/// Cavity benchmark: the ellipse centered at (20, 0) with semi-axes (a, b),
/// pushed forward by z^(2 alpha) / max_t |z|^(2 alpha).  The branch of
/// z^(2 alpha) is exp(2 alpha log z) with the argument unwrapped
/// continuously in t (the ellipse never encircles the origin).
FourierCurve make_cavity(double a, double b, double alpha, int n_modes = 0);

/// Circle with radius uniform in [0.5, 1.5] and center coordinates uniform
/// in [-0.5, 0.5], from exactly three consecutive draws (R, Cx, Cy).
FourierCurve make_random_circle(SplitMix64& rng);

/// Plain-text curve file: header "fouriercurve v1 N L", then one line
/// "j re_x im_x re_y im_y" per mode, 17 significant digits (round-trip
/// exact at double precision).
FourierCurve load_curve(const std::string& path);
void save_curve(const FourierCurve& curve, const std::string& path);
std::string serialize_curve(const FourierCurve& curve);
FourierCurve parse_curve(const std::string& text, const std::string& origin);

}  // namespace scat
