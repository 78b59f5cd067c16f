#include <algorithm>
#include <cmath>
#include <vector>

#include <boost/geometry.hpp>
#include <boost/geometry/geometries/point_xy.hpp>
#include <boost/geometry/geometries/polygon.hpp>

#include "scat/curve.hpp"
#include "scat/errors.hpp"

namespace scat {
namespace {

namespace bg = boost::geometry;
using BgPoint = bg::model::d2::point_xy<double>;
using BgPolygon = bg::model::polygon<BgPoint>;

BgPolygon to_polygon(const SampledCurve& sc) {
    BgPolygon poly;
    for (int i = 0; i < sc.size(); ++i) {
        bg::append(poly.outer(), BgPoint(sc.x[i], sc.y[i]));
    }
    bg::correct(poly);
    return poly;
}

double one_sided_mean(const SampledCurve& a, const SampledCurve& b) {
    double acc = 0.0;
    for (int i = 0; i < a.size(); ++i) {
        double best = 1e300;
        const double ax = a.x[i], ay = a.y[i];
        for (int j = 0; j < b.size(); ++j) {
            const double dx = ax - b.x[j], dy = ay - b.y[j];
            best = std::min(best, dx * dx + dy * dy);
        }
        acc += std::sqrt(best);
    }
    return acc / a.size();
}

}  // namespace

double chamfer_distance(const SampledCurve& a, const SampledCurve& b) {
    if (a.size() == 0 || b.size() == 0) {
        throw ValidationError("chamfer: empty node set");
    }
    return 0.5 * one_sided_mean(a, b) + 0.5 * one_sided_mean(b, a);
}

double chamfer_points(const std::vector<Eigen::Vector2d>& a,
                      const std::vector<Eigen::Vector2d>& b) {
    if (a.empty() || b.empty()) throw ValidationError("chamfer: empty point set");
    const auto one_sided = [](const std::vector<Eigen::Vector2d>& p,
                              const std::vector<Eigen::Vector2d>& q) {
        double acc = 0.0;
        for (const auto& u : p) {
            double best = 1e300;
            for (const auto& v : q) best = std::min(best, (u - v).squaredNorm());
            acc += std::sqrt(best);
        }
        return acc / static_cast<double>(p.size());
    };
    return 0.5 * one_sided(a, b) + 0.5 * one_sided(b, a);
}

double area_error(const SampledCurve& truth, const SampledCurve& approx) {
    const BgPolygon p_truth = to_polygon(truth);
    const BgPolygon p_approx = to_polygon(approx);
    const double area_truth = bg::area(p_truth);
    if (!(area_truth > 1e-14)) {
        throw ValidationError("area_error: degenerate truth polygon");
    }
    if (!(std::abs(bg::area(p_approx)) > 1e-14)) {
        throw ValidationError("area_error: degenerate approximation polygon");
    }
    std::vector<BgPolygon> sym;
    bg::sym_difference(p_truth, p_approx, sym);
    double delta = 0.0;
    for (const auto& piece : sym) delta += bg::area(piece);
    return delta / area_truth;
}

Eigen::ArrayXd pointwise_spread(const CurveEnsemble& ensemble,
                                const SampledCurve& reference) {
    if (ensemble.empty()) throw ValidationError("pointwise_spread: empty ensemble");
    const int n_ref = reference.size();
    const int n_members = static_cast<int>(ensemble.size());
    Eigen::ArrayXXd dist(n_ref, n_members);
    for (int m = 0; m < n_members; ++m) {
        const SampledCurve sc = sample_n(ensemble[m].curve, std::max(n_ref, 300));
        for (int i = 0; i < n_ref; ++i) {
            double best = 1e300;
            for (int j = 0; j < sc.size(); ++j) {
                const double dx = reference.x[i] - sc.x[j];
                const double dy = reference.y[i] - sc.y[j];
                best = std::min(best, dx * dx + dy * dy);
            }
            dist(i, m) = std::sqrt(best);
        }
    }
    Eigen::ArrayXd spread(n_ref);
    for (int i = 0; i < n_ref; ++i) {
        const double mean = dist.row(i).mean();
        spread[i] = std::sqrt((dist.row(i) - mean).square().mean());
    }
    return spread;
}

}  // namespace scat
