#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "scat/errors.hpp"
#include "scat/specfun.hpp"

using scat::hankel01;
using scat::HankelPair;

namespace {

constexpr double kPi = 3.14159265358979323846;

// J_n(x) = (1/2pi) int_0^{2pi} cos(n t - x sin t) dt; the integrand is
// periodic and entire, so the trapezoidal rule converges spectrally.
double besselj_integral(int n, double x) {
    const int n_quad = 800;
    double acc = 0.0;
    for (int m = 0; m < n_quad; ++m) {
        const double t = 2.0 * kPi * m / n_quad;
        acc += std::cos(n * t - x * std::sin(t));
    }
    return acc / n_quad;
}

// mpmath (50 digits) reference values, generated by tools/gen_bessel_coeffs.py.
struct HRef {
    double x, re0, im0, re1, im1;
};
constexpr HRef kHankelRefs[] = {
    {0.001, 0.99999975000001562, -4.4714166113759233, 0.0004999999375000026, -636.62216723113943},
    {0.01, 0.99997500015624957, -3.005455637083646, 0.0049999375002604161, -63.678596282060656},
    {0.1, 0.99750156206604003, -1.5342386513503668, 0.049937526036241998, -6.458951094702027},
    {0.5, 0.9384698072408129, -0.44451873350670656, 0.24226845767487389, -1.4714723926702431},
    {1.0, 0.76519768655796655, 0.088256964215676958, 0.44005058574493352, -0.78121282130028872},
    {2.0, 0.22389077914123567, 0.51037567264974512, 0.57672480775687339, -0.10703243154093755},
    {3.7, -0.39923020337119111, 0.10607431532035418, 0.053833987745461864, 0.41667437268380749},
    {5.0, -0.1775967713143383, -0.30851762524903378, -0.32757913759146522, 0.14786314339122684},
    {5.01, -0.17431543205674917, -0.3099793399166465, -0.32868309571784988, 0.14447857825491049},
    {8.0, 0.17165080713755391, 0.22352148938756622, 0.23463634685391462, -0.15806046173124749},
    {13.0, 0.20692610237706781, -0.078207864527875911, -0.070318052121778371, -0.21008140842069351},
    {29.5, -0.13314785829839821, -0.06203938540000604, -0.064304378099192397, 0.13211573506102568},
    {100.0, 0.019985850304223122, -0.077244313365083152, -0.077145352014112158, -0.020372312002759793},
    {1234.5, -0.013550379618035722, 0.018222995047412552, 0.018217508337392498, 0.013557761447180334},
    {9999.0, -0.0007645874860391963, 0.0079425279330800068, 0.0079424897098126263, 0.00076498465310739403},
    {10000.0, -0.0070961603533888015, 0.0036478055589866059, 0.0036474507555295803, 0.0070963427525364951},
};

}  // namespace

TEST_CASE("hankel01 matches the spec's order-0/1 values at x = 1") {
    const HankelPair hp = hankel01(1.0);
    CHECK(hp.h0.real() == doctest::Approx(0.7651976865579666).epsilon(1e-14));
    CHECK(hp.h0.imag() == doctest::Approx(0.0882569642156770).epsilon(1e-13));
    CHECK(hp.h1.real() == doctest::Approx(0.4400505857449335).epsilon(1e-14));
    CHECK(hp.h1.imag() == doctest::Approx(-0.7812128213002887).epsilon(1e-14));
}

TEST_CASE("hankel01 relative error below 1e-13 against frozen references") {
    for (const auto& r : kHankelRefs) {
        const HankelPair hp = hankel01(r.x);
        const std::complex<double> ref0(r.re0, r.im0), ref1(r.re1, r.im1);
        CHECK(std::abs(hp.h0 - ref0) / std::abs(ref0) < 1e-13);
        CHECK(std::abs(hp.h1 - ref1) / std::abs(ref1) < 1e-13);
    }
}

TEST_CASE("Bessel Wronskian J0 Y1 - J1 Y0 = -2/(pi x)") {
    for (const double x : {0.1, 1.0, 10.0, 100.0, 0.03, 0.7, 4.99, 5.02, 77.7, 4321.0}) {
        const HankelPair hp = hankel01(x);
        const double j0 = hp.h0.real(), y0 = hp.h0.imag();
        const double j1 = hp.h1.real(), y1 = hp.h1.imag();
        const double w = j0 * y1 - j1 * y0;
        const double expected = -2.0 / (kPi * x);
        CHECK(std::abs(w - expected) < 1e-13 * std::abs(expected));
    }
}

TEST_CASE("large-argument amplitude approaches sqrt(2/(pi x))") {
    for (const double x : {100.0, 1000.0}) {
        const double amp = std::abs(hankel01(x).h0);
        const double lead = std::sqrt(2.0 / (kPi * x));
        CHECK(std::abs(amp - lead) < 0.1 * std::pow(x, -1.5));
    }
}

TEST_CASE("hankel01 rejects non-positive arguments") {
    CHECK_THROWS_AS(hankel01(0.0), scat::NumericalError);
    CHECK_THROWS_AS(hankel01(-2.0), scat::NumericalError);
}

TEST_CASE("hankel1_sequence base case and recurrence residual") {
    const double x = 7.3;
    const auto h = scat::hankel1_sequence(25, x);
    const HankelPair hp = hankel01(x);
    CHECK(std::abs(h[0] - hp.h0) == 0.0);
    CHECK(std::abs(h[1] - hp.h1) == 0.0);
    for (int n = 1; n < 25; ++n) {
        const std::complex<double> resid = h[n + 1] - (2.0 * n / x) * h[n] + h[n - 1];
        CHECK(std::abs(resid) < 1e-12 * std::abs(h[n + 1]));
    }
}

TEST_CASE("hankel1_sequence against frozen H_n references") {
    struct Ref {
        int n;
        double x, re, im;
    };
    constexpr Ref refs[] = {
        {5, 10.0, -0.23406152818679364, 0.1354030476893623},
        {2, 1.0, 0.11490348493190048, -1.6506826068162544},
        {10, 35.0, 0.06354639134396284, 0.12222473135000552},
        {25, 30.0, 0.084292740643031729, 0.17532065037407125},
    };
    for (const auto& r : refs) {
        const auto h = scat::hankel1_sequence(r.n, r.x);
        const std::complex<double> ref(r.re, r.im);
        CHECK(std::abs(h[r.n] - ref) < 1e-10 * std::abs(ref));
    }
}

TEST_CASE("hankel1_sequence Re part matches the integral-representation J") {
    const auto h = scat::hankel1_sequence(5, 10.0);
    CHECK(std::abs(h[5].real() - besselj_integral(5, 10.0)) < 1e-10);
}

TEST_CASE("hankel1_sequence overflow guard") {
    CHECK_THROWS_AS(scat::hankel1_sequence(300, 10.0), scat::NumericalError);
}

TEST_CASE("besselj_sequence against frozen references and integral oracle") {
    struct Ref {
        int n;
        double x, j;
    };
    constexpr Ref refs[] = {
        {5, 10.0, -0.23406152818679364},
        {12, 3.0, 2.275725448320572e-7},
        {0, 7.0, 0.3000792705195556},
        {40, 12.0, 6.7448821484690061e-18},
        {3, 0.25, 0.00032425125267590813},
    };
    for (const auto& r : refs) {
        const auto j = scat::besselj_sequence(r.n, r.x);
        CHECK(std::abs(j[r.n] - r.j) < 1e-13 * std::max(1.0, std::abs(r.j)));
        if (std::abs(r.j) > 1e-12) {
            CHECK(j[r.n] == doctest::Approx(r.j).epsilon(1e-11));
        }
    }
    CHECK(std::abs(scat::besselj_sequence(8, 4.4)[8] - besselj_integral(8, 4.4)) < 1e-12);
}
