#pragma once

#include <complex>
#include <vector>

namespace scat {

/// Values of the order-0 and order-1 Hankel functions of the first kind
/// at a common real argument.  Re(h0) = J0(x), Im(h0) = Y0(x).
struct HankelPair {
    std::complex<double> h0;
    std::complex<double> h1;
};

/// H0^(1)(x) and H1^(1)(x) for x > 0.
///
/// Power series below x = 5, Chebyshev-fitted modulus/phase factors above
/// (coefficients generated by tools/gen_bessel_coeffs.py at 50-digit
/// precision).  Relative accuracy is better than 1e-13 over (0, 1e4],
/// measured against the complex modulus.  Throws for x <= 0: the kernel
/// quadratures never evaluate at the logarithmic singularity.
HankelPair hankel01(double x);

/// H_n^(1)(x) for n = 0..n_max by forward recurrence from hankel01.
///
/// Forward recurrence is stable for the Hankel function (the Y_n part
/// dominates and grows).  The J_n content of the result degrades once
/// n exceeds x; accuracy of the pair as a whole is >= 1e-10 for
/// n <= x + 40.  Throws if n_max > x + 200 (overflow guard).
std::vector<std::complex<double>> hankel1_sequence(int n_max, double x);

/// J_n(x) for n = 0..n_max by Miller's backward recurrence with the
/// J0 + 2*sum J_{2m} = 1 normalization.  Used by the analytic circle
/// series, where Re(hankel1_sequence) would lose all relative accuracy
/// for n > x.
std::vector<double> besselj_sequence(int n_max, double x);

}  // namespace scat
