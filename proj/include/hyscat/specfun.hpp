#pragma once

#include <complex>

namespace hyscat::specfun {

using Complex = std::complex<double>;

/// Parameter triple (a, b; c) of the Gauss hypergeometric function.
struct Gauss2F1Params {
    Complex a;
    Complex b;
    Complex c;
};

/// Absolute distance from a nonpositive integer below which Gamma is treated as singular.
inline constexpr double kPoleTolerance = 1e-12;

/// |c - a - b - n| below which the two-term connection formula is refused.
inline constexpr double kDegeneracyTolerance = 1e-9;

/// |z| at and below which 2F1 is summed directly; above it the connection formula is used.
inline constexpr double kSeriesCrossover = 0.5;

/**
 * Principal branch of log Gamma(z).
 *
 * Real on the positive real axis, analytic off (-inf, 0], and satisfies
 * log_gamma(z + 1) = log_gamma(z) + log(z) with the principal log. Points on
 * the negative real axis take the limit from above. Lanczos (g = 7, 9 terms)
 * for Re z >= 0.5, reflection with an explicitly continuous log sin(pi z)
 * otherwise.
 *
 * Throws PoleError within kPoleTolerance of 0, -1, -2, ...
 */
Complex log_gamma(Complex z);

/// Im log_gamma(z); not reduced modulo 2 pi.
double arg_gamma(Complex z);

/// Direct power series of 2F1(a, b; c; z), |z| < 1. Terms are summed until
/// |term| < 1e-15 |sum|; NonConvergence after 10 000 terms.
Complex gauss_2f1_series(const Gauss2F1Params& p, Complex z);

/**
 * Gauss hypergeometric function 2F1(a, b; c; z).
 *
 * Direct series for |z| <= 0.5. For larger |z| with |1 - z| < 1 the two-term
 * connection formula is used, unless c - a - b is within 1e-9 of an integer,
 * in which case the direct series is used while |z| < 1 and
 * DegenerateParameters is thrown otherwise.
 */
Complex gauss_2f1(const Gauss2F1Params& p, Complex z);

/// gauss_2f1 at z = 1 - w, for callers that hold w exactly (e.g. w = e^{-x} at large x).
Complex gauss_2f1_complement(const Gauss2F1Params& p, Complex w);

/// Right-hand side of the z -> 1 - z connection formula, evaluated literally.
Complex connection_formula_rhs(const Gauss2F1Params& p, Complex z);

struct SphericalBesselPair {
    double j;
    double y;
};

/// Regular and irregular spherical Bessel functions j_l(x), y_l(x); x > 0, 0 <= l <= 50.
SphericalBesselPair spherical_bessel_jy(int l, double x);

}  // namespace hyscat::specfun
