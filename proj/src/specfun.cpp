#include "hyscat/specfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>

#include "hyscat/error.hpp"

namespace hyscat::specfun {
namespace {

constexpr double kPi = std::numbers::pi;

// Lanczos g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoeffs = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7,
};

constexpr int kMaxSeriesTerms = 10000;
constexpr double kSeriesRelTol = 1e-15;

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

bool near_nonpositive_integer(Complex z, double tol) {
    const double n = std::round(z.real());
    return n <= 0.0 && std::abs(z - Complex(n, 0.0)) < tol;
}

bool near_integer(Complex z, double tol) {
    return std::abs(z - Complex(std::round(z.real()), 0.0)) < tol;
}

// log(1 + w) without cancellation for small |w|.
Complex log1p(Complex w) {
    const double a = w.real();
    const double b = w.imag();
    return {0.5 * std::log1p(2.0 * a + a * a + b * b), std::atan2(b, 1.0 + a)};
}

Complex log_gamma_lanczos(Complex z) {
    z -= 1.0;
    Complex sum = kLanczosCoeffs[0];
    for (std::size_t i = 1; i < kLanczosCoeffs.size(); ++i) {
        sum += kLanczosCoeffs[i] / (z + static_cast<double>(i));
    }
    const Complex t = z + kLanczosG + 0.5;
    return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t + std::log(sum);
}

// log sin(pi z) for Im z >= 0, continuous across the closed upper half plane
// and equal to the real log on (0, 1):
//   sin(pi z) = (i/2) e^{-i pi z} (1 - e^{2 pi i z}),  |e^{2 pi i z}| <= 1.
Complex log_sin_pi_upper(Complex z) {
    const double frac = z.real() - std::floor(z.real());
    const double decay = std::exp(-2.0 * kPi * z.imag());
    const Complex e2 = decay * Complex(std::cos(2.0 * kPi * frac), std::sin(2.0 * kPi * frac));
    return Complex(-std::log(2.0), kPi / 2.0) + Complex(kPi * z.imag(), -kPi * z.real()) +
           log1p(-e2);
}

// Sums 2F1 with |z| < 1 assumed; no region checks.
Complex series_unchecked(Complex a, Complex b, Complex c, Complex z) {
    Complex sum = 1.0;
    Complex term = 1.0;
    int small_run = 0;
    for (int n = 0; n < kMaxSeriesTerms; ++n) {
        const double dn = static_cast<double>(n);
        term *= (a + dn) * (b + dn) / ((c + dn) * (dn + 1.0)) * z;
        sum += term;
        if (term == 0.0) return sum;
        if (std::abs(term) < kSeriesRelTol * std::abs(sum)) {
            if (++small_run == 2) return sum;
        } else {
            small_run = 0;
        }
    }
    throw NonConvergence("2F1 series did not converge within 10000 terms");
}

void check_c(const Gauss2F1Params& p) {
    if (near_nonpositive_integer(p.c, kPoleTolerance)) {
        throw DomainError("2F1: c is zero or a negative integer");
    }
}

// Gamma-ratio prefactor exp(sum(num) - sum(den)); zero when a denominator sits on a pole.
std::optional<Complex> log_gamma_ratio(std::initializer_list<Complex> num,
                                       std::initializer_list<Complex> den) {
    Complex acc = 0.0;
    for (Complex d : den) {
        if (near_nonpositive_integer(d, kPoleTolerance)) return std::nullopt;
        acc -= log_gamma(d);
    }
    for (Complex n : num) acc += log_gamma(n);
    return acc;
}

}  // namespace

Complex log_gamma(Complex z) {
    if (!finite(z)) throw DomainError("log_gamma: non-finite argument");
    if (near_nonpositive_integer(z, kPoleTolerance)) {
        throw PoleError("log_gamma: argument at a pole of Gamma");
    }
    if (z.real() >= 0.5) return log_gamma_lanczos(z);
    if (z.imag() < 0.0) return std::conj(log_gamma(std::conj(z)));
    const Complex result = std::log(kPi) - log_sin_pi_upper(z) - log_gamma_lanczos(1.0 - z);
    if (!finite(result)) throw NumericalError("log_gamma: overflow");
    return result;
}

double arg_gamma(Complex z) { return log_gamma(z).imag(); }

Complex gauss_2f1_series(const Gauss2F1Params& p, Complex z) {
    check_c(p);
    if (std::abs(z) >= 1.0) throw DomainError("2F1 series requires |z| < 1");
    return series_unchecked(p.a, p.b, p.c, z);
}

namespace {

Complex connection_at_complement(const Gauss2F1Params& p, Complex w) {
    check_c(p);
    if (std::abs(w) >= 1.0) throw DomainError("connection formula requires |1 - z| < 1");
    const Complex s = p.c - p.a - p.b;
    if (near_integer(s, kDegeneracyTolerance)) {
        throw DegenerateParameters("connection formula: c - a - b is (nearly) an integer");
    }

    Complex result = 0.0;
    if (auto lg = log_gamma_ratio({p.c, s}, {p.c - p.a, p.c - p.b})) {
        result += std::exp(*lg) * series_unchecked(p.a, p.b, 1.0 - s, w);
    }
    if (auto lg = log_gamma_ratio({p.c, -s}, {p.a, p.b})) {
        // (1 - z)^{c-a-b} folded into the exponent.
        result += std::exp(*lg + s * std::log(w)) * series_unchecked(p.c - p.a, p.c - p.b, s + 1.0, w);
    }
    if (!finite(result)) throw NumericalError("connection formula: non-finite result");
    return result;
}

Complex gauss_2f1_split(const Gauss2F1Params& p, Complex z, Complex w) {
    check_c(p);
    const double abs_z = std::abs(z);
    const double abs_w = std::abs(w);
    if (abs_z <= kSeriesCrossover || (abs_z < 1.0 && abs_z <= abs_w)) {
        return series_unchecked(p.a, p.b, p.c, z);
    }
    if (abs_w < 1.0) {
        if (!near_integer(p.c - p.a - p.b, kDegeneracyTolerance)) {
            return connection_at_complement(p, w);
        }
        if (abs_z < 1.0) return series_unchecked(p.a, p.b, p.c, z);
        throw DegenerateParameters("2F1: c - a - b is (nearly) an integer and |z| >= 1");
    }
    throw DomainError("2F1: z outside |z| < 1 and |1 - z| < 1");
}

}  // namespace

Complex connection_formula_rhs(const Gauss2F1Params& p, Complex z) { return connection_at_complement(p, 1.0 - z); }

Complex gauss_2f1(const Gauss2F1Params& p, Complex z) { return gauss_2f1_split(p, z, 1.0 - z); }

Complex gauss_2f1_complement(const Gauss2F1Params& p, Complex w) { return gauss_2f1_split(p, 1.0 - w, w); }

SphericalBesselPair spherical_bessel_jy(int l, double x) {
    if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("spherical_bessel_jy: x must be positive");
    if (l < 0 || l > 50) throw DomainError("spherical_bessel_jy: l must lie in [0, 50]");

    const double s = std::sin(x);
    const double c = std::cos(x);
    const double j0 = s / x;
    const double j1 = s / (x * x) - c / x;

    // Irregular solution: upward recurrence is stable.
    double y_prev = -c / x;
    double y = -c / (x * x) - s / x;
    if (l == 0) y = y_prev;
    for (int n = 1; n < l; ++n) {
        const double next = (2.0 * n + 1.0) / x * y - y_prev;
        y_prev = y;
        y = next;
    }
    if (!std::isfinite(y)) throw NumericalError("spherical_bessel_jy: y_l overflow");

    if (l == 0) return {j0, y};
    if (l == 1) return {j1, y};

    // Regular solution: Miller downward recurrence, normalized on j0 or j1.
    const int start = std::max(l, static_cast<int>(x)) + 50;
    double j_next = 0.0;
    double j_cur = 1e-30;
    double j_l = 0.0;
    double j_at_1 = 0.0;
    for (int n = start; n > 0; --n) {
        const double j_prev = (2.0 * n + 1.0) / x * j_cur - j_next;
        j_next = j_cur;
        j_cur = j_prev;  // now holds j_{n-1}
        if (n - 1 == l) j_l = j_cur;
        if (n - 1 == 1) j_at_1 = j_cur;
        if (std::abs(j_cur) > 1e250) {
            j_cur *= 1e-250;
            j_next *= 1e-250;
            j_l *= 1e-250;
            j_at_1 *= 1e-250;
        }
    }
    const double scale = std::abs(j0) >= std::abs(j1) ? j0 / j_cur : j1 / j_at_1;
    return {j_l * scale, y};
}

}  // namespace hyscat::specfun
