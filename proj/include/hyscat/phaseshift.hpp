#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hyscat/model.hpp"
#include "hyscat/specfun.hpp"

namespace hyscat::phaseshift {

using model::Channel;
using model::PotentialParams;
using specfun::Complex;

enum class AngleUnit { radians, degrees };

/// Radians -> unit.
double to_unit(double radians, AngleUnit unit);

/// Parameters of the regular hypergeometric solution and the combinations
/// c - a, c - b that enter the asymptotic phase.
struct HypergeomSolution {
    Complex a;
    Complex b;
    Complex c;
    Complex a_star;  ///< sigma + ik/alpha + sqrt(zeta1)
    Complex b_star;  ///< sigma + ik/alpha - sqrt(zeta1)
};

/// The arg Gamma values that make up delta_l, in the result's unit.
struct ArgGammaTerms {
    double two_ik_over_alpha;  ///< arg Gamma(2ik/alpha); cancels in delta_l
    double eta1_star;
    double eta2_star;
    double a_star;
    double b_star;
};

struct PhaseShiftResult {
    double theta_l;
    double theta_l_free;
    double delta_l;
    ArgGammaTerms terms;
    AngleUnit unit;
};

HypergeomSolution hypergeom_solution(const PotentialParams& p, const Channel& ch);

/// Free-field counterparts eta1*, eta2* = sigma + ik/alpha +- i sqrt(l(l+1) + k^2/alpha^2).
std::pair<Complex, Complex> free_field_args(const Channel& ch, double alpha);

/// arg Gamma(2ik/alpha) - arg Gamma(a*) - arg Gamma(b*), radians.
double theta_l(const PotentialParams& p, const Channel& ch);

/// theta_l with the interaction switched off, radians.
double theta_l_free(const Channel& ch, double alpha);

/// delta_l = theta_l - theta_l_free together with its arg Gamma terms.
PhaseShiftResult delta_l(const PotentialParams& p, const Channel& ch, AngleUnit unit = AngleUnit::radians);

/// Closed-form regular solution sampled on a grid (normalization constant set to 1).
struct AnalyticRadialSolution {
    std::vector<double> r;
    std::vector<Complex> R;
    double theta_l;  ///< radians; R(r) ~ |X| cos(kr + theta_l) at large r
};

/// (1 - e^{-ar})^sigma e^{ikr} 2F1(a, b; c; 1 - e^{-ar}) on a positive, increasing grid.
AnalyticRadialSolution radial_wavefunction(const PotentialParams& p, const Channel& ch,
                                           std::span<const double> r_grid);

struct BoundState {
    int n;
    double energy;
    double kappa;  ///< k = i kappa
};

/// a(E) + n at negative energy, with k = i kappa and kappa = sqrt(alpha^2 l(l+1) - 2 mu E / hbar^2).
double pole_residual(const PotentialParams& p, int l, int n, double energy);

/// Lower end of the negative-energy search window: the hydrogenic floor
/// -mu (V0/alpha + A)^2 / (2 hbar^2), below which no level can lie.
double energy_floor(const PotentialParams& p);

/// Energy of the n-th S-matrix pole (a = -n) by bisection; NoBracket when no sign change exists.
BoundState pole_energy(const PotentialParams& p, int l, int n);

/// Poles n = 0..n_max that exist, in order; stops at the first missing one.
std::vector<BoundState> bound_states(const PotentialParams& p, int l, int n_max);

struct SweepGrid {
    std::vector<int> l;
    std::vector<double> A;
    std::vector<double> k;
    std::vector<double> alpha;
};

struct SweepCell {
    int l;
    double A;
    double k;
    double alpha;
    std::optional<PhaseShiftResult> result;
    std::string error;  ///< set when result is empty
};

/// delta_l over the grid, ordered (l, A, k, alpha). Cells that fail carry an error message.
std::vector<SweepCell> table_sweep(const PotentialParams& base, const SweepGrid& grid,
                                   AngleUnit unit = AngleUnit::radians);

}  // namespace hyscat::phaseshift
