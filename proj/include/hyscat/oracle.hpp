#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <vector>

#include "hyscat/model.hpp"

namespace hyscat::oracle {

using model::Channel;
using model::PotentialParams;

/// How the asymptotic phase is read off: C cos(kr + theta), or
/// C [cos d kr j_l(kr) - sin d kr y_l(kr)] for a true 1/r^2 tail.
enum class PhaseMode { plane, spherical_bessel };

/// W(r) in u'' = (W(r) - k^2) u.
using EffectivePotential = std::function<double(double)>;

/**
 * Radial grid and matching setup.
 *
 * The grid is uniform with spacing `step` in s, where r = map_scale * log(1 + e^s):
 * logarithmic near the origin, linear with spacing map_scale * step at large r.
 */
struct IntegrationConfig {
    double r_min = 0.0;
    double r_max = 0.0;
    double step = 1e-2;
    double map_scale = 1.0;
    std::array<double, 2> match_points{};
    double min_step = 1e-2 / 256.0;
    double halving_tol = 1e-6;  ///< rad

    /// Defaults for a channel: r_min = 1e-6/alpha, r_max >= 30/alpha and far enough
    /// that the tail is below 1e-8 k^2, match points r_max and r_max - 0.37/k.
    static IntegrationConfig for_channel(const PotentialParams& p, const Channel& ch);

    /// Throws DomainError when the geometry or resolution bounds are violated.
    void validate(const Channel& ch) const;

    /// Largest radial spacing of the grid.
    [[nodiscard]] double max_radial_step() const { return map_scale * step; }
};

struct RadialSolution {
    std::vector<double> r;
    std::vector<double> u;  ///< arbitrary normalization
    double step = 0.0;      ///< mapped-variable step of the returned samples
    std::array<std::size_t, 2> match_index{};
    PhaseMode mode = PhaseMode::plane;
    double extracted_phase = 0.0;  ///< rad, in (-pi, pi]
    double halving_change = 0.0;   ///< |phase(step) - phase(2 step)|
    bool converged = false;
};

/// Reduces an angle modulo pi into (-pi/2, pi/2].
double reduce_mod_pi(double angle);

/// mf V_approx(r) + l(l+1) (alpha^2/(1 - e^{-ar})^2 - alpha^2); threshold shift absorbed into k.
EffectivePotential approx_channel_potential(const PotentialParams& p, int l);

/// mf V_exact(r) + l(l+1)/r^2.
EffectivePotential exact_channel_potential(const PotentialParams& p, int l);

/**
 * Numerov march of u'' = (W(r) - k^2) u from r_min, seeded with the regular
 * series u ~ r^{l+1}(1 + c1 r). The step is halved until the extracted phase
 * changes by less than halving_tol; `converged` is false if min_step is reached first.
 */
RadialSolution numerov_integrate(const EffectivePotential& W, const Channel& ch, const IntegrationConfig& cfg,
                                 PhaseMode mode = PhaseMode::plane);

/// Two-point fit at the solution's match points; IllConditioned when the 2x2 system is singular.
double extract_phase(const RadialSolution& sol, const Channel& ch, PhaseMode mode);

struct OraclePhase {
    double delta;  ///< rad, reduced to (-pi/2, pi/2]
    bool converged;
    double halving_change;
};

/// Phase shift of the approximated interaction relative to its free counterpart.
OraclePhase oracle_delta_approx(const PotentialParams& p, const Channel& ch, const IntegrationConfig& cfg);

/// Phase shift of the exact interaction with a true centrifugal term; the
/// asymptotic momentum is sqrt(k^2 + alpha^2 l(l+1)).
OraclePhase oracle_delta_exact(const PotentialParams& p, const Channel& ch, const IntegrationConfig& cfg);

struct ShootingConfig {
    double r_min = 0.0;  ///< 0 -> 1e-6 / alpha
    double r_max = 0.0;  ///< 0 -> 30 / alpha
    double step = 2e-3;
    double map_scale = 1.0;
};

struct ShootingLevel {
    int n;
    double energy;
};

/// Level with n nodes, from bisection on the node count of the outward solution
/// (Dirichlet condition at r_max). NoneFound when fewer than n + 1 levels lie below 0.
ShootingLevel shooting_level(const PotentialParams& p, int l, bool use_approx, int n,
                             const ShootingConfig& cfg = {});

/// Levels n = 0..n_max below zero energy, ordered by node count; empty when there are none.
std::vector<ShootingLevel> shooting_bound_states(const PotentialParams& p, int l, bool use_approx, int n_max,
                                                 const ShootingConfig& cfg = {});

}  // namespace hyscat::oracle
