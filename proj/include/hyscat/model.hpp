#pragma once

#include <span>
#include <vector>

#include "hyscat/specfun.hpp"

namespace hyscat::model {

using specfun::Complex;

/// Physical inputs of the Hulthen-type plus Yukawa interaction (atomic units).
struct PotentialParams {
    double V0 = 1.0;     ///< potential strength (energy)
    double A = 0.0;      ///< Yukawa constant
    double alpha = 0.05; ///< screening parameter (inverse length)
    double mu = 1.0;     ///< reduced mass
    double hbar = 1.0;

    /// Throws DomainError unless alpha, mu, hbar are positive and all fields finite.
    void validate() const;

    /// True when V0 >= 0 and A >= 0 (attractive regime the closed forms were checked in).
    [[nodiscard]] bool in_validated_regime() const { return V0 >= 0.0 && A >= 0.0; }

    /// V0 + alpha A, the strength of the exactly solvable interaction.
    [[nodiscard]] double coupling() const { return V0 + alpha * A; }

    /// 2 mu / hbar^2.
    [[nodiscard]] double mass_factor() const { return 2.0 * mu / (hbar * hbar); }
};

/// Scattering channel: angular momentum and asymptotic wave number.
struct Channel {
    int l = 0;
    double k = 0.0;

    /// Throws DomainError unless l >= 0 and k > 0.
    void validate() const;
};

struct TransformedParams {
    double zeta1;
    double zeta2;
    double zeta3;
    double sigma;
    Complex sqrt_zeta1;  ///< principal root: real >= 0, or +i sqrt(|zeta1|)
};

/// Hulthen-type plus Yukawa potential -[V0 + A(1 - e^{-ar})/r] / (e^{ar} - 1). DomainError for r <= 0.
double potential_exact(const PotentialParams& p, double r);

/// -(V0 + alpha A) / (e^{ar} - 1): the Yukawa 1/r replaced by alpha / (1 - e^{-ar}).
double potential_approx(const PotentialParams& p, double r);

/// alpha^2 / (1 - e^{-ar})^2, the short-range stand-in for 1/r^2.
double centrifugal_approx(double alpha, double r);

TransformedParams transformed_params(const PotentialParams& p, const Channel& ch);

/// k = sqrt(2 mu E / hbar^2 - alpha^2 l(l+1)); EvanescentChannel when the radicand is <= 0.
double wave_number(const PotentialParams& p, double energy, int l);

/// Inverse of wave_number: E = hbar^2 (k^2 + alpha^2 l(l+1)) / (2 mu).
double channel_energy(const PotentialParams& p, const Channel& ch);

struct ApproximationRow {
    double r;
    double centrifugal_rel_error;  ///< |centrifugal_approx - 1/r^2| r^2
    double potential_rel_error;    ///< |approx - exact| / |exact|
};

struct ApproximationReport {
    std::vector<ApproximationRow> rows;
    double max_centrifugal_rel_error = 0.0;
    double max_potential_rel_error = 0.0;
};

/// Per-radius accuracy of the short-range replacements on a grid of positive radii.
ApproximationReport approximation_report(const PotentialParams& p, std::span<const double> r_grid);

}  // namespace hyscat::model
