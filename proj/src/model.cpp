#include "hyscat/model.hpp"

#include <algorithm>
#include <cmath>

#include "hyscat/error.hpp"

namespace hyscat::model {
namespace {

constexpr double kSeriesThreshold = 1e-6;

// e^x - 1
double exp_minus_one(double x) {
    if (std::abs(x) < kSeriesThreshold) return x * (1.0 + x / 2.0 + x * x / 6.0);
    return std::expm1(x);
}

// 1 - e^{-x}
double one_minus_exp(double x) {
    if (std::abs(x) < kSeriesThreshold) return x * (1.0 - x / 2.0 + x * x / 6.0);
    return -std::expm1(-x);
}

void check_radius(double r) {
    if (!(r > 0.0) || !std::isfinite(r)) throw DomainError("radius must be positive and finite");
}

}  // namespace

void PotentialParams::validate() const {
    if (!std::isfinite(V0) || !std::isfinite(A)) throw DomainError("V0 and A must be finite");
    if (!(alpha > 0.0) || !std::isfinite(alpha)) throw DomainError("alpha must be positive");
    if (!(mu > 0.0) || !std::isfinite(mu)) throw DomainError("mu must be positive");
    if (!(hbar > 0.0) || !std::isfinite(hbar)) throw DomainError("hbar must be positive");
}

void Channel::validate() const {
    if (l < 0) throw DomainError("angular momentum l must be nonnegative");
    if (!(k > 0.0) || !std::isfinite(k)) throw DomainError("wave number k must be positive");
}

double potential_exact(const PotentialParams& p, double r) {
    check_radius(r);
    const double x = p.alpha * r;
    return -(p.V0 + p.A * one_minus_exp(x) / r) / exp_minus_one(x);
}

double potential_approx(const PotentialParams& p, double r) {
    check_radius(r);
    return -p.coupling() / exp_minus_one(p.alpha * r);
}

double centrifugal_approx(double alpha, double r) {
    check_radius(r);
    if (!(alpha > 0.0)) throw DomainError("alpha must be positive");
    const double d = one_minus_exp(alpha * r);
    return alpha * alpha / (d * d);
}

TransformedParams transformed_params(const PotentialParams& p, const Channel& ch) {
    p.validate();
    if (ch.l < 0) throw DomainError("angular momentum l must be nonnegative");
    TransformedParams t{};
    const double k_over_alpha = ch.k / p.alpha;
    t.zeta2 = p.mass_factor() * p.coupling() / (p.alpha * p.alpha);
    t.zeta3 = static_cast<double>(ch.l) * (ch.l + 1);
    t.zeta1 = t.zeta2 - t.zeta3 - k_over_alpha * k_over_alpha;
    t.sigma = ch.l + 1.0;
    t.sqrt_zeta1 = t.zeta1 >= 0.0 ? Complex(std::sqrt(t.zeta1), 0.0) : Complex(0.0, std::sqrt(-t.zeta1));
    return t;
}

double wave_number(const PotentialParams& p, double energy, int l) {
    p.validate();
    if (l < 0) throw DomainError("angular momentum l must be nonnegative");
    const double radicand = p.mass_factor() * energy - p.alpha * p.alpha * l * (l + 1.0);
    if (!(radicand > 0.0)) throw EvanescentChannel("no propagating wave: 2 mu E / hbar^2 <= alpha^2 l(l+1)");
    return std::sqrt(radicand);
}

double channel_energy(const PotentialParams& p, const Channel& ch) {
    return (ch.k * ch.k + p.alpha * p.alpha * ch.l * (ch.l + 1.0)) / p.mass_factor();
}

ApproximationReport approximation_report(const PotentialParams& p, std::span<const double> r_grid) {
    p.validate();
    if (r_grid.empty()) throw DomainError("approximation_report: empty radius grid");
    ApproximationReport report;
    report.rows.reserve(r_grid.size());
    for (double r : r_grid) {
        check_radius(r);
        ApproximationRow row{r, 0.0, 0.0};
        row.centrifugal_rel_error = std::abs(centrifugal_approx(p.alpha, r) * r * r - 1.0);
        const double exact = potential_exact(p, r);
        const double approx = potential_approx(p, r);
        row.potential_rel_error = exact == approx ? 0.0 : std::abs(approx - exact) / std::abs(exact);
        report.max_centrifugal_rel_error = std::max(report.max_centrifugal_rel_error, row.centrifugal_rel_error);
        report.max_potential_rel_error = std::max(report.max_potential_rel_error, row.potential_rel_error);
        report.rows.push_back(row);
    }
    return report;
}

}  // namespace hyscat::model
