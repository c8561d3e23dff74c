#include "hyscat/phaseshift.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "hyscat/error.hpp"
#include "parallel.hpp"

namespace hyscat::phaseshift {
namespace {

constexpr double kPoleResidualTol = 1e-9;

// sigma + ik/alpha + offset: a*, b*, eta1*, eta2* all share this shape, so the
// free-field limit reproduces eta1*, eta2* bit for bit.
Complex shifted(double sigma, double k_over_alpha, Complex offset) {
    return Complex(sigma, k_over_alpha) + offset;
}

void check_inputs(const PotentialParams& p, const Channel& ch) {
    p.validate();
    ch.validate();
}

// kappa at energy E < 0 for angular momentum l.
double kappa_at(const PotentialParams& p, int l, double energy) {
    return std::sqrt(p.alpha * p.alpha * l * (l + 1.0) - p.mass_factor() * energy);
}

}  // namespace

double to_unit(double radians, AngleUnit unit) {
    return unit == AngleUnit::degrees ? radians * 180.0 / std::numbers::pi : radians;
}

HypergeomSolution hypergeom_solution(const PotentialParams& p, const Channel& ch) {
    check_inputs(p, ch);
    const auto t = model::transformed_params(p, ch);
    const double k_over_alpha = ch.k / p.alpha;
    HypergeomSolution s{};
    s.a = Complex(t.sigma, -k_over_alpha) - t.sqrt_zeta1;
    s.b = Complex(t.sigma, -k_over_alpha) + t.sqrt_zeta1;
    s.c = 2.0 * t.sigma;
    s.a_star = shifted(t.sigma, k_over_alpha, t.sqrt_zeta1);
    s.b_star = shifted(t.sigma, k_over_alpha, -t.sqrt_zeta1);
    return s;
}

std::pair<Complex, Complex> free_field_args(const Channel& ch, double alpha) {
    ch.validate();
    if (!(alpha > 0.0)) throw DomainError("alpha must be positive");
    const double k_over_alpha = ch.k / alpha;
    const double sigma = ch.l + 1.0;
    const double ll = static_cast<double>(ch.l) * (ch.l + 1);
    const Complex root(0.0, std::sqrt(ll + k_over_alpha * k_over_alpha));
    return {shifted(sigma, k_over_alpha, root), shifted(sigma, k_over_alpha, -root)};
}

double theta_l(const PotentialParams& p, const Channel& ch) {
    const auto s = hypergeom_solution(p, ch);
    const Complex two_ik(0.0, 2.0 * ch.k / p.alpha);
    return specfun::arg_gamma(two_ik) - specfun::arg_gamma(s.a_star) - specfun::arg_gamma(s.b_star);
}

double theta_l_free(const Channel& ch, double alpha) {
    const auto [eta1, eta2] = free_field_args(ch, alpha);
    const Complex two_ik(0.0, 2.0 * ch.k / alpha);
    return specfun::arg_gamma(two_ik) - specfun::arg_gamma(eta1) - specfun::arg_gamma(eta2);
}

PhaseShiftResult delta_l(const PotentialParams& p, const Channel& ch, AngleUnit unit) {
    const auto s = hypergeom_solution(p, ch);
    const auto [eta1, eta2] = free_field_args(ch, p.alpha);
    const Complex two_ik(0.0, 2.0 * ch.k / p.alpha);

    const double g_two_ik = specfun::arg_gamma(two_ik);
    const double g_a = specfun::arg_gamma(s.a_star);
    const double g_b = specfun::arg_gamma(s.b_star);
    const double g_eta1 = specfun::arg_gamma(eta1);
    const double g_eta2 = specfun::arg_gamma(eta2);

    const double theta = g_two_ik - g_a - g_b;
    const double theta_free = g_two_ik - g_eta1 - g_eta2;

    PhaseShiftResult r{};
    r.unit = unit;
    r.theta_l = to_unit(theta, unit);
    r.theta_l_free = to_unit(theta_free, unit);
    r.delta_l = to_unit(theta - theta_free, unit);
    r.terms = {to_unit(g_two_ik, unit), to_unit(g_eta1, unit), to_unit(g_eta2, unit), to_unit(g_a, unit),
               to_unit(g_b, unit)};
    return r;
}

AnalyticRadialSolution radial_wavefunction(const PotentialParams& p, const Channel& ch,
                                           std::span<const double> r_grid) {
    const auto s = hypergeom_solution(p, ch);
    const specfun::Gauss2F1Params f{s.a, s.b, s.c};
    const double sigma = ch.l + 1.0;

    AnalyticRadialSolution out;
    out.theta_l = theta_l(p, ch);
    out.r.assign(r_grid.begin(), r_grid.end());
    out.R.reserve(r_grid.size());
    double previous = 0.0;
    for (double r : r_grid) {
        if (!(r > previous)) throw DomainError("radial_wavefunction: grid must be positive and increasing");
        previous = r;
        // z = 1 - e^{-alpha r}; the complement is passed exactly so large r keeps full precision.
        const double w = std::exp(-p.alpha * r);
        const double z = -std::expm1(-p.alpha * r);
        out.R.push_back(std::pow(z, sigma) * std::polar(1.0, ch.k * r) * specfun::gauss_2f1_complement(f, Complex(w, 0.0)));
    }
    return out;
}

double pole_residual(const PotentialParams& p, int l, int n, double energy) {
    const double kappa = kappa_at(p, l, energy);
    const double sigma = l + 1.0;
    const double ll = l * (l + 1.0);
    const double zeta2 = p.mass_factor() * p.coupling() / (p.alpha * p.alpha);
    const double kappa_over_alpha = kappa / p.alpha;
    const double zeta1 = zeta2 - ll + kappa_over_alpha * kappa_over_alpha;
    if (zeta1 < 0.0) return std::numeric_limits<double>::quiet_NaN();
    return sigma + kappa_over_alpha - std::sqrt(zeta1) + n;
}

double energy_floor(const PotentialParams& p) {
    const double charge = p.V0 / p.alpha + p.A;
    return -p.mu * charge * charge / (2.0 * p.hbar * p.hbar);
}

BoundState pole_energy(const PotentialParams& p, int l, int n) {
    p.validate();
    if (l < 0 || n < 0) throw DomainError("pole_energy: l and n must be nonnegative");

    // a(E) decreases monotonically with E on the window.
    double lo = energy_floor(p) * (1.0 + 1e-9) - 1e-12;
    double hi = 0.0;
    const double f_lo = pole_residual(p, l, n, lo);
    const double f_hi = pole_residual(p, l, n, hi);
    if (!(f_lo > 0.0 && f_hi < 0.0)) {
        throw NoBracket("no pole a(E) = -n in the negative-energy window");
    }
    while (hi - lo > 1e-12) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        (pole_residual(p, l, n, mid) > 0.0 ? lo : hi) = mid;
    }
    const double energy = 0.5 * (lo + hi);
    const double kappa = kappa_at(p, l, energy);
    const double residual = pole_residual(p, l, n, energy);
    if (!(energy < 0.0) || !(kappa > 0.0) || !(std::abs(residual) < kPoleResidualTol)) {
        throw NoBracket("pole root failed the residual check");
    }
    return {n, energy, kappa};
}

std::vector<BoundState> bound_states(const PotentialParams& p, int l, int n_max) {
    if (n_max < 0) throw DomainError("bound_states: n_max must be nonnegative");
    std::vector<BoundState> levels;
    for (int n = 0; n <= n_max; ++n) {
        try {
            levels.push_back(pole_energy(p, l, n));
        } catch (const NoBracket&) {
            break;
        }
    }
    return levels;
}

std::vector<SweepCell> table_sweep(const PotentialParams& base, const SweepGrid& grid, AngleUnit unit) {
    std::vector<SweepCell> cells;
    cells.reserve(grid.l.size() * grid.A.size() * grid.k.size() * grid.alpha.size());
    for (int l : grid.l)
        for (double A : grid.A)
            for (double k : grid.k)
                for (double alpha : grid.alpha) cells.push_back({l, A, k, alpha, std::nullopt, {}});

    detail::parallel_for(cells.size(), [&](std::size_t i) {
        SweepCell& cell = cells[i];
        PotentialParams p = base;
        p.A = cell.A;
        p.alpha = cell.alpha;
        try {
            cell.result = delta_l(p, Channel{cell.l, cell.k}, unit);
        } catch (const std::exception& e) {
            cell.error = e.what();
        }
    });
    return cells;
}

}  // namespace hyscat::phaseshift
