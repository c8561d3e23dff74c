#include "hyscat/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hyscat/error.hpp"
#include "hyscat/specfun.hpp"

namespace hyscat::oracle {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kRescaleAbove = 1e100;
constexpr double kTailFraction = 1e-8;
constexpr double kMatchOffset = 0.37;  // second match point sits 0.37/k inside r_max

// Grid uniform in s with r = rc * log(1 + e^s). For w(s) = u(r) / sqrt(dr/ds)
// the equation u'' = f u becomes w'' = [r'^2 f + (1 - sigma^2)/4] w with
// sigma = 1/(1 + e^{-s}) the logistic function.
struct MappedGrid {
    std::vector<double> r;
    std::vector<double> rp;     // dr/ds
    std::vector<double> extra;  // (1 - sigma^2)/4
    double h = 0.0;
};

double softplus(double s) { return s > 0.0 ? s + std::log1p(std::exp(-s)) : std::log1p(std::exp(s)); }

double inverse_softplus(double x) { return x > 30.0 ? x + std::log(-std::expm1(-x)) : std::log(std::expm1(x)); }

MappedGrid make_grid(double r_min, double r_max, double h, double rc) {
    const double s0 = inverse_softplus(r_min / rc);
    const double s1 = inverse_softplus(r_max / rc);
    const auto n = static_cast<std::size_t>(std::floor((s1 - s0) / h + 1e-9)) + 1;
    if (n < 3) throw DomainError("integration grid has fewer than three points");
    MappedGrid g;
    g.h = h;
    g.r.resize(n);
    g.rp.resize(n);
    g.extra.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double s = s0 + static_cast<double>(i) * h;
        const double sigma = 1.0 / (1.0 + std::exp(-s));
        const double one_minus_sigma = 1.0 / (1.0 + std::exp(s));
        g.r[i] = rc * softplus(s);
        g.rp[i] = rc * sigma;
        g.extra[i] = 0.25 * one_minus_sigma * (1.0 + sigma);
    }
    return g;
}

// w[0], w[1] from the regular expansion u = r^{l+1} (1 + c1 r), c1 = beta / (2(l+1)),
// where beta is the 1/r coefficient of W - l(l+1)/r^2 at the origin.
std::pair<double, double> regular_seed(const EffectivePotential& W, int l, const MappedGrid& g) {
    const double r0 = g.r[0];
    const double r1 = g.r[1];
    const double ll = l * (l + 1.0);
    const double beta = r0 * (W(r0) - ll / (r0 * r0));
    const double c1 = beta / (2.0 * (l + 1.0));
    const double u_ratio = std::pow(r1 / r0, l + 1.0) * (1.0 + c1 * r1) / (1.0 + c1 * r0);
    return {1.0 / std::sqrt(g.rp[0]), u_ratio / std::sqrt(g.rp[1])};
}

struct FitBasis {
    double x;
    double y;
};

FitBasis basis_at(double r, const Channel& ch, PhaseMode mode) {
    const double x = ch.k * r;
    if (mode == PhaseMode::plane) return {std::cos(x), std::sin(x)};
    const auto jy = specfun::spherical_bessel_jy(ch.l, x);
    return {x * jy.j, x * jy.y};
}

std::size_t nearest_index(const std::vector<double>& r, double target) {
    const auto it = std::lower_bound(r.begin(), r.end(), target);
    if (it == r.end()) return r.size() - 1;
    const auto i = static_cast<std::size_t>(it - r.begin());
    if (i > 0 && target - r[i - 1] < r[i] - target) return i - 1;
    return i;
}

double wrap_two_pi(double angle) { return std::remainder(angle, 2.0 * kPi); }

RadialSolution integrate_once(const EffectivePotential& W, const Channel& ch, const IntegrationConfig& cfg,
                              double h, PhaseMode mode) {
    const MappedGrid g = make_grid(cfg.r_min, cfg.r_max, h, cfg.map_scale);
    const std::size_t n = g.r.size();
    const double q = ch.k * ch.k;
    const double h2 = h * h / 12.0;

    std::vector<double> F(n);
    for (std::size_t i = 0; i < n; ++i) F[i] = g.rp[i] * g.rp[i] * (W(g.r[i]) - q) + g.extra[i];

    std::vector<double> w(n);
    std::tie(w[0], w[1]) = regular_seed(W, ch.l, g);
    // Summed form: z = (1 - h^2 F / 12) w, with the second difference of z carried in d.
    // The three-term recurrence loses ~eps / (h^2 k) of phase per step when k is small.
    double z = (1.0 - h2 * F[1]) * w[1];
    double d = z - (1.0 - h2 * F[0]) * w[0];
    for (std::size_t i = 1; i + 1 < n; ++i) {
        d += 12.0 * h2 * F[i] * w[i];
        z += d;
        w[i + 1] = z / (1.0 - h2 * F[i + 1]);
        const double m = std::max(std::abs(w[i]), std::abs(w[i + 1]));
        if (m > kRescaleAbove) {
            for (std::size_t j = 0; j <= i + 1; ++j) w[j] /= m;
            z /= m;
            d /= m;
        }
    }

    RadialSolution sol;
    sol.step = h;
    sol.mode = mode;
    sol.r = g.r;
    sol.u.resize(n);
    for (std::size_t i = 0; i < n; ++i) sol.u[i] = w[i] * std::sqrt(g.rp[i]);
    sol.match_index = {nearest_index(sol.r, cfg.match_points[0]), nearest_index(sol.r, cfg.match_points[1])};
    sol.extracted_phase = extract_phase(sol, ch, mode);
    return sol;
}

void check_tail(const EffectivePotential& tail, const IntegrationConfig& cfg, double k) {
    for (double r : cfg.match_points) {
        if (!(std::abs(tail(r)) < kTailFraction * k * k)) {
            throw DomainError("match points are not in the asymptotic region; increase r_max");
        }
    }
}

// Hydrogenic lower bound on any level of either potential: both are bounded
// below by -(V0/alpha + A)/r with a nonnegative centrifugal term.
double hydrogenic_floor(const PotentialParams& p) {
    const double charge = std::abs(p.V0) / p.alpha + std::abs(p.A);
    return -p.mu * charge * charge / (2.0 * p.hbar * p.hbar);
}

class ShootingProblem {
public:
    ShootingProblem(const PotentialParams& p, int l, bool use_approx, const ShootingConfig& cfg)
        : p_(p), l_(l), use_approx_(use_approx) {
        p.validate();
        if (l < 0) throw DomainError("angular momentum l must be nonnegative");
        const double r_min = cfg.r_min > 0.0 ? cfg.r_min : 1e-6 / p.alpha;
        const double r_max = cfg.r_max > 0.0 ? cfg.r_max : 30.0 / p.alpha;
        if (!(cfg.step > 0.0) || !(cfg.map_scale > 0.0) || !(r_max > r_min)) {
            throw DomainError("invalid shooting configuration");
        }
        grid_ = make_grid(r_min, r_max, cfg.step, cfg.map_scale);
        const EffectivePotential W = use_approx ? approx_channel_potential(p, l) : exact_channel_potential(p, l);
        W_.resize(grid_.r.size());
        for (std::size_t i = 0; i < W_.size(); ++i) W_[i] = W(grid_.r[i]);
        seed_ = regular_seed(W, l, grid_);
    }

    // Sign changes of the outward solution on (r_min, r_max).
    int node_count(double energy) const {
        const double q = use_approx_ ? p_.mass_factor() * energy - p_.alpha * p_.alpha * l_ * (l_ + 1.0)
                                     : p_.mass_factor() * energy;
        const double h2 = grid_.h * grid_.h / 12.0;
        auto F = [&](std::size_t i) {
            return grid_.rp[i] * grid_.rp[i] * (W_[i] - q) + grid_.extra[i];
        };
        double w_prev = seed_.first;
        double w = seed_.second;
        double f_prev = F(0);
        double f = F(1);
        int nodes = 0;
        bool positive = w_prev > 0.0;
        if ((w > 0.0) != positive && w != 0.0) {
            ++nodes;
            positive = !positive;
        }
        for (std::size_t i = 1; i + 1 < W_.size(); ++i) {
            const double f_next = F(i + 1);
            const double w_next = (2.0 * w * (1.0 + 5.0 * h2 * f) - w_prev * (1.0 - h2 * f_prev)) / (1.0 - h2 * f_next);
            if (w_next != 0.0 && (w_next > 0.0) != positive) {
                ++nodes;
                positive = !positive;
            }
            w_prev = w;
            w = w_next;
            f_prev = f;
            f = f_next;
            const double m = std::max(std::abs(w_prev), std::abs(w));
            if (m > kRescaleAbove) {
                w_prev /= m;
                w /= m;
            }
        }
        return nodes;
    }

    ShootingLevel level(int n) const {
        if (n < 0) throw DomainError("node count must be nonnegative");
        double lo = hydrogenic_floor(p_) * (1.0 + 1e-6) - 1e-9;
        double hi = 0.0;
        if (node_count(hi) <= n) throw NoneFound("no level with the requested node count below zero energy");
        if (node_count(lo) > n) throw NumericalError("shooting: levels found below the hydrogenic floor");
        while (hi - lo > 1e-12 * std::max(1.0, std::abs(lo))) {
            const double mid = 0.5 * (lo + hi);
            if (mid <= lo || mid >= hi) break;
            (node_count(mid) > n ? hi : lo) = mid;
        }
        return {n, 0.5 * (lo + hi)};
    }

private:
    PotentialParams p_;
    int l_;
    bool use_approx_;
    MappedGrid grid_;
    std::vector<double> W_;
    std::pair<double, double> seed_;
};

}  // namespace

double reduce_mod_pi(double angle) {
    double r = std::remainder(angle, kPi);
    if (r <= -kPi / 2.0) r += kPi;
    return r;
}

IntegrationConfig IntegrationConfig::for_channel(const PotentialParams& p, const Channel& ch) {
    p.validate();
    ch.validate();
    IntegrationConfig cfg;
    cfg.r_min = 1e-6 / p.alpha;
    cfg.map_scale = std::min(1.0, 5.0 / ch.k);

    const double ll = ch.l * (ch.l + 1.0);
    const double tail_amplitude =
        p.mass_factor() * (std::abs(p.V0) + std::abs(p.A) * (1.0 + p.alpha)) + 2.02 * ll * p.alpha * p.alpha;
    double r_tail = 0.0;
    if (tail_amplitude > 0.0) {
        r_tail = std::log(tail_amplitude / (0.5 * kTailFraction * ch.k * ch.k)) / p.alpha + kMatchOffset / ch.k;
    }
    cfg.r_max = std::max(30.0 / p.alpha, r_tail);
    cfg.match_points = {cfg.r_max, cfg.r_max - kMatchOffset / ch.k};
    if (cfg.match_points[1] <= cfg.r_min) {
        cfg.r_max += kMatchOffset / ch.k;
        cfg.match_points = {cfg.r_max, cfg.r_max - kMatchOffset / ch.k};
    }
    return cfg;
}

void IntegrationConfig::validate(const Channel& ch) const {
    ch.validate();
    if (!(r_min > 0.0) || !(r_max > r_min)) throw DomainError("need 0 < r_min < r_max");
    if (!(step > 0.0) || !(min_step > 0.0) || !(map_scale > 0.0) || !(halving_tol > 0.0)) {
        throw DomainError("step, min_step, map_scale and halving_tol must be positive");
    }
    for (double m : match_points) {
        if (!(m > r_min) || m > r_max * (1.0 + 1e-12)) throw DomainError("match points must lie in (r_min, r_max]");
    }
    if (!(ch.k * max_radial_step() < 0.5)) throw DomainError("grid too coarse: k * step >= 0.5");
    if (std::abs(std::sin(ch.k * (match_points[0] - match_points[1]))) < 1e-8) {
        throw DomainError("match points separated by a multiple of pi/k");
    }
}

EffectivePotential approx_channel_potential(const PotentialParams& p, int l) {
    const double mf = p.mass_factor();
    const double ll = l * (l + 1.0);
    const double a2 = p.alpha * p.alpha;
    return [p, mf, ll, a2](double r) {
        return mf * model::potential_approx(p, r) + ll * (model::centrifugal_approx(p.alpha, r) - a2);
    };
}

EffectivePotential exact_channel_potential(const PotentialParams& p, int l) {
    const double mf = p.mass_factor();
    const double ll = l * (l + 1.0);
    return [p, mf, ll](double r) { return mf * model::potential_exact(p, r) + ll / (r * r); };
}

double extract_phase(const RadialSolution& sol, const Channel& ch, PhaseMode mode) {
    const auto [i1, i2] = sol.match_index;
    if (i1 >= sol.r.size() || i2 >= sol.r.size()) throw DomainError("match index outside the solution grid");
    const FitBasis b1 = basis_at(sol.r[i1], ch, mode);
    const FitBasis b2 = basis_at(sol.r[i2], ch, mode);
    const double u1 = sol.u[i1];
    const double u2 = sol.u[i2];

    // u = P x - Q y, phase = atan2(Q, P).
    const double det = -b1.x * b2.y + b2.x * b1.y;
    const double scale = std::max({std::abs(b1.x), std::abs(b1.y), std::abs(b2.x), std::abs(b2.y), 1.0});
    if (std::abs(det) < 1e-8 * scale * scale) throw IllConditioned("asymptotic fit is singular at the match points");
    const double P = (-u1 * b2.y + b1.y * u2) / det;
    const double Q = (b1.x * u2 - b2.x * u1) / det;
    return std::atan2(Q, P);
}

RadialSolution numerov_integrate(const EffectivePotential& W, const Channel& ch, const IntegrationConfig& cfg,
                                 PhaseMode mode) {
    cfg.validate(ch);
    double h = cfg.step;
    RadialSolution coarse = integrate_once(W, ch, cfg, h, mode);
    for (;;) {
        h /= 2.0;
        RadialSolution fine = integrate_once(W, ch, cfg, h, mode);
        fine.halving_change = std::abs(wrap_two_pi(fine.extracted_phase - coarse.extracted_phase));
        if (fine.halving_change < cfg.halving_tol) {
            fine.converged = true;
            return fine;
        }
        if (h / 2.0 < cfg.min_step) {
            fine.converged = false;
            return fine;
        }
        coarse = std::move(fine);
    }
}

OraclePhase oracle_delta_approx(const PotentialParams& p, const Channel& ch, const IntegrationConfig& cfg) {
    p.validate();
    const EffectivePotential W = approx_channel_potential(p, ch.l);
    PotentialParams free = p;
    free.V0 = 0.0;
    free.A = 0.0;
    const EffectivePotential W0 = approx_channel_potential(free, ch.l);
    check_tail(W, cfg, ch.k);

    const RadialSolution full = numerov_integrate(W, ch, cfg, PhaseMode::plane);
    const RadialSolution bare = numerov_integrate(W0, ch, cfg, PhaseMode::plane);
    return {reduce_mod_pi(full.extracted_phase - bare.extracted_phase), full.converged && bare.converged,
            std::max(full.halving_change, bare.halving_change)};
}

OraclePhase oracle_delta_exact(const PotentialParams& p, const Channel& ch, const IntegrationConfig& cfg) {
    p.validate();
    ch.validate();
    const Channel exact_ch{ch.l, std::sqrt(ch.k * ch.k + p.alpha * p.alpha * ch.l * (ch.l + 1.0))};
    const double mf = p.mass_factor();
    check_tail([&](double r) { return mf * model::potential_exact(p, r); }, cfg, exact_ch.k);

    const EffectivePotential W = exact_channel_potential(p, ch.l);
    PotentialParams free = p;
    free.V0 = 0.0;
    free.A = 0.0;
    const EffectivePotential W0 = exact_channel_potential(free, ch.l);

    const RadialSolution full = numerov_integrate(W, exact_ch, cfg, PhaseMode::spherical_bessel);
    const RadialSolution bare = numerov_integrate(W0, exact_ch, cfg, PhaseMode::spherical_bessel);
    return {reduce_mod_pi(full.extracted_phase - bare.extracted_phase), full.converged && bare.converged,
            std::max(full.halving_change, bare.halving_change)};
}

ShootingLevel shooting_level(const PotentialParams& p, int l, bool use_approx, int n, const ShootingConfig& cfg) {
    return ShootingProblem(p, l, use_approx, cfg).level(n);
}

std::vector<ShootingLevel> shooting_bound_states(const PotentialParams& p, int l, bool use_approx, int n_max,
                                                 const ShootingConfig& cfg) {
    if (n_max < 0) throw DomainError("n_max must be nonnegative");
    const ShootingProblem problem(p, l, use_approx, cfg);
    std::vector<ShootingLevel> levels;
    for (int n = 0; n <= n_max; ++n) {
        try {
            levels.push_back(problem.level(n));
        } catch (const NoneFound&) {
            break;
        }
    }
    return levels;
}

}  // namespace hyscat::oracle
