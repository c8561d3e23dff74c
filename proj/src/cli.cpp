#include "hyscat/cli.hpp"

#include <fmt/format.h>
#include <fmt/ranges.h>

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "hyscat/error.hpp"
#include "hyscat/oracle.hpp"
#include "hyscat/phaseshift.hpp"
#include "hyscat/published_tables.hpp"
#include "parallel.hpp"

namespace hyscat::cli {
namespace {

using phaseshift::AngleUnit;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Format { csv, md };

struct RunConfig {
    std::string command;
    double V0 = 1.0;
    double mu = 1.0;
    double hbar = 1.0;
    std::vector<double> A;
    std::vector<double> alpha;
    std::vector<int> l;
    std::vector<double> k;
    std::string k_range;
    std::string unit = "rad";
    std::string format;
    std::string output;
    bool diff_paper = false;
    double tol = 1e-3;
    double oracle_step = 0.0;
    double oracle_rmax = 0.0;
    int n_max = 2;

    AngleUnit angle_unit() const { return unit == "deg" ? AngleUnit::degrees : AngleUnit::radians; }
    const char* unit_name() const { return unit == "deg" ? "degrees" : "radians"; }
};

// Published grid used by `table` and `compare` when no flags narrow it.
const std::vector<int> kTableL = {0, 1, 2};
const std::vector<double> kTableA = {0.0, 5.0};
const std::vector<double> kTableAlpha = {0.05, 0.075, 0.1};
const std::vector<double> kTableK = {0.01, 0.03, 0.05, 0.07, 0.09, 0.11, 0.13, 0.15};

std::string num(double v) { return fmt::format("{}", v); }
std::string fixed5(double v) { return fmt::format("{:.5f}", v); }

std::string cell_text(const std::optional<double>& v, Format f) {
    if (!v) return "ERR";
    return f == Format::csv ? num(*v) : fixed5(*v);
}

std::vector<double> parse_k_range(const std::string& spec) {
    const auto first = spec.find(':');
    const auto second = first == std::string::npos ? std::string::npos : spec.find(':', first + 1);
    if (second == std::string::npos) throw UsageError("--k-range expects START:STOP:STEP");
    double start = 0.0, stop = 0.0, step = 0.0;
    try {
        start = std::stod(spec.substr(0, first));
        stop = std::stod(spec.substr(first + 1, second - first - 1));
        step = std::stod(spec.substr(second + 1));
    } catch (const std::exception&) {
        throw UsageError("--k-range expects numeric START:STOP:STEP, got '" + spec + "'");
    }
    if (!(step > 0.0) || !(stop >= start)) throw UsageError("--k-range '" + spec + "' is empty");
    std::vector<double> ks;
    for (long i = 0;; ++i) {
        const double v = start + static_cast<double>(i) * step;
        if (v > stop + 1e-9 * step) break;
        ks.push_back(std::round(v * 1e12) / 1e12);
    }
    return ks;
}

void fill_defaults(RunConfig& cfg) {
    const bool grid_cmd = cfg.command == "table" || cfg.command == "compare";
    if (!cfg.k_range.empty()) {
        if (!cfg.k.empty()) throw UsageError("give either --k or --k-range, not both");
        cfg.k = parse_k_range(cfg.k_range);
    }
    if (cfg.l.empty()) cfg.l = grid_cmd ? kTableL : std::vector<int>{cfg.command == "scan" ? 1 : 0};
    if (cfg.A.empty()) cfg.A = (grid_cmd || cfg.command == "scan") ? kTableA : std::vector<double>{0.0};
    if (cfg.alpha.empty()) cfg.alpha = grid_cmd ? kTableAlpha : std::vector<double>{0.05};
    if (cfg.k.empty()) {
        if (grid_cmd) cfg.k = kTableK;
        else if (cfg.command == "scan") cfg.k = parse_k_range("0.01:0.15:0.01");
        else cfg.k = {0.01};
    }
    if (cfg.format.empty()) cfg.format = cfg.command == "scan" ? "csv" : "md";
}

void validate(const RunConfig& cfg) {
    auto require = [](bool ok, const std::string& msg) {
        if (!ok) throw UsageError(msg);
    };
    require(std::isfinite(cfg.V0), "--V0 must be finite");
    require(cfg.mu > 0.0, "--mu must be positive");
    require(cfg.hbar > 0.0, "--hbar must be positive");
    for (double a : cfg.alpha) require(a > 0.0 && std::isfinite(a), "--alpha values must be positive");
    for (double a : cfg.A) require(std::isfinite(a), "--A values must be finite");
    for (int l : cfg.l) require(l >= 0, "--l values must be nonnegative");
    for (double k : cfg.k) require(k > 0.0 && std::isfinite(k), "--k values must be positive");
    require(!cfg.k.empty() && !cfg.l.empty() && !cfg.A.empty() && !cfg.alpha.empty(), "empty parameter list");
    require(cfg.tol >= 0.0, "--tol must be nonnegative");
    require(cfg.oracle_step >= 0.0 && cfg.oracle_rmax >= 0.0, "oracle overrides must be positive");
    require(cfg.n_max >= 0, "--n-max must be nonnegative");

    const bool single_l_alpha = cfg.command == "scan" || cfg.command == "bound-states" || cfg.command == "point";
    if (single_l_alpha) {
        require(cfg.l.size() == 1, "--l takes a single value for '" + cfg.command + "'");
        require(cfg.alpha.size() == 1, "--alpha takes a single value for '" + cfg.command + "'");
    }
    if (cfg.command == "bound-states" || cfg.command == "point") {
        require(cfg.A.size() == 1, "--A takes a single value for '" + cfg.command + "'");
    }
    if (cfg.command == "point") require(cfg.k.size() == 1, "--k takes a single value for 'point'");
    if (cfg.diff_paper) require(cfg.command == "table", "--diff-paper applies to 'table' only");
}

model::PotentialParams base_params(const RunConfig& cfg) {
    model::PotentialParams p;
    p.V0 = cfg.V0;
    p.A = cfg.A.front();
    p.alpha = cfg.alpha.front();
    p.mu = cfg.mu;
    p.hbar = cfg.hbar;
    return p;
}

std::string a_label(double A) { return "A" + num(A); }

// Index into table_sweep output, which is ordered (l, A, k, alpha).
struct SweepIndex {
    const RunConfig& cfg;
    std::size_t operator()(std::size_t il, std::size_t iA, std::size_t ik, std::size_t ia) const {
        return ((il * cfg.A.size() + iA) * cfg.k.size() + ik) * cfg.alpha.size() + ia;
    }
};

void emit_summary(std::ostream& out, std::ostream& err, Format f, const std::string& line) {
    if (f == Format::md) {
        out << '\n' << line << '\n';
    } else {
        err << line << '\n';
    }
}

int cmd_table(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const Format f = cfg.format == "csv" ? Format::csv : Format::md;
    const auto unit = cfg.angle_unit();
    const auto cells = phaseshift::table_sweep(base_params(cfg), {cfg.l, cfg.A, cfg.k, cfg.alpha}, unit);
    const SweepIndex index{cfg};

    bool failed = false;
    double max_diff = 0.0;
    std::size_t compared = 0;

    if (f == Format::csv) {
        out << "l,k,alpha";
        for (double A : cfg.A) {
            out << ",delta_" << a_label(A);
            if (cfg.diff_paper) out << ",published_" << a_label(A) << ",diff_" << a_label(A);
        }
        out << '\n';
    } else {
        out << "delta_l in " << cfg.unit_name() << ", V0 = " << num(cfg.V0) << ", hbar = " << num(cfg.hbar)
            << ", mu = " << num(cfg.mu) << '\n';
    }

    for (std::size_t il = 0; il < cfg.l.size(); ++il) {
        if (f == Format::md) {
            out << "\n### l = " << cfg.l[il] << "\n\n| k | alpha |";
            for (double A : cfg.A) {
                out << " delta_l (A = " << num(A) << ") |";
                if (cfg.diff_paper) out << " published (A = " << num(A) << ") | diff (A = " << num(A) << ") |";
            }
            out << "\n|---|---|";
            for (std::size_t i = 0; i < cfg.A.size() * (cfg.diff_paper ? 3 : 1); ++i) out << "---|";
            out << '\n';
        }
        for (std::size_t ik = 0; ik < cfg.k.size(); ++ik) {
            for (std::size_t ia = 0; ia < cfg.alpha.size(); ++ia) {
                if (f == Format::csv) {
                    out << cfg.l[il] << ',' << num(cfg.k[ik]) << ',' << num(cfg.alpha[ia]);
                } else {
                    out << "| " << (ia == 0 ? num(cfg.k[ik]) : std::string()) << " | " << num(cfg.alpha[ia]) << " |";
                }
                for (std::size_t iA = 0; iA < cfg.A.size(); ++iA) {
                    const auto& cell = cells[index(il, iA, ik, ia)];
                    std::optional<double> value;
                    if (cell.result) value = cell.result->delta_l;
                    else failed = true;

                    std::optional<double> published;
                    std::optional<double> diff;
                    if (cfg.diff_paper) {
                        if (auto pub = published_delta(cell.l, cell.k, cell.alpha, cell.A)) {
                            published = phaseshift::to_unit(*pub, unit);
                            if (value) {
                                diff = *value - *published;
                                max_diff = std::max(max_diff, std::abs(*diff));
                                ++compared;
                            }
                        }
                    }
                    const char* sep = f == Format::csv ? "," : " ";
                    out << sep << cell_text(value, f);
                    if (f == Format::md) out << " |";
                    if (cfg.diff_paper) {
                        out << sep << (published ? cell_text(published, f) : "NA") << (f == Format::md ? " |" : "");
                        out << sep << (diff ? (f == Format::csv ? num(*diff) : fmt::format("{:.2e}", *diff)) : "NA")
                            << (f == Format::md ? " |" : "");
                    }
                }
                out << '\n';
            }
        }
    }

    for (const auto& cell : cells) {
        if (!cell.result) {
            err << "error at l=" << cell.l << " A=" << num(cell.A) << " k=" << num(cell.k)
                << " alpha=" << num(cell.alpha) << ": " << cell.error << '\n';
        }
    }

    if (cfg.diff_paper) {
        emit_summary(out, err, f,
                     fmt::format("max |diff| vs published = {:.3e} {} over {} cells (tol {})", max_diff,
                                 cfg.unit_name(), compared, num(cfg.tol)));
        if (compared == 0) err << "warning: no grid cell coincides with a published value\n";
    }
    if (failed) return kNumericalFailure;
    if (cfg.diff_paper && max_diff > cfg.tol) return kToleranceFailure;
    return kSuccess;
}

int cmd_scan(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const Format f = cfg.format == "csv" ? Format::csv : Format::md;
    const auto cells = phaseshift::table_sweep(base_params(cfg), {cfg.l, cfg.A, cfg.k, cfg.alpha}, cfg.angle_unit());
    const SweepIndex index{cfg};

    if (f == Format::csv) {
        out << 'k';
        for (double A : cfg.A) out << ",delta_l_" << a_label(A);
    } else {
        out << "l = " << cfg.l[0] << ", alpha = " << num(cfg.alpha[0]) << ", delta_l in " << cfg.unit_name()
            << "\n\n| k |";
        for (double A : cfg.A) out << " delta_l (A = " << num(A) << ") |";
        out << "\n|---|";
        for (std::size_t i = 0; i < cfg.A.size(); ++i) out << "---|";
    }
    out << '\n';

    bool failed = false;
    for (std::size_t ik = 0; ik < cfg.k.size(); ++ik) {
        out << (f == Format::md ? "| " : "") << num(cfg.k[ik]);
        for (std::size_t iA = 0; iA < cfg.A.size(); ++iA) {
            const auto& cell = cells[index(0, iA, ik, 0)];
            std::optional<double> value;
            if (cell.result) value = cell.result->delta_l;
            else {
                failed = true;
                err << "error at k=" << num(cell.k) << " A=" << num(cell.A) << ": " << cell.error << '\n';
            }
            out << (f == Format::md ? " | " : ",") << cell_text(value, f);
        }
        out << (f == Format::md ? " |\n" : "\n");
    }
    return failed ? kNumericalFailure : kSuccess;
}

oracle::IntegrationConfig oracle_config(const RunConfig& cfg, const model::PotentialParams& p,
                                        const model::Channel& ch) {
    auto icfg = oracle::IntegrationConfig::for_channel(p, ch);
    if (cfg.oracle_step > 0.0) {
        icfg.step = cfg.oracle_step;
        icfg.min_step = cfg.oracle_step / 256.0;
    }
    if (cfg.oracle_rmax > 0.0) {
        icfg.r_max = cfg.oracle_rmax;
        icfg.match_points = {icfg.r_max, icfg.r_max - 0.37 / ch.k};
    }
    return icfg;
}

struct CompareRow {
    int l;
    double k;
    double alpha;
    double A;
    std::optional<double> analytic;
    std::optional<oracle::OraclePhase> approx;
    std::optional<oracle::OraclePhase> exact;
    std::string error;
};

int cmd_compare(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const Format f = cfg.format == "csv" ? Format::csv : Format::md;
    const auto unit = cfg.angle_unit();

    std::vector<CompareRow> rows;
    for (int l : cfg.l)
        for (double k : cfg.k)
            for (double alpha : cfg.alpha)
                for (double A : cfg.A) rows.push_back({l, k, alpha, A, {}, {}, {}, {}});

    detail::parallel_for(rows.size(), [&](std::size_t i) {
        CompareRow& row = rows[i];
        model::PotentialParams p = base_params(cfg);
        p.A = row.A;
        p.alpha = row.alpha;
        const model::Channel ch{row.l, row.k};
        try {
            row.analytic = phaseshift::delta_l(p, ch).delta_l;
            const auto icfg = oracle_config(cfg, p, ch);
            row.approx = oracle::oracle_delta_approx(p, ch, icfg);
            row.exact = oracle::oracle_delta_exact(p, ch, icfg);
        } catch (const std::exception& e) {
            row.error = e.what();
        }
    });

    const std::vector<std::string> header = {"l",           "k",         "alpha",       "A",
                                             "delta_analytic", "delta_oracle_approx", "delta_oracle_exact",
                                             "diff_approx", "diff_exact", "converged"};
    if (f == Format::csv) {
        out << fmt::format("{}\n", fmt::join(header, ","));
    } else {
        out << "angles in " << cfg.unit_name() << "; oracle phases and differences are taken modulo pi\n\n| "
            << fmt::format("{}", fmt::join(header, " | ")) << " |\n|";
        for (std::size_t i = 0; i < header.size(); ++i) out << "---|";
        out << '\n';
    }

    bool failed = false;
    double max_approx = 0.0;
    double max_exact = 0.0;
    auto angle = [&](double rad) {
        const double v = phaseshift::to_unit(rad, unit);
        return f == Format::csv ? num(v) : fixed5(v);
    };
    auto diff_text = [&](double rad) {
        const double v = phaseshift::to_unit(rad, unit);
        return f == Format::csv ? num(v) : fmt::format("{:.2e}", v);
    };
    for (const auto& row : rows) {
        std::vector<std::string> fields = {std::to_string(row.l), num(row.k), num(row.alpha), num(row.A)};
        if (!row.error.empty()) {
            failed = true;
            err << "error at l=" << row.l << " k=" << num(row.k) << " alpha=" << num(row.alpha)
                << " A=" << num(row.A) << ": " << row.error << '\n';
            for (int i = 0; i < 6; ++i) fields.emplace_back("ERR");
        } else {
            const double d_approx = oracle::reduce_mod_pi(*row.analytic - row.approx->delta);
            const double d_exact = oracle::reduce_mod_pi(*row.analytic - row.exact->delta);
            max_approx = std::max(max_approx, std::abs(d_approx));
            max_exact = std::max(max_exact, std::abs(d_exact));
            fields.push_back(angle(*row.analytic));
            fields.push_back(angle(row.approx->delta));
            fields.push_back(angle(row.exact->delta));
            fields.push_back(diff_text(d_approx));
            fields.push_back(diff_text(d_exact));
            fields.emplace_back(row.approx->converged && row.exact->converged ? "yes" : "no");
        }
        if (f == Format::csv) out << fmt::format("{}\n", fmt::join(fields, ","));
        else out << "| " << fmt::format("{}", fmt::join(fields, " | ")) << " |\n";
    }
    emit_summary(out, err, f,
                 fmt::format("max |analytic - oracle_approx| mod pi = {:.3e} rad; max |analytic - oracle_exact| mod "
                             "pi = {:.3e} rad",
                             max_approx, max_exact));
    return failed ? kNumericalFailure : kSuccess;
}

int cmd_bound_states(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    const Format f = cfg.format == "csv" ? Format::csv : Format::md;
    const auto p = base_params(cfg);
    const int l = cfg.l.front();

    std::vector<phaseshift::BoundState> analytic;
    std::vector<oracle::ShootingLevel> shooting;
    try {
        analytic = phaseshift::bound_states(p, l, cfg.n_max);
    } catch (const NoBracket&) {
    }
    oracle::ShootingConfig scfg;
    if (cfg.oracle_step > 0.0) scfg.step = cfg.oracle_step;
    if (cfg.oracle_rmax > 0.0) scfg.r_max = cfg.oracle_rmax;
    try {
        shooting = oracle::shooting_bound_states(p, l, true, cfg.n_max, scfg);
    } catch (const NoneFound&) {
    }

    if (analytic.empty() && shooting.empty()) {
        out << "no bound states\n";
        return kSuccess;
    }
    const std::size_t count = std::max(analytic.size(), shooting.size());
    if (f == Format::csv) {
        out << "n,E_analytic,E_oracle,rel_diff\n";
    } else {
        out << "l = " << l << ", V0 = " << num(p.V0) << ", A = " << num(p.A) << ", alpha = " << num(p.alpha)
            << "\n\n| n | E (pole) | E (shooting) | rel. diff |\n|---|---|---|---|\n";
    }
    auto energy = [&](double e) { return f == Format::csv ? num(e) : fmt::format("{:.10f}", e); };
    for (std::size_t n = 0; n < count; ++n) {
        const std::string ea = n < analytic.size() ? energy(analytic[n].energy) : "NA";
        const std::string es = n < shooting.size() ? energy(shooting[n].energy) : "NA";
        std::string rel = "NA";
        if (n < analytic.size() && n < shooting.size()) {
            const double r = std::abs(analytic[n].energy - shooting[n].energy) / std::abs(analytic[n].energy);
            rel = f == Format::csv ? num(r) : fmt::format("{:.2e}", r);
        }
        if (f == Format::csv) out << n << ',' << ea << ',' << es << ',' << rel << '\n';
        else out << "| " << n << " | " << ea << " | " << es << " | " << rel << " |\n";
    }
    return kSuccess;
}

int cmd_point(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    const Format f = cfg.format == "csv" ? Format::csv : Format::md;
    const auto p = base_params(cfg);
    const model::Channel ch{cfg.l.front(), cfg.k.front()};
    const auto result = phaseshift::delta_l(p, ch, cfg.angle_unit());
    const auto t = model::transformed_params(p, ch);
    const auto s = phaseshift::hypergeom_solution(p, ch);
    const auto [eta1, eta2] = phaseshift::free_field_args(ch, p.alpha);

    struct Entry {
        std::string name;
        double value;
        bool angle;
    };
    const std::vector<Entry> entries = {
        {"delta_l", result.delta_l, true},
        {"theta_l", result.theta_l, true},
        {"theta_l_free", result.theta_l_free, true},
        {"arg_gamma_2ik_over_alpha", result.terms.two_ik_over_alpha, true},
        {"arg_gamma_eta1_star", result.terms.eta1_star, true},
        {"arg_gamma_eta2_star", result.terms.eta2_star, true},
        {"arg_gamma_a_star", result.terms.a_star, true},
        {"arg_gamma_b_star", result.terms.b_star, true},
        {"zeta1", t.zeta1, false},
        {"zeta2", t.zeta2, false},
        {"zeta3", t.zeta3, false},
        {"sigma", t.sigma, false},
        {"sqrt_zeta1_re", t.sqrt_zeta1.real(), false},
        {"sqrt_zeta1_im", t.sqrt_zeta1.imag(), false},
        {"a_star_re", s.a_star.real(), false},
        {"a_star_im", s.a_star.imag(), false},
        {"b_star_re", s.b_star.real(), false},
        {"b_star_im", s.b_star.imag(), false},
        {"eta1_star_re", eta1.real(), false},
        {"eta1_star_im", eta1.imag(), false},
        {"eta2_star_re", eta2.real(), false},
        {"eta2_star_im", eta2.imag(), false},
        {"energy", model::channel_energy(p, ch), false},
    };

    if (f == Format::csv) {
        out << "quantity,value\n";
        for (const auto& e : entries) out << e.name << ',' << num(e.value) << '\n';
    } else {
        out << "l = " << ch.l << ", k = " << num(ch.k) << ", V0 = " << num(p.V0) << ", A = " << num(p.A)
            << ", alpha = " << num(p.alpha) << "; angles in " << cfg.unit_name()
            << "\n\n| quantity | value |\n|---|---|\n";
        for (const auto& e : entries) {
            out << "| " << e.name << " | " << (e.angle ? fixed5(e.value) : fmt::format("{:.10g}", e.value)) << " |\n";
        }
    }
    return kSuccess;
}

void add_common_options(CLI::App& sub, RunConfig& cfg) {
    sub.add_option("--V0", cfg.V0, "potential strength V0")->capture_default_str();
    sub.add_option("--A", cfg.A, "Yukawa constant(s), comma separated")->delimiter(',');
    sub.add_option("--alpha", cfg.alpha, "screening parameter(s), comma separated")->delimiter(',');
    sub.add_option("--mu", cfg.mu, "reduced mass")->capture_default_str();
    sub.add_option("--hbar", cfg.hbar, "reduced Planck constant")->capture_default_str();
    sub.add_option("--l", cfg.l, "angular momentum value(s), comma separated")->delimiter(',');
    sub.add_option("--k", cfg.k, "wave number(s), comma separated")->delimiter(',');
    sub.add_option("--k-range", cfg.k_range, "wave numbers START:STOP:STEP");
    sub.add_option("--unit", cfg.unit, "angle unit")->check(CLI::IsMember({"deg", "rad"}))->capture_default_str();
    sub.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"csv", "md"}));
    sub.add_option("--output", cfg.output, "write data to PATH instead of standard output");
    sub.add_option("--oracle-step", cfg.oracle_step, "Numerov step in the mapped radial variable");
    sub.add_option("--oracle-rmax", cfg.oracle_rmax, "outer radius of the numerical integration");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Phase shifts and bound states of the Hulthen-type plus Yukawa potential", "hyscat"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto* table = app.add_subcommand("table", "phase-shift tables over (l, k, alpha, A)");
    add_common_options(*table, cfg);
    table->add_flag("--diff-paper", cfg.diff_paper, "compare against the published tables");
    table->add_option("--tol", cfg.tol, "tolerance for --diff-paper, table units")->capture_default_str();

    auto* scan = app.add_subcommand("scan", "delta_l versus k at fixed (l, alpha), one column per A");
    add_common_options(*scan, cfg);

    auto* compare = app.add_subcommand("compare", "closed form versus direct integration of the radial equation");
    add_common_options(*compare, cfg);

    auto* bound = app.add_subcommand("bound-states", "pole energies versus the shooting solver");
    add_common_options(*bound, cfg);
    bound->add_option("--n-max", cfg.n_max, "highest node count")->capture_default_str();

    auto* point = app.add_subcommand("point", "every intermediate quantity of a single delta_l");
    add_common_options(*point, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsageError;
    }
    cfg.command = app.get_subcommands().front()->get_name();

    try {
        fill_defaults(cfg);
        validate(cfg);
    } catch (const UsageError& e) {
        err << "hyscat " << cfg.command << ": " << e.what() << '\n';
        return kUsageError;
    }

    std::ofstream file;
    std::ostream* sink = &out;
    if (!cfg.output.empty()) {
        file.open(cfg.output, std::ios::binary);
        if (!file) {
            err << "hyscat: cannot open output file '" << cfg.output << "'\n";
            return kNumericalFailure;
        }
        sink = &file;
    }

    int code = kSuccess;
    try {
        if (cfg.command == "table") code = cmd_table(cfg, *sink, err);
        else if (cfg.command == "scan") code = cmd_scan(cfg, *sink, err);
        else if (cfg.command == "compare") code = cmd_compare(cfg, *sink, err);
        else if (cfg.command == "bound-states") code = cmd_bound_states(cfg, *sink, err);
        else code = cmd_point(cfg, *sink, err);
    } catch (const Error& e) {
        err << "hyscat " << cfg.command << ": " << e.what() << '\n';
        return kNumericalFailure;
    }
    if (file.is_open()) {
        file.flush();
        if (!file) {
            err << "hyscat: write to '" << cfg.output << "' failed\n";
            return kNumericalFailure;
        }
    }
    return code;
}

}  // namespace hyscat::cli
