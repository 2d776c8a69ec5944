#include "renex/harness.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <thread>

#include "renex/renewal.hpp"

#include "json.hpp"

namespace renex {

using ordered_json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// ExperimentConfig
// ---------------------------------------------------------------------------

namespace {

constexpr double coupled_cap = 10.0;

bool coupling_active(const ExperimentConfig& cfg) {
    // With constant steps the coupled transform is vacuous by definition;
    // the run is then identical to the independent one.
    return cfg.dependent && cfg.steps.law != StepModel::Law::Constant;
}

double coupled_mean(const ObservationModel& obs) {
    // E[1 + min(X, 10)] in closed form per observation law.
    switch (obs.law) {
        case ObservationModel::Law::UnitExponential:
            return 2.0 - std::exp(-coupled_cap);
        case ObservationModel::Law::Pareto: {
            const double a = obs.pareto_alpha;
            if (a == 1.0) return 2.0 + std::log(coupled_cap);
            return 2.0 + (std::pow(coupled_cap, 1.0 - a) - 1.0) / (1.0 - a);
        }
        case ObservationModel::Law::StandardNormal:
            break;
    }
    throw std::invalid_argument("coupled steps are defined for exponential or Pareto observations");
}

}  // namespace

double ExperimentConfig::step_mean() const {
    if (coupling_active(*this)) return coupled_mean(obs);
    return steps.mean();
}

double ExperimentConfig::resolved_ks_crit() const {
    if (ks_crit > 0.0) return ks_crit;
    if (regime == Regime::FiniteMean) return 1.95 / std::sqrt(static_cast<double>(n_reps));
    return 1.0;  // mixture laws: KS reported, not gated
}

void ExperimentConfig::validate() const {
    obs.validate();
    steps.validate();
    if (!(t > 0.0)) throw std::invalid_argument("horizon t must be > 0");
    if (!(c >= 0.0)) throw std::invalid_argument("window multiplier c must be >= 0");
    if (n_reps < 1) throw std::invalid_argument("n_reps must be >= 1");
    if (k_max < 1) throw std::invalid_argument("k_max must be >= 1");
    if (threads < 1) throw std::invalid_argument("threads must be >= 1");
    if (!(z_crit > 0.0)) throw std::invalid_argument("z_crit must be > 0");
    if (eval_grid.empty()) throw std::invalid_argument("eval_grid must not be empty");

    const bool frechet = obs.family() == MdaFamily::Frechet;
    for (double x : eval_grid) {
        if (!std::isfinite(x) || (frechet && !(x > 0.0))) {
            throw std::invalid_argument("eval_grid points must lie inside the mark space");
        }
    }

    if (regime == Regime::FiniteMean) {
        if (!steps.finite_mean()) {
            throw std::invalid_argument("finite-mean regime needs finite-mean steps");
        }
        if (dependent) (void)coupled_mean(obs);  // rejects unsupported laws
    } else {
        if (steps.law != StepModel::Law::HeavyPareto) {
            throw std::invalid_argument("infinite-mean regime needs heavy Pareto steps");
        }
        if (dependent) {
            throw std::invalid_argument(
                "the infinite-mean limit assumes steps independent of observations");
        }
        if (n_mc < 1) throw std::invalid_argument("n_mc must be >= 1");
    }

    if (!fdd_s.empty() || !fdd_x.empty()) {
        if (fdd_s.size() != fdd_x.size() || fdd_s.empty() || fdd_s.size() > 3) {
            throw std::invalid_argument("fdd comparison takes 1..3 matching (s, x) pairs");
        }
        for (std::size_t j = 0; j < fdd_s.size(); ++j) {
            if (!(fdd_s[j] > 0.0) || (j > 0 && !(fdd_s[j] > fdd_s[j - 1]))) {
                throw std::invalid_argument("fdd times must be strictly increasing and positive");
            }
            if (!std::isfinite(fdd_x[j]) || (frechet && !(fdd_x[j] > 0.0))) {
                throw std::invalid_argument("fdd marks must lie inside the mark space");
            }
        }
    }
    if (!exec_order.empty() && exec_order.size() != n_reps) {
        throw std::invalid_argument("exec_order must enumerate all replications");
    }
}

// ---------------------------------------------------------------------------
// EcdfTable and distances
// ---------------------------------------------------------------------------

EcdfTable::EcdfTable(std::vector<double> sample) : sorted_(std::move(sample)) {
    if (sorted_.empty()) throw std::invalid_argument("empty sample");
    std::sort(sorted_.begin(), sorted_.end());
}

double EcdfTable::operator()(double x) const {
    return static_cast<double>(count_le(x)) / static_cast<double>(sorted_.size());
}

std::size_t EcdfTable::count_le(double x) const {
    return static_cast<std::size_t>(std::upper_bound(sorted_.begin(), sorted_.end(), x) -
                                    sorted_.begin());
}

double ks_distance(const EcdfTable& ecdf, const std::function<double(double)>& cdf,
                   std::span<const double> grid) {
    const auto sample = ecdf.sorted();
    const double n = static_cast<double>(sample.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sample.size(); ++i) {
        const double f = cdf(sample[i]);
        d = std::max(d, std::abs(static_cast<double>(i + 1) / n - f));
        d = std::max(d, std::abs(static_cast<double>(i) / n - f));
    }
    for (double g : grid) {
        d = std::max(d, std::abs(ecdf(g) - cdf(g)));
    }
    return d;
}

double cvm_statistic(const EcdfTable& ecdf, const std::function<double(double)>& cdf) {
    const auto sample = ecdf.sorted();
    const double n = static_cast<double>(sample.size());
    double w2 = 1.0 / (12.0 * n);
    for (std::size_t i = 0; i < sample.size(); ++i) {
        const double delta = cdf(sample[i]) - (2.0 * static_cast<double>(i) + 1.0) / (2.0 * n);
        w2 += delta * delta;
    }
    return w2;
}

double ks_two_sample(const EcdfTable& a, const EcdfTable& b) {
    const auto sa = a.sorted();
    const auto sb = b.sorted();
    const double na = static_cast<double>(sa.size());
    const double nb = static_cast<double>(sb.size());
    double d = 0.0;
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < sa.size() && j < sb.size()) {
        if (sa[i] < sb[j]) {
            ++i;
        } else if (sb[j] < sa[i]) {
            ++j;
        } else {
            const double v = sa[i];
            while (i < sa.size() && sa[i] == v) ++i;
            while (j < sb.size() && sb[j] == v) ++j;
        }
        d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
    }
    return d;
}

// ---------------------------------------------------------------------------
// Engine
// ---------------------------------------------------------------------------

namespace {

struct EngineSetup {
    const ExperimentConfig* cfg = nullptr;
    bool finite = true;
    bool coupled = false;
    double mu = 1.0;  // finite-mean scaling
    double g = 1.0;   // t/mu (finite) or d_tilde(t) (infinite)
    double inv_g = 1.0;
    double horizon = 0.0;
    std::optional<NormingConstants> norming;
    std::optional<StepNorming> step_norming;
};

EngineSetup make_setup(const ExperimentConfig& cfg) {
    EngineSetup es;
    es.cfg = &cfg;
    es.finite = cfg.regime == ExperimentConfig::Regime::FiniteMean;
    es.coupled = coupling_active(cfg);
    es.norming.emplace(cfg.obs);
    if (es.finite) {
        es.mu = cfg.step_mean();
        es.g = cfg.t / es.mu;
    } else {
        es.step_norming.emplace(step_norming_for(cfg.steps));
        es.g = es.step_norming->d_tilde(cfg.t);
    }
    es.inv_g = 1.0 / es.g;
    double s_max = cfg.c;
    for (double s : cfg.fdd_s) s_max = std::max(s_max, s);
    es.horizon = cfg.t * s_max;
    return es;
}

struct Scratch {
    RenewalPath path;
    std::vector<double> obs;
};

// One replication: simulate the renewal path and observations, build the
// scaled point set, and read off the windowed order statistics (plus the
// running-maximum path values when an fdd comparison is requested).
void run_one(const EngineSetup& es, std::uint64_t rep, Scratch& sc, double* topk_out,
             double* fdd_out, double* tau_out) {
    const ExperimentConfig& cfg = *es.cfg;
    const SeedSpec seed{cfg.master_seed, rep};

    sc.path.clear();
    sc.obs.clear();

    if (es.coupled) {
        Rng obs_rng = Rng::for_stream(seed, stream_tag::observations);
        while (sc.path.total() <= es.horizon) {
            const double x = observation_draw(cfg.obs, obs_rng);
            sc.obs.push_back(x);
            sc.path.append(1.0 + std::min(x, coupled_cap));
        }
    } else {
        Rng step_rng = Rng::for_stream(seed, stream_tag::steps);
        extend_until(sc.path, es.horizon, cfg.steps, step_rng);
    }

    const std::size_t tau_c = passage_time(sc.path, cfg.t * cfg.c);
    std::size_t n_obs = tau_c;
    std::size_t tau_s[3] = {0, 0, 0};
    for (std::size_t j = 0; j < cfg.fdd_s.size(); ++j) {
        tau_s[j] = passage_time(sc.path, cfg.t * cfg.fdd_s[j]);
        n_obs = std::max(n_obs, tau_s[j]);
    }

    if (!es.coupled) {
        Rng obs_rng = Rng::for_stream(seed, stream_tag::observations);
        sc.obs.resize(n_obs);
        for (auto& x : sc.obs) x = observation_draw(cfg.obs, obs_rng);
    }

    const auto set = build_point_set({sc.obs.data(), n_obs}, *es.norming, es.g, n_obs);

    // The window endpoint tau/g matches the time of point #tau bitwise, so
    // the closed window keeps it.
    const double window_c = static_cast<double>(tau_c) * es.inv_g;
    const auto order = top_k(restrict_window(set, window_c), static_cast<std::size_t>(cfg.k_max));
    for (int k = 0; k < cfg.k_max; ++k) {
        topk_out[k] = static_cast<std::size_t>(k) < order.k_available
                          ? order.values[static_cast<std::size_t>(k)]
                          : set.floor;
    }

    if (!cfg.fdd_s.empty()) {
        const auto path = t1_path(set);
        for (std::size_t j = 0; j < cfg.fdd_s.size(); ++j) {
            fdd_out[j] = path.at(static_cast<double>(tau_s[j]) * es.inv_g);
        }
    }

    *tau_out = es.finite ? scaled_passage_finite(sc.path, cfg.t, cfg.c, es.mu)
                         : scaled_passage_infinite(sc.path, cfg.t, cfg.c, *es.step_norming);
}

std::string config_echo(const ExperimentConfig& cfg, const EngineSetup& es) {
    ordered_json j;
    j["regime"] = es.finite ? "finite" : "infinite";
    switch (cfg.obs.law) {
        case ObservationModel::Law::UnitExponential:
            j["obs"] = {{"law", "exp"}};
            break;
        case ObservationModel::Law::StandardNormal:
            j["obs"] = {{"law", "normal"}};
            break;
        case ObservationModel::Law::Pareto:
            j["obs"] = {{"law", "pareto"}, {"alpha", cfg.obs.pareto_alpha}};
            break;
    }
    switch (cfg.steps.law) {
        case StepModel::Law::Constant:
            j["steps"] = {{"law", "const"}, {"mu", cfg.steps.mu}};
            break;
        case StepModel::Law::Exponential:
            j["steps"] = {{"law", "exp"}, {"mu", cfg.steps.mu}};
            break;
        case StepModel::Law::Uniform:
            j["steps"] = {{"law", "uniform"}, {"mu", cfg.steps.mu}};
            break;
        case StepModel::Law::HeavyPareto:
            j["steps"] = {{"law", "pareto"}, {"alpha", cfg.steps.alpha}, {"y0", cfg.steps.scale}};
            break;
    }
    j["dependent"] = cfg.dependent;
    j["t"] = cfg.t;
    j["c"] = cfg.c;
    j["k_max"] = cfg.k_max;
    j["reps"] = cfg.n_reps;
    j["seed"] = cfg.master_seed;
    j["grid"] = cfg.eval_grid;
    if (!cfg.fdd_s.empty()) {
        j["fdd_s"] = cfg.fdd_s;
        j["fdd_x"] = cfg.fdd_x;
    }
    if (!es.finite) j["n_mc"] = cfg.n_mc;
    if (es.finite) {
        j["mu"] = es.mu;
    } else {
        j["d_tilde_t"] = es.g;
    }
    j["g_t"] = es.g;
    j["z_crit"] = cfg.z_crit;
    j["ks_crit"] = cfg.resolved_ks_crit();
    j["threads"] = cfg.threads;
    return j.dump();
}

// z-score with a half-count-smoothed variance floor so it stays defined
// when the empirical probability hits 0 or 1.
double z_score(double p_hat, std::size_t count, std::size_t n, double analytic,
               double analytic_se) {
    const double nn = static_cast<double>(n);
    const double p_smooth = (static_cast<double>(count) + 0.5) / (nn + 1.0);
    const double var = p_smooth * (1.0 - p_smooth) / nn + analytic_se * analytic_se;
    if (p_hat == analytic) return 0.0;
    return (p_hat - analytic) / std::sqrt(var);
}

ComparisonReport run_experiment(const ExperimentConfig& cfg) {
    cfg.validate();
    const EngineSetup es = make_setup(cfg);
    const std::size_t n = cfg.n_reps;
    const std::size_t k_max = static_cast<std::size_t>(cfg.k_max);
    const std::size_t n_s = cfg.fdd_s.size();

    std::vector<double> topk_store(n * k_max);
    std::vector<double> fdd_store(n_s ? n * n_s : 0);
    std::vector<double> tau_store(n);

    const auto work = [&](std::uint64_t rep, Scratch& sc) {
        run_one(es, rep, sc, topk_store.data() + rep * k_max,
                n_s ? fdd_store.data() + rep * n_s : nullptr, tau_store.data() + rep);
    };

    if (cfg.threads <= 1) {
        Scratch sc;
        if (cfg.exec_order.empty()) {
            for (std::uint64_t rep = 0; rep < n; ++rep) work(rep, sc);
        } else {
            for (std::uint32_t rep : cfg.exec_order) work(rep, sc);
        }
    } else {
        // Replications are keyed by index; any partition yields the same
        // stores, hence the same report.
        const std::size_t n_threads = std::min<std::size_t>(static_cast<std::size_t>(cfg.threads), n);
        std::vector<std::thread> pool;
        pool.reserve(n_threads);
        for (std::size_t tid = 0; tid < n_threads; ++tid) {
            pool.emplace_back([&, tid]() {
                Scratch sc;
                const std::size_t lo = tid * n / n_threads;
                const std::size_t hi = (tid + 1) * n / n_threads;
                for (std::size_t rep = lo; rep < hi; ++rep) work(rep, sc);
            });
        }
        for (auto& th : pool) th.join();
    }

    // ---- aggregation --------------------------------------------------
    ComparisonReport report;
    report.regime = es.finite ? "finite" : "infinite";
    report.z_crit = cfg.z_crit;
    report.config_json = config_echo(cfg, es);

    const TailMeasure tail = TailMeasure::for_model(cfg.obs);
    const double ks_crit = cfg.resolved_ks_crit();
    const bool ks_gated = es.finite || cfg.ks_crit > 0.0;

    std::optional<HittingTimeMixture> mixture;
    if (!es.finite) {
        mixture.emplace(cfg.steps.alpha, cfg.c, cfg.n_mc, SeedSpec{cfg.master_seed, 0});
    }

    bool all_pass = true;
    for (std::size_t k = 0; k < k_max; ++k) {
        std::vector<double> sample(n);
        for (std::size_t rep = 0; rep < n; ++rep) sample[rep] = topk_store[rep * k_max + k];
        EcdfTable table(std::move(sample));

        KthStat stat;
        stat.k = static_cast<int>(k) + 1;
        stat.ks_crit = ks_crit;
        stat.ks_gated = ks_gated;

        // Padded ranks sit at the mark-space floor (0 for Frechet), where
        // the limit CDF vanishes; guard the curve there since the tail
        // measure itself is defined on the interior only.
        const double floor = tail.mark_floor();
        std::function<double(double)> curve;
        if (es.finite) {
            curve = [&tail, &cfg, floor, kk = stat.k](double x) {
                if (x <= floor) return 0.0;
                return finite_mean_kth_cdf(tail, cfg.c, kk, x);
            };
        } else {
            curve = [&tail, &mixture, floor, kk = stat.k](double x) {
                if (x <= floor) return 0.0;
                return mixture->cdf_stratified(kk, tail.mass(x));
            };
        }

        for (double x : cfg.eval_grid) {
            GridPointStat gp;
            gp.x = x;
            const std::size_t count = table.count_le(x);
            gp.ecdf = static_cast<double>(count) / static_cast<double>(n);
            if (es.finite) {
                gp.analytic = finite_mean_kth_cdf(tail, cfg.c, stat.k, x);
            } else {
                const double m = tail.mass(x);
                const double mc = mixture->cdf(stat.k, m);
                const double mc_se = mixture->cdf_stderr(stat.k, m);
                const double scale = cfg.c == 0.0 ? 0.0 : std::pow(cfg.c, cfg.steps.alpha);
                const double z_arg = -scale * m / subordinator_scale(cfg.steps.alpha);
                if (stat.k == 1 && z_arg >= -10.0) {
                    // Compare against the Mittag-Leffler closed form; keep
                    // the Monte Carlo value as a cross-check.
                    gp.analytic = mittag_leffler(cfg.steps.alpha, z_arg);
                    gp.analytic_mc = mc;
                    gp.analytic_mc_stderr = mc_se;
                    gp.has_mc_cross_check = true;
                } else {
                    gp.analytic = mc;
                    gp.stderr_analytic = mc_se;
                }
            }
            gp.stderr_emp = std::sqrt(gp.ecdf * (1.0 - gp.ecdf) / static_cast<double>(n));
            gp.z = z_score(gp.ecdf, count, n, gp.analytic, gp.stderr_analytic);
            if (std::abs(gp.z) > cfg.z_crit) stat.pass = false;
            stat.grid.push_back(gp);
        }

        stat.ks = ks_distance(table, curve, cfg.eval_grid);
        stat.cvm = cvm_statistic(table, curve);
        if (ks_gated && stat.ks > ks_crit) stat.pass = false;
        all_pass = all_pass && stat.pass;
        report.k_stats.push_back(std::move(stat));
    }

    // Top-2 joint frequencies over all ordered grid pairs (finite mean).
    if (es.finite && k_max >= 2) {
        for (double x2 : cfg.eval_grid) {
            for (double x1 : cfg.eval_grid) {
                if (!(x1 > x2)) continue;
                std::size_t count = 0;
                for (std::size_t rep = 0; rep < n; ++rep) {
                    const double m1 = topk_store[rep * k_max];
                    const double m2 = topk_store[rep * k_max + 1];
                    if (m1 <= x1 && m2 <= x2) ++count;
                }
                PairStat ps;
                ps.x1 = x1;
                ps.x2 = x2;
                ps.empirical = static_cast<double>(count) / static_cast<double>(n);
                ps.analytic = finite_mean_top2_joint(tail, cfg.c, x1, x2);
                ps.stderr_emp =
                    std::sqrt(ps.empirical * (1.0 - ps.empirical) / static_cast<double>(n));
                ps.z = z_score(ps.empirical, count, n, ps.analytic, 0.0);
                ps.pass = std::abs(ps.z) <= cfg.z_crit;
                all_pass = all_pass && ps.pass;
                report.top2.push_back(ps);
            }
        }
    }

    if (n_s > 0) {
        FddStat fs;
        fs.s = cfg.fdd_s;
        fs.x = cfg.fdd_x;
        std::size_t joint = 0;
        std::vector<std::size_t> marg(n_s, 0);
        for (std::size_t rep = 0; rep < n; ++rep) {
            bool all_below = true;
            for (std::size_t j = 0; j < n_s; ++j) {
                const bool below = fdd_store[rep * n_s + j] <= cfg.fdd_x[j];
                if (below) ++marg[j];
                all_below = all_below && below;
            }
            if (all_below) ++joint;
        }
        fs.empirical = static_cast<double>(joint) / static_cast<double>(n);
        fs.marginal_empirical.resize(n_s);
        for (std::size_t j = 0; j < n_s; ++j) {
            fs.marginal_empirical[j] = static_cast<double>(marg[j]) / static_cast<double>(n);
        }

        if (es.finite) {
            fs.analytic = g_extremal_fdd(tail, cfg.fdd_s, cfg.fdd_x);
        } else {
            // Corollary-2 law: average the conditional fdd over simulated
            // hitting-time paths of the subordinator.
            std::vector<double> mass_tail(n_s);
            for (std::size_t j = 0; j < n_s; ++j) {
                double min_x = cfg.fdd_x[j];
                for (std::size_t i = j + 1; i < n_s; ++i) min_x = std::min(min_x, cfg.fdd_x[i]);
                mass_tail[j] = tail.mass(min_x);
            }
            double acc = 0.0;
            double acc2 = 0.0;
            for (std::size_t p = 0; p < cfg.n_w_paths; ++p) {
                const auto wpath = simulate_hitting_time(cfg.steps.alpha, cfg.fdd_s,
                                                         cfg.n_w_increments,
                                                         SeedSpec{cfg.master_seed, p});
                double expo = 0.0;
                double prev_w = 0.0;
                for (std::size_t j = 0; j < n_s; ++j) {
                    expo += (wpath.values[j] - prev_w) * mass_tail[j];
                    prev_w = wpath.values[j];
                }
                const double v = std::exp(-expo);
                acc += v;
                acc2 += v * v;
            }
            const double np = static_cast<double>(cfg.n_w_paths);
            fs.analytic = acc / np;
            fs.stderr_analytic = std::sqrt(std::max(acc2 / np - fs.analytic * fs.analytic, 0.0) / np);
        }
        fs.stderr_emp = std::sqrt(fs.empirical * (1.0 - fs.empirical) / static_cast<double>(n));
        fs.z = z_score(fs.empirical, joint, n, fs.analytic, fs.stderr_analytic);
        fs.pass = std::abs(fs.z) <= cfg.z_crit;
        all_pass = all_pass && fs.pass;
        report.fdd = std::move(fs);
    }

    double tau_acc = 0.0;
    for (double v : tau_store) tau_acc += v;
    report.tau_scaled_mean = tau_acc / static_cast<double>(n);
    double tau_var = 0.0;
    for (double v : tau_store) {
        const double dlt = v - report.tau_scaled_mean;
        tau_var += dlt * dlt;
    }
    report.tau_scaled_se = n > 1 ? std::sqrt(tau_var / static_cast<double>(n - 1) /
                                             static_cast<double>(n))
                                 : 0.0;

    report.pass = all_pass;
    return report;
}

}  // namespace

// ---------------------------------------------------------------------------
// Public runners
// ---------------------------------------------------------------------------

ComparisonReport run_finite_mean(const ExperimentConfig& config) {
    if (config.regime != ExperimentConfig::Regime::FiniteMean) {
        throw std::invalid_argument("run_finite_mean requires the finite-mean regime");
    }
    return run_experiment(config);
}

ComparisonReport run_finite_mean_dependent(const ExperimentConfig& config) {
    ExperimentConfig cfg = config;
    cfg.regime = ExperimentConfig::Regime::FiniteMean;
    cfg.dependent = true;
    return run_experiment(cfg);
}

ComparisonReport run_infinite_mean(const ExperimentConfig& config) {
    if (config.regime != ExperimentConfig::Regime::InfiniteMean) {
        throw std::invalid_argument("run_infinite_mean requires the infinite-mean regime");
    }
    return run_experiment(config);
}

ComparisonReport run_extremal_path_fdd(const ExperimentConfig& config) {
    if (config.fdd_s.empty()) {
        throw std::invalid_argument("run_extremal_path_fdd requires fdd_s/fdd_x");
    }
    return run_experiment(config);
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

std::string ComparisonReport::to_json() const {
    ordered_json j;
    j["schema"] = "renex-report-v1";
    j["regime"] = regime;
    j["config"] = ordered_json::parse(config_json);
    j["z_crit"] = z_crit;
    j["pass"] = pass;
    j["tau_scaled_mean"] = tau_scaled_mean;
    j["tau_scaled_se"] = tau_scaled_se;

    ordered_json ks = ordered_json::array();
    for (const auto& stat : k_stats) {
        ordered_json sj;
        sj["k"] = stat.k;
        sj["ks"] = stat.ks;
        sj["ks_crit"] = stat.ks_crit;
        sj["ks_gated"] = stat.ks_gated;
        sj["cvm"] = stat.cvm;
        sj["pass"] = stat.pass;
        ordered_json grid = ordered_json::array();
        for (const auto& gp : stat.grid) {
            ordered_json gj;
            gj["x"] = gp.x;
            gj["ecdf"] = gp.ecdf;
            gj["analytic"] = gp.analytic;
            gj["stderr"] = gp.stderr_emp;
            gj["stderr_analytic"] = gp.stderr_analytic;
            gj["z"] = gp.z;
            if (gp.has_mc_cross_check) {
                gj["analytic_mc"] = gp.analytic_mc;
                gj["analytic_mc_stderr"] = gp.analytic_mc_stderr;
            }
            grid.push_back(std::move(gj));
        }
        sj["grid"] = std::move(grid);
        ks.push_back(std::move(sj));
    }
    j["k_stats"] = std::move(ks);

    if (!top2.empty()) {
        ordered_json pairs = ordered_json::array();
        for (const auto& ps : top2) {
            pairs.push_back({{"x1", ps.x1},
                             {"x2", ps.x2},
                             {"empirical", ps.empirical},
                             {"analytic", ps.analytic},
                             {"stderr", ps.stderr_emp},
                             {"z", ps.z},
                             {"pass", ps.pass}});
        }
        j["top2"] = std::move(pairs);
    }

    if (fdd.has_value()) {
        ordered_json fj;
        fj["s"] = fdd->s;
        fj["x"] = fdd->x;
        fj["empirical"] = fdd->empirical;
        fj["analytic"] = fdd->analytic;
        fj["stderr"] = fdd->stderr_emp;
        fj["stderr_analytic"] = fdd->stderr_analytic;
        fj["z"] = fdd->z;
        fj["pass"] = fdd->pass;
        fj["marginal_empirical"] = fdd->marginal_empirical;
        j["fdd"] = std::move(fj);
    }

    return j.dump(2);
}

}  // namespace renex
