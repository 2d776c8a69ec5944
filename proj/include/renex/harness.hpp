#ifndef RENEX_HARNESS_HPP
#define RENEX_HARNESS_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "renex/limitlaws.hpp"
#include "renex/variates.hpp"

namespace renex {

/// One Monte Carlo experiment: simulate the renewal-indexed order
/// statistics at horizon t, compare their empirical distribution with the
/// corresponding limit law.
struct ExperimentConfig {
    enum class Regime { FiniteMean, InfiniteMean };

    Regime regime = Regime::FiniteMean;
    ObservationModel obs = ObservationModel::unit_exponential();
    StepModel steps = StepModel::exponential(1.0);
    /// Couples the steps to the observations as Y_i = 1 + min(X_i, 10)
    /// (finite-mean regime only; with Constant steps the coupling is
    /// vacuous and the run is identical to the independent one).
    bool dependent = false;

    double t = 1e4;
    double c = 1.0;
    int k_max = 1;
    std::size_t n_reps = 10000;
    std::uint64_t master_seed = 7;
    std::vector<double> eval_grid;

    /// Optional extremal-process fdd comparison at 1..3 path times.
    std::vector<double> fdd_s;
    std::vector<double> fdd_x;

    /// W(1) draws behind the infinite-mean mixture laws.
    std::size_t n_mc = 1000000;
    /// Subordinator paths / grid increments for the infinite-mean fdd law.
    std::size_t n_w_paths = 20000;
    std::size_t n_w_increments = 20000;

    double z_crit = 4.0;
    /// 0 = auto: 1.95/sqrt(n_reps) for closed-form (finite-mean) laws,
    /// ungated (1.0) for Monte Carlo mixture laws.
    double ks_crit = 0.0;
    int threads = 1;

    /// Test hook: execute replications in this order (a permutation of
    /// 0..n_reps-1). Statistics must not depend on it.
    std::vector<std::uint32_t> exec_order;

    double step_mean() const;  // resolved mean, incl. the coupled transform
    double resolved_ks_crit() const;
    void validate() const;
};

/// Sorted Monte Carlo sample with exact evaluation F(x) = #{v <= x} / n.
class EcdfTable {
public:
    explicit EcdfTable(std::vector<double> sample);

    double operator()(double x) const;
    std::size_t count_le(double x) const;
    std::size_t size() const { return sorted_.size(); }
    std::span<const double> sorted() const { return sorted_; }

private:
    std::vector<double> sorted_;
};

/// Two-sided, jump-aware sup |F_hat - F| over the sample points plus any
/// extra grid points. Throws std::invalid_argument on an empty sample.
double ks_distance(const EcdfTable& ecdf, const std::function<double(double)>& cdf,
                   std::span<const double> grid = {});

/// Cramer-von Mises statistic 1/(12n) + sum (F(x_(i)) - (2i-1)/(2n))^2.
double cvm_statistic(const EcdfTable& ecdf, const std::function<double(double)>& cdf);

/// sup |F_a - F_b| between two empirical distributions.
double ks_two_sample(const EcdfTable& a, const EcdfTable& b);

struct GridPointStat {
    double x = 0.0;
    double ecdf = 0.0;
    double analytic = 0.0;
    double stderr_emp = 0.0;       // sqrt(p_hat (1-p_hat) / n)
    double stderr_analytic = 0.0;  // Monte Carlo error of the limit value
    double z = 0.0;
    // Monte Carlo cross-check of the analytic value (k = 1, infinite mean).
    double analytic_mc = 0.0;
    double analytic_mc_stderr = 0.0;
    bool has_mc_cross_check = false;
};

struct KthStat {
    int k = 1;
    std::vector<GridPointStat> grid;
    double ks = 0.0;
    double ks_crit = 0.0;
    bool ks_gated = false;
    double cvm = 0.0;
    bool pass = true;
};

struct PairStat {
    double x1 = 0.0;
    double x2 = 0.0;
    double empirical = 0.0;
    double analytic = 0.0;
    double stderr_emp = 0.0;
    double z = 0.0;
    bool pass = true;
};

struct FddStat {
    std::vector<double> s;
    std::vector<double> x;
    double empirical = 0.0;
    double analytic = 0.0;
    double stderr_emp = 0.0;
    double stderr_analytic = 0.0;
    double z = 0.0;
    bool pass = true;
    std::vector<double> marginal_empirical;  // per path time, P(xi(s_j) <= x_j)
};

/// Full comparison between simulation and limit law. Serialization is
/// deterministic: identical configs (including master_seed) produce
/// byte-identical JSON, whatever the execution order or thread count.
struct ComparisonReport {
    std::string regime;
    std::vector<KthStat> k_stats;
    std::vector<PairStat> top2;
    std::optional<FddStat> fdd;
    /// Scaled passage time over replications: mean and standard error of
    /// mu tau(tc)/t (finite mean) or tau(tc)/d_tilde(t) (infinite mean).
    double tau_scaled_mean = 0.0;
    double tau_scaled_se = 0.0;
    double z_crit = 4.0;
    bool pass = true;
    std::string config_json;  // echo of the resolved configuration

    std::string to_json() const;
};

ComparisonReport run_finite_mean(const ExperimentConfig& config);
ComparisonReport run_finite_mean_dependent(const ExperimentConfig& config);
ComparisonReport run_infinite_mean(const ExperimentConfig& config);
ComparisonReport run_extremal_path_fdd(const ExperimentConfig& config);

}  // namespace renex

#endif
