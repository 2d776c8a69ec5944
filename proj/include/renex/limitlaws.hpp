#ifndef RENEX_LIMITLAWS_HPP
#define RENEX_LIMITLAWS_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "renex/extremes.hpp"
#include "renex/variates.hpp"

namespace renex {

/// Raised when a series evaluation fails to converge within its term cap.
class nonconvergence_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Tail measure of the limiting point process on the mark space:
/// mass(x) = e^{-x} (Gumbel, marks in (-inf, inf]) or
/// mass(x) = x^{-alpha_x} (Frechet, marks in (0, inf]).
class TailMeasure {
public:
    static TailMeasure gumbel() { return TailMeasure(MdaFamily::Gumbel, 0.0); }
    static TailMeasure frechet(double alpha_x);
    static TailMeasure for_model(const ObservationModel& model);

    MdaFamily family() const { return family_; }
    double alpha_x() const { return alpha_x_; }

    /// mu_G(x, inf]; 0 at the top of the mark space. Throws
    /// std::domain_error for Frechet with x <= 0.
    double mass(double x) const;

    /// G(x) = exp(-mass(x)); 0 below the Frechet support.
    double cdf(double x) const;

    double mark_floor() const;

    /// Inverse transform of the tail measure normalized above `floor`:
    /// a draw with P(mark > y) = mass(y)/mass(floor) for y >= floor.
    double draw_above(double floor, Rng& rng) const;

private:
    TailMeasure(MdaFamily family, double alpha_x) : family_(family), alpha_x_(alpha_x) {}

    MdaFamily family_;
    double alpha_x_;
};

/// Selects one limiting order-statistic law.
struct LimitSpec {
    enum class Regime { FiniteMean, InfiniteMean };

    Regime regime = Regime::FiniteMean;
    TailMeasure tail = TailMeasure::gumbel();
    int k = 1;
    double c = 1.0;      // window endpoint multiplier
    double alpha = 0.5;  // step index, InfiniteMean only

    void validate() const;
};

/// Regularized upper incomplete gamma Q(k, x) = Gamma(k, x)/Gamma(k)
/// = P(Poisson(x) <= k-1), computed by the exact Poisson sum for
/// integer k >= 1.
double reg_inc_gamma_q(int k, double x);

/// Mittag-Leffler function E_alpha(z) = sum z^n / Gamma(1 + n alpha) on the
/// completely monotone branch. Implemented for alpha in (0,1] and
/// z in [-10, 0] only (200-term cap, early termination at relative term
/// size 1e-16); arguments outside that range are an error, and failure to
/// converge under the cap raises nonconvergence_error.
double mittag_leffler(double alpha, double z);

/// P(at most k-1 points of the limit process in [0,c] x (x, inf])
/// = Q(k, c * mass(x)).
double finite_mean_kth_cdf(const TailMeasure& tail, double c, int k, double x);
double finite_mean_kth_cdf(const LimitSpec& spec, double x);

/// Limiting joint law of the top two order statistics, x1 > x2:
/// exp(-c m2) (1 + c (m2 - m1)) with mi = mass(xi).
double finite_mean_top2_joint(const TailMeasure& tail, double c, double x1, double x2);

/// Fixed sample of hitting times W(c) = c^alpha W(1), drawn once from the
/// exact W(1) sampler and reused to evaluate mixture curves
/// E[Q(k, W(c) m)] deterministically.
class HittingTimeMixture {
public:
    HittingTimeMixture(double alpha, double c, std::size_t n_mc, const SeedSpec& seed);

    /// Full-sample Monte Carlo average of Q(k, W m).
    double cdf(int k, double mass) const;
    /// Standard error of cdf(k, mass) over the fixed sample.
    double cdf_stderr(int k, double mass) const;
    /// Same expectation evaluated through a 1024-point stratification of
    /// the sorted sample; deterministic and cheap enough for per-sample
    /// KS/CvM curves.
    double cdf_stratified(int k, double mass) const;
    /// Closed form for k = 1: E[e^{-W m}] = E_alpha(-c^alpha m / Gamma(1-alpha)).
    double series_k1(double mass) const;

    double alpha() const { return alpha_; }
    std::size_t size() const { return sample_.size(); }

private:
    double alpha_;
    double c_;
    std::vector<double> sample_;
    std::vector<double> strata_;
};

/// Theorem-2 order-statistic limit: Monte Carlo value of
/// E[Q(k, W(c) mass(x))] plus, for k = 1, the Mittag-Leffler closed form
/// for cross-validation.
struct MixedCdfValue {
    double mc = 0.0;
    double mc_stderr = 0.0;
    double series = 0.0;
    bool has_series = false;
};

MixedCdfValue infinite_mean_kth_cdf(const TailMeasure& tail, double alpha, double c, int k,
                                    double x, std::size_t n_mc, const SeedSpec& seed);
MixedCdfValue infinite_mean_kth_cdf(const LimitSpec& spec, double x, std::size_t n_mc,
                                    const SeedSpec& seed);

/// Finite-dimensional distribution of the G-extremal process:
/// G^{s_1}(min x_1..x_k) G^{s_2-s_1}(min x_2..x_k) ... G^{s_k-s_{k-1}}(x_k).
double g_extremal_fdd(const TailMeasure& tail, std::span<const double> s,
                      std::span<const double> x);

/// Direct simulation oracle for the limit process restricted to
/// [0,c] x (x_floor, inf]: Poisson(c * mass(x_floor)) points, times iid
/// uniform on [0,c] (sorted), marks iid from the normalized tail.
MarkedPointSet sample_prm_restriction(const TailMeasure& tail, double c, double x_floor,
                                      const SeedSpec& seed);

}  // namespace renex

#endif
