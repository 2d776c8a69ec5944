#include "renex/limitlaws.hpp"

#include <algorithm>
#include <cmath>

#include "renex/renewal.hpp"

namespace renex {

TailMeasure TailMeasure::frechet(double alpha_x) {
    if (!(alpha_x > 0.0)) {
        throw std::invalid_argument("Frechet tail measure requires alpha_x > 0");
    }
    return TailMeasure(MdaFamily::Frechet, alpha_x);
}

TailMeasure TailMeasure::for_model(const ObservationModel& model) {
    model.validate();
    return model.family() == MdaFamily::Gumbel ? gumbel() : frechet(model.pareto_alpha);
}

double TailMeasure::mass(double x) const {
    if (family_ == MdaFamily::Gumbel) {
        return std::exp(-x);  // 0 at x = +inf
    }
    if (!(x > 0.0)) {
        throw std::domain_error("Frechet tail measure is defined for x > 0 only");
    }
    return std::pow(x, -alpha_x_);
}

double TailMeasure::cdf(double x) const {
    if (family_ == MdaFamily::Gumbel) return std::exp(-std::exp(-x));
    if (x <= 0.0) return 0.0;
    return std::exp(-std::pow(x, -alpha_x_));
}

double TailMeasure::mark_floor() const {
    return family_ == MdaFamily::Gumbel ? -std::numeric_limits<double>::infinity() : 0.0;
}

double TailMeasure::draw_above(double floor, Rng& rng) const {
    if (family_ == MdaFamily::Gumbel) {
        if (!std::isfinite(floor)) {
            throw std::invalid_argument("Gumbel marks need a finite lower level");
        }
        return floor + rng.next_exponential(1.0);
    }
    if (!(floor > 0.0)) {
        throw std::invalid_argument("Frechet marks need a lower level > 0");
    }
    return rng.next_pareto(alpha_x_, floor);
}

void LimitSpec::validate() const {
    if (k < 1) throw std::invalid_argument("order-statistic rank k must be >= 1");
    if (!(c >= 0.0)) throw std::invalid_argument("window multiplier c must be >= 0");
    if (regime == Regime::InfiniteMean && !(alpha > 0.0 && alpha < 1.0)) {
        throw std::invalid_argument("infinite-mean limit requires alpha in (0,1)");
    }
}

double reg_inc_gamma_q(int k, double x) {
    if (k < 1) throw std::invalid_argument("Q(k, x) requires integer k >= 1");
    if (!(x >= 0.0)) throw std::domain_error("Q(k, x) requires x >= 0");
    if (std::isinf(x)) return 0.0;
    // Poisson sum P(Poisson(x) <= k-1); exact for integer ranks.
    double term = std::exp(-x);
    double sum = term;
    for (int j = 1; j < k; ++j) {
        term *= x / static_cast<double>(j);
        sum += term;
    }
    return std::min(sum, 1.0);
}

double mittag_leffler(double alpha, double z) {
    if (!(alpha > 0.0 && alpha <= 1.0)) {
        throw std::domain_error("Mittag-Leffler branch implemented for alpha in (0,1]");
    }
    if (!(z <= 0.0 && z >= -10.0)) {
        throw std::domain_error("Mittag-Leffler branch implemented for z in [-10, 0]");
    }
    if (z == 0.0) return 1.0;

    // Alternating series in log space; terms are unimodal in n, so one
    // sufficiently small term bounds the remainder.
    const double log_abs_z = std::log(-z);
    double sum = 1.0;
    double comp = 0.0;  // Kahan compensation
    for (int n = 1; n <= 200; ++n) {
        double term = std::exp(static_cast<double>(n) * log_abs_z -
                               std::lgamma(1.0 + alpha * static_cast<double>(n)));
        if (n & 1) term = -term;
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        if (std::abs(term) <= 1e-16 * std::max(std::abs(sum), 1e-30)) {
            return sum;
        }
    }
    throw nonconvergence_error("Mittag-Leffler series did not converge within 200 terms");
}

double finite_mean_kth_cdf(const TailMeasure& tail, double c, int k, double x) {
    if (!(c >= 0.0)) throw std::invalid_argument("window multiplier c must be >= 0");
    return reg_inc_gamma_q(k, c * tail.mass(x));
}

double finite_mean_kth_cdf(const LimitSpec& spec, double x) {
    spec.validate();
    if (spec.regime != LimitSpec::Regime::FiniteMean) {
        throw std::invalid_argument("finite_mean_kth_cdf requires the finite-mean regime");
    }
    return finite_mean_kth_cdf(spec.tail, spec.c, spec.k, x);
}

double finite_mean_top2_joint(const TailMeasure& tail, double c, double x1, double x2) {
    if (!(c >= 0.0)) throw std::invalid_argument("window multiplier c must be >= 0");
    if (!(x1 > x2)) throw std::invalid_argument("top-2 joint law requires x1 > x2");
    const double m1 = tail.mass(x1);
    const double m2 = tail.mass(x2);
    return std::exp(-c * m2) * (1.0 + c * (m2 - m1));
}

HittingTimeMixture::HittingTimeMixture(double alpha, double c, std::size_t n_mc,
                                       const SeedSpec& seed)
    : alpha_(alpha), c_(c) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw std::invalid_argument("mixture index alpha must lie in (0,1)");
    }
    if (!(c >= 0.0)) throw std::invalid_argument("window multiplier c must be >= 0");
    if (n_mc == 0) throw std::invalid_argument("mixture needs at least one draw");

    // W(c) = c^alpha W(1) by self-similarity of the subordinator.
    const double scale = c == 0.0 ? 0.0 : std::pow(c, alpha);
    Rng rng = Rng::for_stream(seed, stream_tag::mixture);
    sample_.resize(n_mc);
    for (auto& w : sample_) w = scale * exact_w1_draw(alpha, rng);
    std::sort(sample_.begin(), sample_.end());

    const std::size_t n_strata = std::min<std::size_t>(1024, n_mc);
    strata_.resize(n_strata);
    for (std::size_t si = 0; si < n_strata; ++si) {
        const std::size_t lo = si * n_mc / n_strata;
        const std::size_t hi = (si + 1) * n_mc / n_strata;
        double acc = 0.0;
        for (std::size_t i = lo; i < hi; ++i) acc += sample_[i];
        strata_[si] = acc / static_cast<double>(hi - lo);
    }
}

double HittingTimeMixture::cdf(int k, double mass) const {
    double acc = 0.0;
    for (double w : sample_) acc += reg_inc_gamma_q(k, w * mass);
    return acc / static_cast<double>(sample_.size());
}

double HittingTimeMixture::cdf_stderr(int k, double mass) const {
    double acc = 0.0;
    double acc2 = 0.0;
    for (double w : sample_) {
        const double q = reg_inc_gamma_q(k, w * mass);
        acc += q;
        acc2 += q * q;
    }
    const double n = static_cast<double>(sample_.size());
    const double mean = acc / n;
    const double var = std::max(acc2 / n - mean * mean, 0.0);
    return std::sqrt(var / n);
}

double HittingTimeMixture::cdf_stratified(int k, double mass) const {
    double acc = 0.0;
    for (double w : strata_) acc += reg_inc_gamma_q(k, w * mass);
    return acc / static_cast<double>(strata_.size());
}

double HittingTimeMixture::series_k1(double mass) const {
    const double scale = c_ == 0.0 ? 0.0 : std::pow(c_, alpha_);
    return mittag_leffler(alpha_, -scale * mass / subordinator_scale(alpha_));
}

MixedCdfValue infinite_mean_kth_cdf(const TailMeasure& tail, double alpha, double c, int k,
                                    double x, std::size_t n_mc, const SeedSpec& seed) {
    if (k < 1) throw std::invalid_argument("order-statistic rank k must be >= 1");
    const double m = tail.mass(x);
    HittingTimeMixture mixture(alpha, c, n_mc, seed);
    MixedCdfValue out;
    out.mc = mixture.cdf(k, m);
    out.mc_stderr = mixture.cdf_stderr(k, m);
    if (k == 1) {
        const double scale = c == 0.0 ? 0.0 : std::pow(c, alpha);
        const double z = -scale * m / subordinator_scale(alpha);
        if (z >= -10.0) {
            out.series = mittag_leffler(alpha, z);
            out.has_series = true;
        }
    }
    return out;
}

MixedCdfValue infinite_mean_kth_cdf(const LimitSpec& spec, double x, std::size_t n_mc,
                                    const SeedSpec& seed) {
    spec.validate();
    if (spec.regime != LimitSpec::Regime::InfiniteMean) {
        throw std::invalid_argument("infinite_mean_kth_cdf requires the infinite-mean regime");
    }
    return infinite_mean_kth_cdf(spec.tail, spec.alpha, spec.c, spec.k, x, n_mc, seed);
}

double g_extremal_fdd(const TailMeasure& tail, std::span<const double> s,
                      std::span<const double> x) {
    if (s.empty() || s.size() != x.size()) {
        throw std::invalid_argument("fdd needs matching nonempty time and mark grids");
    }
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (!(s[i] > 0.0) || (i > 0 && !(s[i] > s[i - 1]))) {
            throw std::invalid_argument("fdd times must be strictly increasing and positive");
        }
    }
    double result = 1.0;
    double prev_s = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        double min_x = x[i];
        for (std::size_t j = i + 1; j < x.size(); ++j) min_x = std::min(min_x, x[j]);
        result *= std::pow(tail.cdf(min_x), s[i] - prev_s);
        prev_s = s[i];
    }
    return result;
}

MarkedPointSet sample_prm_restriction(const TailMeasure& tail, double c, double x_floor,
                                      const SeedSpec& seed) {
    if (!(c >= 0.0)) throw std::invalid_argument("window endpoint c must be >= 0");
    const double mean_count = c * tail.mass(x_floor);
    if (!std::isfinite(mean_count)) {
        throw std::invalid_argument("window mass must be finite to sample the restriction");
    }

    Rng rng = Rng::for_stream(seed, stream_tag::prm);

    // Poisson count as the number of unit-exponential arrivals in
    // [0, mean_count]; exact for any mean.
    std::size_t count = 0;
    double arrival = rng.next_exponential(1.0);
    while (arrival <= mean_count) {
        ++count;
        arrival += rng.next_exponential(1.0);
    }

    MarkedPointSet set;
    set.floor = tail.mark_floor();
    set.points.resize(count);
    for (auto& p : set.points) p.time = c * rng.next_unit();
    std::sort(set.points.begin(), set.points.end(),
              [](const MarkedPoint& a, const MarkedPoint& b) { return a.time < b.time; });
    for (auto& p : set.points) p.mark = tail.draw_above(x_floor, rng);
    return set;
}

}  // namespace renex
