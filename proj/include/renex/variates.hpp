#ifndef RENEX_VARIATES_HPP
#define RENEX_VARIATES_HPP

#include <cstdint>
#include <vector>

#include "renex/rng.hpp"

namespace renex {

enum class MdaFamily { Gumbel, Frechet };

/// Law of the observations X together with its extreme-value family.
/// Pareto uses unit scale: P(X > x) = x^{-alpha_x} for x >= 1.
struct ObservationModel {
    enum class Law { UnitExponential, StandardNormal, Pareto };

    Law law = Law::UnitExponential;
    double pareto_alpha = 1.0;

    static ObservationModel unit_exponential() { return {Law::UnitExponential, 0.0}; }
    static ObservationModel standard_normal() { return {Law::StandardNormal, 0.0}; }
    static ObservationModel pareto(double alpha_x) { return {Law::Pareto, alpha_x}; }

    MdaFamily family() const {
        return law == Law::Pareto ? MdaFamily::Frechet : MdaFamily::Gumbel;
    }

    /// P(X > x), closed form.
    double tail(double x) const;
    void validate() const;
};

/// Law of the renewal steps Y. Finite-mean laws are parameterized by their
/// mean; HeavyPareto has P(Y > y) = (y/scale)^{-alpha} for y >= scale with
/// alpha in (0,1), hence infinite mean.
struct StepModel {
    enum class Law { Constant, Exponential, Uniform, HeavyPareto };

    Law law = Law::Constant;
    double mu = 1.0;
    double alpha = 0.5;
    double scale = 1.0;

    static StepModel constant(double mu) { return {Law::Constant, mu, 0.0, 0.0}; }
    static StepModel exponential(double mu) { return {Law::Exponential, mu, 0.0, 0.0}; }
    static StepModel uniform(double mu) { return {Law::Uniform, mu, 0.0, 0.0}; }
    static StepModel heavy_pareto(double alpha, double y0 = 1.0) {
        return {Law::HeavyPareto, 0.0, alpha, y0};
    }

    bool finite_mean() const { return law != Law::HeavyPareto; }
    /// E[Y]; throws std::domain_error for HeavyPareto.
    double mean() const;
    /// P(Y > y), closed form.
    double tail(double y) const;
    void validate() const;
};

/// Fixed tags separating the independent variate streams of one replication.
namespace stream_tag {
inline constexpr std::uint64_t observations = 1;
inline constexpr std::uint64_t steps = 2;
inline constexpr std::uint64_t stable = 3;
inline constexpr std::uint64_t prm = 4;
inline constexpr std::uint64_t hitting = 5;
inline constexpr std::uint64_t mixture = 6;
}  // namespace stream_tag

double observation_draw(const ObservationModel& model, Rng& rng);
double step_draw(const StepModel& model, Rng& rng);

/// One positive stable draw S with E[exp(-lambda S)] = exp(-lambda^alpha),
/// via Kanter's rejection-free representation. Requires alpha in (0,1).
double stable_draw(double alpha, Rng& rng);

std::vector<double> sample_observations(const ObservationModel& model, std::size_t n,
                                        const SeedSpec& seed);
std::vector<double> sample_steps(const StepModel& model, std::size_t n, const SeedSpec& seed);
std::vector<double> sample_one_sided_stable(double alpha, std::size_t n, const SeedSpec& seed);

}  // namespace renex

#endif
