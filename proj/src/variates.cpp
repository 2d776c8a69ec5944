#include "renex/variates.hpp"

#include <cmath>
#include <stdexcept>

namespace renex {

namespace {
constexpr double pi = 3.14159265358979323846;
}

double ObservationModel::tail(double x) const {
    switch (law) {
        case Law::UnitExponential:
            return x <= 0.0 ? 1.0 : std::exp(-x);
        case Law::StandardNormal:
            return 0.5 * std::erfc(x / std::sqrt(2.0));
        case Law::Pareto:
            return x <= 1.0 ? 1.0 : std::pow(x, -pareto_alpha);
    }
    return 0.0;
}

void ObservationModel::validate() const {
    if (law == Law::Pareto && !(pareto_alpha > 0.0)) {
        throw std::invalid_argument("Pareto observation law requires alpha_x > 0");
    }
}

double StepModel::mean() const {
    switch (law) {
        case Law::Constant:
        case Law::Exponential:
        case Law::Uniform:
            return mu;
        case Law::HeavyPareto:
            throw std::domain_error("heavy Pareto steps with alpha < 1 have infinite mean");
    }
    return mu;
}

double StepModel::tail(double y) const {
    switch (law) {
        case Law::Constant:
            return y < mu ? 1.0 : 0.0;
        case Law::Exponential:
            return y <= 0.0 ? 1.0 : std::exp(-y / mu);
        case Law::Uniform:
            if (y <= 0.0) return 1.0;
            if (y >= 2.0 * mu) return 0.0;
            return 1.0 - y / (2.0 * mu);
        case Law::HeavyPareto:
            return y <= scale ? 1.0 : std::pow(y / scale, -alpha);
    }
    return 0.0;
}

void StepModel::validate() const {
    if (law == Law::HeavyPareto) {
        if (!(alpha > 0.0 && alpha < 1.0)) {
            throw std::invalid_argument("heavy Pareto steps require alpha in (0,1)");
        }
        if (!(scale > 0.0)) {
            throw std::invalid_argument("heavy Pareto steps require scale y0 > 0");
        }
    } else if (!(mu > 0.0) || !std::isfinite(mu)) {
        throw std::invalid_argument("finite-mean steps require mean in (0, inf)");
    }
}

double observation_draw(const ObservationModel& model, Rng& rng) {
    switch (model.law) {
        case ObservationModel::Law::UnitExponential:
            return rng.next_exponential(1.0);
        case ObservationModel::Law::StandardNormal:
            return rng.next_normal();
        case ObservationModel::Law::Pareto:
            return rng.next_pareto(model.pareto_alpha, 1.0);
    }
    return 0.0;
}

double step_draw(const StepModel& model, Rng& rng) {
    switch (model.law) {
        case StepModel::Law::Constant:
            return model.mu;
        case StepModel::Law::Exponential:
            return rng.next_exponential(model.mu);
        case StepModel::Law::Uniform:
            return 2.0 * model.mu * rng.next_unit();
        case StepModel::Law::HeavyPareto:
            return rng.next_pareto(model.alpha, model.scale);
    }
    return 0.0;
}

double stable_draw(double alpha, Rng& rng) {
    // Kanter's representation: with U uniform on (0,pi) and W unit
    // exponential,
    //   S = sin(a U) sin((1-a) U)^{(1-a)/a} / (sin(U)^{1/a} W^{(1-a)/a})
    // has Laplace transform exp(-lambda^a). Evaluated in log space.
    const double theta = pi * rng.next_unit();
    const double w = rng.next_exponential(1.0);
    const double r = (1.0 - alpha) / alpha;
    const double log_s = std::log(std::sin(alpha * theta)) +
                         r * (std::log(std::sin((1.0 - alpha) * theta)) - std::log(w)) -
                         std::log(std::sin(theta)) / alpha;
    return std::exp(log_s);
}

std::vector<double> sample_observations(const ObservationModel& model, std::size_t n,
                                        const SeedSpec& seed) {
    model.validate();
    Rng rng = Rng::for_stream(seed, stream_tag::observations);
    std::vector<double> out(n);
    for (auto& v : out) v = observation_draw(model, rng);
    return out;
}

std::vector<double> sample_steps(const StepModel& model, std::size_t n, const SeedSpec& seed) {
    model.validate();
    Rng rng = Rng::for_stream(seed, stream_tag::steps);
    std::vector<double> out(n);
    for (auto& v : out) v = step_draw(model, rng);
    return out;
}

std::vector<double> sample_one_sided_stable(double alpha, std::size_t n, const SeedSpec& seed) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw std::invalid_argument("stable index alpha must lie in (0,1)");
    }
    Rng rng = Rng::for_stream(seed, stream_tag::stable);
    std::vector<double> out(n);
    for (auto& v : out) v = stable_draw(alpha, rng);
    return out;
}

}  // namespace renex
