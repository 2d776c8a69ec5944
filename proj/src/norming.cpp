#include "renex/norming.hpp"

#include <cmath>
#include <stdexcept>

namespace renex {

namespace {
constexpr double log_4pi = 2.5310242469692907930;  // log(4 pi)
}

NormingConstants::NormingConstants(ObservationModel model) : model_(model) {
    model_.validate();
}

double NormingConstants::a(double t) const {
    if (!(t > 0.0)) throw std::domain_error("norming requires t > 0");
    switch (model_.law) {
        case ObservationModel::Law::UnitExponential:
            return 1.0;
        case ObservationModel::Law::StandardNormal:
            return 1.0 / std::sqrt(2.0 * std::log(t));
        case ObservationModel::Law::Pareto:
            return std::pow(t, 1.0 / model_.pareto_alpha);
    }
    return 1.0;
}

double NormingConstants::b(double t) const {
    if (!(t > 0.0)) throw std::domain_error("norming requires t > 0");
    switch (model_.law) {
        case ObservationModel::Law::UnitExponential:
            return std::log(t);
        case ObservationModel::Law::StandardNormal: {
            // Classical Gumbel norming; convergence is O(1/log t).
            const double two_log_t = 2.0 * std::log(t);
            const double root = std::sqrt(two_log_t);
            return root - (std::log(std::log(t)) + log_4pi) / (2.0 * root);
        }
        case ObservationModel::Law::Pareto:
            return 0.0;
    }
    return 0.0;
}

NormingConstants norming_for(const ObservationModel& model) {
    return NormingConstants(model);
}

StepNorming::StepNorming(double alpha, double y0) : alpha_(alpha), y0_(y0) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw std::invalid_argument("step norming requires alpha in (0,1)");
    }
    if (!(y0 > 0.0)) {
        throw std::invalid_argument("step norming requires y0 > 0");
    }
}

double StepNorming::d(double t) const { return y0_ * std::pow(t, 1.0 / alpha_); }

double StepNorming::d_tilde(double t) const { return std::pow(t / y0_, alpha_); }

StepNorming step_norming_for(const StepModel& model) {
    if (model.law != StepModel::Law::HeavyPareto) {
        throw std::invalid_argument("step norming is defined only for heavy Pareto steps");
    }
    model.validate();
    return StepNorming(model.alpha, model.scale);
}

double generalized_inverse(std::span<const double> s, std::span<const double> z, double u) {
    if (s.size() != z.size() || s.empty()) {
        throw std::invalid_argument("generalized inverse requires matching nonempty grids");
    }
    for (std::size_t i = 1; i < z.size(); ++i) {
        if (z[i] < z[i - 1]) {
            throw std::invalid_argument("generalized inverse requires a nondecreasing path");
        }
    }
    // First grid point with z > u; the path is piecewise constant between
    // grid points, so this is exactly inf{ s : z(s) > u } on the grid.
    for (std::size_t i = 0; i < z.size(); ++i) {
        if (z[i] > u) return s[i];
    }
    return never_exceeds;
}

}  // namespace renex
