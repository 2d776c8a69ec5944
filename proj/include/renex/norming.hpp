#ifndef RENEX_NORMING_HPP
#define RENEX_NORMING_HPP

#include <limits>
#include <span>

#include "renex/variates.hpp"

namespace renex {

/// Centering/scaling pair (a, b) for one observation law, chosen so that
/// t * P(X > a(t) x + b(t)) -> -log G(x) with G the Gumbel or Frechet law.
/// For the exponential and Pareto laws the relation is exact for large
/// enough t; for the standard normal the classical norming converges at
/// rate O(1/log t).
class NormingConstants {
public:
    explicit NormingConstants(ObservationModel model);

    double a(double t) const;
    double b(double t) const;
    MdaFamily family() const { return model_.family(); }
    const ObservationModel& model() const { return model_; }

private:
    ObservationModel model_;
};

NormingConstants norming_for(const ObservationModel& model);

/// Step-side norming for Pareto steps, where the defining relations solve
/// exactly: d(t) = y0 t^{1/alpha} satisfies t (1 - F_Y(d(t))) = 1 and
/// d_tilde(t) = (t/y0)^alpha is its exact inverse.
class StepNorming {
public:
    StepNorming(double alpha, double y0);

    double d(double t) const;
    double d_tilde(double t) const;
    double alpha() const { return alpha_; }
    double y0() const { return y0_; }

private:
    double alpha_;
    double y0_;
};

/// Throws std::invalid_argument unless the model is HeavyPareto.
StepNorming step_norming_for(const StepModel& model);

/// Sentinel returned when the level is never exceeded on the grid.
inline constexpr double never_exceeds = std::numeric_limits<double>::infinity();

/// Right-continuous generalized inverse inf{ s in grid : z(s) > u } of a
/// nondecreasing path sampled on a grid (piecewise-constant cadlag
/// interpretation). Rejects non-monotone input.
double generalized_inverse(std::span<const double> s, std::span<const double> z, double u);

}  // namespace renex

#endif
