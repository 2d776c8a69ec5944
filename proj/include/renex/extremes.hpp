#ifndef RENEX_EXTREMES_HPP
#define RENEX_EXTREMES_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "renex/norming.hpp"

namespace renex {

struct MarkedPoint {
    double time;
    double mark;
};

/// Finite realization of the scaled/centered point process: points
/// (i / g(t), (X_i - b(g)) / a(g)) with strictly increasing times.
/// `floor` is the mark-space lower boundary, -inf for Gumbel marks and
/// 0 for Frechet marks; it is the value of an empty supremum.
struct MarkedPointSet {
    std::vector<MarkedPoint> points;
    double floor = -std::numeric_limits<double>::infinity();
};

/// Builds the first n_points points with norming evaluated at g_of_t.
/// Throws std::domain_error if a(g_of_t) <= 0.
MarkedPointSet build_point_set(std::span<const double> observations,
                               const NormingConstants& norming, double g_of_t,
                               std::size_t n_points);

/// Keeps exactly the points with time <= z (closed window [0, z]).
MarkedPointSet restrict_window(const MarkedPointSet& points, double z);

/// Top-K marks in decreasing order; ties kept by multiplicity.
struct OrderStats {
    std::vector<double> values;
    std::size_t k_available = 0;
};

OrderStats top_k(const MarkedPointSet& points, std::size_t K);

/// Cadlag running-maximum path; value at s is the max over marks with
/// time <= s, or `floor` when no point has arrived yet.
struct ExtremalPath {
    std::vector<double> times;
    std::vector<double> values;
    double floor = -std::numeric_limits<double>::infinity();

    double at(double s) const;
};

ExtremalPath t1_path(const MarkedPointSet& points);

}  // namespace renex

#endif
