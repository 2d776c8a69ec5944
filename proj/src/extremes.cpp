#include "renex/extremes.hpp"

#include <algorithm>
#include <stdexcept>

namespace renex {

MarkedPointSet build_point_set(std::span<const double> observations,
                               const NormingConstants& norming, double g_of_t,
                               std::size_t n_points) {
    if (!(g_of_t > 0.0)) throw std::domain_error("point set requires g(t) > 0");
    if (n_points > observations.size()) {
        throw std::invalid_argument("point set requires n_points observations");
    }
    const double a = norming.a(g_of_t);
    const double b = norming.b(g_of_t);
    if (!(a > 0.0)) throw std::domain_error("point set requires a(g(t)) > 0");

    MarkedPointSet set;
    set.floor = norming.family() == MdaFamily::Gumbel
                    ? -std::numeric_limits<double>::infinity()
                    : 0.0;
    set.points.resize(n_points);
    const double inv_g = 1.0 / g_of_t;
    const double inv_a = 1.0 / a;
    for (std::size_t i = 0; i < n_points; ++i) {
        set.points[i].time = static_cast<double>(i + 1) * inv_g;
        set.points[i].mark = (observations[i] - b) * inv_a;
    }
    return set;
}

MarkedPointSet restrict_window(const MarkedPointSet& points, double z) {
    if (z < 0.0) throw std::invalid_argument("window endpoint must be >= 0");
    MarkedPointSet out;
    out.floor = points.floor;
    // Times are increasing, so the closed window [0, z] is a prefix.
    auto it = std::upper_bound(points.points.begin(), points.points.end(), z,
                               [](double v, const MarkedPoint& p) { return v < p.time; });
    out.points.assign(points.points.begin(), it);
    return out;
}

OrderStats top_k(const MarkedPointSet& points, std::size_t K) {
    if (K < 1) throw std::invalid_argument("top_k requires K >= 1");
    OrderStats stats;
    stats.k_available = std::min(K, points.points.size());
    if (stats.k_available == 0) return stats;

    stats.values.reserve(stats.k_available);
    if (K <= 4) {
        // Small ranks dominate usage; a single scan avoids the copy.
        for (const auto& p : points.points) {
            auto pos = std::upper_bound(stats.values.begin(), stats.values.end(), p.mark,
                                        [](double v, double m) { return v > m; });
            if (stats.values.size() < K) {
                stats.values.insert(pos, p.mark);
            } else if (pos != stats.values.end()) {
                stats.values.insert(pos, p.mark);
                stats.values.pop_back();
            }
        }
        return stats;
    }

    std::vector<double> marks(points.points.size());
    for (std::size_t i = 0; i < marks.size(); ++i) marks[i] = points.points[i].mark;
    std::nth_element(marks.begin(), marks.begin() + (stats.k_available - 1), marks.end(),
                     std::greater<>());
    std::sort(marks.begin(), marks.begin() + stats.k_available, std::greater<>());
    stats.values.assign(marks.begin(), marks.begin() + stats.k_available);
    return stats;
}

double ExtremalPath::at(double s) const {
    auto it = std::upper_bound(times.begin(), times.end(), s);
    if (it == times.begin()) return floor;
    return values[static_cast<std::size_t>(it - times.begin()) - 1];
}

ExtremalPath t1_path(const MarkedPointSet& points) {
    ExtremalPath path;
    path.floor = points.floor;
    path.times.reserve(points.points.size());
    path.values.reserve(points.points.size());
    double running = points.floor;
    for (const auto& p : points.points) {
        running = std::max(running, p.mark);
        path.times.push_back(p.time);
        path.values.push_back(running);
    }
    return path;
}

}  // namespace renex
