#include "renex/renewal.hpp"

#include <algorithm>
#include <cmath>

namespace renex {

RenewalPath RenewalPath::from_steps(std::span<const double> ys) {
    RenewalPath path;
    path.steps.reserve(ys.size());
    path.cumsum.reserve(ys.size());
    for (double y : ys) path.append(y);
    return path;
}

std::size_t passage_time(const RenewalPath& path, double t) {
    auto it = std::upper_bound(path.cumsum.begin(), path.cumsum.end(), t);
    if (it == path.cumsum.end()) {
        throw path_exhausted_error("renewal path never exceeds the requested time");
    }
    return static_cast<std::size_t>(it - path.cumsum.begin()) + 1;
}

double scaled_passage_finite(const RenewalPath& path, double t, double c, double mu) {
    return mu * static_cast<double>(passage_time(path, t * c)) / t;
}

double scaled_passage_infinite(const RenewalPath& path, double t, double c,
                               const StepNorming& norming) {
    return static_cast<double>(passage_time(path, t * c)) / norming.d_tilde(t);
}

void extend_until(RenewalPath& path, double horizon, const StepModel& model, Rng& rng,
                  std::size_t block) {
    while (path.total() <= horizon) {
        for (std::size_t i = 0; i < block; ++i) {
            path.append(step_draw(model, rng));
        }
    }
}

double subordinator_scale(double alpha) { return std::tgamma(1.0 - alpha); }

double exact_w1_draw(double alpha, Rng& rng) {
    return std::pow(stable_draw(alpha, rng), -alpha) / subordinator_scale(alpha);
}

std::vector<double> sample_w1(double alpha, std::size_t n, const SeedSpec& seed) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw std::invalid_argument("hitting-time index alpha must lie in (0,1)");
    }
    Rng rng = Rng::for_stream(seed, stream_tag::hitting);
    std::vector<double> out(n);
    for (auto& v : out) v = exact_w1_draw(alpha, rng);
    return out;
}

HittingTimePath simulate_hitting_time(double alpha, std::span<const double> c_grid,
                                      std::size_t n_increments, const SeedSpec& seed) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw std::invalid_argument("hitting-time index alpha must lie in (0,1)");
    }
    if (c_grid.empty() || n_increments == 0) {
        throw std::invalid_argument("hitting-time simulation needs levels and increments");
    }
    for (std::size_t i = 0; i < c_grid.size(); ++i) {
        if (c_grid[i] < 0.0 || (i > 0 && c_grid[i] <= c_grid[i - 1])) {
            throw std::invalid_argument("hitting-time levels must be increasing and >= 0");
        }
    }

    const double c_max = c_grid.back();
    const double b = subordinator_scale(alpha);
    // Mean of W(c_max) is c_max^alpha / (Gamma(1+alpha) Gamma(1-alpha));
    // eight times that leaves the no-crossing probability negligible.
    const double x_max =
        std::max(8.0 * std::pow(c_max, alpha) / (std::tgamma(1.0 + alpha) * b), 1e-12);
    const double dt = x_max / static_cast<double>(n_increments);
    const double increment_scale = std::pow(dt * b, 1.0 / alpha);

    Rng rng = Rng::for_stream(seed, stream_tag::hitting);

    HittingTimePath path;
    path.levels.assign(c_grid.begin(), c_grid.end());
    path.values.assign(c_grid.size(), 0.0);

    double s = 0.0;  // subordinator value, S(0) = 0
    std::size_t next_level = 0;
    for (std::size_t j = 1; j <= n_increments && next_level < c_grid.size(); ++j) {
        s += increment_scale * stable_draw(alpha, rng);
        const double x = dt * static_cast<double>(j);
        while (next_level < c_grid.size() && s > c_grid[next_level]) {
            path.values[next_level] = x;
            ++next_level;
        }
    }
    if (next_level < c_grid.size()) {
        throw grid_too_coarse_error(
            "subordinator grid ended before crossing the last level; increase n_increments");
    }
    return path;
}

}  // namespace renex
