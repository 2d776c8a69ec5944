#ifndef RENEX_RENEWAL_HPP
#define RENEX_RENEWAL_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "renex/norming.hpp"
#include "renex/variates.hpp"

namespace renex {

/// Raised when a finite path never exceeds the requested horizon;
/// the caller must extend the path first.
class path_exhausted_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when a simulated subordinator path ends before crossing the
/// largest requested level.
class grid_too_coarse_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Step sums of one replication: cumsum[k-1] = Y_1 + ... + Y_k.
struct RenewalPath {
    std::vector<double> steps;
    std::vector<double> cumsum;

    static RenewalPath from_steps(std::span<const double> ys);

    void append(double y) {
        steps.push_back(y);
        cumsum.push_back(total() + y);
    }
    void clear() {
        steps.clear();
        cumsum.clear();
    }
    double total() const { return cumsum.empty() ? 0.0 : cumsum.back(); }
};

/// Passage time tau(t) = inf{ k >= 1 : Y_1 + ... + Y_k > t } (strict
/// inequality; zero-valued steps advance k). 1-based. Throws
/// path_exhausted_error when the path never exceeds t.
std::size_t passage_time(const RenewalPath& path, double t);

/// mu * tau(t c) / t, the finite-mean normalization.
double scaled_passage_finite(const RenewalPath& path, double t, double c, double mu);

/// tau(t c) / d_tilde(t), the infinite-mean normalization.
double scaled_passage_infinite(const RenewalPath& path, double t, double c,
                               const StepNorming& norming);

/// Grow a path with fresh draws until its sum strictly exceeds `horizon`.
/// Draws happen in blocks; heavy-tailed steps make the needed length random.
void extend_until(RenewalPath& path, double horizon, const StepModel& model, Rng& rng,
                  std::size_t block = 1024);

/// Laplace-exponent factor of the step-sum limit: with d from the tail
/// norming, T(tc)/d(t) converges to a subordinator with exponent
/// b * lambda^alpha where b = Gamma(1-alpha).
double subordinator_scale(double alpha);

/// Exact draw of the level-1 hitting time W(1) = S^{-alpha} / Gamma(1-alpha)
/// of that subordinator; W(1) has the (scaled) Mittag-Leffler law with
/// E[W(1)^n] = n! / (Gamma(1+n alpha) Gamma(1-alpha)^n).
double exact_w1_draw(double alpha, Rng& rng);

std::vector<double> sample_w1(double alpha, std::size_t n, const SeedSpec& seed);

/// Hitting times W(c) = inf{ x : S(x) > c } over a grid of levels.
struct HittingTimePath {
    std::vector<double> levels;
    std::vector<double> values;
};

/// Simulates the subordinator on a uniform time grid of n_increments steps
/// and reads off the first grid time exceeding each level. Throws
/// grid_too_coarse_error if the simulated path ends below the last level.
HittingTimePath simulate_hitting_time(double alpha, std::span<const double> c_grid,
                                      std::size_t n_increments, const SeedSpec& seed);

}  // namespace renex

#endif
