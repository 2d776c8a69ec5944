#include "renex/renex.h"

#include <cstring>
#include <new>
#include <string>

#include "renex/acceptance.hpp"
#include "renex/harness.hpp"
#include "renex/limitlaws.hpp"
#include "renex/renewal.hpp"
#include "renex/variates.hpp"

#include "json.hpp"

#ifndef RENEX_VERSION
#define RENEX_VERSION "0.1.0"
#endif

struct renex_experiment {
    renex::ExperimentConfig config;
};

struct renex_report {
    std::string json;
    bool pass = false;
};

namespace {

thread_local std::string g_last_error;

using renex::ExperimentConfig;
using renex::ObservationModel;
using renex::StepModel;
using renex::TailMeasure;

renex_status fail(renex_status code, const char* message) {
    g_last_error = message;
    return code;
}

// Maps the C++ error idiom onto status codes at the boundary.
template <typename Fn>
renex_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return RENEX_OK;
    } catch (const renex::nonconvergence_error& e) {
        return fail(RENEX_ERR_NONCONVERGENCE, e.what());
    } catch (const renex::path_exhausted_error& e) {
        return fail(RENEX_ERR_PATH_EXHAUSTED, e.what());
    } catch (const std::domain_error& e) {
        return fail(RENEX_ERR_DOMAIN, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(RENEX_ERR_ARGUMENT, e.what());
    } catch (const nlohmann::json::exception& e) {
        return fail(RENEX_ERR_PARSE, e.what());
    } catch (const std::bad_alloc& e) {
        return fail(RENEX_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(RENEX_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(RENEX_ERR_INTERNAL, "unknown error");
    }
}

TailMeasure tail_for(renex_family family, double alpha_x) {
    return family == RENEX_GUMBEL ? TailMeasure::gumbel() : TailMeasure::frechet(alpha_x);
}

ObservationModel obs_from_json(const nlohmann::json& j) {
    const std::string law = j.at("law").get<std::string>();
    if (law == "exp") return ObservationModel::unit_exponential();
    if (law == "normal") return ObservationModel::standard_normal();
    if (law == "pareto") return ObservationModel::pareto(j.at("alpha").get<double>());
    throw std::invalid_argument("unknown observation law: " + law);
}

StepModel steps_from_json(const nlohmann::json& j) {
    const std::string law = j.at("law").get<std::string>();
    if (law == "const") return StepModel::constant(j.at("mu").get<double>());
    if (law == "exp") return StepModel::exponential(j.at("mu").get<double>());
    if (law == "uniform") return StepModel::uniform(j.at("mu").get<double>());
    if (law == "pareto") {
        return StepModel::heavy_pareto(j.at("alpha").get<double>(),
                                       j.value("y0", 1.0));
    }
    throw std::invalid_argument("unknown step law: " + law);
}

ExperimentConfig config_from_json(const char* text) {
    const auto j = nlohmann::json::parse(text);
    ExperimentConfig cfg;

    const std::string regime = j.at("regime").get<std::string>();
    if (regime == "finite") {
        cfg.regime = ExperimentConfig::Regime::FiniteMean;
    } else if (regime == "infinite") {
        cfg.regime = ExperimentConfig::Regime::InfiniteMean;
    } else {
        throw std::invalid_argument("regime must be \"finite\" or \"infinite\"");
    }

    cfg.obs = obs_from_json(j.at("obs"));
    cfg.dependent = j.value("dependent", false);
    if (j.contains("steps")) {
        cfg.steps = steps_from_json(j.at("steps"));
    } else if (cfg.dependent) {
        // Dependent runs take their steps from the coupled transform; any
        // finite-mean placeholder keeps validation consistent.
        cfg.steps = StepModel::exponential(1.0);
    } else {
        throw std::invalid_argument("steps law is required for independent runs");
    }

    cfg.t = j.at("t").get<double>();
    cfg.c = j.value("c", 1.0);
    cfg.k_max = j.value("k_max", 1);
    cfg.n_reps = j.at("reps").get<std::uint64_t>();
    cfg.master_seed = j.value("seed", std::uint64_t{7});
    cfg.eval_grid = j.at("grid").get<std::vector<double>>();
    if (j.contains("fdd_s")) cfg.fdd_s = j.at("fdd_s").get<std::vector<double>>();
    if (j.contains("fdd_x")) cfg.fdd_x = j.at("fdd_x").get<std::vector<double>>();
    cfg.n_mc = j.value("n_mc", std::uint64_t{1000000});
    cfg.n_w_paths = j.value("n_w_paths", std::uint64_t{20000});
    cfg.n_w_increments = j.value("n_w_increments", std::uint64_t{20000});
    cfg.z_crit = j.value("z_crit", 4.0);
    cfg.ks_crit = j.value("ks_crit", 0.0);
    cfg.threads = j.value("threads", 1);

    cfg.validate();
    return cfg;
}

}  // namespace

extern "C" {

const char* renex_version(void) { return RENEX_VERSION; }

const char* renex_status_name(renex_status status) {
    switch (status) {
        case RENEX_OK: return "ok";
        case RENEX_ERR_ARGUMENT: return "invalid argument";
        case RENEX_ERR_DOMAIN: return "domain error";
        case RENEX_ERR_NONCONVERGENCE: return "nonconvergence";
        case RENEX_ERR_PATH_EXHAUSTED: return "path exhausted";
        case RENEX_ERR_PARSE: return "parse error";
        case RENEX_ERR_INTERNAL: return "internal error";
    }
    return "unknown";
}

const char* renex_last_error(void) { return g_last_error.c_str(); }

renex_status renex_q_gamma(int k, double x, double* out) {
    if (out == nullptr) return fail(RENEX_ERR_ARGUMENT, "out must not be NULL");
    return guarded([&] { *out = renex::reg_inc_gamma_q(k, x); });
}

renex_status renex_mittag_leffler(double alpha, double z, double* out) {
    if (out == nullptr) return fail(RENEX_ERR_ARGUMENT, "out must not be NULL");
    return guarded([&] { *out = renex::mittag_leffler(alpha, z); });
}

renex_status renex_tail_mass(renex_family family, double alpha_x, double x, double* out) {
    if (out == nullptr) return fail(RENEX_ERR_ARGUMENT, "out must not be NULL");
    return guarded([&] { *out = tail_for(family, alpha_x).mass(x); });
}

renex_status renex_finite_mean_kth_cdf(renex_family family, double alpha_x, double c, int k,
                                       double x, double* out) {
    if (out == nullptr) return fail(RENEX_ERR_ARGUMENT, "out must not be NULL");
    return guarded([&] { *out = renex::finite_mean_kth_cdf(tail_for(family, alpha_x), c, k, x); });
}

renex_status renex_finite_mean_top2_joint(renex_family family, double alpha_x, double c,
                                          double x1, double x2, double* out) {
    if (out == nullptr) return fail(RENEX_ERR_ARGUMENT, "out must not be NULL");
    return guarded(
        [&] { *out = renex::finite_mean_top2_joint(tail_for(family, alpha_x), c, x1, x2); });
}

renex_status renex_infinite_mean_kth_cdf(renex_family family, double alpha_x, double alpha,
                                         double c, int k, double x, uint64_t n_mc, uint64_t seed,
                                         double* out_mc, double* out_stderr, double* out_series) {
    return guarded([&] {
        const auto value = renex::infinite_mean_kth_cdf(
            tail_for(family, alpha_x), alpha, c, k, x, n_mc, renex::SeedSpec{seed, 0});
        if (out_mc != nullptr) *out_mc = value.mc;
        if (out_stderr != nullptr) *out_stderr = value.mc_stderr;
        if (out_series != nullptr && value.has_series) *out_series = value.series;
    });
}

renex_status renex_g_extremal_fdd(renex_family family, double alpha_x, const double* s,
                                  const double* x, size_t len, double* out) {
    if (out == nullptr || s == nullptr || x == nullptr) {
        return fail(RENEX_ERR_ARGUMENT, "s, x and out must not be NULL");
    }
    return guarded([&] {
        *out = renex::g_extremal_fdd(tail_for(family, alpha_x), std::span(s, len),
                                     std::span(x, len));
    });
}

renex_status renex_sample_stable(double alpha, uint64_t n, uint64_t master_seed,
                                 uint64_t replication, double* out) {
    if (out == nullptr && n > 0) return fail(RENEX_ERR_ARGUMENT, "out must not be NULL");
    return guarded([&] {
        const auto draws =
            renex::sample_one_sided_stable(alpha, n, renex::SeedSpec{master_seed, replication});
        std::memcpy(out, draws.data(), draws.size() * sizeof(double));
    });
}

renex_status renex_sample_hitting_w1(double alpha, uint64_t n, uint64_t master_seed,
                                     uint64_t replication, double* out) {
    if (out == nullptr && n > 0) return fail(RENEX_ERR_ARGUMENT, "out must not be NULL");
    return guarded([&] {
        const auto draws = renex::sample_w1(alpha, n, renex::SeedSpec{master_seed, replication});
        std::memcpy(out, draws.data(), draws.size() * sizeof(double));
    });
}

renex_status renex_experiment_from_json(const char* json_text, renex_experiment** out) {
    if (json_text == nullptr || out == nullptr) {
        return fail(RENEX_ERR_ARGUMENT, "json_text and out must not be NULL");
    }
    *out = nullptr;
    return guarded([&] { *out = new renex_experiment{config_from_json(json_text)}; });
}

void renex_experiment_free(renex_experiment* experiment) { delete experiment; }

renex_status renex_experiment_run(const renex_experiment* experiment, renex_report** out) {
    if (experiment == nullptr || out == nullptr) {
        return fail(RENEX_ERR_ARGUMENT, "experiment and out must not be NULL");
    }
    *out = nullptr;
    return guarded([&] {
        const auto& cfg = experiment->config;
        renex::ComparisonReport report;
        if (!cfg.fdd_s.empty()) {
            report = renex::run_extremal_path_fdd(cfg);
        } else if (cfg.regime == ExperimentConfig::Regime::FiniteMean) {
            report = renex::run_finite_mean(cfg);
        } else {
            report = renex::run_infinite_mean(cfg);
        }
        *out = new renex_report{report.to_json(), report.pass};
    });
}

const char* renex_report_json(const renex_report* report) {
    return report == nullptr ? "" : report->json.c_str();
}

int renex_report_passed(const renex_report* report) {
    return report != nullptr && report->pass ? 1 : 0;
}

void renex_report_free(renex_report* report) { delete report; }

renex_status renex_verify_run(int quick, uint64_t master_seed, renex_report** out) {
    if (out == nullptr) return fail(RENEX_ERR_ARGUMENT, "out must not be NULL");
    *out = nullptr;
    return guarded([&] {
        const auto suite = renex::run_acceptance_suite(quick != 0, master_seed);
        *out = new renex_report{suite.to_json(), suite.all_pass};
    });
}

}  // extern "C"
