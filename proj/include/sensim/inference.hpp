#pragma once

#include <cstdint>
#include <utility>

#include "sensim/action.hpp"
#include "sensim/binning.hpp"
#include "sensim/random.hpp"

namespace sensim {

// Truncated-Gamma prior TG(alpha, beta, 0, lambda_max) on each bin's
// average rate. beta is a rate (inverse scale) parameter: the conjugate
// update adds bin_width * N to it.
struct PriorParams {
    double alpha = 0.5;
    double beta = 0.5;
    double lambda_max = 1.0;

    PriorParams(double a, double b, double lmax);
};

// Gamma(shape, rate) restricted to [0, upper].
struct TGPosterior {
    double shape;
    double rate;
    double upper;
};

// TG(alpha + H, beta + width * N, 0, lambda_max).
TGPosterior posterior_for_bin(const PriorParams& prior, std::uint64_t events,
                              std::uint64_t sensed, double bin_width);

// Exact draw via inverse CDF on the regularized lower incomplete gamma,
// switching to plain-Gamma rejection when the truncation is essentially
// vacuous. Non-finite quantiles are reported, never clamped.
double sample_tg(const TGPosterior& post, RandomStream& rng);

// Mean and p-quantile of the truncated distribution.
double tg_mean(const TGPosterior& post);
double tg_quantile(const TGPosterior& post, double p);

// H / (width * N); throws UndefinedStatistic when N = 0.
double empirical_mean(std::uint64_t events, std::uint64_t sensed, double bin_width);

// Confidence radius 2 log(t) / (width N) + sqrt(6 lambda_max log(t) / (width N)).
double confidence_radius(std::uint64_t t, std::uint64_t sensed, double bin_width,
                         double lambda_max);

// Lower and upper confidence bounds on the reward of a bin-aligned action:
//   width * sum_k (mean_k -/+ radius_k) - cost * |A|.
std::pair<double, double> reward_bounds(const Action& action, const BinStats& stats,
                                        const Mesh& mesh, std::uint64_t t,
                                        double lambda_max, double cost);

}  // namespace sensim
