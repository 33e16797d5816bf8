#include "sensim/inference.hpp"

#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <stdexcept>

#include "sensim/errors.hpp"

namespace sensim {
namespace {

// Truncation mass above this switches to plain-Gamma rejection: the
// truncated and untruncated laws are then numerically indistinguishable.
constexpr double kVacuousMass = 1.0 - 1e-12;

double truncation_mass(const TGPosterior& post) {
    return boost::math::gamma_p(post.shape, post.rate * post.upper);
}

}  // namespace

PriorParams::PriorParams(double a, double b, double lmax)
    : alpha(a), beta(b), lambda_max(lmax) {
    if (!(alpha > 0.0) || !(beta > 0.0) || !(lambda_max > 0.0))
        throw std::invalid_argument("prior parameters must be strictly positive");
}

TGPosterior posterior_for_bin(const PriorParams& prior, std::uint64_t events,
                              std::uint64_t sensed, double bin_width) {
    if (!(bin_width > 0.0 && bin_width <= 1.0))
        throw std::invalid_argument("bin width must lie in (0, 1]");
    return {prior.alpha + static_cast<double>(events),
            prior.beta + bin_width * static_cast<double>(sensed), prior.lambda_max};
}

double sample_tg(const TGPosterior& post, RandomStream& rng) {
    const double mass = truncation_mass(post);
    if (mass >= kVacuousMass) {
        for (int attempt = 0; attempt < 10000; ++attempt) {
            const double x = rng.gamma(post.shape, post.rate);
            if (x <= post.upper) return x;
        }
        throw std::runtime_error("sample_tg: rejection sampler failed to accept");
    }
    const double u = rng.uniform();
    const double x = boost::math::gamma_p_inv(post.shape, u * mass) / post.rate;
    if (!std::isfinite(x))
        throw std::runtime_error("sample_tg: non-finite inverse-CDF quantile");
    // boundary roundoff only; the quantile of u * mass <= mass is <= upper
    return x > post.upper ? post.upper : x;
}

double tg_mean(const TGPosterior& post) {
    const double mass = truncation_mass(post);
    if (mass <= 0.0)
        throw std::runtime_error("tg_mean: zero truncation mass");
    const double z = post.rate * post.upper;
    // E[X | X <= u] = (shape/rate) * P(shape+1, rate u) / P(shape, rate u)
    return post.shape / post.rate * boost::math::gamma_p(post.shape + 1.0, z) / mass;
}

double tg_quantile(const TGPosterior& post, double p) {
    if (!(0.0 <= p && p <= 1.0)) throw std::invalid_argument("quantile level in [0,1]");
    const double mass = truncation_mass(post);
    const double x = boost::math::gamma_p_inv(post.shape, p * mass) / post.rate;
    if (!std::isfinite(x))
        throw std::runtime_error("tg_quantile: non-finite quantile");
    return x > post.upper ? post.upper : x;
}

double empirical_mean(std::uint64_t events, std::uint64_t sensed, double bin_width) {
    if (sensed == 0)
        throw UndefinedStatistic("empirical mean of a never-sensed bin");
    return static_cast<double>(events) / (bin_width * static_cast<double>(sensed));
}

double confidence_radius(std::uint64_t t, std::uint64_t sensed, double bin_width,
                         double lambda_max) {
    if (sensed == 0)
        throw UndefinedStatistic("confidence radius of a never-sensed bin");
    if (t < 1) throw std::invalid_argument("confidence radius needs t >= 1");
    const double logt = std::log(static_cast<double>(t));
    const double dn = bin_width * static_cast<double>(sensed);
    return 2.0 * logt / dn + std::sqrt(6.0 * lambda_max * logt / dn);
}

std::pair<double, double> reward_bounds(const Action& action, const BinStats& stats,
                                        const Mesh& mesh, std::uint64_t t,
                                        double lambda_max, double cost) {
    const double width = mesh.width();
    double lo = 0.0, hi = 0.0;
    for (std::uint32_t k : action_to_bins(action, mesh)) {
        const double mean = empirical_mean(stats.events[k], stats.sensed[k], width);
        const double radius = confidence_radius(t, stats.sensed[k], width, lambda_max);
        lo += width * (mean - radius);
        hi += width * (mean + radius);
    }
    const double sensing_cost = cost * action.total_length();
    return {lo - sensing_cost, hi - sensing_cost};
}

}  // namespace sensim
