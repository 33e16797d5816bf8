#include "sensim/rate.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace sensim {
namespace {

double unimodal_eval(double x) {
    return (1000.0 / 21.0) * (x - x * x);
}

double bimodal_raw(double x) {
    return 15.0 * std::sin(10.0 * x) / (std::sqrt(10.0 * x + 1.0) + x);
}

double bimodal_eval(double x) {
    return std::max(0.001, bimodal_raw(x));
}

// Grid argmax over 2^16 points followed by golden-section refinement on the
// bracketing cell pair.
double bimodal_max() {
    constexpr int n = 1 << 16;
    double best = -1.0;
    int best_i = 0;
    for (int i = 0; i <= n; ++i) {
        const double v = bimodal_raw(static_cast<double>(i) / n);
        if (v > best) {
            best = v;
            best_i = i;
        }
    }
    double lo = std::max(0.0, (best_i - 1.0) / n);
    double hi = std::min(1.0, (best_i + 1.0) / n);
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = hi - gr * (hi - lo);
    double d = lo + gr * (hi - lo);
    double fc = bimodal_raw(c), fd = bimodal_raw(d);
    while (hi - lo > 1e-14) {
        if (fc > fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - gr * (hi - lo);
            fc = bimodal_raw(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + gr * (hi - lo);
            fd = bimodal_raw(d);
        }
    }
    return std::max({best, fc, fd});
}

double simpson(double a, double b, double fa, double fm, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double fa, double fm, double fb, double whole, double tol,
                        int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = simpson(a, m, fa, flm, fm);
    const double right = simpson(m, b, fm, frm, fb);
    const double delta = left + right - whole;
    if (depth >= 52 || std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
           adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
}

double integrate_smooth(const std::function<double(double)>& f, double a, double b,
                        double tol) {
    if (a == b) return 0.0;
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    const double whole = simpson(a, b, fa, fm, fb);
    return adaptive_simpson(f, a, b, fa, fm, fb, whole, tol, 0);
}

}  // namespace

RateFunction RateFunction::constant(double value) {
    if (value < 0.0) throw std::invalid_argument("constant rate must be nonnegative");
    RateFunction r;
    r.kind_ = RateKind::Constant;
    r.name_ = "constant";
    r.constant_value_ = value;
    r.max_value_ = value;
    r.sup_bound_ = value;
    return r;
}

RateFunction RateFunction::unimodal() {
    RateFunction r;
    r.kind_ = RateKind::Unimodal;
    r.name_ = "unimodal";
    r.max_value_ = 250.0 / 21.0;  // vertex at x = 1/2
    r.sup_bound_ = r.max_value_;
    return r;
}

RateFunction RateFunction::bimodal() {
    RateFunction r;
    r.kind_ = RateKind::Bimodal;
    r.name_ = "bimodal";
    r.max_value_ = bimodal_max();
    // Numeric max; small headroom keeps the thinning acceptance ratio <= 1.
    r.sup_bound_ = r.max_value_ * (1.0 + 1e-9);
    return r;
}

RateFunction RateFunction::piecewise_constant(std::vector<double> edges,
                                              std::vector<double> values) {
    if (edges.size() < 2 || values.size() + 1 != edges.size())
        throw std::invalid_argument("piecewise rate: need n+1 edges for n values");
    if (edges.front() != 0.0 || edges.back() != 1.0)
        throw std::invalid_argument("piecewise rate: edges must span [0, 1]");
    if (!std::is_sorted(edges.begin(), edges.end()))
        throw std::invalid_argument("piecewise rate: edges must be ascending");
    for (std::size_t i = 1; i < edges.size(); ++i)
        if (edges[i] == edges[i - 1])
            throw std::invalid_argument("piecewise rate: empty cell");
    for (double v : values)
        if (v < 0.0) throw std::invalid_argument("piecewise rate: negative value");
    RateFunction r;
    r.kind_ = RateKind::PiecewiseConstant;
    r.name_ = "piecewise";
    r.edges_ = std::move(edges);
    r.values_ = std::move(values);
    r.max_value_ = *std::max_element(r.values_.begin(), r.values_.end());
    r.sup_bound_ = r.max_value_;
    return r;
}

double RateFunction::operator()(double x) const {
    if (x < 0.0 || x > 1.0)
        throw std::domain_error("rate evaluated outside [0, 1]");
    switch (kind_) {
        case RateKind::Constant:
            return constant_value_;
        case RateKind::Unimodal:
            return unimodal_eval(x);
        case RateKind::Bimodal:
            return bimodal_eval(x);
        case RateKind::PiecewiseConstant: {
            // cells are [e_i, e_{i+1}); x = 1 belongs to the last cell
            auto it = std::upper_bound(edges_.begin(), edges_.end(), x);
            std::size_t i = static_cast<std::size_t>(it - edges_.begin());
            if (i == 0) i = 1;
            if (i > values_.size()) i = values_.size();
            return values_[i - 1];
        }
    }
    return 0.0;
}

double RateFunction::integrate(double a, double b, double tol) const {
    if (!(0.0 <= a && a <= b && b <= 1.0))
        throw std::domain_error("integrate: need 0 <= a <= b <= 1");
    if (tol <= 0.0) throw std::invalid_argument("integrate: tol must be positive");
    if (a == b) return 0.0;
    switch (kind_) {
        case RateKind::Constant:
            return constant_value_ * (b - a);
        case RateKind::PiecewiseConstant: {
            double total = 0.0;
            for (std::size_t i = 0; i < values_.size(); ++i) {
                const double lo = std::max(a, edges_[i]);
                const double hi = std::min(b, edges_[i + 1]);
                if (hi > lo) total += values_[i] * (hi - lo);
            }
            return total;
        }
        case RateKind::Unimodal:
            return integrate_smooth(unimodal_eval, a, b, tol);
        case RateKind::Bimodal:
            return integrate_smooth(bimodal_eval, a, b, tol);
    }
    return 0.0;
}

}  // namespace sensim
