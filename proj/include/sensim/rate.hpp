#pragma once

#include <string>
#include <vector>

namespace sensim {

enum class RateKind { Constant, Unimodal, Bimodal, PiecewiseConstant };

// Intensity function of the event process on [0, 1].
//
// Built-in test rates:
//   unimodal   lambda(x) = 1000/21 * (x - x^2)
//   bimodal    lambda(x) = max(0.001, 15 sin(10x) / (sqrt(10x + 1) + x))
// plus constant and piecewise-constant rates.
class RateFunction {
public:
    static RateFunction constant(double value);
    static RateFunction unimodal();
    static RateFunction bimodal();
    // edges has n+1 ascending entries starting at 0 and ending at 1;
    // values has n nonnegative entries, one per cell.
    static RateFunction piecewise_constant(std::vector<double> edges,
                                           std::vector<double> values);

    // lambda(x); throws std::domain_error outside [0, 1].
    double operator()(double x) const;

    // Integral of lambda over [a, b] within absolute error tol.
    // Exact cell sums for piecewise-constant rates, adaptive Simpson otherwise.
    double integrate(double a, double b, double tol = 1e-9) const;

    // True maximum of lambda over [0, 1]. Closed form where available,
    // dense-grid search plus golden-section refinement for the bimodal rate.
    double max_value() const { return max_value_; }

    // Upper bound used by the thinning sampler; >= sup lambda.
    double sup_bound() const { return sup_bound_; }

    RateKind kind() const { return kind_; }
    const std::string& name() const { return name_; }

private:
    RateFunction() = default;

    RateKind kind_ = RateKind::Constant;
    std::string name_;
    double constant_value_ = 0.0;
    std::vector<double> edges_;
    std::vector<double> values_;
    double max_value_ = 0.0;
    double sup_bound_ = 0.0;
};

}  // namespace sensim
