// Weight distributions with regularly varying tails.
//
// Built-in families, all written as
//     P(W > w) = c * w^{-(tau-1)} * (log(e+w))^a        for w >= w0,
// with w0 fixed by continuity (tail(w0) = 1):
//   * Pareto(tau):                c = 1, a = 0, w0 = 1
//   * scaled Pareto (constant L): c > 0, a = 0
//   * log-power L:                c = 1, a != 0
// A degenerate point mass is admitted for oracle use in the theory module;
// it cannot be sampled.
#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace sfp {

class WeightLaw {
public:
    enum class Family { Pareto, ParetoScaled, ParetoLogPower, Degenerate };

    static WeightLaw pareto(double tau);
    static WeightLaw pareto_scaled(double tau, double c);
    static WeightLaw pareto_log_power(double tau, double a);
    static WeightLaw degenerate(double w);

    Family family() const { return family_; }
    double tau() const { return tau_; }
    double scale_c() const { return c_; }
    double log_exponent() const { return a_; }
    // Essential infimum of the law (left end of the support).
    double support_min() const { return w0_; }
    bool sampleable() const { return family_ != Family::Degenerate; }

    // P(W > w) for w > 0.
    double tail(double w) const;
    // Inverse of the tail: the w >= w0 with tail(w) = u, for u in (0,1].
    double quantile_tail(double u) const;
    // E[W^s]; +infinity outside the convergence range.
    double fractional_moment(double s) const;
    // E[W] (fractional_moment(1)).
    double mean() const { return fractional_moment(1.0); }
    // psi(theta) = E[1 - exp(-theta W)], absolute error <= 1e-10.
    double psi(double theta) const;

    std::string describe() const;
    bool operator==(const WeightLaw&) const = default;

private:
    WeightLaw(Family f, double tau, double c, double a, double w0)
        : family_(f), tau_(tau), c_(c), a_(a), w0_(w0) {}

    Family family_ = Family::Pareto;
    double tau_ = 2.0;
    double c_ = 1.0;
    double a_ = 0.0;
    double w0_ = 1.0;
};

// i.i.d. weights, index-aligned with a PointSet.
struct WeightVector {
    std::vector<double> values;
    std::uint64_t seed = 0;
};

// Inversion sampling; deterministic in seed. Rejects non-sampleable laws.
WeightVector sample_weights(const WeightLaw& law, std::size_t count, std::uint64_t seed);

}  // namespace sfp
