#include "sfp/weights.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "sfp/quadrature.hpp"
#include "sfp/rng.hpp"

namespace sfp {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// sup_w w / ((e+w) log(e+w)) ~= 0.31785, so the tail stays monotone as long
// as a <= (tau-1)/0.31785. We enforce the slightly tighter a <= 3 (tau-1).
double max_log_exponent(double tau) { return 3.0 * (tau - 1.0); }

void check_tau(double tau) {
    if (!(tau > 1.0)) throw std::invalid_argument("WeightLaw: tau must exceed 1");
}

}  // namespace

WeightLaw WeightLaw::pareto(double tau) {
    check_tau(tau);
    return WeightLaw(Family::Pareto, tau, 1.0, 0.0, 1.0);
}

WeightLaw WeightLaw::pareto_scaled(double tau, double c) {
    check_tau(tau);
    if (!(c > 0.0)) throw std::invalid_argument("WeightLaw: scale c must be positive");
    // tail(w0) = 1  =>  w0 = c^{1/(tau-1)}
    return WeightLaw(Family::ParetoScaled, tau, c, 0.0, std::pow(c, 1.0 / (tau - 1.0)));
}

WeightLaw WeightLaw::pareto_log_power(double tau, double a) {
    check_tau(tau);
    if (a > max_log_exponent(tau))
        throw std::invalid_argument("WeightLaw: log exponent too large for a monotone tail");
    if (a == 0.0) return pareto(tau);
    // Solve w^{-(tau-1)} (log(e+w))^a = 1 by bisection; g decreases from
    // +inf (w -> 0) to 0, so the root is unique.
    auto g = [&](double w) {
        return -(tau - 1.0) * std::log(w) + a * std::log(std::log(std::exp(1.0) + w));
    };
    double lo = 1e-12, hi = 1e12;
    for (int i = 0; i < 200; ++i) {
        const double mid = std::sqrt(lo * hi);
        (g(mid) > 0.0 ? lo : hi) = mid;
        if (hi / lo < 1.0 + 1e-16) break;
    }
    return WeightLaw(Family::ParetoLogPower, tau, 1.0, a, 0.5 * (lo + hi));
}

WeightLaw WeightLaw::degenerate(double w) {
    if (!(w > 0.0)) throw std::invalid_argument("WeightLaw: degenerate weight must be positive");
    return WeightLaw(Family::Degenerate, kInf, 1.0, 0.0, w);
}

double WeightLaw::tail(double w) const {
    if (!(w > 0.0)) return 1.0;
    if (family_ == Family::Degenerate) return w < w0_ ? 1.0 : 0.0;
    if (w <= w0_) return 1.0;
    double t = c_ * std::pow(w, -(tau_ - 1.0));
    if (a_ != 0.0) t *= std::pow(std::log(std::exp(1.0) + w), a_);
    return t < 1.0 ? t : 1.0;
}

double WeightLaw::quantile_tail(double u) const {
    if (!(u > 0.0 && u <= 1.0)) throw std::invalid_argument("quantile_tail: u must be in (0,1]");
    if (family_ == Family::Degenerate) return w0_;
    if (u == 1.0) return w0_;
    if (a_ == 0.0) return std::pow(c_ / u, 1.0 / (tau_ - 1.0));
    // log-space bisection on tail(w) = u, then one Newton polish.
    const double lu = std::log(u);
    auto g = [&](double lw) {
        const double w = std::exp(lw);
        return -(tau_ - 1.0) * lw + a_ * std::log(std::log(std::exp(1.0) + w)) - lu;
    };
    double lo = std::log(w0_), hi = lo + 1.0;
    while (g(hi) > 0.0) hi += (hi - lo);
    for (int i = 0; i < 80; ++i) {
        const double mid = 0.5 * (lo + hi);
        (g(mid) > 0.0 ? lo : hi) = mid;
    }
    return std::exp(0.5 * (lo + hi));
}

// E[W^s] = w0^s + s * int_{w0}^inf w^{s-1} tail(w) dw  (integration by parts).
double WeightLaw::fractional_moment(double s) const {
    if (s < 0.0) throw std::invalid_argument("fractional_moment: s must be >= 0");
    if (s == 0.0) return 1.0;
    if (family_ == Family::Degenerate) return std::pow(w0_, s);
    const double tm1 = tau_ - 1.0;
    if (s > tm1) return kInf;
    if (s == tm1) {
        if (a_ >= -1.0) return kInf;
        // int w^{-1} (log(e+w))^a dw = -(log(e+w))^{a+1}/(a+1) + e * int (log(e+w))^a / (w(e+w)) dw
        const double ee = std::exp(1.0);
        const double lead = std::pow(std::log(ee + w0_), a_ + 1.0) / (-(a_ + 1.0));
        auto corr = [&](double w) {
            return std::pow(std::log(ee + w), a_) * ee / (w * (ee + w));
        };
        auto corr_rem = [&](double T) {
            return ee * std::pow(std::log(ee + T), a_) / T;  // integrand <= (log)^a * e / w^2
        };
        const double tail_int =
            lead + quad::integrate_geometric_to_inf(corr, w0_, corr_rem, 1e-14);
        return std::pow(w0_, s) + s * c_ * tail_int;
    }
    if (a_ == 0.0) {
        // Closed form: scaled Pareto is w0 * Pareto(tau).
        return std::pow(w0_, s) * tm1 / (tm1 - s);
    }
    // Quadrature with an analytic remainder. For w >= T,
    //   (log(e+w))^a <= (log(e+T))^a * (w/T)^eps  with eps = max(a,0)/log(e+T),
    // so int_T^inf w^{s-1} tail(w) dw <= c (log(e+T))^a T^{s-tm1} / (tm1-s-eps).
    auto integrand = [&](double w) { return std::pow(w, s - 1.0) * tail(w); };
    auto remainder = [&](double T) {
        const double lt = std::log(std::exp(1.0) + T);
        const double eps = a_ > 0.0 ? a_ / lt : 0.0;
        const double denom = tm1 - s - eps;
        if (denom <= 0.0) return kInf;  // push T further out
        return c_ * std::pow(lt, a_) * std::pow(T, s - tm1) / denom;
    };
    const double head = std::pow(w0_, s);
    const double integral =
        quad::integrate_geometric_to_inf(integrand, w0_, remainder, 1e-12 * head);
    return head + s * integral;
}

// psi(theta) = E[1 - e^{-theta W}]
//            = (1 - e^{-theta w0}) + theta int_{w0}^inf e^{-theta w} tail(w) dw,
// again by parts, so only the tail function is needed. The integral is cut
// at T = max(w0, 40/theta): the discarded piece is below e^{-40} ~ 4e-18.
double WeightLaw::psi(double theta) const {
    if (theta < 0.0) throw std::invalid_argument("psi: theta must be >= 0");
    if (theta == 0.0) return 0.0;
    if (std::isinf(theta)) return 1.0;
    if (family_ == Family::Degenerate) return -std::expm1(-theta * w0_);

    const double head = -std::expm1(-theta * w0_);
    const double T = std::fmax(w0_, 40.0 / theta);
    if (T <= w0_ * (1.0 + 1e-14)) return head > 1.0 ? 1.0 : head;

    auto integrand = [&](double w) { return std::exp(-theta * w) * tail(w); };
    // Octave panels from w0 to T. The early stop must be relative to the
    // accumulated value: an absolute cutoff would put O(cutoff/psi)-sized
    // steps into psi as a function of theta, which downstream adaptive
    // integrators then chase as if they were features.
    double integral = 0.0;
    double lo = w0_;
    while (lo < T) {
        const double remaining = tail(lo) * std::exp(-theta * lo);  // >= theta * leftover
        if (remaining < 1e-12 * (head + theta * integral)) break;
        const double hi = std::fmin(2.0 * lo, T);
        integral += quad::integrate(integrand, lo, hi, 1e-11, 10);
        lo = hi;
    }
    const double value = head + theta * integral;
    return value < 1.0 ? value : 1.0;
}

std::string WeightLaw::describe() const {
    std::ostringstream os;
    switch (family_) {
        case Family::Pareto: os << "pareto(tau=" << tau_ << ")"; break;
        case Family::ParetoScaled: os << "pareto_scaled(tau=" << tau_ << ",c=" << c_ << ")"; break;
        case Family::ParetoLogPower:
            os << "pareto_log_power(tau=" << tau_ << ",a=" << a_ << ")";
            break;
        case Family::Degenerate: os << "degenerate(w=" << w0_ << ")"; break;
    }
    return os.str();
}

WeightVector sample_weights(const WeightLaw& law, std::size_t count, std::uint64_t seed) {
    if (!law.sampleable())
        throw std::invalid_argument("sample_weights: law is not sampleable");
    WeightVector wv;
    wv.seed = seed;
    wv.values.resize(count);
    rng::Xoshiro256ss gen(seed);
    for (std::size_t i = 0; i < count; ++i) wv.values[i] = law.quantile_tail(gen.u01_open_below());
    return wv;
}

}  // namespace sfp
