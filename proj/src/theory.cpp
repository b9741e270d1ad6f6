#include "sfp/theory.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "sfp/quadrature.hpp"

namespace sfp::theory {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_power_law(const ModelParams& params, const char* what) {
    const auto rep = classify_regime(params);
    if (rep.regime != Regime::PowerLaw)
        throw divergence_error(std::string(what) + " diverges: infinite-degree regime");
}

// Computable upper envelope of psi near 0, used for remainder bounds of the
// radial integrals. From 1 - e^{-x} <= min(1, x):
//   psi(u) <= P(W > 1/u) + u E[W 1{W <= 1/u}].
double psi_upper(const WeightLaw& law, double u) {
    if (u <= 0.0) return 0.0;
    const double mean = law.mean();
    const double v = 1.0 / u;
    double bound;
    if (std::isfinite(mean)) {
        bound = law.tail(v) + u * mean;
    } else {
        // E[W 1{W<=v}] <= w0 + int_{w0}^v tail(t) dt, with the slowly varying
        // factor frozen at its maximum over [w0, v].
        const double tau = law.tau(), a = law.log_exponent(), c = law.scale_c();
        const double w0 = law.support_min();
        const double lmax = std::pow(std::log(std::exp(1.0) + (a > 0.0 ? v : w0)), a);
        const double trunc_mean = w0 + c * lmax * std::pow(v, 2.0 - tau) / (2.0 - tau);
        bound = law.tail(v) + u * trunc_mean;
    }
    return bound < 1.0 ? bound : 1.0;
}

// Bound on int_0^eps psi(u)^power u^{-s-1} du via octave sums of the
// envelope; converges whenever power*(tau-1) > s, which the PowerLaw regime
// guarantees.
double small_u_remainder(const WeightLaw& law, double eps, double s, int power) {
    double total = 0.0;
    double hi = eps;
    for (int k = 0; k < 1100; ++k) {
        const double lo = 0.5 * hi;
        const double env = std::pow(psi_upper(law, hi), power);
        // int_lo^hi u^{-s-1} du = (lo^{-s} - hi^{-s})/s
        const double term = env * (std::pow(lo, -s) - std::pow(hi, -s)) / s;
        total += term;
        if (term < 1e-16 * total || term < 1e-300) break;
        hi = lo;
    }
    return total;
}

double pow_int(double x, int d) {
    double v = x;
    for (int k = 1; k < d; ++k) v *= x;
    return v;
}

// int_{B_n} g(|x|) dx for a cube of side n centered at the origin, exact
// split into the inscribed-ball radial part plus smoothly parameterized
// corner wedges.
double box_radial_integral(const std::function<double(double)>& g, int d, double n) {
    // Inner tolerances stay above psi's own quadrature noise (~1e-10), or
    // the adaptive bisection would chase noise to full depth.
    const double R = 0.5 * n;
    if (d == 1) return 2.0 * quad::integrate(g, 0.0, R, 1e-9);
    if (d == 2) {
        const double core =
            2.0 * M_PI * quad::integrate([&](double r) { return g(r) * r; }, 0.0, R, 1e-9);
        const double corner =
            8.0 * quad::integrate(
                      [&](double th) {
                          return quad::integrate([&](double r) { return g(r) * r; }, R,
                                                 R / std::cos(th), 3e-9);
                      },
                      0.0, 0.25 * M_PI, 1e-8);
        return core + corner;
    }
    // d == 3: gnomonic parameterization of the six face wedges,
    // dOmega = ds dt / (1+s^2+t^2)^{3/2}, faces exit at r = R sqrt(1+s^2+t^2).
    const double core =
        4.0 * M_PI * quad::integrate([&](double r) { return g(r) * r * r; }, 0.0, R, 1e-9);
    auto wedge = [&](double s, double t) {
        const double m2 = 1.0 + s * s + t * t;
        const double inner =
            quad::integrate([&](double r) { return g(r) * r * r; }, R, R * std::sqrt(m2), 3e-9);
        return inner / (m2 * std::sqrt(m2));
    };
    const double corner =
        24.0 * quad::integrate(
                   [&](double s) {
                       return quad::integrate([&](double t) { return wedge(s, t); }, 0.0, 1.0,
                                              1e-8);
                   },
                   0.0, 1.0, 3e-8);
    return core + corner;
}

}  // namespace

RegimeReport classify_regime(const ModelParams& params) {
    params.validate();
    const double gamma = params.gamma();
    if (params.alpha <= params.dim) return {Regime::InfiniteDegreeA, gamma};
    if (gamma <= 1.0) return {Regime::InfiniteDegreeB, gamma};
    return {Regime::PowerLaw, gamma};
}

double unit_ball_volume(int d) {
    if (d < 1) throw std::invalid_argument("unit_ball_volume: d >= 1");
    return std::pow(M_PI, 0.5 * d) / std::tgamma(0.5 * d + 1.0);
}

double c0(const ModelParams& params) {
    require_power_law(params, "c0");
    const double s = static_cast<double>(params.dim) / params.alpha;
    return unit_ball_volume(params.dim) * std::tgamma(1.0 - s) * params.law.fractional_moment(s);
}

double radial_psi_integral(const WeightLaw& law, double alpha, int d, int power, double abs_tol) {
    const double s = static_cast<double>(d) / alpha;
    auto integrand = [&](double u) { return std::pow(law.psi(u), power) * std::pow(u, -s - 1.0); };
    // Above T the integrand is u^{-s-1} up to 1 - psi(u)^power <=
    // power * E[e^{-uW}] <= power * e^{-u w0}, so the tail equals T^{-s}/s
    // with an error far below any tolerance in use once T w0 >= 46.
    const double cut = 46.0 / std::fmin(law.support_min(), 1.0);
    double upper = 0.0;
    double lo = 1.0;
    while (lo < cut) {
        const double hi = 2.0 * lo;
        upper += quad::integrate(integrand, lo, hi, 1e-9);
        lo = hi;
    }
    upper += std::pow(lo, -s) / s;
    const double lower = quad::integrate_geometric_to_zero(
        integrand, 1.0, [&](double eps) { return small_u_remainder(law, eps, s, power); },
        0.5 * abs_tol, 1e-9);
    return d * unit_ball_volume(d) / alpha * (upper + lower);
}

double c1(const ModelParams& params) {
    require_power_law(params, "c1");
    return radial_psi_integral(params.law, params.alpha, params.dim, 2, 1e-7);
}

CampbellConstants campbell_constants(const ModelParams& params) {
    return {c0(params), c1(params), unit_ball_volume(params.dim)};
}

double annealed_mean_degree(const ModelParams& params, const BoxGeometry& geometry, double w) {
    params.validate();
    if (w < 0.0) throw std::invalid_argument("annealed_mean_degree: w >= 0");
    if (w == 0.0) return 0.0;
    const double alpha = params.alpha;
    auto g = [&](double r) {
        return r <= 0.0 ? 1.0 : params.law.psi(w * std::pow(r, -alpha));
    };
    return params.intensity * box_radial_integral(g, geometry.dim, geometry.side);
}

double annealed_mean_degree_infinite(const ModelParams& params, double w) {
    if (w < 0.0) throw std::invalid_argument("annealed_mean_degree_infinite: w >= 0");
    if (w == 0.0) return 0.0;
    const double s = static_cast<double>(params.dim) / params.alpha;
    return params.intensity * c0(params) * std::pow(w, s);
}

double annealed_var_degree(const ModelParams& params, const BoxGeometry& geometry, double w) {
    params.validate();
    if (w < 0.0) throw std::invalid_argument("annealed_var_degree: w >= 0");
    if (w == 0.0) return 0.0;
    const double alpha = params.alpha;
    auto g = [&](double r) {
        if (r <= 0.0) return 1.0;
        const double p = params.law.psi(w * std::pow(r, -alpha));
        return p * p;
    };
    return params.intensity * box_radial_integral(g, geometry.dim, geometry.side);
}

double psi_mixture(const WeightLaw& law, double theta) {
    if (theta < 0.0) throw std::invalid_argument("psi_mixture: theta >= 0");
    if (theta == 0.0) return 0.0;
    if (std::isinf(theta)) return 1.0;
    if (law.family() == WeightLaw::Family::Degenerate)
        return law.psi(law.support_min() * theta);
    auto integrand = [&](double u) { return law.psi(law.quantile_tail(u) * theta); };
    return quad::integrate_geometric_to_zero(
        integrand, 1.0, [](double eps) { return eps; }, 1e-8, 1e-8);
}

double annealed_mean_degree_mixture(const ModelParams& params, const BoxGeometry& geometry) {
    params.validate();
    const double alpha = params.alpha;
    auto g = [&](double r) {
        return r <= 0.0 ? 1.0 : psi_mixture(params.law, std::pow(r, -alpha));
    };
    return params.intensity * box_radial_integral(g, geometry.dim, geometry.side);
}

CampbellMoments campbell_check(const std::vector<RadialStep>& f, double lambda, double theta,
                               int d) {
    if (!(lambda > 0.0)) throw std::invalid_argument("campbell_check: lambda > 0");
    if (d < 1) throw std::invalid_argument("campbell_check: d >= 1");
    auto shells = f;
    std::sort(shells.begin(), shells.end(),
              [](const RadialStep& a, const RadialStep& b) { return a.r_lo < b.r_lo; });
    double prev_hi = 0.0;
    for (const auto& s : shells) {
        if (!(s.r_lo >= 0.0) || !(s.r_hi > s.r_lo) || !std::isfinite(s.r_hi) ||
            !std::isfinite(s.height))
            throw std::invalid_argument("campbell_check: shells must be bounded with finite height");
        if (s.r_lo < prev_hi) throw std::invalid_argument("campbell_check: shells overlap");
        prev_hi = s.r_hi;
    }
    const double vd = unit_ball_volume(d);
    CampbellMoments m{0.0, 0.0, 0.0};
    for (const auto& s : shells) {
        const double vol = vd * (pow_int(s.r_hi, d) - pow_int(s.r_lo, d));
        m.mean += lambda * s.height * vol;
        m.variance += lambda * s.height * s.height * vol;
        m.log_mgf += lambda * std::expm1(theta * s.height) * vol;
    }
    return m;
}

}  // namespace sfp::theory
