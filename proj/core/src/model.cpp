#include "echokit/model.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "echokit/constants.hpp"

namespace echokit {

namespace {
constexpr double kB = constants::k_boltzmann;
constexpr double muB = constants::mu_bohr;

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(std::string("echokit: ") + what);
}
}  // namespace

void Environment::validate() const {
    require(field_B >= 0.0, "Environment: field_B must be >= 0");
    require(temperature_T > 0.0, "Environment: temperature_T must be > 0");
    require(std::isfinite(field_B) && std::isfinite(temperature_T),
            "Environment: non-finite value");
}

void ModelParams::validate() const {
    require(gamma0 >= 0.0, "ModelParams: gamma0 must be >= 0");
    require(alpha0 >= 0.0, "ModelParams: alpha0 must be >= 0");
    require(n >= 1.0 && n <= 1.5, "ModelParams: n must be in [1, 1.5]");
    require(g_env >= 0.0 && g_env <= 18.0, "ModelParams: g_env must be in [0, 18]");
    require(c1 >= 0.0, "ModelParams: c1 must be >= 0");
    require(c2 >= 0.0, "ModelParams: c2 must be >= 0");
    require(gammaS0 > 0.0, "ModelParams: gammaS0 must be > 0");
    require(gammaS_slope >= 0.0, "ModelParams: gammaS_slope must be >= 0");
}

ModelParams ModelParams::paper_defaults() {
    ModelParams p;
    p.gamma0 = 0.0;
    p.alpha0 = 1.1e6;   // Hz K^-n
    p.n = 1.35;
    p.g_env = 12.5;
    p.c1 = 1.0e22;      // Hz^3
    p.c2 = 5.0e13;      // Hz^2 T^-1 K^-1
    p.gammaS0 = 1.5e9;
    p.gammaS_slope = 150e9;
    return p;
}

ModelParams ModelParams::from_flip_ratios(double gamma_max, double alpha1_over_gmax,
                                          double alpha2_over_gmax,
                                          const ModelParams& base) {
    require(gamma_max >= 0.0, "from_flip_ratios: gamma_max must be >= 0");
    require(alpha1_over_gmax >= 0.0 && alpha2_over_gmax >= 0.0,
            "from_flip_ratios: ratios must be >= 0");
    ModelParams p = base;
    p.c1 = gamma_max * gamma_max * alpha1_over_gmax;
    p.c2 = gamma_max * gamma_max * alpha2_over_gmax;
    return p;
}

void TLSDistribution::validate() const {
    require(r_min > 0.0, "TLSDistribution: r_min must be > 0");
    require(r_max_coeff > 0.0, "TLSDistribution: r_max_coeff must be > 0");
    require(e_max_factor >= 5.0, "TLSDistribution: e_max_factor must be >= 5");
}

double TLSDistribution::coeff_for_rate_at_kT(double rate_at_kT, double temperature) {
    require(rate_at_kT > 0.0, "coeff_for_rate_at_kT: rate must be > 0");
    require(temperature > 0.0, "coeff_for_rate_at_kT: temperature must be > 0");
    const double kT = kB * temperature;
    return rate_at_kT * std::tanh(0.5) / (kT * kT * kT);
}

double thermal_sech2(double e_split, double temperature) {
    if (!(temperature > 0.0))
        throw std::domain_error("thermal_sech2: temperature must be > 0");
    const double x = e_split / (2.0 * kB * temperature);
    const double c = std::cosh(x);
    if (std::isinf(c)) return 0.0;
    return 1.0 / (c * c);
}

double gamma_sd(double e_split, double temperature, double gamma_max) {
    if (gamma_max < 0.0) throw std::domain_error("gamma_sd: gamma_max must be >= 0");
    return gamma_max * thermal_sech2(e_split, temperature);
}

double r_max(double e_split, double temperature, const TLSDistribution& dist) {
    if (!(temperature > 0.0)) throw std::domain_error("r_max: temperature must be > 0");
    if (e_split < 0.0) throw std::domain_error("r_max: e_split must be >= 0");
    const double kT2 = 2.0 * kB * temperature;
    const double x = e_split / kT2;
    // E^3 coth(E/2kT) -> 2kT E^2 as E -> 0
    if (x < 1e-6) return dist.r_max_coeff * e_split * e_split * kT2;
    return dist.r_max_coeff * e_split * e_split * e_split / std::tanh(x);
}

double tls_density(double rate, double e_split, const TLSDistribution& dist,
                   double temperature) {
    const double rm = r_max(e_split, temperature, dist);
    if (!(rate > 0.0) || rate >= rm)
        throw std::domain_error("tls_density: rate outside (0, R_max(E))");
    return 1.0 / (rate * std::sqrt(1.0 - rate / rm));
}

double tls_slice_mass(double e_split, double temperature, const TLSDistribution& dist) {
    const double rm = r_max(e_split, temperature, dist);
    if (rm <= dist.r_min) return 0.0;
    return 2.0 * std::atanh(std::sqrt(1.0 - dist.r_min / rm));
}

double flip_rate(const Environment& env, const ModelParams& p) {
    env.validate();
    const double s2 = thermal_sech2(p.g_env * muB * env.field_B, env.temperature_T);
    const double gammaS = p.gammaS0 + p.gammaS_slope * env.field_B;
    return p.c1 * s2 / gammaS + p.c2 * env.field_B * env.temperature_T;
}

double sd_rate_product(const Environment& env, const ModelParams& p) {
    const double s2 = thermal_sech2(p.g_env * muB * env.field_B, env.temperature_T);
    return s2 * flip_rate(env, p);
}

double coherence_time(const Environment& env, const ModelParams& p) {
    env.validate();
    const double G = p.gamma0 + p.alpha0 * std::pow(env.temperature_T, p.n);
    const double x = sd_rate_product(env, p);
    if (G <= 0.0 && x <= 0.0)
        throw std::domain_error("coherence_time: infinite coherence time "
                                "(both dephasing channels are zero)");
    if (G <= 0.0) {
        // Pure spectral diffusion: T2 = 2 sqrt(pi/x) ... limit of the closed
        // form as G -> 0.
        return 2.0 / std::sqrt(std::numbers::pi * x);
    }
    const double u = x / (std::numbers::pi * G * G);
    if (u < 1e-8) {
        // Second-order expansion of (2G/x)(sqrt(1+u)-1) = (1/(pi G)) (1 - u/4 + u^2/8)
        return (1.0 - 0.25 * u + 0.125 * u * u) / (std::numbers::pi * G);
    }
    // sqrt(1+u)-1 = u/(1+sqrt(1+u)) avoids cancellation for small u
    const double root = u / (1.0 + std::sqrt(1.0 + u));
    return 2.0 * G / x * root;
}

double effective_linewidth(const Environment& env, const ModelParams& p) {
    return 1.0 / (std::numbers::pi * coherence_time(env, p));
}

}  // namespace echokit
