#pragma once

#include <functional>
#include <stdexcept>

#include "echokit/model.hpp"

// Adaptive 1-D quadrature (Gauss-Kronrod 7/15 with bisection) and the nested
// double integral over the singular TLS distribution P(R,E).

namespace echokit {

struct IntegrationPlan {
    double rel_tol = 1e-6;
    double abs_tol = 0.0;
    int max_subdivisions = 400;
    enum class RateGrid { log_spaced, singularity_mapped };
    RateGrid r_grid_kind = RateGrid::singularity_mapped;
    int e_grid_points = 32;  // initial panels of the outer energy integral

    void validate() const;
};

struct QuadResult {
    double value = 0.0;
    double error = 0.0;  // absolute error estimate
};

// Thrown when the subdivision budget is exhausted before reaching the
// requested tolerance; carries the best available estimate.
class QuadratureError : public std::runtime_error {
  public:
    QuadratureError(const std::string& what, double best, double err)
        : std::runtime_error(what), best_value(best), error_estimate(err) {}
    double best_value;
    double error_estimate;
};

// Thrown when the integration domain is empty (R_max(E) <= r_min everywhere).
class DegenerateDomainError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Adaptive estimate of int_a^b f, accurate to max(abs_tol, rel_tol*|value|).
// Endpoints are never evaluated, so integrable endpoint singularities are
// admissible. Deterministic: the segment sum is accumulated left to right.
QuadResult integrate_1d(const std::function<double(double)>& f, double a, double b,
                        const IntegrationPlan& plan);

// Inner rate integral at fixed E: int_{r_min}^{R_max(E)} f(R) P(R,E) dR.
// With RateGrid::singularity_mapped the substitution R = R_max sin^2(theta)
// removes the inverse-square-root endpoint singularity; log_spaced integrates
// in ln R instead. Returns {0,0} for an empty slice.
QuadResult integrate_rate_slice(const std::function<double(double)>& f, double e_split,
                                const TLSDistribution& dist, double temperature,
                                const IntegrationPlan& plan);

// Double integral of f(R,E) P(R,E) over R in [r_min, R_max(E)),
// E in [0, e_max_factor*kT]; normalized to the domain mass when
// dist.normalize is set. Inner errors propagate additively (conservative).
QuadResult integrate_tls(const std::function<double(double, double)>& f,
                         const TLSDistribution& dist, double temperature,
                         const IntegrationPlan& plan);

// Energy below which the rate slice is empty (R_max(E) <= r_min), found by
// bisection on [0, e_max_factor*kT]. Throws DegenerateDomainError when the
// whole domain is empty.
double tls_energy_floor(const TLSDistribution& dist, double temperature);

}  // namespace echokit
