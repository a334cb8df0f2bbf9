#include "echokit/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "echokit/constants.hpp"

namespace echokit {

namespace {

// Gauss-Kronrod 7/15 nodes and weights on [-1, 1] (QUADPACK values).
constexpr double kronrod_x[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double kronrod_w[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double gauss_w[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Segment {
    double a, b;
    double value;
    double error;
};

// G7/K15 rule on [a, b]; QUADPACK-style error estimate.
Segment gk15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);

    double fv[15];
    fv[7] = f(c);
    for (int i = 0; i < 7; ++i) {
        fv[i] = f(c - h * kronrod_x[i]);
        fv[14 - i] = f(c + h * kronrod_x[i]);
    }

    double result_k = kronrod_w[7] * fv[7];
    double result_g = gauss_w[3] * fv[7];
    double resabs = kronrod_w[7] * std::abs(fv[7]);
    for (int i = 0; i < 7; ++i) {
        result_k += kronrod_w[i] * (fv[i] + fv[14 - i]);
        resabs += kronrod_w[i] * (std::abs(fv[i]) + std::abs(fv[14 - i]));
        if (i % 2 == 1) result_g += gauss_w[i / 2] * (fv[i] + fv[14 - i]);
    }
    const double mean = 0.5 * result_k;
    double resasc = kronrod_w[7] * std::abs(fv[7] - mean);
    for (int i = 0; i < 7; ++i)
        resasc += kronrod_w[i] * (std::abs(fv[i] - mean) + std::abs(fv[14 - i] - mean));

    result_k *= h;
    result_g *= h;
    resabs *= std::abs(h);
    resasc *= std::abs(h);

    double err = std::abs(result_k - result_g);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    const double eps = std::numeric_limits<double>::epsilon();
    if (resabs > std::numeric_limits<double>::min() / (50.0 * eps))
        err = std::max(err, 50.0 * eps * resabs);

    return {a, b, result_k, err};
}

// Deterministic sum over segments, ordered by left endpoint.
QuadResult collect(std::vector<Segment>& segs) {
    std::sort(segs.begin(), segs.end(),
              [](const Segment& l, const Segment& r) { return l.a < r.a; });
    QuadResult out;
    for (const Segment& s : segs) {
        out.value += s.value;
        out.error += s.error;
    }
    return out;
}

QuadResult adaptive(const std::function<double(double)>& f, double a, double b,
                    const IntegrationPlan& plan, int initial_panels) {
    std::vector<Segment> segs;
    segs.reserve(static_cast<std::size_t>(plan.max_subdivisions) + initial_panels + 1);
    const double w = (b - a) / initial_panels;
    for (int i = 0; i < initial_panels; ++i) {
        const double lo = a + i * w;
        const double hi = (i + 1 == initial_panels) ? b : a + (i + 1) * w;
        segs.push_back(gk15(f, lo, hi));
    }

    auto tolerance_met = [&](const QuadResult& r) {
        return r.error <= std::max(plan.abs_tol, plan.rel_tol * std::abs(r.value));
    };

    QuadResult total = collect(segs);
    int splits = 0;
    while (!tolerance_met(total)) {
        if (splits >= plan.max_subdivisions)
            throw QuadratureError("integrate_1d: subdivision budget exhausted",
                                  total.value, total.error);
        // Split the worst segment; ties break toward the leftmost for
        // order-independent determinism.
        std::size_t worst = 0;
        for (std::size_t i = 1; i < segs.size(); ++i) {
            if (segs[i].error > segs[worst].error ||
                (segs[i].error == segs[worst].error && segs[i].a < segs[worst].a))
                worst = i;
        }
        const Segment seg = segs[worst];
        const double mid = 0.5 * (seg.a + seg.b);
        if (mid <= seg.a || mid >= seg.b)
            throw QuadratureError("integrate_1d: interval too small to subdivide",
                                  total.value, total.error);
        segs[worst] = gk15(f, seg.a, mid);
        segs.push_back(gk15(f, mid, seg.b));
        ++splits;
        total = collect(segs);
    }
    return total;
}

}  // namespace

void IntegrationPlan::validate() const {
    if (!(rel_tol > 0.0)) throw std::invalid_argument("IntegrationPlan: rel_tol must be > 0");
    if (abs_tol < 0.0) throw std::invalid_argument("IntegrationPlan: abs_tol must be >= 0");
    if (max_subdivisions < 1)
        throw std::invalid_argument("IntegrationPlan: max_subdivisions must be >= 1");
    if (e_grid_points < 8)
        throw std::invalid_argument("IntegrationPlan: e_grid_points must be >= 8");
}

QuadResult integrate_1d(const std::function<double(double)>& f, double a, double b,
                        const IntegrationPlan& plan) {
    plan.validate();
    if (!(a < b)) throw std::invalid_argument("integrate_1d: requires a < b");
    return adaptive(f, a, b, plan, 1);
}

QuadResult integrate_rate_slice(const std::function<double(double)>& f, double e_split,
                                const TLSDistribution& dist, double temperature,
                                const IntegrationPlan& plan) {
    plan.validate();
    dist.validate();
    const double rm = r_max(e_split, temperature, dist);
    if (rm <= dist.r_min) return {0.0, 0.0};

    if (plan.r_grid_kind == IntegrationPlan::RateGrid::singularity_mapped) {
        // R = R_max sin^2(theta): P dR = (2/sin(theta)) dtheta, endpoint
        // singularity at R -> R_max absorbed by the map.
        const double theta_min = std::asin(std::sqrt(dist.r_min / rm));
        auto g = [&](double theta) {
            const double s = std::sin(theta);
            return 2.0 * f(rm * s * s) / s;
        };
        return adaptive(g, theta_min, std::numbers::pi / 2.0, plan, 1);
    }
    // ln R grid: P dR = dv / sqrt(1 - e^v / R_max); the sqrt endpoint
    // singularity is left to the adaptive rule (nodes avoid endpoints).
    auto g = [&](double v) {
        const double R = std::exp(v);
        return f(R) / std::sqrt(1.0 - R / rm);
    };
    return adaptive(g, std::log(dist.r_min), std::log(rm), plan, 1);
}

double tls_energy_floor(const TLSDistribution& dist, double temperature) {
    dist.validate();
    const double e_hi = dist.e_max_factor * constants::k_boltzmann * temperature;
    if (r_max(e_hi, temperature, dist) <= dist.r_min)
        throw DegenerateDomainError(
            "integrate_tls: R_max(E) <= r_min across the whole energy range");
    if (r_max(0.0, temperature, dist) > dist.r_min) return 0.0;
    double lo = 0.0, hi = e_hi;
    for (int i = 0; i < 200 && (hi - lo) > 1e-15 * e_hi; ++i) {
        const double mid = 0.5 * (lo + hi);
        (r_max(mid, temperature, dist) > dist.r_min ? hi : lo) = mid;
    }
    return hi;
}

QuadResult integrate_tls(const std::function<double(double, double)>& f,
                         const TLSDistribution& dist, double temperature,
                         const IntegrationPlan& plan) {
    plan.validate();
    dist.validate();
    if (!(temperature > 0.0))
        throw std::invalid_argument("integrate_tls: temperature must be > 0");

    const double e_lo = tls_energy_floor(dist, temperature);
    const double e_hi = dist.e_max_factor * constants::k_boltzmann * temperature;

    // Inner slices run at a tighter tolerance; their error estimates are
    // tracked as a worst-case relative error and added to the outer estimate.
    IntegrationPlan inner = plan;
    inner.rel_tol = plan.rel_tol * 0.25;
    double inner_rel_err = 0.0;
    auto outer_f = [&](double E) {
        auto fr = [&](double R) { return f(R, E); };
        const QuadResult r = integrate_rate_slice(fr, E, dist, temperature, inner);
        if (r.value != 0.0)
            inner_rel_err = std::max(inner_rel_err, r.error / std::abs(r.value));
        return r.value;
    };

    const int panels = std::max(1, plan.e_grid_points - 1);
    QuadResult num = adaptive(outer_f, e_lo, e_hi, plan, panels);
    num.error += inner_rel_err * std::abs(num.value);

    if (!dist.normalize) return num;

    auto mass_f = [&](double E) { return tls_slice_mass(E, temperature, dist); };
    const QuadResult norm = adaptive(mass_f, e_lo, e_hi, plan, panels);
    if (norm.value <= 0.0)
        throw DegenerateDomainError("integrate_tls: zero normalization mass");
    QuadResult out;
    out.value = num.value / norm.value;
    out.error = num.error / norm.value +
                std::abs(out.value) * norm.error / norm.value;
    return out;
}

}  // namespace echokit
