#ifndef ROTADROP_ODE_HPP
#define ROTADROP_ODE_HPP

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "rotadrop/core.hpp"
#include "rotadrop/params.hpp"

namespace rotadrop {

// One point of the profile in arc-length variables. The profile solves
//   dr/ds = cos(psi), du/ds = sin(psi), dpsi/ds = kappa(r)
// with r(0) = 0, u(0) = u0, psi(0) = 0, which is the mean-curvature
// equation of the revolved graph without the 1/r axis singularity or the
// u' blow-up at the vertical tangent.
struct ProfileSample {
    double s;    // arc length
    double r;    // radius
    double u;    // height
    double psi;  // tangent angle, sin(psi) = f(r)
};

enum class StopReason { VerticalTangent, RadiusReached, StepLimit };

struct StopCondition {
    enum class Kind { ToVerticalTangent, ToRadius };
    Kind kind = Kind::ToVerticalTangent;
    double r_max = 0.0;

    static StopCondition vertical_tangent() { return {}; }
    static StopCondition radius(double r) {
        return {Kind::ToRadius, r};
    }
};

struct SolveOptions {
    double step = 1e-4;            // base integration step in arc length
    double event_tol = 1e-10;      // bisection tolerance in s for the stop event
    std::size_t samples = 2048;    // stored samples per curve
    std::size_t max_steps = 20000000;
};

struct ProfileCurve {
    std::vector<ProfileSample> samples;
    DropParams params;
    SurfaceType surface_type = SurfaceType::CMC;
    StopReason stop_reason = StopReason::StepLimit;
    SolveOptions options;

    double arc_length() const { return samples.back().s; }
    double c_end() const { return samples.back().r; }
    double u_end() const { return samples.back().u; }
    double psi_end() const { return samples.back().psi; }
};

namespace detail {

struct OdeState {
    double r, u, psi;
};

inline OdeState rk4_step(const OdeState& y, double h, const DropParams& p) {
    auto deriv = [&p](const OdeState& z) {
        return OdeState{std::cos(z.psi), std::sin(z.psi),
                        profile_curvature(z.r, p)};
    };
    auto axpy = [](const OdeState& y0, double c, const OdeState& k) {
        return OdeState{y0.r + c * k.r, y0.u + c * k.u, y0.psi + c * k.psi};
    };
    const OdeState k1 = deriv(y);
    const OdeState k2 = deriv(axpy(y, 0.5 * h, k1));
    const OdeState k3 = deriv(axpy(y, 0.5 * h, k2));
    const OdeState k4 = deriv(axpy(y, h, k3));
    return OdeState{
        y.r + h / 6.0 * (k1.r + 2.0 * k2.r + 2.0 * k3.r + k4.r),
        y.u + h / 6.0 * (k1.u + 2.0 * k2.u + 2.0 * k3.u + k4.u),
        y.psi + h / 6.0 * (k1.psi + 2.0 * k2.psi + 2.0 * k3.psi + k4.psi)};
}

}  // namespace detail

// Integrates the profile from the axis until the requested stop condition.
// In ToRadius mode the vertical tangent still terminates the curve if it
// is reached first. The stored samples are uniform in arc length with the
// refined event state as the exact last sample.
inline ProfileCurve solve_profile(const DropParams& p,
                                  StopCondition stop = StopCondition::vertical_tangent(),
                                  SolveOptions opts = {}) {
    if (p.d != 0.0)
        throw std::invalid_argument("solve_profile: requires d = 0");
    if (!is_canonical(p))
        throw std::invalid_argument("solve_profile: requires canonical form b >= 0");
    require_nondegenerate(p);
    if (opts.step <= 0.0 || opts.samples < 2)
        throw std::invalid_argument("solve_profile: bad step control");

    const double half_pi = std::asin(1.0);
    const bool to_radius = stop.kind == StopCondition::Kind::ToRadius;
    if (to_radius && stop.r_max < 0.0)
        throw std::invalid_argument("solve_profile: negative stop radius");

    // Event functions are negative before the stop and positive after.
    auto tangent_event = [&](const detail::OdeState& y) {
        return std::abs(y.psi) - half_pi;
    };
    auto radius_event = [&](const detail::OdeState& y) {
        return y.r - stop.r_max;
    };

    detail::OdeState y{0.0, p.u0, 0.0};
    double s = 0.0;
    StopReason reason = StopReason::StepLimit;
    double s_end = 0.0;
    bool stopped = false;

    if (to_radius && stop.r_max == 0.0) {
        stopped = true;
        reason = StopReason::RadiusReached;
    }

    for (std::size_t n = 0; !stopped && n < opts.max_steps; ++n) {
        const detail::OdeState y_next = detail::rk4_step(y, opts.step, p);
        const double s_next = s + opts.step;

        // Combined event: the max crosses zero at the earlier stop.
        auto event = [&](const detail::OdeState& z) {
            double g = tangent_event(z);
            if (to_radius) g = std::max(g, radius_event(z));
            return g;
        };
        if (event(y_next) >= 0.0) {
            // Localize inside [s, s_next] by bisection on the step
            // fraction, re-integrating from the pre-step state.
            double lo = 0.0, hi = opts.step;
            while (hi - lo > opts.event_tol) {
                const double m = 0.5 * (lo + hi);
                if (event(detail::rk4_step(y, m, p)) >= 0.0) hi = m;
                else lo = m;
            }
            s_end = s + hi;
            const detail::OdeState z_end = detail::rk4_step(y, hi, p);
            reason = (!to_radius || tangent_event(z_end) >= radius_event(z_end))
                         ? StopReason::VerticalTangent
                         : StopReason::RadiusReached;
            stopped = true;
            break;
        }
        y = y_next;
        s = s_next;
    }
    if (!stopped && reason == StopReason::StepLimit) s_end = s;

    // Second pass: uniform samples over [0, s_end], substepping each
    // sample interval at or below the base step.
    ProfileCurve curve;
    curve.params = p;
    curve.surface_type = classify(p.a, p.b);
    curve.stop_reason = reason;
    curve.options = opts;
    curve.samples.reserve(opts.samples);

    detail::OdeState z{0.0, p.u0, 0.0};
    curve.samples.push_back({0.0, z.r, z.u, z.psi});
    if (s_end > 0.0) {
        const std::size_t intervals = opts.samples - 1;
        const double ds = s_end / static_cast<double>(intervals);
        const std::size_t m = std::max<std::size_t>(
            1, static_cast<std::size_t>(std::ceil(ds / opts.step)));
        const double h = ds / static_cast<double>(m);
        for (std::size_t i = 1; i <= intervals; ++i) {
            for (std::size_t j = 0; j < m; ++j)
                z = detail::rk4_step(z, h, p);
            const double si = static_cast<double>(i) * ds;
            curve.samples.push_back({si, z.r, z.u, z.psi});
        }
    }
    return curve;
}

// Re-solves the curve truncated at radius c with the same step control.
inline ProfileCurve truncate(const ProfileCurve& curve, double c) {
    if (c < 0.0 || c > curve.c_end() + 1e-9)
        throw std::invalid_argument("truncate: radius out of range");
    if (c >= curve.c_end()) return curve;
    return solve_profile(curve.params, StopCondition::radius(c), curve.options);
}

// Max deviation of the first-integral conservation law sin(psi) = f(r)
// over the stored samples; the integration-quality metric.
inline double profile_residual(const ProfileCurve& curve) {
    double worst = 0.0;
    for (const auto& q : curve.samples)
        worst = std::max(worst,
                         std::abs(std::sin(q.psi) -
                                  first_integral(q.r, curve.params.a,
                                                 curve.params.b)));
    return worst;
}

// Closed surface obtained by reflecting the revolved profile about the
// horizontal plane x3 = u(c0).
struct ClosedProfile {
    ProfileCurve lower;
    double mirror_height = 0.0;
    bool embedded = true;           // geometric polyline-crossing test
    bool embedded_by_criterion = true;  // u0 > u(c0) rule for TypeIIb

    double total_height() const {
        return 2.0 * (mirror_height - lower.params.u0);
    }
};

inline ClosedProfile close_profile(const ProfileCurve& curve) {
    if (curve.stop_reason != StopReason::VerticalTangent)
        throw std::invalid_argument(
            "close_profile: curve must stop at the vertical tangent");
    ClosedProfile closed;
    closed.lower = curve;
    closed.mirror_height = curve.u_end();

    // The mirrored generating curve is the reflection about u = u_end.
    // Both polylines are graphs over the same radii, so a crossing exists
    // exactly where u_i - u_end changes sign away from the endpoint.
    bool crossing = false;
    const double ue = closed.mirror_height;
    const auto& pts = curve.samples;
    for (std::size_t i = 0; i + 2 < pts.size(); ++i) {
        const double d0 = pts[i].u - ue;
        const double d1 = pts[i + 1].u - ue;
        if (d0 == 0.0 || (d0 > 0.0) != (d1 > 0.0)) {
            crossing = true;
            break;
        }
    }
    closed.embedded = !crossing;
    closed.embedded_by_criterion =
        curve.surface_type != SurfaceType::TypeIIb ||
        curve.params.u0 > curve.u_end();
    return closed;
}

// CSV dump of the samples, 17 significant digits.
inline void write_csv(const ProfileCurve& curve, std::ostream& out) {
    out << "s,r,u,psi\n";
    char line[160];
    for (const auto& q : curve.samples) {
        std::snprintf(line, sizeof(line), "%.17g,%.17g,%.17g,%.17g\n", q.s,
                      q.r, q.u, q.psi);
        out << line;
    }
}

}  // namespace rotadrop

#endif
