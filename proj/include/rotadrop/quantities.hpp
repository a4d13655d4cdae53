#ifndef ROTADROP_QUANTITIES_HPP
#define ROTADROP_QUANTITIES_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "rotadrop/core.hpp"
#include "rotadrop/ode.hpp"

namespace rotadrop {

namespace detail {

// Composite Simpson over uniformly spaced values; a 3/8 block absorbs an
// odd interval count.
inline double simpson(const std::vector<double>& v, double h) {
    const std::size_t n = v.size();
    if (n < 2) return 0.0;
    if (n == 2) return 0.5 * h * (v[0] + v[1]);
    std::size_t intervals = n - 1;
    double total = 0.0;
    std::size_t start = 0;
    if (intervals % 2 != 0) {
        if (intervals < 3) return 0.5 * h * (v[0] + v[1]);
        total += 3.0 * h / 8.0 * (v[0] + 3.0 * v[1] + 3.0 * v[2] + v[3]);
        start = 3;
        intervals -= 3;
    }
    if (intervals > 0) {
        double acc = v[start] + v[start + intervals];
        for (std::size_t i = 1; i < intervals; ++i)
            acc += (i % 2 == 1 ? 4.0 : 2.0) * v[start + i];
        total += h / 3.0 * acc;
    }
    return total;
}

// Integrates g(sample) ds over the curve samples.
inline double integrate(const ProfileCurve& curve,
                        const std::function<double(const ProfileSample&)>& g) {
    const auto& pts = curve.samples;
    if (pts.size() < 2) return 0.0;
    std::vector<double> vals;
    vals.reserve(pts.size());
    for (const auto& q : pts) vals.push_back(g(q));
    const double h = pts[1].s - pts[0].s;
    return simpson(vals, h);
}

}  // namespace detail

// Lateral area A = 2 pi int r ds of the revolved curve.
inline double area(const ProfileCurve& curve) {
    return 2.0 * std::acos(-1.0) *
           detail::integrate(curve, [](const ProfileSample& q) { return q.r; });
}

inline double area(const ProfileCurve& curve, double c) {
    return area(truncate(curve, c));
}

// Volume integral 2 pi int r^2 u' dr, evaluated as 2 pi int r^2 sin(psi) ds.
// For a closed drop this is the full enclosed volume relative to the
// mirror construction.
inline double volume(const ProfileCurve& curve) {
    return 2.0 * std::acos(-1.0) *
           detail::integrate(curve, [](const ProfileSample& q) {
               return q.r * q.r * std::sin(q.psi);
           });
}

inline double volume(const ProfileCurve& curve, double c) {
    return volume(truncate(curve, c));
}

// Height of the truncated graph, u(c) - u0.
inline double height(const ProfileCurve& curve) {
    return curve.u_end() - curve.params.u0;
}

inline double height(const ProfileCurve& curve, double c) {
    return height(truncate(curve, c));
}

// Energy of the immersion: area plus the rotation and volume terms,
//   E = A + 2 pi a int r^3 u dr + 2 pi b int r u dr,
// with dr = cos(psi) ds on the arc-length samples.
inline double energy(const ProfileCurve& curve) {
    const double a = curve.params.a, b = curve.params.b;
    const double weighted =
        detail::integrate(curve, [a, b](const ProfileSample& q) {
            return (a * q.r * q.r + b) * q.r * q.u * std::cos(q.psi);
        });
    return area(curve) + 2.0 * std::acos(-1.0) * weighted;
}

inline double energy(const ProfileCurve& curve, double c) {
    return energy(truncate(curve, c));
}

// Second-variation quadratic form on the horizontal Gauss-map component:
//   Q(N1) = -4 pi a int_0^{c0} r^2 u'(r) dr = -2 a V.
// A negative value certifies instability of the closed drop.
inline double stability_q_n1(const ClosedProfile& closed) {
    return -2.0 * closed.lower.params.a * volume(closed.lower);
}

struct FluxCheck {
    double lhs;       // 2 pi c^2 (a c^2 + 2b)
    double rhs;       // 8 pi c sin(psi(c))
    double residual;  // relative
};

// Boundary flux identity on the truncation circle of radius c. Both sides
// agree exactly in the continuum; the residual measures integration error.
inline FluxCheck boundary_flux_check(const ProfileCurve& curve, double c) {
    const ProfileCurve cut = truncate(curve, c);
    const double pi = std::acos(-1.0);
    const double a = curve.params.a, b = curve.params.b;
    FluxCheck chk{};
    chk.lhs = 2.0 * pi * c * c * (a * c * c + 2.0 * b);
    chk.rhs = 8.0 * pi * cut.c_end() * std::sin(cut.psi_end());
    const double eps = 1e-300;
    chk.residual = std::abs(chk.lhs - chk.rhs) /
                   std::max({std::abs(chk.lhs), std::abs(chk.rhs), eps});
    return chk;
}

inline FluxCheck boundary_flux_check(const ProfileCurve& curve) {
    return boundary_flux_check(curve, curve.c_end());
}

// Necessary boundary condition margin 4/c - |a c^2 + 2b|; nonnegative
// whenever a surface spanning the circle of radius c exists.
inline double heinz_margin(double c, double a, double b) {
    if (c <= 0.0)
        throw std::invalid_argument("heinz_margin: c must be positive");
    return 4.0 / c - std::abs(a * c * c + 2.0 * b);
}

struct QuantityReport {
    double area = 0.0;      // closed-surface area, 2 A(c0)
    double volume = 0.0;    // enclosed volume
    double height = 0.0;    // total height, 2 (u(c0) - u0)
    double energy = 0.0;    // E of the lower half
    double q_n1 = 0.0;      // stability indicator
    double c0 = 0.0;
    double flux_residual = 0.0;
    double heinz_margin = 0.0;
};

// Full report for the closed drop of the given parameters.
inline QuantityReport quantity_report(const ClosedProfile& closed) {
    const ProfileCurve& low = closed.lower;
    QuantityReport rep;
    rep.area = 2.0 * area(low);
    rep.volume = volume(low);
    rep.height = closed.total_height();
    rep.energy = energy(low);
    rep.q_n1 = stability_q_n1(closed);
    rep.c0 = find_c0(low.params.a, low.params.b);
    rep.flux_residual = boundary_flux_check(low).residual;
    rep.heinz_margin = heinz_margin(low.c_end(), low.params.a, low.params.b);
    return rep;
}

}  // namespace rotadrop

#endif
