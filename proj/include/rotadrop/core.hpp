#ifndef ROTADROP_CORE_HPP
#define ROTADROP_CORE_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <utility>

#include "rotadrop/params.hpp"

namespace rotadrop {

// Thrown when a bracketed root search cannot establish a sign change,
// e.g. asking for the TypeIIb terminal radius of parameters that never
// reach f = -1.
struct NumericDomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// First integral of the profile equation: f(r) = r(a r^2 + 2b)/4 + d/r.
// Equals sin(psi(r)) wherever a profile exists.
inline double first_integral(double r, const DropParams& p) {
    if (p.d != 0.0) {
        if (r <= 0.0)
            throw std::domain_error("first_integral: r must be positive when d != 0");
        return 0.25 * r * (p.a * r * r + 2.0 * p.b) + p.d / r;
    }
    if (r < 0.0)
        throw std::domain_error("first_integral: r must be nonnegative");
    return 0.25 * r * (p.a * r * r + 2.0 * p.b);
}

inline double first_integral(double r, double a, double b, double d = 0.0) {
    return first_integral(r, DropParams{a, b, 0.0, d});
}

// Planar curvature of the generating curve: kappa(r) = (3a r^2 + 2b)/4.
// This is also f'(r) when d = 0.
inline double profile_curvature(double r, const DropParams& p) {
    if (p.d != 0.0)
        throw std::domain_error("profile_curvature: requires d = 0");
    return 0.25 * (3.0 * p.a * r * r + 2.0 * p.b);
}

inline double profile_curvature(double r, double a, double b) {
    return profile_curvature(r, DropParams{a, b});
}

// Inflection radius r1 = sqrt(-2b/(3a)) and height-maximum radius
// r2 = sqrt(-2b/a), defined only for a < 0, b > 0.
inline std::pair<double, double> critical_radii(double a, double b) {
    if (a >= 0.0 || b <= 0.0)
        throw std::invalid_argument("critical_radii: requires a < 0, b > 0");
    return {std::sqrt(-2.0 * b / (3.0 * a)), std::sqrt(-2.0 * b / a)};
}

// Classifies the drop family. Accepts non-canonical input by flipping
// first. At the exact threshold f(r1) = 1 the profile still terminates
// with f = +1, so the pair is labelled TypeIIa.
inline SurfaceType classify(double a, double b) {
    auto canon = canonicalize(DropParams{a, b});
    a = canon.params.a;
    b = canon.params.b;
    if (a == 0.0 && b == 0.0)
        throw std::invalid_argument("classify: a and b cannot both be zero");
    if (a == 0.0) return SurfaceType::CMC;
    if (a > 0.0) return SurfaceType::TypeI;
    const double r1 = critical_radii(a, b).first;
    return first_integral(r1, a, b) >= 1.0 ? SurfaceType::TypeIIa
                                           : SurfaceType::TypeIIb;
}

inline SurfaceType classify(const DropParams& p) { return classify(p.a, p.b); }

namespace detail {

// Bracketed bisection refined by Newton. The bracket [lo, hi] must carry a
// sign change of g; dg may be null (pure bisection then).
inline double find_root(const std::function<double(double)>& g,
                        const std::function<double(double)>& dg,
                        double lo, double hi, double tol = 1e-12) {
    double glo = g(lo), ghi = g(hi);
    if (glo == 0.0) return lo;
    if (ghi == 0.0) return hi;
    if ((glo > 0.0) == (ghi > 0.0))
        throw NumericDomainError("find_root: no sign change in bracket");
    double x = 0.5 * (lo + hi);
    for (int it = 0; it < 200; ++it) {
        double gx = g(x);
        if (std::abs(gx) <= tol) break;
        if ((gx > 0.0) == (ghi > 0.0)) { hi = x; ghi = gx; }
        else { lo = x; glo = gx; }
        double next = 0.5 * (lo + hi);
        if (dg) {
            double slope = dg(x);
            if (slope != 0.0) {
                double newton = x - gx / slope;
                if (newton > lo && newton < hi) next = newton;
            }
        }
        if (next == x) break;
        x = next;
    }
    return x;
}

}  // namespace detail

// Maximal radius c0 of the profile graph. For CMC, TypeI and TypeIIa it is
// the smallest r > 0 with f(r) = +1 (the unique positive root of
// r(a r^2 + 2b) - 4 = 0 when a > 0, b >= 0). For TypeIIb it is the first
// r > r2 with f(r) = -1; f -> -inf there, so a doubling bracket terminates.
inline double find_c0(double a, double b, double tol = 1e-12) {
    auto canon = canonicalize(DropParams{a, b});
    a = canon.params.a;
    b = canon.params.b;
    const SurfaceType type = classify(a, b);
    auto f = [a, b](double r) { return first_integral(r, a, b); };
    auto df = [a, b](double r) { return profile_curvature(r, a, b); };

    if (type == SurfaceType::TypeIIb) {
        const double r2 = critical_radii(a, b).second;
        auto g = [&](double r) { return f(r) + 1.0; };
        double hi = 2.0 * r2;
        for (int k = 0; k < 64 && g(hi) > 0.0; ++k) hi *= 2.0;
        if (g(hi) > 0.0)
            throw NumericDomainError("find_c0: TypeIIb bracket failure");
        return detail::find_root(g, df, r2, hi, tol);
    }

    auto g = [&](double r) { return f(r) - 1.0; };
    double hi = (type == SurfaceType::TypeIIa)
                    ? critical_radii(a, b).first
                    : [&] {
                          double h = 1.0;
                          for (int k = 0; k < 64 && g(h) < 0.0; ++k) h *= 2.0;
                          return h;
                      }();
    if (g(hi) < 0.0)
        throw NumericDomainError("find_c0: bracket failure");
    return detail::find_root(g, df, 0.0, hi, tol);
}

inline double find_c0(const DropParams& p, double tol = 1e-12) {
    return find_c0(p.a, p.b, tol);
}

// Comparison circle of the sandwich theorems: a lower half-circle with the
// same slope as the profile at r = c and the same value at r = 0.
// Radius R = c / f(c) = 4 / (a c^2 + 2b).
struct ComparisonCircle {
    double radius;        // R
    double center_height; // upper circle: y(r) = R + u0 - sqrt(R^2 - r^2)
    double w_offset;      // lower circle: w(r) = y(r) + w_offset

    double upper(double r) const {
        return center_height - std::sqrt(std::max(0.0, radius * radius - r * r));
    }
    double lower(double r) const { return upper(r) + w_offset; }
};

// u_c is the profile height u(c), needed to anchor the lower circle.
inline ComparisonCircle comparison_circle(double c, const DropParams& p,
                                          double u_c) {
    if (p.a < 0.0 || p.b < 0.0)
        throw std::invalid_argument("comparison_circle: requires a >= 0, b >= 0");
    double fc = first_integral(c, p.a, p.b);
    if (c <= 0.0 || fc <= 0.0 || fc > 1.0 + 1e-9)
        throw std::invalid_argument("comparison_circle: need 0 < c <= c0 with f(c) > 0");
    fc = std::min(fc, 1.0);
    ComparisonCircle circ{};
    circ.radius = c / fc;
    circ.center_height = circ.radius + p.u0;
    circ.w_offset = u_c - circ.upper(c);
    return circ;
}

}  // namespace rotadrop

#endif
