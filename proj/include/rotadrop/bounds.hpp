#ifndef ROTADROP_BOUNDS_HPP
#define ROTADROP_BOUNDS_HPP

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "rotadrop/core.hpp"
#include "rotadrop/ode.hpp"
#include "rotadrop/quantities.hpp"

namespace rotadrop {

// One inequality check. margin = rhs - lhs (or the pointwise minimum for
// sampled bounds); equality marks a CMC case where the theorem attains.
struct BoundCheck {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
    bool hypothesis_met = false;
    bool passed = false;
    bool equality = false;
};

struct BoundReport {
    std::vector<BoundCheck> checks;

    bool all_passed() const {
        for (const auto& c : checks)
            if (c.hypothesis_met && !c.passed) return false;
        return true;
    }
};

namespace detail {

// Pass iff margin >= -tol * scale; CMC equality cases get tagged instead
// of judged strict.
inline BoundCheck judge(std::string name, double lhs, double rhs, double tol,
                        bool cmc) {
    BoundCheck chk;
    chk.name = std::move(name);
    chk.lhs = lhs;
    chk.rhs = rhs;
    chk.margin = rhs - lhs;
    chk.hypothesis_met = true;
    const double scale = std::max({std::abs(lhs), std::abs(rhs), 1.0});
    chk.passed = chk.margin >= -tol * scale;
    chk.equality = cmc && std::abs(chk.margin) <= tol * scale;
    return chk;
}

inline BoundCheck skipped(std::string name) {
    BoundCheck chk;
    chk.name = std::move(name);
    return chk;
}

}  // namespace detail

// Sandwich comparison against the two circles y (above) and w (below):
// u(r) < y(r) on (0, c] and w(r) < u(r) on [0, c). At a = 0 the profile
// is the circle itself and both margins vanish.
inline BoundReport check_sandwich(const ProfileCurve& curve,
                                  double tol = 1e-7) {
    const DropParams& p = curve.params;
    BoundReport rep;
    if (p.a < 0.0 || p.b < 0.0) {
        rep.checks.push_back(detail::skipped("sandwich_upper"));
        rep.checks.push_back(detail::skipped("sandwich_lower"));
        return rep;
    }
    const auto circ = comparison_circle(curve.c_end(), p, curve.u_end());
    const bool cmc = p.a == 0.0;
    // Worst sample of each side; lhs/rhs record the values there.
    double worst_up = std::numeric_limits<double>::infinity();
    double up_l = 0.0, up_r = 0.0;
    double worst_lo = std::numeric_limits<double>::infinity();
    double lo_l = 0.0, lo_r = 0.0;
    const auto& pts = curve.samples;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const double r = pts[i].r, u = pts[i].u;
        if (i > 0) {  // upper bound holds on (0, c]
            const double y = circ.upper(r);
            if (y - u < worst_up) { worst_up = y - u; up_l = u; up_r = y; }
        }
        if (i + 1 < pts.size()) {  // lower bound holds on [0, c)
            const double w = circ.lower(r);
            if (u - w < worst_lo) { worst_lo = u - w; lo_l = w; lo_r = u; }
        }
    }
    rep.checks.push_back(detail::judge("sandwich_upper", up_l, up_r, tol, cmc));
    rep.checks.push_back(detail::judge("sandwich_lower", lo_l, lo_r, tol, cmc));
    return rep;
}

// Height bounds at every sample and area bounds at the truncation radius:
//   (2 - sqrt(4 - b^2 r^2))/b <= u(r) - u0 <= (4 - sqrt(16 - r^2 (a r^2 + 2b)^2))/(a r^2 + 2b)
//   4 pi (2 - sqrt(4 - b^2 c^2))/b^2 < A(c) < 8 pi (4 - sqrt(16 - c^2 (a c^2 + 2b)^2))/(a c^2 + 2b)^2
inline BoundReport check_axi_bounds(const ProfileCurve& curve,
                                    double tol = 1e-7) {
    const DropParams& p = curve.params;
    BoundReport rep;
    const bool hyp = p.a >= 0.0 && p.b >= 0.0 && !(p.a == 0.0 && p.b == 0.0);
    const bool cmc = p.a == 0.0;
    if (!hyp) {
        for (const char* n : {"axi1_lower", "axi1_upper", "axi2_lower",
                              "axi2_upper"})
            rep.checks.push_back(detail::skipped(n));
        return rep;
    }

    double worst_low = std::numeric_limits<double>::infinity();
    double low_l = 0.0, low_r = 0.0;
    double worst_up = std::numeric_limits<double>::infinity();
    double up_l = 0.0, up_r = 0.0;
    bool domain_ok = true;
    for (std::size_t i = 1; i < curve.samples.size(); ++i) {
        const double r = curve.samples[i].r;
        const double du = curve.samples[i].u - p.u0;
        const double q = r * (p.a * r * r + 2.0 * p.b);
        if (4.0 - p.b * p.b * r * r < -tol || 16.0 - q * q < -tol) {
            domain_ok = false;  // outside r <= 2/b or past the maximal radius
            break;
        }
        if (p.b > 0.0) {
            const double lb =
                (2.0 - std::sqrt(std::max(0.0, 4.0 - p.b * p.b * r * r))) / p.b;
            if (du - lb < worst_low) { worst_low = du - lb; low_l = lb; low_r = du; }
        }
        const double denom = p.a * r * r + 2.0 * p.b;
        const double ub =
            (4.0 - std::sqrt(std::max(0.0, 16.0 - q * q))) / denom;
        if (ub - du < worst_up) { worst_up = ub - du; up_l = du; up_r = ub; }
    }

    if (!domain_ok) {
        rep.checks.push_back(detail::skipped("axi1_lower"));
        rep.checks.push_back(detail::skipped("axi1_upper"));
    } else {
        if (p.b > 0.0)
            rep.checks.push_back(
                detail::judge("axi1_lower", low_l, low_r, tol, cmc));
        else
            rep.checks.push_back(detail::skipped("axi1_lower"));
        rep.checks.push_back(detail::judge("axi1_upper", up_l, up_r, tol, cmc));
    }

    const double c = curve.c_end();
    const double A = area(curve);
    const double qc = c * (p.a * c * c + 2.0 * p.b);
    if (!domain_ok) {
        rep.checks.push_back(detail::skipped("axi2_lower"));
        rep.checks.push_back(detail::skipped("axi2_upper"));
        return rep;
    }
    const double pi = std::acos(-1.0);
    if (p.b > 0.0) {
        const double alb =
            4.0 * pi / (p.b * p.b) *
            (2.0 - std::sqrt(std::max(0.0, 4.0 - p.b * p.b * c * c)));
        rep.checks.push_back(detail::judge("axi2_lower", alb, A, tol, cmc));
    } else {
        rep.checks.push_back(detail::skipped("axi2_lower"));
    }
    const double denc = p.a * c * c + 2.0 * p.b;
    const double aub = 8.0 * pi *
                       (4.0 - std::sqrt(std::max(0.0, 16.0 - qc * qc))) /
                       (denc * denc);
    rep.checks.push_back(detail::judge("axi2_upper", A, aub, tol, cmc));
    return rep;
}

// Height-area estimate for the truncated graph:
//   u(c) - u0 <= |a c^2 + 2b| A(c) / (8 pi), for a != 0, ab >= 0;
// the CMC case a = 0 attains equality on spherical graphs.
inline BoundReport check_height_area_estimate(const ProfileCurve& curve,
                                              double tol = 1e-7) {
    const DropParams& p = curve.params;
    BoundReport rep;
    if (p.a * p.b < 0.0) {
        rep.checks.push_back(detail::skipped("height_area"));
        return rep;
    }
    const double c = curve.c_end();
    const double lhs = height(curve);
    const double rhs = std::abs(p.a * c * c + 2.0 * p.b) * area(curve) /
                       (8.0 * std::acos(-1.0));
    rep.checks.push_back(
        detail::judge("height_area", lhs, rhs, tol, p.a == 0.0));
    return rep;
}

// Enclosed-volume bound for closed Type I drops: V < (4 pi / 3) c0^3,
// with equality in the CMC limit.
inline BoundReport check_volume_bound(const ClosedProfile& closed,
                                      double tol = 1e-7) {
    const DropParams& p = closed.lower.params;
    BoundReport rep;
    if (p.a < 0.0 || p.b < 0.0) {
        rep.checks.push_back(detail::skipped("volume_bound"));
        return rep;
    }
    const double c0 = find_c0(p.a, p.b);
    const double V = volume(closed.lower);
    const double bound = 4.0 * std::acos(-1.0) / 3.0 * c0 * c0 * c0;
    rep.checks.push_back(
        detail::judge("volume_bound", V, bound, tol, p.a == 0.0));
    return rep;
}

// Serrin-type estimate u(r) <= b u0 / (a r^2 + b) + 2/b, valid for
// a, b > 0 only; it fails for type II surfaces.
inline BoundReport check_serrin_type(const ProfileCurve& curve,
                                     double tol = 1e-7) {
    const DropParams& p = curve.params;
    BoundReport rep;
    if (p.a <= 0.0 || p.b <= 0.0) {
        rep.checks.push_back(detail::skipped("serrin_type"));
        return rep;
    }
    double worst = std::numeric_limits<double>::infinity();
    double wl = 0.0, wr = 0.0;
    for (const auto& q : curve.samples) {
        const double bound =
            p.b / (p.a * q.r * q.r + p.b) * p.u0 + 2.0 / p.b;
        if (bound - q.u < worst) { worst = bound - q.u; wl = q.u; wr = bound; }
    }
    rep.checks.push_back(detail::judge("serrin_type", wl, wr, tol, false));
    return rep;
}

enum class ContactAngle { OrthogonalPositive, OrthogonalNegative, Tangent, Generic };

inline const char* to_string(ContactAngle c) {
    switch (c) {
        case ContactAngle::OrthogonalPositive: return "Orthogonal(+)";
        case ContactAngle::OrthogonalNegative: return "Orthogonal(-)";
        case ContactAngle::Tangent: return "Tangent";
        case ContactAngle::Generic: return "Generic";
    }
    return "?";
}

// Boundary-circle contact classification by the value of R(a R^2 + 2b):
// +4 / -4 mark orthogonal contact (counterclockwise / clockwise boundary),
// 0 with ab < 0 marks tangency.
inline ContactAngle contact_angle_classification(double a, double b, double R,
                                                 double tol = 1e-9) {
    if (R <= 0.0)
        throw std::invalid_argument("contact_angle_classification: R > 0 required");
    const double t = R * (a * R * R + 2.0 * b);
    if (std::abs(t - 4.0) <= tol) return ContactAngle::OrthogonalPositive;
    if (std::abs(t + 4.0) <= tol) return ContactAngle::OrthogonalNegative;
    if (std::abs(t) <= tol && a * b < 0.0) return ContactAngle::Tangent;
    return ContactAngle::Generic;
}

// Flux identity and Heinz margin as harness entries, applicable to every
// surface type.
inline BoundReport check_flux_and_heinz(const ProfileCurve& curve,
                                        double tol = 1e-7) {
    BoundReport rep;
    const FluxCheck flux = boundary_flux_check(curve);
    BoundCheck fchk;
    fchk.name = "flux_identity";
    fchk.lhs = flux.lhs;
    fchk.rhs = flux.rhs;
    fchk.margin = -flux.residual;
    fchk.hypothesis_met = true;
    fchk.passed = flux.residual <= tol;
    rep.checks.push_back(fchk);

    const double c = curve.c_end();
    const double hm = heinz_margin(c, curve.params.a, curve.params.b);
    BoundCheck hchk;
    hchk.name = "heinz_margin";
    hchk.lhs = std::abs(curve.params.a * c * c + 2.0 * curve.params.b);
    hchk.rhs = 4.0 / c;
    hchk.margin = hm;
    hchk.hypothesis_met = true;
    const double scale = std::max({std::abs(hchk.lhs), std::abs(hchk.rhs), 1.0});
    hchk.passed = hm >= -tol * scale;
    hchk.equality = std::abs(hm) <= tol * scale;
    rep.checks.push_back(hchk);
    return rep;
}

// Runs the whole harness on a closed drop.
inline BoundReport verify_all(const ClosedProfile& closed, double tol = 1e-7) {
    BoundReport rep;
    auto append = [&rep](const BoundReport& part) {
        rep.checks.insert(rep.checks.end(), part.checks.begin(),
                          part.checks.end());
    };
    append(check_sandwich(closed.lower, tol));
    append(check_axi_bounds(closed.lower, tol));
    append(check_height_area_estimate(closed.lower, tol));
    append(check_volume_bound(closed, tol));
    append(check_serrin_type(closed.lower, tol));
    append(check_flux_and_heinz(closed.lower, tol));
    return rep;
}

}  // namespace rotadrop

#endif
