#ifndef ROTADROP_PARAMS_HPP
#define ROTADROP_PARAMS_HPP

#include <cmath>
#include <stdexcept>
#include <string>

namespace rotadrop {

// Coefficients of the mean-curvature relation 2H(x) = a r^2 + b for one
// drop family, together with the initial height u0 of the profile and the
// first-integral constant d (d != 0 corresponds to toroidal solutions and
// is only accepted by first_integral).
struct DropParams {
    double a = 0.0;   // rotation coefficient, length^-3
    double b = 0.0;   // capillarity coefficient, length^-1
    double u0 = 0.0;  // initial height of the profile at r = 0
    double d = 0.0;   // first-integral constant; 0 for axis-crossing profiles
};

// Classification of the axisymmetric closed drop by the sign of a and the
// behaviour of the first integral.
enum class SurfaceType {
    CMC,      // a = 0: constant mean curvature, round sphere of radius 2/b
    TypeI,    // a > 0: convex increasing profile, embedded
    TypeIIa,  // a < 0, first integral reaches +1 before turning
    TypeIIb   // a < 0, profile turns at r2 and terminates at -1
};

inline const char* to_string(SurfaceType t) {
    switch (t) {
        case SurfaceType::CMC: return "CMC";
        case SurfaceType::TypeI: return "TypeI";
        case SurfaceType::TypeIIa: return "TypeIIa";
        case SurfaceType::TypeIIb: return "TypeIIb";
    }
    return "?";
}

// Canonical form has b >= 0 (and a > 0 when b = 0), so the profile is
// increasing near r = 0+. The flip uses the symmetry
// -u(r; u0, a, b) = u(r; -u0, -a, -b).
struct CanonicalParams {
    DropParams params;
    bool flipped = false;  // true when the sign flip was applied
};

inline bool is_canonical(const DropParams& p) {
    return p.b > 0.0 || (p.b == 0.0 && p.a >= 0.0);
}

inline CanonicalParams canonicalize(const DropParams& p) {
    if (is_canonical(p)) return {p, false};
    return {DropParams{-p.a, -p.b, -p.u0, p.d}, true};
}

// a = b = 0 gives a minimal graph, degenerate for every closed-surface
// operation.
inline void require_nondegenerate(const DropParams& p) {
    if (p.a == 0.0 && p.b == 0.0)
        throw std::invalid_argument("rotadrop: a and b cannot both be zero");
}

}  // namespace rotadrop

#endif
