#ifndef ROTADROP_MESH_HPP
#define ROTADROP_MESH_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "rotadrop/core.hpp"
#include "rotadrop/ode.hpp"

namespace rotadrop {

using Vec3 = std::array<double, 3>;

namespace detail {

inline Vec3 sub(const Vec3& a, const Vec3& b) {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}
inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0]};
}
inline double dot(const Vec3& a, const Vec3& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}
inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

// Cubic Hermite evaluation of (r, u) at arc length s, using the exact
// tangents (cos psi, sin psi) stored with the samples.
inline std::pair<double, double> eval_profile(const ProfileCurve& curve,
                                              double s) {
    const auto& pts = curve.samples;
    const double h = pts.size() > 1 ? pts[1].s - pts[0].s : 1.0;
    std::size_t i = h > 0.0 ? static_cast<std::size_t>(s / h) : 0;
    if (i + 1 >= pts.size()) i = pts.size() - 2;
    const ProfileSample& p0 = pts[i];
    const ProfileSample& p1 = pts[i + 1];
    const double t = (s - p0.s) / h;
    const double h00 = (1.0 + 2.0 * t) * (1.0 - t) * (1.0 - t);
    const double h10 = t * (1.0 - t) * (1.0 - t);
    const double h01 = t * t * (3.0 - 2.0 * t);
    const double h11 = t * t * (t - 1.0);
    const double r = h00 * p0.r + h10 * h * std::cos(p0.psi) + h01 * p1.r +
                     h11 * h * std::cos(p1.psi);
    const double u = h00 * p0.u + h10 * h * std::sin(p0.psi) + h01 * p1.u +
                     h11 * h * std::sin(p1.psi);
    return {r, u};
}

}  // namespace detail

struct RevolveMesh {
    std::vector<Vec3> vertices;
    std::vector<std::array<std::size_t, 3>> triangles;
    std::vector<std::vector<std::size_t>> boundary_loops;
    std::vector<double> target_h;  // (a r^2 + b) / 2 per vertex
    std::vector<bool> is_pole;     // axis vertices, excluded from residuals
    bool closed = false;
    bool self_intersecting = false;
    double a = 0.0, b = 0.0;

    std::size_t euler_characteristic_edges() const;
};

namespace detail {

// (r, u) positions of the generating polyline to revolve, ordered along
// arc length, first point on the axis.
inline RevolveMesh revolve_polyline(const std::vector<std::pair<double, double>>& gen,
                                    std::size_t n_theta, double a, double b,
                                    bool closed) {
    RevolveMesh mesh;
    mesh.closed = closed;
    mesh.a = a;
    mesh.b = b;
    const double two_pi = 2.0 * std::acos(-1.0);

    // Bottom pole, interior rings, optional top pole.
    const std::size_t n_rings = gen.size() - (closed ? 2 : 1);
    auto push_vertex = [&](double x, double y, double z, bool pole) {
        mesh.vertices.push_back({x, y, z});
        const double r2 = x * x + y * y;
        mesh.target_h.push_back(0.5 * (a * r2 + b));
        mesh.is_pole.push_back(pole);
    };
    push_vertex(0.0, 0.0, gen.front().second, true);
    for (std::size_t k = 1; k <= n_rings; ++k) {
        const auto [r, u] = gen[k];
        for (std::size_t j = 0; j < n_theta; ++j) {
            const double th = two_pi * static_cast<double>(j) /
                              static_cast<double>(n_theta);
            push_vertex(r * std::cos(th), r * std::sin(th), u, false);
        }
    }
    std::size_t top_pole = 0;
    if (closed) {
        top_pole = mesh.vertices.size();
        push_vertex(0.0, 0.0, gen.back().second, true);
    }

    auto ring_vertex = [&](std::size_t ring, std::size_t j) {
        return 1 + (ring - 1) * n_theta + (j % n_theta);
    };
    // Winding chosen so normals point away from the enclosed region when
    // the generating curve ascends from the bottom pole.
    for (std::size_t j = 0; j < n_theta; ++j)
        mesh.triangles.push_back({0, ring_vertex(1, j + 1), ring_vertex(1, j)});
    for (std::size_t k = 1; k < n_rings; ++k) {
        for (std::size_t j = 0; j < n_theta; ++j) {
            const std::size_t a0 = ring_vertex(k, j);
            const std::size_t a1 = ring_vertex(k, j + 1);
            const std::size_t b0 = ring_vertex(k + 1, j);
            const std::size_t b1 = ring_vertex(k + 1, j + 1);
            mesh.triangles.push_back({a0, a1, b1});
            mesh.triangles.push_back({a0, b1, b0});
        }
    }
    if (closed) {
        for (std::size_t j = 0; j < n_theta; ++j)
            mesh.triangles.push_back(
                {top_pole, ring_vertex(n_rings, j), ring_vertex(n_rings, j + 1)});
    } else {
        std::vector<std::size_t> loop;
        for (std::size_t j = 0; j < n_theta; ++j)
            loop.push_back(ring_vertex(n_rings, j));
        mesh.boundary_loops.push_back(std::move(loop));
    }
    return mesh;
}

}  // namespace detail

// Revolves a bordered profile: pole fan plus n_s rings uniform in arc
// length, one boundary loop at the truncation circle.
inline RevolveMesh revolve(const ProfileCurve& curve, std::size_t n_theta,
                           std::size_t n_s) {
    if (n_theta < 8 || n_s < 8)
        throw std::invalid_argument("revolve: counts must be >= 8");
    const double S = curve.arc_length();
    if (S <= 0.0) throw std::invalid_argument("revolve: empty curve");
    std::vector<std::pair<double, double>> gen;
    gen.reserve(n_s + 1);
    for (std::size_t k = 0; k <= n_s; ++k)
        gen.push_back(detail::eval_profile(
            curve, S * static_cast<double>(k) / static_cast<double>(n_s)));
    return detail::revolve_polyline(gen, n_theta, curve.params.a,
                                    curve.params.b, false);
}

// Revolves a closed drop: the generating curve is the solved lower half
// followed by its mirror image, 2 n_s segments in total, watertight.
inline RevolveMesh revolve(const ClosedProfile& closed, std::size_t n_theta,
                           std::size_t n_s) {
    if (n_theta < 8 || n_s < 8)
        throw std::invalid_argument("revolve: counts must be >= 8");
    const ProfileCurve& low = closed.lower;
    const double S = low.arc_length();
    if (S <= 0.0) throw std::invalid_argument("revolve: empty curve");
    std::vector<std::pair<double, double>> gen;
    gen.reserve(2 * n_s + 1);
    for (std::size_t k = 0; k <= 2 * n_s; ++k) {
        double s = S * static_cast<double>(k) / static_cast<double>(n_s);
        if (s <= S) {
            gen.push_back(detail::eval_profile(low, s));
        } else {
            auto [r, u] = detail::eval_profile(low, 2.0 * S - s);
            gen.emplace_back(r, 2.0 * closed.mirror_height - u);
        }
    }
    RevolveMesh mesh = detail::revolve_polyline(gen, n_theta, low.params.a,
                                                low.params.b, true);
    mesh.self_intersecting = !closed.embedded;
    return mesh;
}

inline std::size_t RevolveMesh::euler_characteristic_edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    edges.reserve(3 * triangles.size());
    for (const auto& t : triangles)
        for (int e = 0; e < 3; ++e) {
            std::size_t i = t[e], j = t[(e + 1) % 3];
            edges.emplace_back(std::min(i, j), std::max(i, j));
        }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return edges.size();
}

inline long euler_characteristic(const RevolveMesh& mesh) {
    return static_cast<long>(mesh.vertices.size()) -
           static_cast<long>(mesh.euler_characteristic_edges()) +
           static_cast<long>(mesh.triangles.size());
}

struct CurvatureField {
    std::vector<double> h;      // per-vertex mean curvature
    std::vector<bool> valid;    // interior non-pole vertices with good support
    std::size_t degenerate_triangles = 0;
};

// Cotangent-weight discrete Laplace-Beltrami of the position, mixed
// Voronoi vertex areas, H = -<Laplace x, n>/2 with outward vertex normals.
inline CurvatureField discrete_mean_curvature(const RevolveMesh& mesh) {
    using detail::cross;
    using detail::dot;
    using detail::norm;
    using detail::sub;

    const std::size_t nv = mesh.vertices.size();
    CurvatureField field;
    field.h.assign(nv, 0.0);
    field.valid.assign(nv, true);
    std::vector<Vec3> lap(nv, Vec3{0.0, 0.0, 0.0});
    std::vector<Vec3> normal(nv, Vec3{0.0, 0.0, 0.0});
    std::vector<double> varea(nv, 0.0);

    for (const auto& t : mesh.triangles) {
        const Vec3& p0 = mesh.vertices[t[0]];
        const Vec3& p1 = mesh.vertices[t[1]];
        const Vec3& p2 = mesh.vertices[t[2]];
        const Vec3 n = cross(sub(p1, p0), sub(p2, p0));
        const double area2 = norm(n);
        if (area2 <= 0.0) {
            ++field.degenerate_triangles;
            field.valid[t[0]] = field.valid[t[1]] = field.valid[t[2]] = false;
            continue;
        }
        for (int e = 0; e < 3; ++e) {
            normal[t[e]][0] += 0.5 * n[0];
            normal[t[e]][1] += 0.5 * n[1];
            normal[t[e]][2] += 0.5 * n[2];
        }
        // Per-corner cotangents and the mixed (Voronoi / obtuse-safe) area.
        double cot[3];
        double corner_dot[3];
        for (int e = 0; e < 3; ++e) {
            const Vec3& a = mesh.vertices[t[e]];
            const Vec3& b = mesh.vertices[t[(e + 1) % 3]];
            const Vec3& c = mesh.vertices[t[(e + 2) % 3]];
            corner_dot[e] = dot(sub(b, a), sub(c, a));
            cot[e] = corner_dot[e] / area2;
        }
        for (int e = 0; e < 3; ++e) {
            const std::size_t vi = t[(e + 1) % 3];
            const std::size_t vj = t[(e + 2) % 3];
            const Vec3 d = sub(mesh.vertices[vj], mesh.vertices[vi]);
            for (int k = 0; k < 3; ++k) {
                lap[vi][k] += 0.5 * cot[e] * d[k];
                lap[vj][k] -= 0.5 * cot[e] * d[k];
            }
        }
        const double tri_area = 0.5 * area2;
        int obtuse = -1;
        for (int e = 0; e < 3; ++e)
            if (corner_dot[e] < 0.0) obtuse = e;
        if (obtuse < 0) {
            for (int e = 0; e < 3; ++e) {
                const Vec3 e1 = sub(mesh.vertices[t[(e + 1) % 3]],
                                    mesh.vertices[t[e]]);
                const Vec3 e2 = sub(mesh.vertices[t[(e + 2) % 3]],
                                    mesh.vertices[t[e]]);
                varea[t[e]] += 0.125 * (dot(e2, e2) * cot[(e + 1) % 3] +
                                        dot(e1, e1) * cot[(e + 2) % 3]);
            }
        } else {
            for (int e = 0; e < 3; ++e)
                varea[t[e]] += (e == obtuse ? 0.5 : 0.25) * tri_area;
        }
    }

    // Boundary and pole vertices are excluded.
    for (const auto& loop : mesh.boundary_loops)
        for (std::size_t v : loop) field.valid[v] = false;
    for (std::size_t v = 0; v < nv; ++v) {
        if (mesh.is_pole[v]) field.valid[v] = false;
        if (!field.valid[v] || varea[v] <= 0.0) {
            field.valid[v] = false;
            continue;
        }
        const double nn = norm(normal[v]);
        if (nn <= 0.0) {
            field.valid[v] = false;
            continue;
        }
        const Vec3 delta{lap[v][0] / varea[v], lap[v][1] / varea[v],
                         lap[v][2] / varea[v]};
        field.h[v] = -0.5 * dot(delta, normal[v]) / nn;
    }
    return field;
}

struct ResidualSummary {
    double max = 0.0;
    double mean = 0.0;
    std::size_t n_interior = 0;
};

// Pointwise check of 2H = a r^2 + b against the discrete mean curvature.
inline ResidualSummary laplace_residual(const RevolveMesh& mesh) {
    const CurvatureField field = discrete_mean_curvature(mesh);
    ResidualSummary sum;
    double acc = 0.0;
    for (std::size_t v = 0; v < mesh.vertices.size(); ++v) {
        if (!field.valid[v]) continue;
        const double res = std::abs(2.0 * field.h[v] - 2.0 * mesh.target_h[v]);
        sum.max = std::max(sum.max, res);
        acc += res;
        ++sum.n_interior;
    }
    if (sum.n_interior > 0) sum.mean = acc / static_cast<double>(sum.n_interior);
    return sum;
}

// Triangle-sum area; cross-checks the quadrature area.
inline double mesh_area(const RevolveMesh& mesh) {
    double total = 0.0;
    for (const auto& t : mesh.triangles)
        total += 0.5 * detail::norm(detail::cross(
                           detail::sub(mesh.vertices[t[1]], mesh.vertices[t[0]]),
                           detail::sub(mesh.vertices[t[2]], mesh.vertices[t[0]])));
    return total;
}

// Divergence-theorem volume of a closed mesh.
inline double mesh_volume(const RevolveMesh& mesh) {
    double total = 0.0;
    for (const auto& t : mesh.triangles)
        total += detail::dot(mesh.vertices[t[0]],
                             detail::cross(mesh.vertices[t[1]],
                                           mesh.vertices[t[2]])) /
                 6.0;
    return std::abs(total);
}

// Wavefront OBJ, 9 significant digits, faces 1-indexed. Returns bytes
// written.
inline std::size_t export_obj(const RevolveMesh& mesh, std::ostream& out) {
    std::size_t bytes = 0;
    char line[128];
    for (const auto& v : mesh.vertices) {
        const int n = std::snprintf(line, sizeof(line), "v %.9g %.9g %.9g\n",
                                    v[0], v[1], v[2]);
        out.write(line, n);
        bytes += static_cast<std::size_t>(n);
    }
    for (const auto& t : mesh.triangles) {
        const int n = std::snprintf(line, sizeof(line), "f %zu %zu %zu\n",
                                    t[0] + 1, t[1] + 1, t[2] + 1);
        out.write(line, n);
        bytes += static_cast<std::size_t>(n);
    }
    if (!out)
        throw std::runtime_error("export_obj: write failure");
    return bytes;
}

}  // namespace rotadrop

#endif
