#include "rtlink/cells.hpp"

#include <cmath>
#include <map>
#include <numbers>

#include <boost/random/sobol.hpp>

#include "rtlink/errors.hpp"

namespace rtlink {

namespace {

constexpr double kPi = std::numbers::pi;

Mat4 spatial(const Eigen::Matrix3d& a) {
    Mat4 m = Mat4::Identity();
    m.topLeftCorner<3, 3>() = a;
    return m;
}

// Closure of the generators under multiplication, compared up to 1e-9.
std::vector<Mat4> generate_group(const std::vector<Mat4>& gens, std::size_t limit) {
    std::vector<Mat4> group{Mat4::Identity()};
    for (std::size_t k = 0; k < group.size(); ++k)
        for (const auto& g : gens) {
            Mat4 x = g * group[k];
            bool seen = false;
            for (const auto& y : group)
                if ((x - y).cwiseAbs().maxCoeff() < 1e-9) {
                    seen = true;
                    break;
                }
            if (!seen) {
                group.push_back(x);
                if (group.size() > limit)
                    throw VerificationError("symmetry group larger than expected");
            }
        }
    return group;
}

// Outward unit normal of the face through the given ideal vertices: the
// Klein plane a.p = b has Lorentz normal (a, b).
Vec4 face_normal(const Cell& cell, const std::vector<int>& face) {
    Eigen::Vector3d p0 = cell.vertices[face[0]].head<3>();
    Eigen::Vector3d p1 = cell.vertices[face[1]].head<3>();
    Eigen::Vector3d p2 = cell.vertices[face[2]].head<3>();
    Eigen::Vector3d a = (p1 - p0).cross(p2 - p0);
    double b = a.dot(p0);
    if (b < 0) {
        a = -a;
        b = -b;
    }
    Vec4 n(a[0], a[1], a[2], b);
    return n / std::sqrt(lorentz_q(n));
}

void finish_cell(Cell& cell, double horoball_scale, const std::vector<Mat4>& gens, std::size_t order) {
    for (const auto& f : cell.faces)
        cell.normals.push_back(face_normal(cell, f));
    for (const auto& v : cell.vertices)
        cell.horoballs.push_back(horoball_scale * v);
    cell.symmetries = generate_group(gens, order);
    if (cell.symmetries.size() != order)
        throw VerificationError(cell.kind + ": symmetry group has order " + std::to_string(cell.symmetries.size()) +
                                ", expected " + std::to_string(order));
}

Vec4 klein_to_hyperboloid(const Eigen::Vector3d& p) {
    Vec4 x(p[0], p[1], p[2], 1.0);
    return x / std::sqrt(1.0 - p.squaredNorm());
}

bool interior(const Cell& cell, const Vec4& x) {
    for (const auto& n : cell.normals)
        if (inner(x, n) >= 0)
            return false;
    return true;
}

int nearest_horoball(const Cell& cell, const Vec4& x) {
    int best = 0;
    double best_d = distance_to_horoball(x, cell.horoballs[0]);
    for (std::size_t k = 1; k < cell.horoballs.size(); ++k) {
        double d = distance_to_horoball(x, cell.horoballs[k]);
        if (d < best_d) {
            best_d = d;
            best = static_cast<int>(k);
        }
    }
    return best;
}

}   // namespace

TilingAngles tiling_angles(int m, int n) {
    if (m < 3 || n < 3 || geometry_of(m, n) != Geometry::Hyperbolic)
        throw GeometryError("tiling angles need a hyperbolic type");
    if (m == n)
        return {kPi / 2, kPi / 2};
    double am = 2 * std::atan(std::cos(kPi / m) / std::cos(kPi / n));
    return {am, kPi - am};
}

DrumGeometry build_drum(int m, int n, int side) {
    if (side != m && side != n)
        throw DomainError("drum side must be m or n");
    TilingAngles ang = tiling_angles(m, n);
    const int k = side;
    const int other = side == m ? n : m;
    const double alpha_other = side == m ? ang.alpha_n : ang.alpha_m;
    const double target_bl = alpha_other / 2;
    // Base-lateral angle theta of an inscribed prism: h = tan(pi/k) / tan(theta).
    const double h = std::tan(kPi / k) / std::tan(target_bl);
    if (!(h > 0 && h < 1))
        throw GeometryError("drum dihedral out of the realizable range (pi/k, pi/2)");
    const double r = std::sqrt(1 - h * h);

    DrumGeometry d;
    d.n = k;
    d.other = other;
    d.angles = ang;
    d.radius = r;
    d.height = h;
    Cell& c = d.cell;
    c.kind = "drum(" + std::to_string(k) + ")";
    for (double z : {h, -h})
        for (int i = 0; i < k; ++i) {
            double t = 2 * kPi * i / k;
            c.vertices.emplace_back(r * std::cos(t), r * std::sin(t), z, 1.0);
        }
    std::vector<int> top, bottom;
    for (int i = 0; i < k; ++i) {
        top.push_back(i);
        bottom.push_back(k + i);
    }
    c.faces = {top, bottom};
    for (int i = 0; i < k; ++i)
        c.faces.push_back({i, (i + 1) % k, k + (i + 1) % k, k + i});

    Eigen::Matrix3d rot = Eigen::AngleAxisd(2 * kPi / k, Eigen::Vector3d::UnitZ()).toRotationMatrix();
    Eigen::Matrix3d flip_z = Eigen::Vector3d(1, 1, -1).asDiagonal();
    Eigen::Matrix3d flip_y = Eigen::Vector3d(1, -1, 1).asDiagonal();
    finish_cell(c, 1.0, {spatial(rot), spatial(flip_z), spatial(flip_y)}, 4 * k);

    d.base_lateral = dihedral(c, 0, 2);
    d.lateral_lateral = dihedral(c, 2, 3);
    return d;
}

Cell build_platonic_cell(PlatonicKind kind) {
    Cell c;
    Eigen::Matrix3d swap_xy;
    swap_xy << 0, 1, 0, 1, 0, 0, 0, 0, 1;
    Eigen::Matrix3d cycle;
    cycle << 0, 0, 1, 1, 0, 0, 0, 1, 0;
    if (kind == PlatonicKind::Tetrahedron) {
        c.kind = "tetrahedron";
        const double s = 1 / std::sqrt(3.0);
        c.vertices = {Vec4(s, s, s, 1), Vec4(s, -s, -s, 1), Vec4(-s, s, -s, 1), Vec4(-s, -s, s, 1)};
        c.faces = {{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}};
        // <v_i, v_j> = -4/3; tangency needs s^2 (4/3) / 2 = 1.
        Eigen::Matrix3d signs = Eigen::Vector3d(1, -1, -1).asDiagonal();
        finish_cell(c, std::sqrt(1.5), {spatial(swap_xy), spatial(cycle), spatial(signs)}, 24);
    } else {
        c.kind = "octahedron";
        for (int axis = 0; axis < 3; ++axis)
            for (double sgn : {1.0, -1.0}) {
                Vec4 v = Vec4::Zero();
                v[axis] = sgn;
                v[3] = 1;
                c.vertices.push_back(v);
            }
        // vertex 2a + (0|1) is sign (+|-) on axis a
        for (int sx : {0, 1})
            for (int sy : {0, 1})
                for (int sz : {0, 1})
                    c.faces.push_back({sx, 2 + sy, 4 + sz});
        // adjacent vertices: <v_i, v_j> = -1; tangency needs s^2 / 2 = 1.
        Eigen::Matrix3d signs = Eigen::Vector3d(-1, 1, 1).asDiagonal();
        finish_cell(c, std::sqrt(2.0), {spatial(swap_xy), spatial(cycle), spatial(signs)}, 48);
    }
    return c;
}

double dihedral(const Cell& cell, int a, int b) { return dihedral_angle(cell.normals[a], cell.normals[b]); }

double distance_to_horoball(const Vec4& x, const Vec4& w) { return std::log(-inner(x, w)); }

double horoball_distance(const Vec4& w1, const Vec4& w2) { return std::log(-inner(w1, w2) / 2); }

Vec4 edge_midpoint(const Vec4& vi, const Vec4& vj, const Vec4& vk) {
    // Geodesic X(t) = (e^t vi + e^-t vj) / sqrt(-2 <vi, vj>); the foot from vk
    // is where e^{2t} = <vj, vk> / <vi, vk>.
    double a = -inner(vi, vk), b = -inner(vj, vk);
    double e2t = b / a;
    double et = std::sqrt(e2t);
    return (et * vi + vj / et) / std::sqrt(-2 * inner(vi, vj));
}

double midpoint_tangency_error(const Cell& cell) {
    double worst = 0;
    for (const auto& f : cell.faces)
        for (std::size_t e = 0; e < f.size(); ++e) {
            int i = f[e], j = f[(e + 1) % f.size()];
            for (int k : f) {
                if (k == i || k == j)
                    continue;
                Vec4 mid = edge_midpoint(cell.vertices[i], cell.vertices[j], cell.vertices[k]);
                worst = std::max({worst, std::abs(distance_to_horoball(mid, cell.horoballs[i])),
                                  std::abs(distance_to_horoball(mid, cell.horoballs[j])),
                                  std::abs(horoball_distance(cell.horoballs[i], cell.horoballs[j]))});
            }
        }
    return worst;
}

double symmetry_error(const Cell& cell) {
    double worst = 0;
    const Mat4 J = Eigen::Vector4d(1, 1, 1, -1).asDiagonal();
    for (const auto& s : cell.symmetries) {
        worst = std::max(worst, (s.transpose() * J * s - J).cwiseAbs().maxCoeff());
        for (std::size_t i = 0; i < cell.vertices.size(); ++i) {
            double best = 1e300;
            for (std::size_t j = 0; j < cell.vertices.size(); ++j)
                best = std::min(best, (s * cell.horoballs[i] - cell.horoballs[j]).norm());
            worst = std::max(worst, best);
        }
    }
    return worst;
}

std::vector<Vec4> mirror_normals(const Cell& cell) {
    std::vector<Vec4> out;
    for (const auto& s : cell.symmetries) {
        if ((s * s - Mat4::Identity()).cwiseAbs().maxCoeff() > 1e-9)
            continue;
        Mat4 d = s - Mat4::Identity();
        Eigen::JacobiSVD<Mat4> svd(d);
        int rank = 0;
        for (int i = 0; i < 4; ++i)
            if (svd.singularValues()[i] > 1e-9)
                ++rank;
        if (rank != 1)
            continue;
        Eigen::Index col;
        d.colwise().norm().maxCoeff(&col);
        Vec4 mu = d.col(col);
        out.push_back(mu / std::sqrt(lorentz_q(mu)));
    }
    return out;
}

CanonicalCheckReport verify_basins(const Cell& cell, int samples, std::uint64_t seed) {
    CanonicalCheckReport rep;
    rep.cell = cell.kind;
    rep.samples = samples;
    rep.seed = seed;
    auto mirrors = mirror_normals(cell);

    auto predicted = [&](const Vec4& x) {
        int found = -1;
        for (std::size_t i = 0; i < cell.vertices.size(); ++i) {
            const Vec4& v = cell.vertices[i];
            bool ok = true;
            for (const auto& mu : mirrors) {
                double sv = inner(v, mu);
                if (std::abs(sv) < 1e-9)
                    continue;   // mirror through v
                if ((sv > 0) != (inner(x, mu) > 0)) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                if (found >= 0)
                    return -1;   // not unique
                found = static_cast<int>(i);
            }
        }
        return found;
    };
    auto wall_distance = [&](const Vec4& x) {
        double best = 1e300;
        for (const auto& mu : mirrors)
            best = std::min(best, std::abs(std::asinh(inner(x, mu))));
        return best;
    };

    boost::random::sobol qrng(3);
    qrng.seed(seed);
    const double span = static_cast<double>(qrng.max() - qrng.min()) + 1.0;
    auto next01 = [&] { return (static_cast<double>(qrng() - qrng.min()) + 0.5) / span; };

    Eigen::Vector3d prev_p;
    int prev_near = -1;
    long attempts = 0;
    while (rep.tested < samples) {
        if (++attempts > 1000L * samples + 1000)
            throw VerificationError("sampling rejected too many points for " + cell.kind);
        Eigen::Vector3d p(2 * next01() - 1, 2 * next01() - 1, 2 * next01() - 1);
        if (p.squaredNorm() >= 1)
            continue;
        Vec4 x = klein_to_hyperboloid(p);
        if (!interior(cell, x))
            continue;
        if (wall_distance(x) < 1e-8) {
            ++rep.skipped;
            continue;
        }
        ++rep.tested;
        int near = nearest_horoball(cell, x);
        if (near != predicted(x))
            ++rep.violations;
        if (prev_near >= 0 && near != prev_near) {
            // Bisect the Klein segment for the point where the nearest
            // horoball changes; it should sit on a mirror.
            Eigen::Vector3d lo = prev_p, hi = p;
            for (int it = 0; it < 60; ++it) {
                Eigen::Vector3d mid = (lo + hi) / 2;
                if (nearest_horoball(cell, klein_to_hyperboloid(mid)) == prev_near)
                    lo = mid;
                else
                    hi = mid;
            }
            rep.max_margin_at_walls =
                std::max(rep.max_margin_at_walls, wall_distance(klein_to_hyperboloid((lo + hi) / 2)));
            ++rep.wall_crossings;
        }
        prev_p = p;
        prev_near = near;
    }
    return rep;
}

GluingReport verify_gluing_angles(int m, int n) {
    DrumGeometry dn = build_drum(m, n, n);
    DrumGeometry dm = build_drum(m, n, m);
    GluingReport g;
    g.base_lateral_sum = 4 * dn.base_lateral + 4 * dm.base_lateral;
    g.lateral_lateral_sum = 2 * dn.lateral_lateral + 2 * dm.lateral_lateral;
    g.ok = std::abs(g.base_lateral_sum - 2 * kPi) < 1e-9 && std::abs(g.lateral_lateral_sum - 2 * kPi) < 1e-9;
    return g;
}

}   // namespace rtlink
