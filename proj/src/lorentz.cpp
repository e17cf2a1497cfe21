#include "rtlink/lorentz.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "rtlink/errors.hpp"

namespace rtlink {

namespace {

constexpr double kIncidenceTol = 1e-7;

std::vector<RealizedVertex> find_vertices(const std::vector<Vec4>& normals, int& lower_sheet_votes) {
    const int s = static_cast<int>(normals.size());
    const Mat4 J = Eigen::Vector4d(1, 1, 1, -1).asDiagonal();
    std::vector<RealizedVertex> out;
    lower_sheet_votes = 0;
    auto inside = [&](const Vec4& v, int skip) {
        for (int l = 0; l < s; ++l)
            if (l != skip && inner(v, normals[l]) > kIncidenceTol)
                return false;
        return true;
    };
    for (int a = 0; a < s; ++a)
        for (int b = a + 1; b < s; ++b)
            for (int c = b + 1; c < s; ++c) {
                Eigen::Matrix<double, 3, 4> rows;
                rows.row(0) = (J * normals[a]).transpose();
                rows.row(1) = (J * normals[b]).transpose();
                rows.row(2) = (J * normals[c]).transpose();
                Eigen::JacobiSVD<Eigen::Matrix<double, 3, 4>> svd(rows, Eigen::ComputeFullV);
                const auto& sv = svd.singularValues();
                if (sv[2] < 1e-9 * sv[0])
                    continue;   // the three normals are dependent
                Vec4 v = svd.matrixV().col(3);
                v.normalize();
                VertexKind kind = classify(v);
                std::vector<Vec4> candidates;
                int skip = -1;
                if (kind == VertexKind::UltraIdeal) {
                    v /= std::sqrt(lorentz_q(v));
                    for (int l = 0; l < s; ++l)
                        if (std::abs(std::abs(inner(v, normals[l])) - 1.0) < kIncidenceTol &&
                            (v - normals[l]).norm() * (v + normals[l]).norm() < kIncidenceTol)
                            skip = l;   // truncation face: its normal is the pole
                    if (skip < 0)
                        continue;   // an untruncated ultra-ideal point would mean infinite volume
                    candidates = {v, Vec4(-v)};
                } else {
                    if (v[3] < 0)
                        v = -v;
                    v = kind == VertexKind::Ideal ? Vec4(v / v[3]) : Vec4(v / std::sqrt(-lorentz_q(v)));
                    if (!inside(v, -1) && inside(-v, -1))
                        ++lower_sheet_votes;
                    candidates = {v};
                }
                for (const Vec4& x : candidates) {
                    if (!inside(x, skip))
                        continue;
                    bool dup = false;
                    for (const auto& old : out)
                        if ((old.x - x).norm() < 1e-7)
                            dup = true;
                    if (dup)
                        break;
                    RealizedVertex rv{x, kind, {}, skip};
                    for (int l = 0; l < s; ++l)
                        if (l != skip && std::abs(inner(x, normals[l])) < kIncidenceTol)
                            rv.faces.push_back(l);
                    out.push_back(std::move(rv));
                    break;
                }
            }
    std::stable_partition(out.begin(), out.end(),
                          [](const RealizedVertex& v) { return v.kind != VertexKind::UltraIdeal; });
    return out;
}

}   // namespace

const char* to_string(VertexKind k) {
    switch (k) {
    case VertexKind::Finite:
        return "finite";
    case VertexKind::Ideal:
        return "ideal";
    case VertexKind::UltraIdeal:
        return "ultra_ideal";
    }
    return "unknown";
}

VertexKind classify(const Vec4& x, double tol) {
    double q = lorentz_q(x.normalized());
    if (std::abs(q) < tol)
        return VertexKind::Ideal;
    return q < 0 ? VertexKind::Finite : VertexKind::UltraIdeal;
}

PolyhedronRealization realize(const Eigen::MatrixXd& gram) {
    const Eigen::Index s = gram.rows();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(gram / 2);
    const auto& ev = solver.eigenvalues();   // ascending
    std::vector<Eigen::Index> pos, neg;
    for (Eigen::Index i = 0; i < s; ++i) {
        if (ev[i] > 1e-9)
            pos.push_back(i);
        else if (ev[i] < -1e-9)
            neg.push_back(i);
    }
    if (pos.size() != 3 || neg.size() != 1)
        throw GeometryError("Gram matrix does not have signature (3,1)");
    Eigen::MatrixXd n(s, 4);
    for (int k = 0; k < 3; ++k)
        n.col(k) = solver.eigenvectors().col(pos[k]) * std::sqrt(ev[pos[k]]);
    n.col(3) = solver.eigenvectors().col(neg[0]) * std::sqrt(-ev[neg[0]]);

    PolyhedronRealization r;
    for (Eigen::Index i = 0; i < s; ++i)
        r.normals.push_back(n.row(i).transpose());
    int lower = 0;
    r.vertices = find_vertices(r.normals, lower);
    if (lower > 0) {
        // The cone sits over the past sheet; reverse time.
        for (auto& e : r.normals)
            e[3] = -e[3];
        r.vertices = find_vertices(r.normals, lower);
    }
    return r;
}

PolyhedronRealization realize(const CoxeterPresentation& p) { return realize(to_double(p.gram)); }

double dihedral_angle(const Vec4& a, const Vec4& b) { return std::acos(std::clamp(-inner(a, b), -1.0, 1.0)); }

Mat4 random_lorentz_transform(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-0.8, 0.8);
    Mat4 frame;
    // Future timelike column first, then three spacelike columns.
    Vec4 t(u(rng), u(rng), u(rng), 0);
    t[3] = 1.0 + t.head<3>().norm();
    frame.col(3) = t / std::sqrt(-lorentz_q(t));
    for (int k = 0; k < 3; ++k) {
        Vec4 v(u(rng), u(rng), u(rng), u(rng));
        v[k] += 2.0;
        for (int prev = 0; prev < k; ++prev)
            v -= inner(v, frame.col(prev)) * Vec4(frame.col(prev));
        v += inner(v, frame.col(3)) * Vec4(frame.col(3));   // <e4,e4> = -1
        frame.col(k) = v / std::sqrt(lorentz_q(v));
    }
    return frame;
}

}   // namespace rtlink
