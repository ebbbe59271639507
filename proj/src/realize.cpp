#include "tifs/realize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace tifs {

namespace {

constexpr double kPi = 3.14159265358979323846;

Vector padded(std::initializer_list<double> head, int d) {
    Vector v = Vector::Zero(d);
    int i = 0;
    for (double x : head) v[i++] = x;
    return v;
}

Vector unit(const Vector& v) { return v / v.norm(); }

Vector cross3(const Vector& a, const Vector& b) {
    Vector out(3);
    out[0] = a[1] * b[2] - a[2] * b[1];
    out[1] = a[2] * b[0] - a[0] * b[2];
    out[2] = a[0] * b[1] - a[1] * b[0];
    return out;
}

Vector normalized_cross(const Vector& a, const Vector& b, const char* what, double tol) {
    Vector c = cross3(a, b);
    double norm = c.norm();
    if (norm < tol) throw std::invalid_argument(std::string("degenerate cross product (parallel rays): ") + what);
    return c / norm;
}

// Deterministic orthonormal pair spanning the plane orthogonal to u in R^3.
std::pair<Vector, Vector> tangent_frame(const Vector& u) {
    Vector pick = Vector::Zero(3);
    int axis = 0;
    for (int i = 1; i < 3; ++i)
        if (std::abs(u[i]) < std::abs(u[axis])) axis = i;
    pick[axis] = 1.0;
    Vector p = unit(cross3(u, pick));
    Vector q = cross3(u, p);
    return {p, q};
}

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

VerificationReport verify(const Realization& r, const Graph& g) {
    if (static_cast<int>(r.vectors.size()) != g.size())
        throw std::invalid_argument("realization has " + std::to_string(r.vectors.size()) + " vectors for " +
                                    std::to_string(g.size()) + " vertices");
    for (const Vector& v : r.vectors)
        if (v.size() != r.d) throw std::invalid_argument("realization vector dimension mismatch");
    VerificationReport report;
    bool has_nonedge = false;
    for (const Vector& v : r.vectors)
        report.max_unit_deviation = std::max(report.max_unit_deviation, std::abs(v.norm() - 1.0));
    for (int u = 0; u < g.size(); ++u) {
        for (int v = u + 1; v < g.size(); ++v) {
            double dot = std::abs(r.vectors[static_cast<std::size_t>(u)].dot(r.vectors[static_cast<std::size_t>(v)]));
            bool edge = g.has_edge(u, v);
            report.detail.push_back(PairDetail{u, v, edge, dot});
            if (edge) {
                report.max_edge_residual = std::max(report.max_edge_residual, dot);
            } else {
                has_nonedge = true;
                report.min_nonedge_overlap = std::min(report.min_nonedge_overlap, dot);
            }
        }
    }
    if (!has_nonedge) report.min_nonedge_overlap = 1.0;
    report.pass = report.max_edge_residual <= r.tolerance &&
                  (!has_nonedge || report.min_nonedge_overlap > r.tolerance);
    return report;
}

Realization build_minimal_tifs_realization(int d, std::vector<CliqueVertexState> states, double epsilon) {
    if (d < 3) throw std::invalid_argument("build_minimal_tifs_realization requires d >= 3");
    if (static_cast<int>(states.size()) != d - 3)
        throw std::invalid_argument("expected " + std::to_string(d - 3) + " clique vertex states");
    if (epsilon < 0.0 || epsilon >= 1.0) throw std::invalid_argument("epsilon must lie in [0, 1)");
    std::sort(states.begin(), states.end());

    const double s2 = std::sqrt(2.0), s3 = std::sqrt(3.0);
    std::vector<Vector> vecs;
    vecs.push_back(padded({0, -1, s2}, d) / s3);        // A
    vecs.push_back(padded({1, s2, 1}, d) / 2.0);        // v1
    vecs.push_back(padded({1, 0, 0}, d));               // v2
    vecs.push_back(padded({1, 0, -1}, d) / s2);         // v3
    vecs.push_back(padded({0, 1, 0}, d));               // v4
    vecs.push_back(padded({-1, s2, -1}, d) / 2.0);      // v5
    vecs.push_back(padded({0, 0, 1}, d));               // v6
    vecs.push_back(padded({s2, 1, 0}, d) / s3);         // B

    std::vector<int> axes_for_a;  // axes of clique vertices not adjacent to A
    std::vector<int> axes_for_b;  // axes of clique vertices not adjacent to B
    for (int k = 0; k < d - 3; ++k) {
        Vector w = Vector::Zero(d);
        w[3 + k] = 1.0;
        vecs.push_back(w);
        switch (states[static_cast<std::size_t>(k)]) {
            case CliqueVertexState::AdjA: axes_for_b.push_back(3 + k); break;
            case CliqueVertexState::AdjB: axes_for_a.push_back(3 + k); break;
            case CliqueVertexState::AdjBoth: break;
        }
    }
    if (epsilon == 0.0 && (!axes_for_a.empty() || !axes_for_b.empty()))
        throw std::invalid_argument(
            "epsilon must be positive unless every clique vertex is adjacent to both A and B; "
            "an unperturbed vector would be orthogonal to a non-exclusive ray");

    // Caption rule: scale the base by sqrt(1-eps^2) and spread eps evenly
    // over the missing axes, rather than renormalising after addition.
    auto perturb = [&](Vector& v, const std::vector<int>& axes) {
        if (axes.empty() || epsilon == 0.0) return;
        v *= std::sqrt(1.0 - epsilon * epsilon);
        double weight = epsilon / std::sqrt(static_cast<double>(axes.size()));
        for (int axis : axes) v[axis] = weight;
    };
    perturb(vecs[0], axes_for_a);
    perturb(vecs[7], axes_for_b);

    // Vector order matches minimal_tifs: A, v1..v6, B, then the clique vertices.
    Realization out;
    out.d = d;
    out.vectors = std::move(vecs);
    out.epsilon = epsilon;
    out.tolerance = 1e-12;
    return out;
}

double angle_between(const Realization& r, int a, int b) {
    if (a < 0 || b < 0 || a >= static_cast<int>(r.vectors.size()) || b >= static_cast<int>(r.vectors.size()))
        throw std::invalid_argument("angle_between: vertex out of range");
    double dot = std::abs(r.vectors[static_cast<std::size_t>(a)].dot(r.vectors[static_cast<std::size_t>(b)]));
    return std::acos(std::clamp(dot, 0.0, 1.0));
}

std::array<Vector, 5> complete_from_pentagon(const Vector& a, const Vector& v1, const Vector& v2,
                                             const Vector& v3, const Vector& v4, double tol) {
    for (const Vector* v : {&a, &v1, &v2, &v3, &v4})
        if (v->size() != 3) throw std::invalid_argument("pentagon completion works in R^3");
    auto check = [&](const Vector& x, const Vector& y, const char* what) {
        if (std::abs(x.dot(y)) > tol)
            throw std::invalid_argument(std::string("pentagon inputs violate orthogonality: ") + what);
    };
    check(a, v1, "a and v1");
    check(a, v2, "a and v2");
    check(v1, v3, "v1 and v3");
    check(v2, v4, "v2 and v4");
    check(v3, v4, "v3 and v4");
    Vector v5 = normalized_cross(v1, v3, "v1 x v3", tol);
    Vector v6 = normalized_cross(v2, v4, "v2 x v4", tol);
    Vector b = normalized_cross(v5, v6, "v5 x v6", tol);
    Vector v7 = normalized_cross(a, b, "a x B", tol);
    Vector c = normalized_cross(b, v7, "B x v7", tol);
    return {v5, v6, b, v7, c};
}

std::vector<Vector> complete_from_anchor_triple(const Vector& a, const Vector& v3, const Vector& v4,
                                                double tol) {
    if (a.size() != 3 || v3.size() != 3 || v4.size() != 3)
        throw std::invalid_argument("anchor completion works in R^3");
    if (std::abs(v3.dot(v4)) > tol)
        throw std::invalid_argument("anchor triple requires v3 orthogonal to v4");
    Vector v1 = normalized_cross(a, v3, "a x v3", tol);
    Vector v2 = normalized_cross(a, v4, "a x v4", tol);
    auto rest = complete_from_pentagon(a, v1, v2, v3, v4, tol);
    return {unit(a), v1, v2, unit(v3), unit(v4), rest[0], rest[1], rest[2], rest[3], rest[4]};
}

namespace {

// Pentagon parametrised by five angles: A on the sphere, v1 and v2 in A's
// orthogonal circle, v3 in v1's, and v4 pinned by v3 and v2.
struct PentagonTrial {
    const Graph& bug_graph;

    explicit PentagonTrial(const Graph& g) : bug_graph(g) {}

    std::optional<std::vector<Vector>> build(const Eigen::Matrix<double, 5, 1>& x) const {
        Vector a(3);
        a << std::sin(x[0]) * std::cos(x[1]), std::sin(x[0]) * std::sin(x[1]), std::cos(x[0]);
        auto [p, q] = tangent_frame(a);
        Vector v1 = std::cos(x[2]) * p + std::sin(x[2]) * q;
        Vector v2 = std::cos(x[3]) * p + std::sin(x[3]) * q;
        auto [p1, q1] = tangent_frame(v1);
        Vector v3 = std::cos(x[4]) * p1 + std::sin(x[4]) * q1;
        Vector cr = cross3(v3, v2);
        if (cr.norm() < 1e-9) return std::nullopt;
        Vector v4 = cr / cr.norm();
        Vector v5 = cross3(v1, v3);
        if (v5.norm() < 1e-9) return std::nullopt;
        v5 /= v5.norm();
        Vector v6 = cross3(v2, v4);
        if (v6.norm() < 1e-9) return std::nullopt;
        v6 /= v6.norm();
        Vector b = cross3(v5, v6);
        if (b.norm() < 1e-9) return std::nullopt;
        b /= b.norm();
        return std::vector<Vector>{a, v1, v2, v3, v4, v5, v6, b};
    }

    // |dot(A,B)| with a barrier keeping non-exclusive pairs off orthogonality.
    double objective(const std::vector<Vector>& vecs) const {
        double score = std::abs(vecs[0].dot(vecs[7]));
        const double margin = 1e-4;
        double penalty = 0.0;
        for (int u = 0; u < 8; ++u)
            for (int v = u + 1; v < 8; ++v) {
                if (bug_graph.has_edge(u, v)) continue;
                double overlap = std::abs(vecs[static_cast<std::size_t>(u)].dot(vecs[static_cast<std::size_t>(v)]));
                if (overlap < margin) {
                    double gap = margin - overlap;
                    penalty += 10.0 * gap * gap;
                }
            }
        return score - penalty;
    }

    double min_overlap(const std::vector<Vector>& vecs) const {
        double worst = 1.0;
        for (int u = 0; u < 8; ++u)
            for (int v = u + 1; v < 8; ++v) {
                if (bug_graph.has_edge(u, v)) continue;
                worst = std::min(worst,
                                 std::abs(vecs[static_cast<std::size_t>(u)].dot(vecs[static_cast<std::size_t>(v)])));
            }
        return worst;
    }
};

}  // namespace

MinAngleResult min_angle_search(int trials, int iterations, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("min_angle_search requires at least one trial");
    if (iterations < 1) iterations = 1;
    Graph bug_graph = bug().graph;
    PentagonTrial model(bug_graph);

    double best_dot = -1.0;
    std::vector<Vector> best_vecs;
    for (int trial = 0; trial < trials; ++trial) {
        std::uint64_t state = seed + 0x51ed2701ULL * static_cast<std::uint64_t>(trial + 1);
        std::mt19937_64 rng(splitmix64(state));
        std::uniform_real_distribution<double> uni(0.0, 2.0 * kPi);
        Eigen::Matrix<double, 5, 1> x;
        for (int i = 0; i < 5; ++i) x[i] = uni(rng);

        auto vecs = model.build(x);
        if (!vecs) continue;
        double current = model.objective(*vecs);
        double step = 0.2;
        for (int it = 0; it < iterations && step > 1e-10; ++it) {
            // Numeric gradient ascent with a backtracking step.
            Eigen::Matrix<double, 5, 1> grad;
            const double h = 1e-6;
            for (int i = 0; i < 5; ++i) {
                Eigen::Matrix<double, 5, 1> xp = x, xm = x;
                xp[i] += h;
                xm[i] -= h;
                auto vp = model.build(xp);
                auto vm = model.build(xm);
                double fp = vp ? model.objective(*vp) : -1e9;
                double fm = vm ? model.objective(*vm) : -1e9;
                grad[i] = (fp - fm) / (2 * h);
            }
            if (grad.norm() < 1e-12) break;
            Eigen::Matrix<double, 5, 1> xn = x + step * grad / std::max(grad.norm(), 1e-12);
            auto vn = model.build(xn);
            double fn = vn ? model.objective(*vn) : -1e9;
            if (fn > current) {
                x = xn;
                vecs = vn;
                current = fn;
                step *= 1.2;
            } else {
                step *= 0.5;
            }
        }
        if (model.min_overlap(*vecs) < 1e-7) continue;  // unfaithful configuration
        double dot = std::abs((*vecs)[0].dot((*vecs)[7]));
        if (dot > best_dot) {
            best_dot = dot;
            best_vecs = *vecs;
        }
    }
    if (best_vecs.empty()) throw std::runtime_error("min_angle_search: no faithful configuration found");

    MinAngleResult out;
    out.angle = std::acos(std::clamp(best_dot, 0.0, 1.0));
    Vector v7 = normalized_cross(best_vecs[0], best_vecs[7], "a x B", 1e-9);
    Vector c = normalized_cross(best_vecs[7], v7, "B x v7", 1e-9);
    out.realization.d = 3;
    out.realization.vectors = best_vecs;
    out.realization.vectors.push_back(v7);
    out.realization.vectors.push_back(c);
    out.realization.tolerance = 1e-9;
    return out;
}

RealizeSearchResult numeric_realization_search(const Graph& g, int d, int restarts, std::uint64_t seed,
                                               int iterations) {
    if (d < 2) throw std::invalid_argument("numeric_realization_search requires d >= 2");
    if (restarts < 1) throw std::invalid_argument("numeric_realization_search requires at least one restart");
    const int n = g.size();
    const double lo = 0.01;       // non-edges should overlap at least this
    const double hi = 0.85;       // and stay away from ray coincidence
    const double weight = 2.0;

    auto objective = [&](const Eigen::MatrixXd& V, Eigen::MatrixXd* grad) {
        double f = 0.0;
        if (grad) grad->setZero();
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                double dot = V.col(u).dot(V.col(v));
                if (g.has_edge(u, v)) {
                    f += dot * dot;
                    if (grad) {
                        grad->col(u) += 2 * dot * V.col(v);
                        grad->col(v) += 2 * dot * V.col(u);
                    }
                } else {
                    double a = std::abs(dot);
                    if (a < lo) {
                        double gap = lo - a;
                        f += weight * gap * gap;
                        if (grad) {
                            double sign = dot >= 0 ? 1.0 : -1.0;
                            grad->col(u) += -2 * weight * gap * sign * V.col(v);
                            grad->col(v) += -2 * weight * gap * sign * V.col(u);
                        }
                    } else if (a > hi) {
                        double gap = a - hi;
                        f += weight * gap * gap;
                        if (grad) {
                            double sign = dot >= 0 ? 1.0 : -1.0;
                            grad->col(u) += 2 * weight * gap * sign * V.col(v);
                            grad->col(v) += 2 * weight * gap * sign * V.col(u);
                        }
                    }
                }
            }
        }
        return f;
    };

    double best = std::numeric_limits<double>::infinity();
    Eigen::MatrixXd best_V;
    for (int r = 0; r < restarts; ++r) {
        std::uint64_t state = seed + 0x9e3779b9ULL * static_cast<std::uint64_t>(r + 1);
        std::mt19937_64 rng(splitmix64(state));
        std::normal_distribution<double> gauss(0.0, 1.0);
        Eigen::MatrixXd V(d, n);
        for (int v = 0; v < n; ++v) {
            for (int i = 0; i < d; ++i) V(i, v) = gauss(rng);
            V.col(v).normalize();
        }
        Eigen::MatrixXd grad(d, n);
        double f = objective(V, &grad);
        double step = 0.1;
        for (int it = 0; it < iterations && step > 1e-14; ++it) {
            // Project the gradient onto the tangent space of each sphere.
            Eigen::MatrixXd tangent = grad;
            for (int v = 0; v < n; ++v)
                tangent.col(v) -= V.col(v) * V.col(v).dot(grad.col(v));
            double gnorm = tangent.norm();
            if (gnorm < 1e-13 || f < 1e-16) break;
            Eigen::MatrixXd Vn = V - step * tangent;
            for (int v = 0; v < n; ++v) Vn.col(v).normalize();
            Eigen::MatrixXd gn(d, n);
            double fn = objective(Vn, &gn);
            if (fn < f) {
                V = std::move(Vn);
                grad = std::move(gn);
                f = fn;
                step *= 1.25;
            } else {
                step *= 0.5;
            }
        }
        if (f < best) {
            best = f;
            best_V = V;
        }
    }

    RealizeSearchResult out;
    out.residual = best;
    out.realization.d = d;
    out.realization.tolerance = 1e-6;
    out.realization.vectors.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) out.realization.vectors.push_back(best_V.col(v));
    return out;
}

Graph graph_from_rays(const std::vector<Vector>& rays, double tolerance) {
    if (rays.empty()) throw std::invalid_argument("graph_from_rays requires at least one ray");
    if (tolerance <= 0) throw std::invalid_argument("graph_from_rays requires a positive tolerance");
    if (static_cast<int>(rays.size()) > kMaxVertices)
        throw std::invalid_argument("graph_from_rays supports at most 64 rays");
    const auto dim = rays.front().size();
    for (const Vector& r : rays)
        if (r.size() != dim) throw std::invalid_argument("graph_from_rays: inconsistent ray dimensions");
    Graph g(static_cast<int>(rays.size()));
    for (int u = 0; u < g.size(); ++u) {
        for (int v = u + 1; v < g.size(); ++v) {
            double dot = std::abs(rays[static_cast<std::size_t>(u)].normalized().dot(
                rays[static_cast<std::size_t>(v)].normalized()));
            if (dot >= 1.0 - tolerance)
                throw std::invalid_argument("graph_from_rays: rays " + std::to_string(u) + " and " +
                                            std::to_string(v) + " coincide");
            if (dot <= tolerance) g.add_edge(u, v);
        }
    }
    return g;
}

std::vector<Vector> kochen_specker_ten_rays() {
    const double s2 = std::sqrt(2.0), s3 = std::sqrt(3.0), s6 = std::sqrt(6.0);
    std::vector<Vector> out;
    auto push = [&](double x, double y, double z, double scale) {
        Vector v(3);
        v << x / scale, y / scale, z / scale;
        out.push_back(v);
    };
    push(1, 1, 1, s3);    // A
    push(1, -1, 0, s2);   // v1
    push(1, 0, -1, s2);   // v2
    push(0, 0, 1, 1);     // v3
    push(0, 1, 0, 1);     // v4
    push(1, 1, 0, s2);    // v5
    push(1, 0, 1, s2);    // v6
    push(-1, 1, 1, s3);   // B
    push(0, 1, -1, s2);   // v7
    push(2, 1, 1, s6);    // C
    return out;
}

std::vector<Vector> yu_oh_thirteen_rays() {
    std::vector<Vector> out;
    auto push = [&](double x, double y, double z) {
        Vector v(3);
        v << x, y, z;
        out.push_back(v.normalized());
    };
    push(0, 1, -1);  // y1-
    push(1, 0, -1);  // y2-
    push(1, -1, 0);  // y3-
    push(0, 1, 1);   // y1+
    push(1, 0, 1);   // y2+
    push(1, 1, 0);   // y3+
    push(1, 1, 1);   // h0
    push(-1, 1, 1);  // h1
    push(1, -1, 1);  // h2
    push(1, 1, -1);  // h3
    push(1, 0, 0);   // z1
    push(0, 1, 0);   // z2
    push(0, 0, 1);   // z3
    return out;
}

}  // namespace tifs
