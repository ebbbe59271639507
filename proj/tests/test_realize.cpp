#include <doctest.h>

#include <cmath>
#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "tifs/canonical.hpp"
#include "tifs/construct.hpp"
#include "tifs/realize.hpp"

using namespace tifs;

namespace {

const double kThirdAngle = std::acos(1.0 / 3.0);  // 1.23095941734...

Realization wrap(std::vector<Vector> vectors, double tolerance = 1e-12) {
    Realization r;
    r.d = static_cast<int>(vectors.front().size());
    r.vectors = std::move(vectors);
    r.tolerance = tolerance;
    return r;
}

Eigen::Matrix3d random_rotation(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::Matrix3d m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m(i, j) = gauss(rng);
    Eigen::HouseholderQR<Eigen::Matrix3d> qr(m);
    Eigen::Matrix3d q = qr.householderQ();
    if (q.determinant() < 0) q.col(0) *= -1;
    return q;
}

bool same_ray(const Vector& a, const Vector& b, double tol) {
    return (a - b).norm() < tol || (a + b).norm() < tol;
}

Vector cross(const Vector& a, const Vector& b) {
    Vector out(3);
    out << a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0];
    return out;
}

}  // namespace

TEST_CASE("caption rays verify against the ten-vertex graph") {
    auto rays = kochen_specker_ten_rays();
    Graph tits = tits_from_tifs(bug()).graph;
    auto report = verify(wrap(rays), tits);
    CHECK(report.pass);
    CHECK(report.max_edge_residual <= 1e-12);
    CHECK(report.max_unit_deviation <= 1e-12);
    // Named overlaps from the caption list.
    CHECK(rays[0].dot(rays[9]) == doctest::Approx(4.0 / std::sqrt(18.0)).epsilon(1e-12));
    CHECK(rays[0].dot(rays[7]) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("a broken ray fails verification with the right residual") {
    auto rays = kochen_specker_ten_rays();
    rays.resize(8);
    Vector e1(3);
    e1 << 1, 0, 0;
    rays[7] = e1;  // replace B
    auto report = verify(wrap(rays), fixtures::bug_graph());
    CHECK_FALSE(report.pass);
    CHECK(report.max_edge_residual == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("standard basis realizes the triangle") {
    std::vector<Vector> basis;
    for (int i = 0; i < 3; ++i) {
        Vector v = Vector::Zero(3);
        v[i] = 1;
        basis.push_back(v);
    }
    CHECK(verify(wrap(basis), fixtures::complete(3)).pass);
    CHECK_THROWS_AS(verify(wrap(basis), fixtures::complete(4)), std::invalid_argument);
}

TEST_CASE("parametric builds verify for every admissible multiset") {
    for (int d = 3; d <= 10; ++d) {
        for (const auto& dg : enumerate_minimal_tifs(d)) {
            for (double eps : {0.05, 0.1, 0.3}) {
                Realization r = build_minimal_tifs_realization(d, dg.states, eps);
                auto report = verify(r, dg.graph);
                CAPTURE(d);
                CAPTURE(states_to_string(dg.states));
                CAPTURE(eps);
                CHECK(report.pass);
                CHECK(report.max_unit_deviation <= 1e-12);
                // The builder's orthogonality graph is exactly the construction.
                CHECK(graph_from_rays(r.vectors, 1e-9) == dg.graph);
            }
        }
    }
}

TEST_CASE("epsilon-zero builds exist only for the all-BOTH multiset") {
    CHECK_NOTHROW(build_minimal_tifs_realization(3, {}, 0.0));
    std::vector<CliqueVertexState> both{CliqueVertexState::AdjBoth};
    CHECK_NOTHROW(build_minimal_tifs_realization(4, both, 0.0));
    std::vector<CliqueVertexState> only_a{CliqueVertexState::AdjA};
    CHECK_THROWS_AS(build_minimal_tifs_realization(4, only_a, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(build_minimal_tifs_realization(4, only_a, 1.0), std::invalid_argument);
}

TEST_CASE("designated angles follow the caption arithmetic") {
    // Unperturbed pair: acos(1/3). One side perturbed: acos(sqrt(1-e^2)/3).
    // Both sides perturbed: acos((1-e^2)/3).
    for (double eps : {0.05, 0.1, 0.3}) {
        Realization both = build_minimal_tifs_realization(4, {CliqueVertexState::AdjBoth}, eps);
        CHECK(angle_between(both, 0, 7) == doctest::Approx(kThirdAngle).epsilon(1e-12));

        Realization hardy = build_minimal_tifs_realization(4, {CliqueVertexState::AdjA}, eps);
        CHECK(angle_between(hardy, 0, 7) ==
              doctest::Approx(std::acos(std::sqrt(1 - eps * eps) / 3.0)).epsilon(1e-12));

        Realization mixed =
            build_minimal_tifs_realization(5, {CliqueVertexState::AdjA, CliqueVertexState::AdjB}, eps);
        CHECK(angle_between(mixed, 0, 7) == doctest::Approx(std::acos((1 - eps * eps) / 3.0)).epsilon(1e-12));
    }
    Realization plain = build_minimal_tifs_realization(3, {}, 0.0);
    CHECK(angle_between(plain, 0, 7) == doctest::Approx(kThirdAngle).epsilon(1e-12));
    CHECK(angle_between(plain, 0, 0) == doctest::Approx(0.0));
}

TEST_CASE("the d=6 split perturbation lands on two axes") {
    using S = CliqueVertexState;
    Realization r = build_minimal_tifs_realization(6, {S::AdjA, S::AdjA, S::AdjB}, 0.1);
    // B picks up eps/sqrt(2) on the axes of the two A-only clique vertices.
    const Vector& b = r.vectors[7];
    CHECK(b[3] == doctest::Approx(0.1 / std::sqrt(2.0)).epsilon(1e-12));
    CHECK(b[4] == doctest::Approx(0.1 / std::sqrt(2.0)).epsilon(1e-12));
    CHECK(b[5] == doctest::Approx(0.0));
    const Vector& a = r.vectors[0];
    CHECK(a[5] == doctest::Approx(0.1).epsilon(1e-12));
}

TEST_CASE("pentagon completion reproduces the caption rays up to sign") {
    auto rays = kochen_specker_ten_rays();
    auto completed = complete_from_pentagon(rays[0], rays[1], rays[2], rays[3], rays[4]);
    CHECK(same_ray(completed[0], rays[5], 1e-12));  // v5
    CHECK(same_ray(completed[1], rays[6], 1e-12));  // v6
    CHECK(same_ray(completed[2], rays[7], 1e-12));  // B
    CHECK(same_ray(completed[3], rays[8], 1e-12));  // v7
    CHECK(same_ray(completed[4], rays[9], 1e-12));  // C
}

TEST_CASE("pentagon completion is rotation covariant") {
    auto rays = kochen_specker_ten_rays();
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 50; ++trial) {
        Eigen::Matrix3d rot = random_rotation(rng);
        auto base = complete_from_pentagon(rays[0], rays[1], rays[2], rays[3], rays[4]);
        auto rotated = complete_from_pentagon(rot * rays[0], rot * rays[1], rot * rays[2], rot * rays[3],
                                              rot * rays[4]);
        for (int i = 0; i < 5; ++i) CHECK(same_ray(rotated[static_cast<std::size_t>(i)], rot * base[static_cast<std::size_t>(i)], 1e-9));
    }
}

TEST_CASE("pentagon completion rejects bad input") {
    auto rays = kochen_specker_ten_rays();
    CHECK_THROWS_AS(complete_from_pentagon(rays[0], rays[1], rays[2], rays[1], rays[4]),
                    std::invalid_argument);  // v3 parallel to v1 breaks orthogonality too
    Vector v1 = rays[1];
    CHECK_THROWS_AS(complete_from_pentagon(rays[0], v1, rays[2], -v1, rays[4]), std::invalid_argument);
}

TEST_CASE("random valid pentagons complete to the ten-vertex graph") {
    Graph tits = tits_from_tifs(bug()).graph;
    std::mt19937_64 rng(31415);
    std::normal_distribution<double> gauss(0.0, 1.0);
    int built = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        // Random orthonormal-ish pentagon: a random, v1,v2 in a's plane,
        // v3 orthogonal to v1, v4 pinned by v3 and v2.
        Vector a(3);
        for (int i = 0; i < 3; ++i) a[i] = gauss(rng);
        a.normalize();
        Vector helper(3);
        for (int i = 0; i < 3; ++i) helper[i] = gauss(rng);
        Vector p = cross(a, helper);
        if (p.norm() < 1e-3) continue;
        p.normalize();
        Vector q = cross(a, p);
        double t1 = gauss(rng), t2 = gauss(rng), t3 = gauss(rng);
        Vector v1 = (std::cos(t1) * p + std::sin(t1) * q).eval();
        Vector v2 = (std::cos(t2) * p + std::sin(t2) * q).eval();
        Vector frame2 = cross(v1, a);
        Vector v3 = (std::cos(t3) * a + std::sin(t3) * frame2.normalized()).eval();
        Vector v4c = cross(v3, v2);
        if (v4c.norm() < 1e-6) continue;
        Vector v4 = v4c.normalized();
        std::array<Vector, 5> rest;
        try {
            rest = complete_from_pentagon(a, v1, v2, v3, v4, 1e-9);
        } catch (const std::invalid_argument&) {
            continue;  // degenerate random draw
        }
        std::vector<Vector> all{a, v1, v2, v3, v4, rest[0], rest[1], rest[2], rest[3], rest[4]};
        // Faithfulness can fail for special draws; verify only faithful ones.
        auto report = verify(wrap(all, 1e-9), tits);
        if (report.min_nonedge_overlap > 1e-6) {
            CHECK(report.max_edge_residual <= 1e-9);
            ++built;
        }
    }
    CHECK(built > 500);
}

TEST_CASE("anchor triple reconstruction under perturbation") {
    auto rays = kochen_specker_ten_rays();
    std::mt19937_64 rng(777);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        // Perturb the anchors, re-orthogonalise v4 against v3, reconstruct.
        Vector a = rays[0], v3 = rays[3], v4 = rays[4];
        for (Vector* v : {&a, &v3, &v4}) {
            Vector noise(3);
            for (int i = 0; i < 3; ++i) noise[i] = gauss(rng);
            *v = (*v + 0.05 * noise).normalized();
        }
        v4 = (v4 - v4.dot(v3) * v3).normalized();
        auto rebuilt = complete_from_anchor_triple(a, v3, v4, 1e-9);
        REQUIRE(rebuilt.size() == 10);
        Graph tits = tits_from_tifs(bug()).graph;
        auto report = verify(wrap(rebuilt, 1e-9), tits);
        CHECK(report.max_edge_residual <= 1e-9);
        // Reconstructing again from the rebuilt anchors reproduces every ray.
        auto again = complete_from_anchor_triple(rebuilt[0], rebuilt[3], rebuilt[4], 1e-9);
        for (std::size_t i = 0; i < 10; ++i) CHECK(same_ray(again[i], rebuilt[i], 1e-9));
    }
}

TEST_CASE("min angle search converges to acos(1/3)") {
    MinAngleResult result = min_angle_search(200, 300, 20240811);
    CHECK(std::abs(result.angle - kThirdAngle) < 0.01);
    CHECK(result.angle > kThirdAngle - 1e-6);

    // Identical bits for identical seeds.
    MinAngleResult again = min_angle_search(200, 300, 20240811);
    CHECK(again.angle == result.angle);
    for (std::size_t i = 0; i < result.realization.vectors.size(); ++i)
        CHECK(again.realization.vectors[i] == result.realization.vectors[i]);

    CHECK_THROWS_AS(min_angle_search(0, 10, 1), std::invalid_argument);
}

TEST_CASE("the exact configuration evaluates to acos(1/3) immediately") {
    auto rays = kochen_specker_ten_rays();
    Realization r = wrap(rays);
    CHECK(angle_between(r, 0, 7) == doctest::Approx(kThirdAngle).epsilon(1e-12));
}

TEST_CASE("numeric realization search on named graphs") {
    auto bug_result = numeric_realization_search(fixtures::bug_graph(), 3, 50, 11);
    CHECK(bug_result.residual < 1e-6);

    auto k3 = numeric_realization_search(fixtures::complete(3), 3, 1, 11);
    CHECK(k3.residual < 1e-10);

    // Four mutually orthogonal rays cannot fit in R^3; the best possible
    // edge residual for K4 is 2/3 (tight-frame bound, met by the
    // tetrahedron), recorded here as a regression value.
    auto k4 = numeric_realization_search(fixtures::complete(4), 3, 50, 11);
    CHECK(k4.residual > 1e-2);
    CHECK(k4.residual == doctest::Approx(2.0 / 3.0).epsilon(1e-3));

    CHECK_THROWS_AS(numeric_realization_search(fixtures::complete(3), 1, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(numeric_realization_search(fixtures::complete(3), 3, 0, 1), std::invalid_argument);
}

TEST_CASE("graph_from_rays") {
    auto rays = kochen_specker_ten_rays();
    Graph got = graph_from_rays(rays, 1e-9);
    CHECK(got == tits_from_tifs(bug()).graph);

    std::vector<Vector> basis;
    for (int i = 0; i < 3; ++i) {
        Vector v = Vector::Zero(3);
        v[i] = 1;
        basis.push_back(v);
    }
    CHECK(isomorphic(graph_from_rays(basis, 1e-9), fixtures::complete(3)));

    basis.push_back(-basis[0]);
    CHECK_THROWS_AS(graph_from_rays(basis, 1e-9), std::invalid_argument);  // repeated ray
}
