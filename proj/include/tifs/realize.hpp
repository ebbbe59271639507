#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "tifs/construct.hpp"
#include "tifs/graph.hpp"

namespace tifs {

using Vector = Eigen::VectorXd;

// Unit rays in R^d, one per vertex. Vectors are identified with their
// negatives; all comparisons use |dot|.
struct Realization {
    int d = 3;
    std::vector<Vector> vectors;
    double epsilon = 0.0;
    double tolerance = 1e-12;
};

struct PairDetail {
    int u = 0, v = 0;
    bool edge = false;
    double abs_dot = 0.0;
};

struct VerificationReport {
    double max_edge_residual = 0.0;
    double min_nonedge_overlap = 1.0;
    double max_unit_deviation = 0.0;
    bool pass = false;
    std::vector<PairDetail> detail;
};

// Edges must be orthogonal within tolerance; non-edges must overlap by more
// than tolerance (faithfulness).
VerificationReport verify(const Realization& r, const Graph& g);

// Parametric vectors for minimal_tifs(d, states): the 3-dimensional base
// pattern A=(0,-1,sqrt2)/sqrt3, v1=(1,sqrt2,1)/2, v2=e1, v3=(1,0,-1)/sqrt2,
// v4=e2, v5=(-1,sqrt2,-1)/2, v6=e3, B=(sqrt2,1,0)/sqrt3, one basis vector per
// clique vertex, and A (resp. B) scaled by sqrt(1-eps^2) with weight eps
// split evenly over the axes of the clique vertices it is not adjacent to.
Realization build_minimal_tifs_realization(int d, std::vector<CliqueVertexState> states, double epsilon);

// Ray angle acos(|dot|) in [0, pi/2].
double angle_between(const Realization& r, int a, int b);

// Cross-product completion of the pentagon (a, v1, v3, v4, v2):
// v5=v1xv3, v6=v2xv4, B=v5xv6, v7=axB, C=Bxv7, each normalized.
// Inputs must satisfy the pentagon orthogonalities within tol.
std::array<Vector, 5> complete_from_pentagon(const Vector& a, const Vector& v1, const Vector& v2,
                                             const Vector& v3, const Vector& v4, double tol = 1e-9);

// The anchor triple (a, v3, v4) spans the dependency chain: v1=axv3,
// v2=axv4, then the pentagon completion. Returns all ten vectors in the
// order A, v1..v6, B, v7, C.
std::vector<Vector> complete_from_anchor_triple(const Vector& a, const Vector& v3, const Vector& v4,
                                                double tol = 1e-9);

struct MinAngleResult {
    double angle = 0.0;
    Realization realization;  // ten vectors A, v1..v6, B, v7, C
};

// Multi-start local ascent of |dot(A,B)| over sphere pentagons completed by
// cross products, rejecting unfaithful configurations. Empirical, not a
// proof.
MinAngleResult min_angle_search(int trials, int iterations, std::uint64_t seed);

struct RealizeSearchResult {
    double residual = 0.0;
    Realization realization;
};

// Projected gradient descent with random restarts on the penalised
// orthogonality objective. A residual near zero is evidence of
// realizability; a large residual is evidence only.
RealizeSearchResult numeric_realization_search(const Graph& g, int d, int restarts, std::uint64_t seed,
                                               int iterations = 1500);

// Vertices are the rays; edge iff |dot| <= tolerance. Near-identical rays
// (|dot| >= 1 - tolerance) are rejected.
Graph graph_from_rays(const std::vector<Vector>& rays, double tolerance);

// The ten caption rays of the 10-proposition forced-true set in d=3
// (A, v1..v6, B, v7, C); the first eight realize the bug.
std::vector<Vector> kochen_specker_ten_rays();
// The thirteen rays of the Yu-Oh state-independent set in d=3.
std::vector<Vector> yu_oh_thirteen_rays();

}  // namespace tifs
