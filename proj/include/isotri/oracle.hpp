#pragma once

#include <array>
#include <string>
#include <utility>

#include "isotri/geometry.hpp"
#include "isotri/solver.hpp"

namespace isotri {

struct InvalidPose : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Search parameterization: canonical isosceles shape (apex angle gamma,
// unit legs, apex at the local origin) rotated by theta. Mirror symmetry of
// isosceles shapes makes reflections redundant.
struct ShapePose {
    double gamma = 0.0;  // in (0, pi)
    double theta = 0.0;  // in [0, 2*pi)
};

struct OracleConfig {
    int grid_gamma = 720;
    int grid_theta = 720;
    int refine_iters = 200;
    int refine_starts = 5;
    double param_tol = 1e-10;
    double value_tol = 1e-9;
    int threads = 0;  // 0 = hardware concurrency
};

struct OracleResult {
    double value = 0.0;
    Triangle witness;
    ShapePose pose;
    long long evaluations = 0;
    bool converged = false;
    std::string method;  // refinement scheme diagnostics
};

// Canonical shape vertices, counter-clockwise, apex first.
std::array<Point, 3> canonical_shape(double gamma);

enum class Metric { Area, Perimeter };

// Minimal enclosing triangle of t whose edge outward normals are those of
// the rotated canonical shape: every edge is a support line of t.
std::pair<double, Triangle> min_enclosing_at_pose(const Triangle& t,
                                                  const ShapePose& pose,
                                                  Metric metric);

// Maximal positive homothet of the posed shape inside t: the 3-variable LP
// max s with all 9 vertex-in-half-plane constraints, solved by exhaustive
// enumeration of the 84 constraint bases.
std::pair<double, Triangle> max_embedded_at_pose(const Triangle& t,
                                                 const ShapePose& pose);

// Grid over (gamma, theta) with derivative-free local refinement.
OracleResult oracle_solve(const Triangle& t, Problem problem,
                          const OracleConfig& cfg = {});

}  // namespace isotri
