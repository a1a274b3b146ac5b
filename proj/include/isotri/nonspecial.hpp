#pragma once

#include <functional>
#include <vector>

#include "isotri/candidates.hpp"
#include "isotri/geometry.hpp"

namespace isotri {

struct NoInteriorMinimum : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Golden-section minimization on [lo, hi], followed by one parabolic polish
// step to beat the sqrt(eps) localization floor of pure section search.
double golden_min(const std::function<double(double)>& f, double lo, double hi,
                  int iters = 200);

// Apex angle minimizing m(2/sin g + 1/cos(g/2)): the perimeter of an
// isosceles triangle with base vertex at distance m from the line carrying
// its other two vertices.
double gamma_star();

// The perimeter factor above, per unit distance m.
double apex_perimeter_factor(double gamma);

// Isosceles triangle with apex angle gamma at R, base vertex P off the line
// carrying R and S.
struct ApexFamily {
    Point p;            // base vertex
    Point line_a, line_b;  // two points spanning the carrier line
    double m = 0.0;     // distance of p from the line
    double gamma = 0.0; // apex angle at R

    Triangle build(double foot_sign) const;  // foot_sign = +1 or -1
};

// The six apex-angle candidates of a triangle: 3 vertex choices x 2
// orientations of R along the opposite side's line, all with gamma*.
std::vector<Candidate> apex_candidates(const Triangle& t,
                                       const Tolerance& tol = {});

// Normalized-frame perimeter of the second non-special family:
// P=(0,0), C=(1,v), S=(x,0), R on ray S->C with |PR|=|RS|.
double f_v(double v, double x);

struct XStarResult {
    double x = 0.0;
    bool radical_checked = false;  // closed form consulted (v in [0.56, sqrt 3))
    double radical_value = 0.0;
};

// Numeric minimizer of f_v on (1, inf); inside the certified window the
// closed-form radical is evaluated and must agree to 1e-8.
XStarResult x_star(double v);

struct DeltaV {
    double v = 0.0;
    double delta = 0.0;
    explicit DeltaV(double v_)
        : v(v_), delta(std::sqrt(48.0 * std::pow(v_, 6) + 81.0 * std::pow(v_, 4)) -
                       9.0 * v_ * v_) {}
};

// Closed-form root of the minimizer quartic (x-1)^4 + 2(x-1)^3 = v^2.
double x_star_radical(double v);

// The six assignments of (shared vertex P, base vertex on PS, third vertex
// on RS), each clamped to x >= x_b so every emitted triangle is a container.
std::vector<Candidate> ex2_candidates(const Triangle& t,
                                      const Tolerance& tol = {});

}  // namespace isotri
