#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace isotri {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

inline Point operator+(Point p, Point q) { return {p.x + q.x, p.y + q.y}; }
inline Point operator-(Point p, Point q) { return {p.x - q.x, p.y - q.y}; }
inline Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
inline double dot(Point p, Point q) { return p.x * q.x + p.y * q.y; }
inline double cross(Point p, Point q) { return p.x * q.y - p.y * q.x; }
inline double norm(Point p) { return std::hypot(p.x, p.y); }
inline double dist(Point p, Point q) { return norm(p - q); }
inline Point perp(Point p) { return {-p.y, p.x}; }
inline Point normalized(Point p) {
    double n = norm(p);
    return {p.x / n, p.y / n};
}
inline Point rotate(Point p, double theta) {
    double c = std::cos(theta), s = std::sin(theta);
    return {c * p.x - s * p.y, s * p.x + c * p.y};
}

struct Tolerance {
    double eps_rel = 1e-9;
    double eps_degenerate = 1e-12;
};

struct DegenerateTriangle : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotScalene : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Counter-clockwise oriented, non-collinear by construction.
class Triangle {
public:
    Triangle() : v_{{{0, 0}, {1, 0}, {0, 1}}} {}
    Triangle(Point p0, Point p1, Point p2, const Tolerance& tol = {});

    const Point& operator[](int i) const { return v_[static_cast<size_t>(i)]; }
    const std::array<Point, 3>& vertices() const { return v_; }

private:
    std::array<Point, 3> v_;
};

double signed_area(Point p, Point q, Point r);
double area(const Triangle& t);
double perimeter(const Triangle& t);
double diameter(const Triangle& t);
Point centroid(const Triangle& t);

// Inside-or-on test, relaxed by tol.eps_rel * diam(outer) on each edge.
bool contains(const Triangle& outer, Point p, const Tolerance& tol = {});
bool contains_triangle(const Triangle& outer, const Triangle& inner,
                       const Tolerance& tol = {});

// Distance from p to the closed segment [a, b].
double segment_distance(Point p, Point a, Point b);
double boundary_distance(const Triangle& t, Point p);

struct IsoscelesInfo {
    bool isosceles = false;
    // pair[k] == true means sides opposite vertices k and (k+1)%3 have
    // equal length, i.e. |v[k+1] v[k+2]| == |v[k+2] v[k]|.
    std::array<bool, 3> pair{{false, false, false}};
};
IsoscelesInfo is_isosceles(const Triangle& t, const Tolerance& tol = {});

// Sorted labeling a <= b <= c with alpha at A opposite a. Angles come from
// the law of cosines on the side lengths, not from coordinates.
struct TriangleShape {
    double a = 0, b = 0, c = 0;
    double alpha = 0, beta = 0, gamma = 0;
    // vertex_map[0] is the index of the input vertex that became A, etc.
    std::array<int, 3> vertex_map{{0, 1, 2}};
    bool isosceles_input = false;

    bool obtuse() const { return gamma > 3.14159265358979323846 / 2.0; }
};

TriangleShape normalize(const Triangle& t, const Tolerance& tol = {});

// Canonical placement of a sides-only input: longest side on the x-axis
// from the origin, third vertex in the upper half-plane.
Triangle triangle_from_sides(double a, double b, double c,
                             const Tolerance& tol = {});

}  // namespace isotri
