#include "isotri/geometry.hpp"

#include <algorithm>
#include <numbers>

namespace isotri {

namespace {
constexpr double kPi = std::numbers::pi;
}

double signed_area(Point p, Point q, Point r) {
    return 0.5 * cross(q - p, r - p);
}

Triangle::Triangle(Point p0, Point p1, Point p2, const Tolerance& tol)
    : v_{{p0, p1, p2}} {
    for (const Point& p : v_) {
        if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
            throw DegenerateTriangle("non-finite vertex coordinate");
        }
    }
    double d = std::max({dist(p0, p1), dist(p1, p2), dist(p2, p0)});
    double sa = signed_area(p0, p1, p2);
    if (d <= 0.0 || std::abs(sa) <= tol.eps_degenerate * d * d) {
        throw DegenerateTriangle("collinear vertices");
    }
    if (sa < 0.0) std::swap(v_[1], v_[2]);
}

double area(const Triangle& t) {
    return signed_area(t[0], t[1], t[2]);
}

double perimeter(const Triangle& t) {
    return dist(t[0], t[1]) + dist(t[1], t[2]) + dist(t[2], t[0]);
}

double diameter(const Triangle& t) {
    return std::max({dist(t[0], t[1]), dist(t[1], t[2]), dist(t[2], t[0])});
}

Point centroid(const Triangle& t) {
    return {(t[0].x + t[1].x + t[2].x) / 3.0, (t[0].y + t[1].y + t[2].y) / 3.0};
}

bool contains(const Triangle& outer, Point p, const Tolerance& tol) {
    double slack = tol.eps_rel * diameter(outer);
    for (int i = 0; i < 3; ++i) {
        Point a = outer[i], b = outer[(i + 1) % 3];
        // signed distance of p to edge line, positive on the inside
        double d = cross(b - a, p - a) / dist(a, b);
        if (d < -slack) return false;
    }
    return true;
}

bool contains_triangle(const Triangle& outer, const Triangle& inner,
                       const Tolerance& tol) {
    return contains(outer, inner[0], tol) && contains(outer, inner[1], tol) &&
           contains(outer, inner[2], tol);
}

double segment_distance(Point p, Point a, Point b) {
    Point ab = b - a;
    double len2 = dot(ab, ab);
    double t = len2 > 0.0 ? std::clamp(dot(p - a, ab) / len2, 0.0, 1.0) : 0.0;
    return dist(p, a + t * ab);
}

double boundary_distance(const Triangle& t, Point p) {
    return std::min({segment_distance(p, t[0], t[1]),
                     segment_distance(p, t[1], t[2]),
                     segment_distance(p, t[2], t[0])});
}

IsoscelesInfo is_isosceles(const Triangle& t, const Tolerance& tol) {
    IsoscelesInfo info;
    std::array<double, 3> side;  // side[k] opposite vertex k
    for (int k = 0; k < 3; ++k) side[k] = dist(t[(k + 1) % 3], t[(k + 2) % 3]);
    double d = diameter(t);
    for (int k = 0; k < 3; ++k) {
        if (std::abs(side[k] - side[(k + 1) % 3]) <= tol.eps_rel * d) {
            info.pair[k] = true;
            info.isosceles = true;
        }
    }
    return info;
}

TriangleShape normalize(const Triangle& t, const Tolerance& tol) {
    TriangleShape s;
    std::array<double, 3> side;
    for (int k = 0; k < 3; ++k) side[k] = dist(t[(k + 1) % 3], t[(k + 2) % 3]);
    std::array<int, 3> order{{0, 1, 2}};
    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return side[i] < side[j]; });
    s.a = side[order[0]];
    s.b = side[order[1]];
    s.c = side[order[2]];
    s.vertex_map = order;  // A is opposite the shortest side, etc.

    double d = s.c;
    s.isosceles_input =
        (s.b - s.a <= tol.eps_rel * d) || (s.c - s.b <= tol.eps_rel * d);

    auto angle = [](double opp, double s1, double s2) {
        double cosv = (s1 * s1 + s2 * s2 - opp * opp) / (2.0 * s1 * s2);
        return std::acos(std::clamp(cosv, -1.0, 1.0));
    };
    s.alpha = angle(s.a, s.b, s.c);
    s.beta = angle(s.b, s.a, s.c);
    s.gamma = kPi - s.alpha - s.beta;
    return s;
}

Triangle triangle_from_sides(double a, double b, double c,
                             const Tolerance& tol) {
    std::array<double, 3> s{{a, b, c}};
    std::sort(s.begin(), s.end());
    if (!(s[0] > 0.0) || s[0] + s[1] <= s[2]) {
        throw DegenerateTriangle("side lengths violate the triangle inequality");
    }
    // longest side s[2] from origin along +x; third vertex found from the
    // two remaining sides, above the axis
    double x = (s[2] * s[2] + s[1] * s[1] - s[0] * s[0]) / (2.0 * s[2]);
    double y2 = s[1] * s[1] - x * x;
    double y = y2 > 0.0 ? std::sqrt(y2) : 0.0;
    return Triangle({0, 0}, {s[2], 0}, {x, y}, tol);
}

}  // namespace isotri
