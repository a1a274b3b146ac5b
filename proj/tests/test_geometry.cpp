#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "isotri/geometry.hpp"
#include "isotri/lemmas.hpp"

using namespace isotri;
namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("triangle orientation and degeneracy") {
    Triangle t({0, 0}, {0, 1}, {1, 0});  // clockwise input
    CHECK(signed_area(t[0], t[1], t[2]) > 0.0);
    CHECK(area(t) == doctest::Approx(0.5));
    CHECK_THROWS_AS(Triangle({0, 0}, {1, 1}, {2, 2}), DegenerateTriangle);
    CHECK_THROWS_AS(Triangle({0, 0}, {1, 0}, {2, 1e-15}), DegenerateTriangle);
}

TEST_CASE("normalize labels 3-4-5 correctly") {
    Triangle t({0, 0}, {4, 0}, {4, 3});
    TriangleShape s = normalize(t);
    CHECK(s.a == doctest::Approx(3.0));
    CHECK(s.b == doctest::Approx(4.0));
    CHECK(s.c == doctest::Approx(5.0));
    CHECK(s.gamma == doctest::Approx(kPi / 2.0));
    CHECK(s.alpha == doctest::Approx(std::asin(3.0 / 5.0)));
    CHECK_FALSE(s.isosceles_input);
    CHECK_FALSE(s.obtuse());
    // vertex_map[0] is opposite the shortest side
    const Point& va = t[s.vertex_map[0]];
    const Point& vb = t[s.vertex_map[1]];
    const Point& vc = t[s.vertex_map[2]];
    CHECK(dist(vb, vc) == doctest::Approx(3.0));
    CHECK(dist(va, vc) == doctest::Approx(4.0));
    CHECK(dist(va, vb) == doctest::Approx(5.0));
}

TEST_CASE("isosceles detection") {
    Triangle t({0, 0}, {4, 0}, {2, 3});
    IsoscelesInfo info = is_isosceles(t);
    CHECK(info.isosceles);
    CHECK(normalize(t).isosceles_input);
    CHECK_FALSE(is_isosceles(Triangle({0, 0}, {4, 0}, {1, 2})).isosceles);
}

TEST_CASE("triangle_from_sides canonical placement") {
    Triangle t = triangle_from_sides(3, 4, 5);
    TriangleShape s = normalize(t);
    CHECK(s.a == doctest::Approx(3.0));
    CHECK(s.b == doctest::Approx(4.0));
    CHECK(s.c == doctest::Approx(5.0));
    // longest side on the x-axis from the origin, apex above
    int on_axis = 0;
    for (int i = 0; i < 3; ++i) {
        if (std::abs(t[i].y) < 1e-12) ++on_axis;
        CHECK(t[i].y > -1e-12);
    }
    CHECK(on_axis == 2);
    CHECK_THROWS(triangle_from_sides(1, 2, 9));
}

TEST_CASE("containment and distances") {
    Triangle t({0, 0}, {4, 0}, {0, 3});
    CHECK(contains(t, {1, 1}));
    CHECK(contains(t, {0, 0}));          // vertex
    CHECK(contains(t, {2, 0}));          // edge
    CHECK_FALSE(contains(t, {3, 3}));
    CHECK(contains_triangle(t, Triangle({0.5, 0.5}, {1.5, 0.5}, {0.5, 1.5})));
    CHECK_FALSE(contains_triangle(t, Triangle({0, 0}, {5, 0}, {0, 3})));
    CHECK(segment_distance({0, 1}, {0, 0}, {1, 0}) == doctest::Approx(1.0));
    CHECK(segment_distance({-3, 4}, {0, 0}, {1, 0}) == doctest::Approx(5.0));
    CHECK(boundary_distance(t, {1, 1}) == doctest::Approx(1.0));
}

TEST_CASE("normalize is similarity invariant") {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    for (int i = 0; i < 2000; ++i) {
        Triangle t = random_scalene(rng);
        TriangleShape s1 = normalize(t);
        double rot = 2.0 * kPi * uni(rng);
        double sc = 0.25 + 2.0 * uni(rng);
        Point shift{10.0 * uni(rng) - 5.0, 10.0 * uni(rng) - 5.0};
        Triangle u(sc * rotate(t[0], rot) + shift,
                   sc * rotate(t[1], rot) + shift,
                   sc * rotate(t[2], rot) + shift);
        TriangleShape s2 = normalize(u);
        CHECK(s2.alpha == doctest::Approx(s1.alpha).epsilon(1e-9));
        CHECK(s2.beta == doctest::Approx(s1.beta).epsilon(1e-9));
        CHECK(s2.a / s2.c == doctest::Approx(s1.a / s1.c).epsilon(1e-9));
        CHECK(s2.b / s2.c == doctest::Approx(s1.b / s1.c).epsilon(1e-9));
        CHECK(s2.vertex_map == s1.vertex_map);
    }
}

TEST_CASE("angles from the law of cosines sum to pi") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 1000; ++i) {
        TriangleShape s = normalize(random_scalene(rng));
        CHECK(s.alpha + s.beta + s.gamma == doctest::Approx(kPi).epsilon(1e-12));
        CHECK(s.alpha < s.beta);
        CHECK(s.beta < s.gamma);
    }
}
