#include "doctest.h"

#include <cmath>
#include <numbers>

#include "isotri/candidates.hpp"
#include "isotri/lemmas.hpp"

using namespace isotri;
namespace {
constexpr double kPi = std::numbers::pi;

TriangleShape shape_from_angles(double alpha, double beta) {
    TriangleShape s;
    s.alpha = alpha;
    s.beta = beta;
    s.gamma = kPi - alpha - beta;
    s.a = std::sin(alpha) / std::sin(s.gamma);
    s.b = std::sin(beta) / std::sin(s.gamma);
    s.c = 1.0;
    return s;
}
}  // namespace

TEST_CASE("embedded inequality check is clean and deterministic") {
    CheckReport r = check_embedded_inequalities(2000, 77);
    CHECK(r.failures == 0);
    CHECK(r.details.empty());
    CHECK(r.worst_margin > 0.0);
    CheckReport r2 = check_embedded_inequalities(2000, 77);
    CHECK(r.worst_margin == r2.worst_margin);
}

TEST_CASE("container inequality check is clean") {
    CheckReport r = check_container_inequalities(2000, 78);
    CHECK(r.failures == 0);
    CHECK(r.worst_margin > 0.0);
}

TEST_CASE("near-isosceles boundary keeps positive slack") {
    // b -> c at the sampling margin: the area gap shrinks but stays positive
    double alpha = 0.4;
    double beta = 0.5 * (kPi - alpha) - 5e-4;
    TriangleShape s = shape_from_angles(alpha, beta);
    double gap = closed_form_area(EmbeddedKind::ABPrimeC, s) -
                 closed_form_area(EmbeddedKind::A1BC, s);
    CHECK(gap > 0.0);
    CHECK(gap < 0.05 * closed_form_area(EmbeddedKind::ABPrimeC, s));
}

TEST_CASE("minkowski mean perimeter identity") {
    CheckReport r = check_minkowski_perimeter(2000, 79);
    CHECK(r.failures == 0);
    CHECK(r.worst_margin > 0.0);
}

TEST_CASE("hinge perimeter monotonicity") {
    CheckReport r = check_hinge(5000, 80);
    CHECK(r.failures == 0);
    CHECK(r.worst_margin > 0.0);
    // equal angles give equal perimeters, tiny differences a positive margin
    double p = 1.3, q = 0.9;
    auto per = [&](double w) {
        return p + q + std::sqrt(p * p + q * q - 2.0 * p * q * std::cos(w));
    };
    CHECK(per(1.0) == per(1.0));
    CHECK(per(1.0 + 1e-8) > per(1.0));
}

TEST_CASE("structural conditions on oracle witnesses") {
    OracleConfig cfg;
    cfg.grid_gamma = 180;
    cfg.grid_theta = 180;
    cfg.refine_starts = 4;
    CheckReport r = check_structural(2, 81, cfg);
    for (const std::string& d : r.details) MESSAGE(d);
    CHECK(r.failures == 0);
}

TEST_CASE("min-perimeter winner types over random shapes") {
    CheckReport r = check_container_types(1500, 82);
    CHECK(r.failures == 0);
    CHECK_FALSE(r.notes.empty());  // the type tally is reported
    CHECK(r.worst_margin > 0.0);   // winners strictly beat the other kinds
}
