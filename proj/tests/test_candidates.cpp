#include "doctest.h"

#include <cmath>
#include <map>
#include <numbers>
#include <random>

#include "isotri/candidates.hpp"
#include "isotri/lemmas.hpp"

using namespace isotri;

namespace {

std::map<std::string, Candidate> by_name(const std::vector<Candidate>& v) {
    std::map<std::string, Candidate> m;
    for (const Candidate& c : v) m[c.kind.name()] = c;
    return m;
}

}  // namespace

TEST_CASE("embedded specials on 3-4-5") {
    Triangle t = triangle_from_sides(3, 4, 5);
    auto m = by_name(embedded_specials(normalize(t), t));
    REQUIRE(m.size() == 9);

    CHECK(m["emb:A'BC"].exists);
    CHECK(m["emb:A'BC"].area == doctest::Approx(4.5).epsilon(1e-12));
    CHECK(m["emb:AB'C"].area == doctest::Approx(4.8).epsilon(1e-12));
    CHECK(m["emb:A''BC"].area == doctest::Approx(3.6).epsilon(1e-12));
    CHECK(m["emb:A1BC"].exists);  // perpendicular bisector meets AB for a<b<c
    CHECK(m["emb:A1BC"].area == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(m["emb:AB1C"].area == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(m["emb:ABC1"].area == doctest::Approx(4.6875).epsilon(1e-12));
    CHECK(m["emb:AbarBC"].area == doctest::Approx(4.32).epsilon(1e-12));
    // the reflected-altitude pair needs an acute largest angle
    CHECK_FALSE(m["emb:AbbarBC"].exists);
    CHECK_FALSE(m["emb:ABbarC"].exists);

    CHECK(m["emb:ABC1"].perimeter == doctest::Approx(11.25).epsilon(1e-12));

    for (const auto& [name, c] : m) {
        if (c.exists) CHECK(c.valid);
    }
}

TEST_CASE("containers on 3-4-5") {
    Triangle t = triangle_from_sides(3, 4, 5);
    auto m = by_name(container_specials(normalize(t), t));
    REQUIRE(m.size() == 9);

    CHECK(m["cont:ABC'"].area == doctest::Approx(7.5).epsilon(1e-12));
    double alpha = std::asin(3.0 / 5.0);
    CHECK(m["cont:ABC'"].perimeter ==
          doctest::Approx(10.0 * (1.0 + std::sin(alpha / 2.0))).epsilon(1e-12));
    CHECK(m["cont:ABC'"].perimeter == doctest::Approx(13.16227766).epsilon(1e-9));
    // right angle at C: the perpendicular bisector constructions through C
    // degenerate except the one on AB
    CHECK_FALSE(m["cont:AbarBC"].exists);
    CHECK_FALSE(m["cont:ABbarC"].exists);
    CHECK(m["cont:ABCbar"].exists);
    for (const auto& [name, c] : m) {
        if (c.exists) CHECK(c.valid);
    }
}

TEST_CASE("closed forms match coordinate constructions") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 10000; ++i) {
        Triangle t = random_scalene(rng);
        TriangleShape s = normalize(t);  // carries the true side lengths
        for (const Candidate& c : embedded_specials(s, t)) {
            if (!c.exists) continue;
            auto kind = static_cast<EmbeddedKind>(c.kind.index);
            CHECK(c.area ==
                  doctest::Approx(closed_form_area(kind, s)).epsilon(1e-9));
            CHECK(c.perimeter ==
                  doctest::Approx(closed_form_perimeter(kind, s)).epsilon(1e-9));
        }
        for (const Candidate& c : container_specials(s, t)) {
            if (!c.exists) continue;
            auto kind = static_cast<ContainerKind>(c.kind.index);
            CHECK(c.area ==
                  doctest::Approx(closed_form_area(kind, s)).epsilon(1e-9));
            CHECK(c.perimeter ==
                  doctest::Approx(closed_form_perimeter(kind, s)).epsilon(1e-9));
        }
    }
}

TEST_CASE("every existing special is isosceles and shares a side") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 500; ++i) {
        Triangle t = random_scalene(rng);
        TriangleShape s = normalize(t);
        auto check_list = [&](const std::vector<Candidate>& list) {
            for (const Candidate& c : list) {
                if (!c.exists || !c.triangle) continue;
                CHECK(is_isosceles(*c.triangle, Tolerance{1e-7, 1e-12}).isosceles);
                // shares at least two vertices with the input
                int shared = 0;
                for (int a = 0; a < 3; ++a) {
                    for (int b = 0; b < 3; ++b) {
                        if (dist(t[a], (*c.triangle)[b]) < 1e-9 * diameter(t)) {
                            ++shared;
                        }
                    }
                }
                CHECK(shared >= 2);
            }
        };
        check_list(embedded_specials(s, t));
        check_list(container_specials(s, t));
    }
}

TEST_CASE("kind names round-trip the two namespaces") {
    CHECK(Kind(EmbeddedKind::ABPrimeC).name() == "emb:AB'C");
    CHECK(Kind(ContainerKind::ABPrimeC).name() == "cont:AB'C");
    CHECK(Kind(ContainerKind::ABCbar).name() == "cont:ABCbar");
    CHECK(Kind(NonSpecialKind::Apex).name() == "apex");
    CHECK(Kind(NonSpecialKind::Ex2).name() == "ex2");
    CHECK(Kind().name() == "input");
    CHECK(Kind(EmbeddedKind::ABPrimeC) != Kind(ContainerKind::ABPrimeC));
}
