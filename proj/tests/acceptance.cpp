// Acceptance suite: each criterion runs as `acceptance <n>` (n in 1..7).
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "isotri/candidates.hpp"
#include "isotri/lemmas.hpp"
#include "isotri/nonspecial.hpp"
#include "isotri/oracle.hpp"
#include "isotri/reference.hpp"
#include "isotri/solver.hpp"

using namespace isotri;

namespace {

constexpr std::uint64_t kSeed = 20260826;

struct Scorecard {
    int checks = 0;
    int failures = 0;
    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok) {
            ++failures;
            std::cout << "  FAIL: " << what << "\n";
        }
    }
};

double elapsed_s(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

int finish(Scorecard& sc, double seconds, double budget) {
    std::cout << "  " << sc.checks - sc.failures << "/" << sc.checks
              << " checks passed in " << std::setprecision(3) << seconds
              << " s (budget " << budget << " s)\n";
    if (seconds > budget) {
        std::cout << "  FAIL: runtime budget exceeded\n";
        ++sc.failures;
    }
    std::cout << (sc.failures == 0 ? "PASS" : "FAIL") << "\n";
    return sc.failures == 0 ? 0 : 1;
}

int criterion_1() {
    std::cout << "criterion 1: published-figure regression\n";
    auto t0 = std::chrono::steady_clock::now();
    Scorecard sc;
    for (const ReferenceRow& r : reference_rows()) {
        std::cout << "  " << (r.pass() ? "ok  " : "FAIL") << " " << r.label
                  << ": expected " << std::setprecision(9) << r.expected
                  << ", computed " << r.computed << "\n";
        sc.expect(r.pass(), r.label);
    }
    std::cout << "  note: the apex-angle row pins 76.3466 deg, but the "
                 "defining closed form and an independent argmin both give "
                 "76.3454152540 deg; the published 76.3466 appears to be a "
                 "misprint, so this row fails by construction\n";
    return finish(sc, elapsed_s(t0), 1.0);
}

int criterion_2() {
    std::cout << "criterion 2: closed-form minimizer vs numeric argmin\n";
    auto t0 = std::chrono::steady_clock::now();
    Scorecard sc;
    const double lo = 0.56, hi = std::sqrt(3.0) - 1e-3;
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        double v = lo + i * (hi - lo) / 49.0;
        double numeric =
            golden_min([&](double x) { return f_v(v, x); }, 1.0 + 1e-9, 4.0, 300);
        double radical = x_star_radical(v);
        double diff = std::abs(numeric - radical);
        worst = std::max(worst, diff);
        sc.expect(diff <= 1e-8, "v=" + std::to_string(v) + " diff " +
                                    std::to_string(diff));
    }
    std::cout << "  worst |radical - argmin| = " << std::setprecision(3)
              << worst << "\n";
    return finish(sc, elapsed_s(t0), 1.0);
}

int criterion_3() {
    std::cout << "criterion 3: shared side-and-angle winners, 10000 shapes\n";
    auto t0 = std::chrono::steady_clock::now();
    Scorecard sc;
    std::mt19937_64 rng(kSeed);
    auto in = [](const std::string& k, std::initializer_list<const char*> set) {
        for (const char* s : set) {
            if (k == s) return true;
        }
        return false;
    };
    long long bad_share = 0, bad_member = 0;
    std::string first_counterexample;
    for (int i = 0; i < 10000; ++i) {
        Triangle t = random_scalene(rng);
        SolveResult r1 = solve(t, Problem::MaxAreaEmbedded);
        SolveResult r2 = solve(t, Problem::MaxPerimEmbedded);
        SolveResult r3 = solve(t, Problem::MinAreaContainer);
        if (!(r1.shares_side_and_angle && r2.shares_side_and_angle &&
              r3.shares_side_and_angle)) {
            ++bad_share;
        }
        bool member =
            in(r1.winners.front().kind.name(),
               {"emb:A'BC", "emb:AB'C", "emb:ABC1"}) &&
            in(r2.winners.front().kind.name(),
               {"emb:AB'C", "emb:A1BC", "emb:ABC1"}) &&
            in(r3.winners.front().kind.name(),
               {"cont:AB'C", "cont:ABC'", "cont:AB1C"});
        if (!member) {
            ++bad_member;
            if (first_counterexample.empty()) {
                std::ostringstream os;
                os << std::setprecision(9) << "sides " << dist(t[1], t[2])
                   << " " << dist(t[0], t[2]) << " " << dist(t[0], t[1])
                   << ", max-perim winner "
                   << r2.winners.front().kind.name();
                first_counterexample = os.str();
            }
        }
    }
    sc.expect(bad_share == 0,
              std::to_string(bad_share) + " winners fail to share a side "
              "and an angle");
    sc.expect(bad_member == 0,
              std::to_string(bad_member) + " winners fall outside the pinned "
              "three-element sets");
    if (bad_member > 0) {
        std::cout << "  first counterexample: " << first_counterexample
                  << "\n";
        std::cout << "  note: the pinned max-perimeter set {emb:AB'C, "
                     "emb:A1BC, emb:ABC1} is not attainable: for acute "
                     "near-isosceles shapes (a close to b) emb:A'BC is the "
                     "strict global optimum, confirmed both by the closed "
                     "forms and by the independent numerical oracle, while "
                     "emb:A1BC never wins (b < c makes emb:ABC1 dominate "
                     "it).  The winners always come from {emb:A'BC, "
                     "emb:AB'C, emb:ABC1} and always share a side and an "
                     "angle, so the structural claim holds; only the listed "
                     "set is off, and this criterion fails by construction\n";
    }
    return finish(sc, elapsed_s(t0), 60.0);
}

int criterion_4() {
    std::cout << "criterion 4: five container types + the v=0.7 counterexample\n";
    auto t0 = std::chrono::steady_clock::now();
    Scorecard sc;
    CheckReport r = check_container_types(10000, kSeed);
    for (const std::string& n : r.notes) std::cout << "  " << n << "\n";
    sc.expect(r.failures == 0,
              std::to_string(r.failures) + " membership failures");

    Triangle t({0, 0}, {1.57, 0}, {1, 0.7});
    SolveResult res = solve(t, Problem::MinPerimContainer);
    std::string kind = res.winners.front().kind.name();
    sc.expect(kind == "ex2" || kind == "apex",
              "v=0.7 winner is special: " + kind);
    double best_special = 1e300, per_abc_prime = 0.0;
    for (const Candidate& c : res.table) {
        if (c.kind.family == Kind::Family::Container && c.exists && c.valid) {
            best_special = std::min(best_special, c.perimeter);
            if (c.kind.name() == std::string("cont:ABC'")) {
                per_abc_prime = c.perimeter;
            }
        }
    }
    std::cout << "  v=0.7: winner " << kind << " " << std::setprecision(7)
              << res.optimum << ", best special " << best_special
              << " (cont:ABCbar, which equals f_v at the clamped base and so "
                 "always exceeds the winner), cont:ABC' " << per_abc_prime
              << "\n";
    sc.expect(std::abs(res.optimum - 4.056333) < 5e-6, "winner value");
    sc.expect(std::abs(per_abc_prime - 4.084007) < 5e-6,
              "cited comparison value per(ABC')");
    sc.expect(res.optimum < best_special, "strict improvement over every "
                                          "special container");
    return finish(sc, elapsed_s(t0), 60.0);
}

int criterion_5() {
    std::cout << "criterion 5: oracle equivalence on 200 shapes x 4 problems\n";
    auto t0 = std::chrono::steady_clock::now();
    Scorecard sc;
    std::mt19937_64 rng(kSeed);
    const double eps = 1e-6;
    double worst_rel = 0.0;
    for (int i = 0; i < 200; ++i) {
        Triangle t = random_scalene(rng);
        double diam = diameter(t);
        for (Problem p : {Problem::MinAreaContainer, Problem::MinPerimContainer,
                          Problem::MaxAreaEmbedded, Problem::MaxPerimEmbedded}) {
            SolveResult sr = solve(t, p);
            OracleResult orc = oracle_solve(t, p);
            double rel = std::abs(orc.value - sr.optimum) / sr.optimum;
            worst_rel = std::max(worst_rel, rel);
            if (rel > 1e-4) {
                sc.expect(false, std::string(problem_name(p)) + " sample " +
                                     std::to_string(i) + " rel " +
                                     std::to_string(rel));
                continue;
            }
            const Triangle& w = orc.witness;
            const Triangle& outer = is_container_problem(p) ? w : t;
            const Triangle& inner = is_container_problem(p) ? t : w;
            double shared = 1e300;
            for (int a = 0; a < 3; ++a) {
                for (int b = 0; b < 3; ++b) {
                    shared = std::min(shared, dist(t[a], w[b]));
                }
            }
            bool on_boundary = true;
            for (int a = 0; a < 3; ++a) {
                on_boundary = on_boundary &&
                              boundary_distance(outer, inner[a]) <= eps * diam;
            }
            bool flush = false;
            for (int e = 0; e < 3 && !flush; ++e) {
                int cnt = 0;
                for (int a = 0; a < 3; ++a) {
                    if (segment_distance(inner[a], outer[e],
                                         outer[(e + 1) % 3]) <= eps * diam) {
                        ++cnt;
                    }
                }
                flush = cnt >= 2;
            }
            std::string tag = std::string(problem_name(p)) + " sample " +
                              std::to_string(i);
            sc.expect(shared <= eps * diam, tag + ": no shared vertex");
            sc.expect(on_boundary, tag + ": vertex off the boundary");
            sc.expect(flush, tag + ": no side-in-side incidence");
        }
        if ((i + 1) % 50 == 0) {
            std::cout << "  " << i + 1 << "/200 done, " << std::setprecision(3)
                      << elapsed_s(t0) << " s\n";
        }
    }
    std::cout << "  worst relative value gap = " << std::setprecision(3)
              << worst_rel << "\n";
    return finish(sc, elapsed_s(t0), 600.0);
}

int criterion_6() {
    std::cout << "criterion 6: inequality and identity suites, 10000 samples\n";
    auto t0 = std::chrono::steady_clock::now();
    Scorecard sc;
    struct Named {
        const char* name;
        CheckReport (*fn)(long long, std::uint64_t);
    };
    const Named checks[] = {
        {"embedded-inequalities", check_embedded_inequalities},
        {"container-inequalities", check_container_inequalities},
        {"minkowski-perimeter", check_minkowski_perimeter},
        {"hinge", check_hinge},
    };
    for (const Named& c : checks) {
        auto c0 = std::chrono::steady_clock::now();
        CheckReport r = c.fn(10000, kSeed);
        double secs = elapsed_s(c0);
        std::cout << "  " << c.name << ": failures " << r.failures
                  << ", worst_margin " << std::setprecision(4)
                  << r.worst_margin << ", " << secs << " s\n";
        sc.expect(r.failures == 0, std::string(c.name) + " failures");
        sc.expect(r.worst_margin > 0.0, std::string(c.name) + " margin");
        sc.expect(secs < 10.0, std::string(c.name) + " runtime");
    }
    return finish(sc, elapsed_s(t0), 60.0);
}

int criterion_7() {
    std::cout << "criterion 7: 3-4-5 hand table\n";
    auto t0 = std::chrono::steady_clock::now();
    Scorecard sc;
    Triangle t = triangle_from_sides(3, 4, 5);
    double alpha = std::asin(3.0 / 5.0);
    struct Row {
        Problem problem;
        double closed_form;
    };
    const Row rows[] = {
        {Problem::MaxAreaEmbedded, 4.8},
        {Problem::MaxPerimEmbedded, 5.0 * (1.0 + 1.0 / std::cos(alpha))},
        {Problem::MinAreaContainer, 7.5},
        {Problem::MinPerimContainer,
         10.0 * (1.0 + std::sin(alpha / 2.0))},
    };
    for (const Row& r : rows) {
        SolveResult sr = solve(t, r.problem);
        OracleResult orc = oracle_solve(t, r.problem);
        std::cout << "  " << problem_name(r.problem) << ": closed form "
                  << std::setprecision(12) << r.closed_form << ", solver "
                  << sr.optimum << ", oracle " << orc.value << "\n";
        sc.expect(std::abs(sr.optimum - r.closed_form) <= 1e-9,
                  std::string(problem_name(r.problem)) + " solver");
        sc.expect(std::abs(orc.value - sr.optimum) <= 1e-4 * sr.optimum,
                  std::string(problem_name(r.problem)) + " oracle");
    }
    sc.expect(std::abs(rows[1].closed_form - 11.25) < 1e-12, "per = 11.25");
    sc.expect(std::abs(rows[3].closed_form - 13.16227766017) < 1e-9,
              "per = 10 + sqrt(10)");
    return finish(sc, elapsed_s(t0), 60.0);
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: acceptance <1..7>\n";
        return 2;
    }
    switch (std::atoi(argv[1])) {
        case 1: return criterion_1();
        case 2: return criterion_2();
        case 3: return criterion_3();
        case 4: return criterion_4();
        case 5: return criterion_5();
        case 6: return criterion_6();
        case 7: return criterion_7();
    }
    std::cerr << "usage: acceptance <1..7>\n";
    return 2;
}
