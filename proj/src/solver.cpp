#include "isotri/solver.hpp"

#include <algorithm>
#include <cmath>

namespace isotri {

const char* problem_name(Problem p) {
    switch (p) {
        case Problem::MinAreaContainer: return "min-area-container";
        case Problem::MinPerimContainer: return "min-perim-container";
        case Problem::MaxAreaEmbedded: return "max-area-embedded";
        case Problem::MaxPerimEmbedded: return "max-perim-embedded";
    }
    return "?";
}

std::optional<Problem> parse_problem(std::string_view name) {
    for (Problem p : {Problem::MinAreaContainer, Problem::MinPerimContainer,
                      Problem::MaxAreaEmbedded, Problem::MaxPerimEmbedded}) {
        if (name == problem_name(p)) return p;
    }
    return std::nullopt;
}

bool is_container_problem(Problem p) {
    return p == Problem::MinAreaContainer || p == Problem::MinPerimContainer;
}

bool is_area_problem(Problem p) {
    return p == Problem::MinAreaContainer || p == Problem::MaxAreaEmbedded;
}

namespace {

double metric_of(const Candidate& c, Problem p) {
    return is_area_problem(p) ? c.area : c.perimeter;
}

double vertex_angle(const Triangle& t, int i) {
    Point u = t[(i + 1) % 3] - t[i];
    Point w = t[(i + 2) % 3] - t[i];
    return std::acos(std::clamp(dot(u, w) / (norm(u) * norm(w)), -1.0, 1.0));
}

}  // namespace

bool shares_side_and_angle(const Triangle& a, const Triangle& b,
                           const Tolerance& tol) {
    double eps = tol.eps_rel * std::max(diameter(a), diameter(b));
    constexpr double kAngleEps = 1e-7;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            // side (i, i+1) of a against side (j, j+1) of b, both orders
            int i2 = (i + 1) % 3, j2 = (j + 1) % 3;
            for (int flip = 0; flip < 2; ++flip) {
                int p = flip ? j2 : j, q = flip ? j : j2;
                if (dist(a[i], b[p]) <= eps && dist(a[i2], b[q]) <= eps) {
                    if (std::abs(vertex_angle(a, i) - vertex_angle(b, p)) <= kAngleEps ||
                        std::abs(vertex_angle(a, i2) - vertex_angle(b, q)) <= kAngleEps) {
                        return true;
                    }
                }
            }
        }
    }
    return false;
}

SolveResult solve(const Triangle& t, Problem problem, const Tolerance& tol) {
    SolveResult res;
    res.problem = problem;

    TriangleShape shape = normalize(t, tol);
    if (shape.isosceles_input) {
        // an isosceles triangle is its own optimum for all four problems
        Candidate self;
        self.kind = Kind{};
        self.triangle = t;
        self.area = area(t);
        self.perimeter = perimeter(t);
        self.exists = true;
        self.valid = true;
        self.note = "isosceles input";
        res.input_isosceles = true;
        res.optimum = metric_of(self, problem);
        res.winners = {self};
        res.table = {self};
        res.shares_side_and_angle = true;
        return res;
    }

    std::vector<Candidate> table;
    if (is_container_problem(problem)) {
        table = container_specials(shape, t, tol);
        if (problem == Problem::MinPerimContainer) {
            auto apex = apex_candidates(t, tol);
            table.insert(table.end(), apex.begin(), apex.end());
            auto ex2 = ex2_candidates(t, tol);
            table.insert(table.end(), ex2.begin(), ex2.end());
        }
    } else {
        table = embedded_specials(shape, t, tol);
    }

    const bool minimize = is_container_problem(problem);
    auto better = [&](const Candidate& x, const Candidate& y) {
        bool xu = x.exists && x.valid, yu = y.exists && y.valid;
        if (xu != yu) return xu;
        if (!xu) return x.exists && !y.exists;
        double mx = metric_of(x, problem), my = metric_of(y, problem);
        return minimize ? mx < my : mx > my;
    };
    std::stable_sort(table.begin(), table.end(), better);

    res.table = table;
    const Candidate& best = table.front();
    if (!best.exists || !best.valid) {
        throw std::runtime_error("solve: no usable candidate");
    }
    res.optimum = metric_of(best, problem);
    for (const Candidate& c : table) {
        if (c.exists && c.valid &&
            std::abs(metric_of(c, problem) - res.optimum) <=
                tol.eps_rel * std::abs(res.optimum)) {
            res.winners.push_back(c);
        }
    }
    res.shares_side_and_angle =
        shares_side_and_angle(t, *res.winners.front().triangle, tol);
    return res;
}

}  // namespace isotri
