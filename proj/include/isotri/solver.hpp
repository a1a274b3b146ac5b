#pragma once

#include <optional>
#include <vector>

#include "isotri/candidates.hpp"
#include "isotri/geometry.hpp"
#include "isotri/nonspecial.hpp"

namespace isotri {

enum class Problem {
    MinAreaContainer,
    MinPerimContainer,
    MaxAreaEmbedded,
    MaxPerimEmbedded,
};

const char* problem_name(Problem p);
std::optional<Problem> parse_problem(std::string_view name);
bool is_container_problem(Problem p);
bool is_area_problem(Problem p);

struct SolveResult {
    Problem problem = Problem::MinAreaContainer;
    double optimum = 0.0;
    std::vector<Candidate> winners;  // ties within tol.eps_rel relative
    std::vector<Candidate> table;    // all candidates, best first
    bool shares_side_and_angle = false;
    bool input_isosceles = false;
};

// Exhaustive candidate enumeration over the special catalogs (plus the two
// non-special container families for the minimum perimeter problem).
// Isosceles inputs are their own optimum for all four problems.
SolveResult solve(const Triangle& t, Problem problem, const Tolerance& tol = {});

// True iff a side of one triangle coincides with a side of the other as a
// segment, and the angles at one shared endpoint agree (1e-7 rad).
bool shares_side_and_angle(const Triangle& a, const Triangle& b,
                           const Tolerance& tol = {});

}  // namespace isotri
