#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "isotri/geometry.hpp"
#include "isotri/oracle.hpp"

namespace isotri {

struct CheckReport {
    std::string check_id;
    long long samples = 0;
    long long failures = 0;
    double worst_margin = 0.0;  // minimum slack observed; > 0 on success
    std::uint64_t seed = 0;
    std::vector<std::string> details;  // failing inputs, empty on success
    std::vector<std::string> notes;    // non-failing diagnostics (tallies)
};

// Random strictly scalene triangle: angles drawn from the open simplex
// 0 < alpha < beta < gamma with 1e-3 margin to every boundary, then a
// random similarity applied.
Triangle random_scalene(std::mt19937_64& rng);

// Strict area orderings among the nine embedded specials.
CheckReport check_embedded_inequalities(long long samples, std::uint64_t seed);

// Strict perimeter orderings among the nine special containers.
CheckReport check_container_inequalities(long long samples, std::uint64_t seed);

// The perimeter of the vertex-wise Minkowski mean (K1 + K2)/2 equals the
// mean of the perimeters; non-homothetic triangle pairs give >= 4 edges.
CheckReport check_minkowski_perimeter(long long samples, std::uint64_t seed);

// Two sides fixed, larger included angle => larger third side and perimeter.
CheckReport check_hinge(long long samples, std::uint64_t seed);

// Structural conditions on oracle witnesses for all four problems:
// side-in-side incidence, boundary incidence of every relevant vertex,
// a shared vertex, and the midpoint-arc condition for max-area embedded.
CheckReport check_structural(long long samples, std::uint64_t seed,
                             const OracleConfig& cfg = {});

// Every minimum-perimeter container winner is one of the five types.
CheckReport check_container_types(long long samples, std::uint64_t seed);

std::vector<std::string> lemma_check_names();

}  // namespace isotri
