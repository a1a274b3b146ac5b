#pragma once

#include <string>
#include <vector>

namespace isotri {

// One published figure recomputed from scratch.
struct ReferenceRow {
    std::string label;
    double expected = 0.0;
    double computed = 0.0;
    double tolerance = 0.0;

    bool pass() const;
};

// The eleven published values: the optimal apex angle, the two minimizers
// x*(v) with their perimeters, and the two worked container instances.
// tol_override > 0 replaces every per-row tolerance.
std::vector<ReferenceRow> reference_rows(double tol_override = -1.0);

}  // namespace isotri
