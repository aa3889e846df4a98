#pragma once

#include <vector>

namespace tb {

// Finite distributional series sum_n d_n * (-1)^n * delta^(n)(t - center).
// Houses both the dual Taylor series (d_n = moments/n!) and the Taylor
// kernel. Acting on a test function phi gives sum_n d_n * phi^(n)(center);
// see dist_apply in biorth.hpp.
struct distributional_series {
    double center = 0.0;
    std::vector<double> coeffs; // d_0 .. d_N
};

} // namespace tb
