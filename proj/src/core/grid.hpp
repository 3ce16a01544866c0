#pragma once

#include <string>

#include "core/registry.hpp"

namespace bench {

// Evaluates f on an inclusive (resolution x resolution) lattice and renders
// CSV with header "x1,x2,f", rows in row-major x1-outer order. Domain errors
// are recorded as a literal "nan" in the f column. The function must accept
// dimension 2.
std::string grid_csv(const FunctionSpec& f, double x1_lo, double x1_hi, double x2_lo,
                     double x2_hi, int resolution);

}  // namespace bench
