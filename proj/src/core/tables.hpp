#pragma once

#include <array>

namespace bench::tables {

// Brad (f8) response values.
extern const std::array<double, 15> brad_y;

// Cola (f35) lower-triangular target distances, row i (1..9), column j < i.
extern const double cola_d[9][9];

// Corana (f37) weights.
extern const std::array<double, 4> corana_d;

// Hartman 3 (f62).
extern const double hartman3_a[4][3];
extern const std::array<double, 4> hartman3_c;
extern const double hartman3_p[4][3];

// Hartman 6 (f63).
extern const double hartman6_a[4][6];
extern const std::array<double, 4> hartman6_c;
extern const double hartman6_p[4][6];

// Langerman (f68): 5 rows, up to 10 columns.
extern const double langerman_a[5][10];
extern const std::array<double, 5> langerman_c;

// Shekel (f130..f132): 10 rows, 4 columns; f130 uses the first 5 rows,
// f131 the first 7, f132 all 10.
extern const double shekel_a[10][4];
extern const std::array<double, 10> shekel_c;

}  // namespace bench::tables
