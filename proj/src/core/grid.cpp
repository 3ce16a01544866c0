#include "core/grid.hpp"

#include <cmath>

#include "core/evaluate.hpp"
#include "core/textio.hpp"

namespace bench {

std::string grid_csv(const FunctionSpec& f, double x1_lo, double x1_hi, double x2_lo,
                     double x2_hi, int resolution) {
  if (!f.dimension.accepts(2))
    throw Error(ErrorCode::DimensionMismatch, f.slug + " is not 2-D-capable");
  if (resolution < 2) throw Error(ErrorCode::InvalidArgument, "resolution must be >= 2");
  if (!(x1_lo < x1_hi) || !(x2_lo < x2_hi))
    throw Error(ErrorCode::InvalidArgument, "empty grid range");

  std::string out = "x1,x2,f\n";
  EvalContext ctx;  // Suppress
  double x[2];
  for (int i = 0; i < resolution; ++i) {
    x[0] = x1_lo + (x1_hi - x1_lo) * i / (resolution - 1);
    for (int j = 0; j < resolution; ++j) {
      x[1] = x2_lo + (x2_hi - x2_lo) * j / (resolution - 1);
      std::string cell;
      try {
        cell = format_double(evaluate(f, std::span<const double>(x, 2), ctx));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::DomainError) throw;
        cell = "nan";
      }
      out += format_double(x[0]);
      out += ',';
      out += format_double(x[1]);
      out += ',';
      out += cell;
      out += '\n';
    }
  }
  return out;
}

}  // namespace bench
