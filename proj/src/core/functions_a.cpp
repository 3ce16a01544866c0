// Catalog entries 1..60.

#include "core/functions_common.hpp"

namespace bench {

using namespace bench::detail;

void register_functions_a(CatalogBuilder& b) {
  {
    auto& f = b.add(1, "ackley-1", "Ackley 1");
    f.dimension = scalable_dim(2, 1);
    f.bounds = box(-35, 35);
    f.flags = parse_flags("Continuous, Differentiable, Non-separable, Scalable, Multimodal");
    f.citation = "BAECK1993";
    f.optima = {opt_points({{0, 0}}, 0.0, kExact)};
    f.eval = [](Span x, Ctx&, Noise&) {
      double q = 0, c = 0;
      for (double v : x) {
        q += v * v;
        c += std::cos(2 * kPi * v);
      }
      double n = static_cast<double>(x.size());
      return -20 * std::exp(-0.02 * std::sqrt(q / n)) - std::exp(c / n) + 20 + kE;
    };
  }
  {
    auto& f = b.add(2, "ackley-2", "Ackley 2");
    f.dimension = fixed_dim(2);
    f.bounds = box(-32, 32);
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Non-Scalable, Unimodal");
    f.citation = "ACKLEY1987";
    f.optima = {opt_points({{0, 0}}, -200.0, kExact)};
    f.eval = [](Span x, Ctx&, Noise&) {
      return -200 * std::exp(-0.02 * std::hypot(x[0], x[1]));
    };
  }
  {
    auto& f = b.add(3, "ackley-3", "Ackley 3");
    f.dimension = fixed_dim(2);
    f.bounds = box(-32, 32);
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Non-Scalable, Unimodal");
    f.citation = "ACKLEY1987";
    f.optima = {opt_points({{0, -0.4}}, -219.1418, kApprox,
                           "location printed as (0, ~-0.4)")};
    f.eval = [](Span x, Ctx&, Noise&) {
      return 200 * std::exp(-0.02 * std::hypot(x[0], x[1])) +
             5 * std::exp(std::cos(3 * x[0]) + std::sin(3 * x[1]));
    };
  }
  {
    auto& f = b.add(4, "ackley-4", "Ackley 4");
    f.dimension = scalable_dim(2, 2);
    f.bounds = box(-35, 35);
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Scalable, Multimodal");
    f.note = "sum runs over adjacent pairs (D-1 terms)";
    f.optima = {opt_points({{-1.479252, -0.739807}, {1.479252, -0.739807}}, -3.917275, kRounded)};
    f.eval = [](Span x, Ctx&, Noise&) {
      double s = 0;
      for (size_t i = 0; i + 1 < x.size(); ++i)
        s += std::exp(-0.2) * std::hypot(x[i], x[i + 1]) +
             3 * (std::cos(2 * x[i]) + std::sin(2 * x[i + 1]));
      return s;
    };
  }
  {
    auto& f = b.add(5, "adjiman", "Adjiman");
    f.dimension = fixed_dim(2);
    f.bounds = box({{-1, 2}, {-1, 1}});
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal");
    f.citation = "ADJIMAN1998";
    f.optima = {opt_points({{2, 0.10578}}, -2.02181, kRounded)};
    f.eval = [](Span x, Ctx&, Noise&) {
      return std::cos(x[0]) * std::sin(x[1]) - x[0] / (x[1] * x[1] + 1);
    };
  }
  {
    auto& f = b.add(6, "alpine-1", "Alpine 1");
    f.dimension = scalable_dim(2, 1);
    f.bounds = box(-10, 10);
    f.flags = parse_flags("Continuous, Non-Differentiable, Separable, Non-Scalable, Multimodal");
    f.citation = "RAHNAMAYAN2007";
    f.optima = {opt_points({{0, 0}}, 0.0, kExact)};
    f.eval = [](Span x, Ctx&, Noise&) {
      double s = 0;
      for (double v : x) s += std::fabs(v * std::sin(v) + 0.1 * v);
      return s;
    };
  }
  {
    auto& f = b.add(7, "alpine-2", "Alpine 2");
    f.dimension = scalable_dim(2, 1);
    f.bounds = box(0, 10);
    f.flags = parse_flags("Continuous, Differentiable, Separable, Scalable, Multimodal");
    f.citation = "CLERC1999";
    f.optima = {opt_points({{7.917, 7.917}}, 2.808 * 2.808, kRounded,
                           "claimed value 2.808^D; the product form attains it as a maximum")};
    f.eval = [](Span x, Ctx&, Noise&) {
      double p = 1;
      for (double v : x) {
        if (v < 0) domain_error("alpine-2 needs x >= 0 (sqrt)");
        p *= std::sqrt(v) * std::sin(v);
      }
      return p;
    };
  }
  {
    auto& f = b.add(8, "brad", "Brad");
    f.dimension = fixed_dim(3);
    f.bounds = box({{-0.25, 0.25}, {0.01, 2.5}, {0.01, 2.5}});
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal");
    f.citation = "BRAD1970";
    f.optima = {opt_points({{0.0824, 1.133, 2.3437}}, 0.00821487, kRounded)};
    f.eval = [](Span x, Ctx&, Noise&) {
      double s = 0;
      for (int i = 1; i <= 15; ++i) {
        double u = i, v = 16 - i, w = std::min(u, v);
        double y = tables::brad_y[static_cast<size_t>(i) - 1];
        s += sqr((y - x[0] - u) / (v * x[1] + w * x[2]));
      }
      return s;
    };
  }
  {
    auto& f = b.add(9, "bartels-conn", "Bartels Conn");
    f.dimension = fixed_dim(2);
    f.bounds = box(-500, 500);
    f.flags = parse_flags("Continuous, Non-differentiable, Non-Separable, Non-Scalable, Multimodal");
    f.optima = {opt_points({{0, 0}}, 1.0, kExact)};
    f.eval = [](Span x, Ctx&, Noise&) {
      return std::fabs(x[0] * x[0] + x[1] * x[1] + x[0] * x[1]) + std::fabs(std::sin(x[0])) +
             std::fabs(std::cos(x[1]));
    };
  }
  {
    auto& f = b.add(10, "beale", "Beale");
    f.dimension = fixed_dim(2);
    f.bounds = box(-4.5, 4.5);
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Non-Scalable, Unimodal");
    f.optima = {opt_points({{3, 0.5}}, 0.0, kExact)};
    f.eval = [](Span x, Ctx&, Noise&) {
      return sqr(1.5 - x[0] + x[0] * x[1]) + sqr(2.25 - x[0] + x[0] * x[1] * x[1]) +
             sqr(2.625 - x[0] + x[0] * x[1] * x[1] * x[1]);
    };
  }

  // f11..f15 share the Biggs exponential-fit family; y as printed.
  {
    auto& f = b.add(11, "biggs-exp2", "Biggs EXP2");
    f.dimension = fixed_dim(2);
    f.bounds = box(0, 20);
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal");
    f.citation = "BIGGS1971";
    f.optima = {opt_points({{1, 10}}, 0.0, kExact)};
    f.eval = [](Span x, Ctx&, Noise&) {
      double s = 0;
      for (int i = 1; i <= 10; ++i) {
        double t = 0.1 * i;
        double y = std::exp(-t) - 5 * std::exp(10 * t);
        s += sqr(std::exp(-t * x[0]) - 5 * std::exp(-t * x[1]) - y);
      }
      return s;
    };
  }
  {
    auto& f = b.add(12, "biggs-exp3", "Biggs EXP3");
    f.dimension = fixed_dim(3);
    f.bounds = box(0, 20);
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal");
    f.citation = "BIGGS1971";
    f.optima = {opt_points({{1, 10, 5}}, 0.0, kExact)};
    f.eval = [](Span x, Ctx&, Noise&) {
      double s = 0;
      for (int i = 1; i <= 10; ++i) {
        double t = 0.1 * i;
        double y = std::exp(-t) - 5 * std::exp(10 * t);
        s += sqr(std::exp(-t * x[0]) - x[2] * std::exp(-t * x[1]) - y);
      }
      return s;
    };
  }
  {
    auto& f = b.add(13, "biggs-exp4", "Biggs EXP4");
    f.dimension = fixed_dim(4);
    f.bounds = box(0, 20);
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal");
    f.citation = "BIGGS1971";
    f.optima = {opt_points({{1, 10, 1, 5}}, 0.0, kExact)};
    f.eval = [](Span x, Ctx&, Noise&) {
      double s = 0;
      for (int i = 1; i <= 10; ++i) {
        double t = 0.1 * i;
        double y = std::exp(-t) - 5 * std::exp(10 * t);
        s += sqr(x[2] * std::exp(-t * x[0]) - x[3] * std::exp(-t * x[1]) - y);
      }
      return s;
    };
  }
  {
    auto& f = b.add(14, "biggs-exp5", "Biggs EXP5");
    f.dimension = fixed_dim(5);
    f.bounds = box(0, 20);
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal");
    f.citation = "BIGGS1971";
    f.optima = {opt_points({{1, 10, 1, 5, 4}}, 0.0, kExact)};
    f.eval = [](Span x, Ctx&, Noise&) {
      double s = 0;
      for (int i = 1; i <= 11; ++i) {
        double t = 0.1 * i;
        double y = std::exp(-t) - 5 * std::exp(10 * t) + 3 * std::exp(-4 * t);
        s += sqr(x[2] * std::exp(-t * x[0]) - x[3] * std::exp(-t * x[1]) +
                 3 * std::exp(-t * x[4]) - y);
      }
      return s;
    };
  }
  {
    auto& f = b.add(15, "biggs-exp6", "Biggs EXP6");
    f.dimension = fixed_dim(6);
    f.bounds = box(-20, 20);
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal");
    f.citation = "BIGGS1971";
    f.note = "printed title repeats 'Biggs EXP5'; renamed for the six-variable form";
    f.optima = {opt_points({{1, 10, 1, 5, 4, 3}}, 0.0, kExact)};
    f.eval = [](Span x, Ctx&, Noise&) {
      double s = 0;
      for (int i = 1; i <= 13; ++i) {
        double t = 0.1 * i;
        double y = std::exp(-t) - 5 * std::exp(10 * t) + 3 * std::exp(-4 * t);
        s += sqr(x[2] * std::exp(-t * x[0]) - x[3] * std::exp(-t * x[1]) +
                 x[5] * std::exp(-t * x[4]) - y);
      }
      return s;
    };
  }
  {
    auto& f = b.add(16, "bird", "Bird");
    f.dimension = fixed_dim(2);
    f.bounds = box(-2 * kPi, 2 * kPi);
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal");
    f.citation = "MISHRA2006_6";
    f.optima = {opt_points({{4.70104, 3.15294}, {-1.58214, -3.13024}}, -106.764537, kRounded)};
    f.eval = [](Span x, Ctx&, Noise&) {
      return std::sin(x[0]) * std::exp(sqr(1 - std::cos(x[1]))) +
             std::cos(x[1]) * std::exp(sqr(1 - std::sin(x[0]))) + sqr(x[0] - x[1]);
    };
  }
  {
    auto& f = b.add(17, "bohachevsky-1", "Bohachevsky 1");
    f.dimension = fixed_dim(2);
    f.bounds = box(-100, 100);
    f.flags = parse_flags("Continuous, Differentiable, Separable, Non-Scalable, Multimodal");
    f.citation = "BOHACHEVSKY1986";
    f.optima = {opt_points({{0, 0}}, 0.0, kExact)};
    f.eval = [](Span x, Ctx&, Noise&) {
      return x[0] * x[0] + 2 * x[1] * x[1] - 0.3 * std::cos(3 * kPi * x[0]) -
             0.4 * std::cos(4 * kPi * x[1]) + 0.7;
    };
  }
  {
    auto& f = b.add(18, "bohachevsky-2", "Bohachevsky 2");
    f.dimension = fixed_dim(2);
    f.bounds = box(-100, 100);
    f.flags = parse_flags("Continuous, Differentiable, Non-separable, Non-Scalable, Multimodal");
    f.citation = "BOHACHEVSKY1986";
    f.optima = {opt_points({{0, 0}}, 0.0, kExact)};
    f.eval = [](Span x, Ctx&, Noise&) {
      return x[0] * x[0] + 2 * x[1] * x[1] -
             0.3 * std::cos(3 * kPi * x[0]) * 0.4 * std::cos(4 * kPi * x[1]) + 0.3;
    };
  }
  {
    auto& f = b.add(19, "bohachevsky-3", "Bohachevsky 3");
    f.dimension = fixed_dim(2);
    f.bounds = box(-100, 100);
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal");
    f.citation = "BOHACHEVSKY1986";
    f.optima = {opt_points({{0, 0}}, 0.0, kExact)};
    f.eval = [](Span x, Ctx&, Noise&) {
      return x[0] * x[0] + 2 * x[1] * x[1] - 0.3 * std::cos(3 * kPi * x[0] + 4 * kPi * x[1]) +
             0.3;
    };
  }
  {
    auto& f = b.add(20, "booth", "Booth");
    f.dimension = fixed_dim(2);
    f.bounds = box(-10, 10);
    f.flags = parse_flags("Continuous, Differentiable, Non-separable, Non-Scalable, Unimodal");
    f.optima = {opt_points({{1, 3}}, 0.0, kExact)};
    f.eval = [](Span x, Ctx&, Noise&) {
      return sqr(x[0] + 2 * x[1] - 7) + sqr(2 * x[0] + x[1] - 5);
    };
  }
  {
    auto& f = b.add(21, "box-betts", "Box-Betts Quadratic Sum");
    f.dimension = fixed_dim(3);
    f.bounds = box({{0.9, 1.2}, {9, 11.2}, {0.9, 1.2}});
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal");
    f.citation = "ALI2005";
    f.note = "third bound interval printed for x2 again; read as x3";
    f.optima = {opt_points({{1, 10, 1}}, 0.0, kExact)};
    f.eval = [](Span x, Ctx&, Noise&) {
      double s = 0;
      for (int i = 0; i <= 2; ++i) {
        double k = 0.1 * (i + 1);
        double g = std::exp(-k * x[0]) - std::exp(-k * x[1]) -
                   std::exp((-k - std::exp(-static_cast<double>(i + 1))) * x[2]);
        s += g * g;
      }
      return s;
    };
  }
  {
    auto& f = b.add(22, "branin-rcos", "Branin RCOS");
    f.dimension = fixed_dim(2);
    f.bounds = box({{-5, 10}, {0, 15}});
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal");
    f.citation = "BRANIN1972";
    f.optima = {opt_points({{-kPi, 12.275}, {kPi, 2.275}}, 0.3978873, kRounded),
                [] {
                  auto o = opt_points({{3 * kPi, 2.475}}, 0.3978873, kRounded,
                                      "printed x2 = 2.425; the canonical third minimum "
                                      "has x2 = 2.475");
                  o.corrected = true;
                  return o;
                }()};
    f.eval = [](Span x, Ctx&, Noise&) {
      return sqr(x[1] - 5.1 * x[0] * x[0] / (4 * kPi * kPi) + 5 * x[0] / kPi - 6) +
             10 * (1 - 1 / (8 * kPi)) * std::cos(x[0]) + 10;
    };
  }
  {
    auto& f = b.add(23, "branin-rcos-2", "Branin RCOS 2");
    f.dimension = fixed_dim(2);
    f.bounds = box(-5, 15);
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal");
    f.citation = "MUNTEANU1998";
    f.optima = {opt_points({{-3.2, 12.53}}, 5.559037, kRounded)};
    f.eval = [](Span x, Ctx&, Noise&) {
      return sqr(x[1] - 5.1 * x[0] * x[0] / (4 * kPi * kPi) + 5 * x[0] / kPi - 6) +
             10 * (1 - 1 / (8 * kPi)) * std::cos(x[0]) * std::cos(x[1]) *
                 std::log(x[0] * x[0] + x[1] * x[1] + 1) +
             10;
    };
  }
  {
    auto& f = b.add(24, "brent", "Brent");
    f.dimension = fixed_dim(2);
    f.bounds = box(-10, 10);
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Non-Scalable, Unimodal");
    f.citation = "BRANIN1972";
    f.optima = {opt_points({{0, 0}}, 0.0, kExact)};
    f.eval = [](Span x, Ctx&, Noise&) {
      return sqr(x[0] + 10) + sqr(x[1] + 10) + std::exp(-x[0] * x[0] - x[1] * x[1]);
    };
  }
  {
    auto& f = b.add(25, "brown", "Brown");
    f.dimension = scalable_dim(2, 2);
    f.bounds = box(-1, 4);
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Scalable, Unimodal");
    f.citation = "BEGAMBRE2009";
    f.optima = {opt_points({{0, 0}}, 0.0, kExact)};
    f.eval = [](Span x, Ctx&, Noise&) {
      double s = 0;
      for (size_t i = 0; i + 1 < x.size(); ++i) {
        double a = x[i] * x[i], c = x[i + 1] * x[i + 1];
        s += std::pow(a, c + 1) + std::pow(c, a + 1);
      }
      return s;
    };
  }
  {
    auto& f = b.add(26, "bukin-2", "Bukin 2");
    f.dimension = fixed_dim(2);
    f.bounds = box({{-15, -5}, {-3, 3}});
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal");
    f.citation = "SILAGADZE2007";
    f.note = "the x2 interval is printed as [-3, -3]; widened to [-3, 3]";
    f.optima = {opt_points({{-10, 0}}, 0.0, kExact)};
    f.eval = [](Span x, Ctx&, Noise&) {
      return 100 * (x[1] - 0.01 * x[0] * x[0] + 1) + 0.01 * sqr(x[0] + 10);
    };
  }
  {
    auto& f = b.add(27, "bukin-4", "Bukin 4");
    f.dimension = fixed_dim(2);
    f.bounds = box({{-15, -5}, {-3, 3}});
    f.flags = parse_flags("Continuous, Non-Differentiable, Separable, Non-scalable, Multimodal");
    f.citation = "SILAGADZE2007";
    f.note = "the x2 interval is printed as [-3, -3]; widened to [-3, 3]";
    f.optima = {opt_points({{-10, 0}}, 0.0, kExact)};
    f.eval = [](Span x, Ctx&, Noise&) {
      return 100 * x[1] * x[1] + 0.01 * std::fabs(x[0] + 10);
    };
  }
  {
    auto& f = b.add(28, "bukin-6", "Bukin 6");
    f.dimension = fixed_dim(2);
    f.bounds = box({{-15, -5}, {-3, 3}});
    f.flags = parse_flags("Continuous, Non-Differentiable, Non-Separable, Non-Scalable, Multimodal");
    f.citation = "SILAGADZE2007";
    f.note = "the x2 interval is printed as [-3, -3]; widened to [-3, 3]";
    f.optima = {opt_points({{-10, 1}}, 0.0, kExact)};
    f.eval = [](Span x, Ctx&, Noise&) {
      return 100 * std::sqrt(std::fabs(x[1] - 0.01 * x[0] * x[0])) + 0.01 * std::fabs(x[0] + 10);
    };
  }
  {
    auto& f = b.add(29, "camel-three-hump", "Camel Three Hump");
    f.dimension = fixed_dim(2);
    f.bounds = box(-5, 5);
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal");
    f.citation = "BRANIN1972";
    f.optima = {opt_points({{0, 0}}, 0.0, kExact)};
    f.eval = [](Span x, Ctx&, Noise&) {
      double a = x[0] * x[0];
      return 2 * a - 1.05 * a * a + a * a * a / 6 + x[0] * x[1] + x[1] * x[1];
    };
  }
  {
    auto& f = b.add(30, "camel-six-hump", "Camel Six Hump");
    f.dimension = fixed_dim(2);
    f.bounds = box(-5, 5);
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal");
    f.citation = "BRANIN1972";
    f.optima = {opt_points({{-0.0898, 0.7126}, {0.0898, -0.7126}}, -1.0316, kRounded)};
    f.eval = [](Span x, Ctx&, Noise&) {
      double a = x[0] * x[0];
      return (4 - 2.1 * a + a * a / 3) * a + x[0] * x[1] + (4 * x[1] * x[1] - 4) * x[1] * x[1];
    };
  }
  {
    auto& f = b.add(31, "chen-bird", "Chen Bird");
    f.dimension = fixed_dim(2);
    f.bounds = box(-500, 500);
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal");
    f.citation = "CHEN2003";
    f.note = "printed floor brackets read as parentheses; a literal floor degenerates "
             "the denominators";
    f.optima = {opt_points({{-7.0 / 18, -13.0 / 18}}, -2000.0, kExact)};
    f.eval = [](Span x, Ctx&, Noise&) {
      const double bb = 0.001;
      return -bb / (bb * bb + sqr(x[0] - 0.4 * x[1] - 0.1)) -
             bb / (bb * bb + sqr(2 * x[0] + x[1] - 1.5));
    };
  }
  {
    auto& f = b.add(32, "chen-v", "Chen V");
    f.dimension = fixed_dim(2);
    f.bounds = box(-500, 500);
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal");
    f.citation = "CHEN2003";
    f.note = "printed floor brackets read as parentheses";
    f.optima = {opt_points({{-0.3888889, 0.7222222}}, -2000.0, kExact)};
    f.eval = [](Span x, Ctx&, Noise&) {
      const double bb = 0.001;
      double q = x[0] * x[0] + x[1] * x[1];
      return -bb / (bb * bb + sqr(q - 1)) - bb / (bb * bb + sqr(q - 0.5)) -
             bb / (bb * bb + sqr(x[0] * x[0] - x[1] * x[1]));
    };
  }
  {
    auto& f = b.add(33, "chichinadze", "Chichinadze");
    f.dimension = fixed_dim(2);
    f.bounds = box(-30, 30);
    f.flags = parse_flags("Continuous, Differentiable, Separable, Non-Scalable, Multimodal");
    f.optima = {opt_points({{5.90133, 0.5}}, -43.3159, kRounded)};
    f.eval = [](Span x, Ctx&, Noise&) {
      return x[0] * x[0] - 12 * x[0] + 11 + 10 * std::cos(kPi * x[0] / 2) +
             8 * std::sin(5 * kPi * x[0] / 2) -
             std::sqrt(0.2) * std::exp(-0.5 * sqr(x[1] - 0.5));
    };
  }
  {
    auto& f = b.add(34, "chung-reynolds", "Chung Reynolds");
    f.dimension = scalable_dim(2, 1);
    f.bounds = box(-100, 100);
    f.flags = parse_flags("Continuous, Differentiable, Partially-Separable, Scalable, Unimodal");
    f.citation = "CHUNG1998";
    f.optima = {opt_points({{0, 0}}, 0.0, kExact)};
    f.eval = [](Span x, Ctx&, Noise&) {
      double q = 0;
      for (double v : x) q += v * v;
      return q * q;
    };
  }
  {
    auto& f = b.add(35, "cola", "Cola");
    f.dimension = fixed_dim(17);
    {
      std::vector<std::pair<double, double>> c(17, {-4, 4});
      c[0] = {0, 4};
      f.bounds = box(std::move(c));
    }
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal");
    f.citation = "ADORIO2005";
    f.note = "printed variable mapping is inconsistent; point 0 fixed at the origin, "
             "point 1 on the x-axis (u0), points 2..9 at (u_{2i-3}, u_{2i-2})";
    f.optima = {opt_value_only(11.7464, kRounded, "no location printed")};
    f.eval = [](Span x, Ctx&, Noise&) {
      double px[10] = {0}, py[10] = {0};
      px[1] = x[0];
      for (int i = 2; i < 10; ++i) {
        px[i] = x[2 * i - 3];
        py[i] = x[2 * i - 2];
      }
      double s = 0;
      for (int i = 1; i < 10; ++i)
        for (int j = 0; j < i; ++j) {
          double r = std::hypot(px[i] - px[j], py[i] - py[j]);
          s += sqr(r - tables::cola_d[i - 1][j]);
        }
      return s;
    };
  }
  {
    auto& f = b.add(36, "colville", "Colville");
    f.dimension = fixed_dim(4);
    f.bounds = box(-10, 10);
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal");
    f.optima = {opt_points({{1, 1, 1, 1}}, 0.0, kExact)};
    f.eval = [](Span x, Ctx&, Noise&) {
      return 100 * sqr(x[0] - x[1] * x[1]) + sqr(1 - x[0]) + 90 * sqr(x[3] - x[2] * x[2]) +
             sqr(1 - x[2]) + 10.1 * (sqr(x[1] - 1) + sqr(x[3] - 1)) +
             19.8 * (x[1] - 1) * (x[3] - 1);
    };
  }
  {
    auto& f = b.add(37, "corana", "Corana");
    f.dimension = fixed_dim(4);
    f.bounds = box(-500, 500);
    f.flags = parse_flags("Discontinuous, Non-Differentiable, Separable, Scalable, Multimodal");
    f.citation = "CORANA1987";
    f.note = "printed 'sgn(z)^2' read as (z - 0.05 sgn z)^2 per the canonical Corana form";
    f.optima = {[] {
      auto o = opt_points({{0, 0, 0, 0}}, 0.0, kExact);
      o.corrected = true;
      return o;
    }()};
    f.eval = [](Span x, Ctx&, Noise&) {
      double s = 0;
      for (int i = 0; i < 4; ++i) {
        double z = 0.2 * std::floor(std::fabs(x[i] / 0.2) + 0.49999) * sgn(x[i]);
        double v = std::fabs(x[i] - z);
        double d = tables::corana_d[static_cast<size_t>(i)];
        if (v < 0.05)
          s += 0.15 * sqr(z - 0.05 * sgn(z)) * d;
        else
          s += d * x[i] * x[i];
      }
      return s;
    };
  }
  {
    auto& f = b.add(38, "cosine-mixture", "Cosine Mixture");
    f.dimension = scalable_dim(2, 1);
    f.bounds = box(-1, 1);
    f.flags = parse_flags("Discontinuous, Non-Differentiable, Separable, Scalable, Multimodal");
    f.citation = "ALI2005";
    f.optima = {opt_points({{0, 0}}, 0.2, kRounded, "claimed value 0.2 for n=2 (0.4 for n=4)")};
    f.eval = [](Span x, Ctx&, Noise&) {
      double c = 0, q = 0;
      for (double v : x) {
        c += std::cos(5 * kPi * v);
        q += v * v;
      }
      return -0.1 * c - q;
    };
  }
  {
    auto& f = b.add(39, "cross-in-tray", "Cross-in-Tray");
    f.dimension = fixed_dim(2);
    f.bounds = box(-10, 10);
    f.flags = parse_flags("Continuous, Non-Separable, Non-Scalable, Multimodal");
    f.citation = "MISHRA2006_6";
    f.optima = {opt_points({{1.349406685353340, 1.349406608602084},
                            {-1.349406685353340, 1.349406608602084},
                            {1.349406685353340, -1.349406608602084},
                            {-1.349406685353340, -1.349406608602084}},
                           -2.06261218, kRounded)};
    f.eval = [](Span x, Ctx&, Noise&) {
      double a = std::fabs(std::sin(x[0]) * std::sin(x[1]) *
                           std::exp(std::fabs(100 - std::hypot(x[0], x[1]) / kPi)));
      return -0.0001 * std::pow(a + 1, 0.1);
    };
  }
  {
    auto& f = b.add(40, "csendes", "Csendes");
    f.dimension = scalable_dim(2, 1);
    f.bounds = box(-1, 1);
    f.flags = parse_flags("Continuous, Differentiable, Separable, Scalable, Multimodal");
    f.citation = "CSENDES1997";
    f.note = "term at x=0 defined as 0 (removable singularity of sin(1/x))";
    f.optima = {opt_points({{0, 0}}, 0.0, kExact)};
    f.eval = [](Span x, Ctx&, Noise&) {
      double s = 0;
      for (double v : x)
        if (v != 0) s += std::pow(v, 6) * (2 + std::sin(1 / v));
      return s;
    };
  }
  {
    auto& f = b.add(41, "cube", "Cube");
    f.dimension = fixed_dim(2);
    f.bounds = box(-10, 10);
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Non-Scalable, Unimodal");
    f.citation = "LAVI1966";
    f.optima = {opt_points({{-1, 1}}, 0.0, kExact)};
    f.eval = [](Span x, Ctx&, Noise&) {
      return 100 * sqr(x[1] - x[0] * x[0] * x[0]) + sqr(1 - x[0]);
    };
  }
  {
    auto& f = b.add(42, "damavandi", "Damavandi");
    f.dimension = fixed_dim(2);
    f.bounds = box(0, 14);
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal");
    f.citation = "DAMAVANDI2005";
    f.note = "sin(pi t)/(pi t) factor takes its limit 1 at t = 0";
    f.optima = {opt_points({{2, 2}}, 0.0, kExact)};
    f.eval = [](Span x, Ctx&, Noise&) {
      auto ratio = [](double t) { return t == 0 ? 1.0 : std::sin(kPi * t) / (kPi * t); };
      double quot = ratio(x[0] - 2) * ratio(x[1] - 2);
      return (1 - std::pow(std::fabs(quot), 5)) * (2 + sqr(x[0] - 7) + 2 * sqr(x[1] - 7));
    };
  }
  {
    auto& f = b.add(43, "deb-1", "Deb 1");
    f.dimension = scalable_dim(2, 1);
    f.bounds = box(-1, 1);
    f.flags = parse_flags("Continuous, Differentiable, Separable, Scalable, Multimodal");
    f.optima = {[] {
      KnownOptimum o;
      o.family = "5^D evenly spaced global minima";
      o.status = OptimumStatus::PaperClaimed;
      o.note = "no minimum value printed";
      return o;
    }()};
    f.eval = [](Span x, Ctx&, Noise&) {
      double s = 0;
      for (double v : x) s += std::pow(std::sin(5 * kPi * v), 6);
      return -s / static_cast<double>(x.size());
    };
  }
  {
    auto& f = b.add(44, "deb-3", "Deb 3");
    f.dimension = scalable_dim(2, 1);
    f.bounds = box(-1, 1);
    f.flags = parse_flags("Continuous, Differentiable, Separable, Scalable, Multimodal");
    f.note = "x^{3/4} is undefined for negative coordinates; evaluation raises a domain error";
    f.optima = {[] {
      KnownOptimum o;
      o.family = "5^D unevenly spaced global minima";
      o.status = OptimumStatus::PaperClaimed;
      o.note = "no minimum value printed";
      return o;
    }()};
    f.eval = [](Span x, Ctx&, Noise&) {
      double s = 0;
      for (double v : x) {
        if (v < 0) domain_error("deb-3 needs x >= 0 (x^(3/4))");
        s += std::pow(std::sin(5 * kPi * (std::pow(v, 0.75) - 0.05)), 6);
      }
      return -s / static_cast<double>(x.size());
    };
  }
  {
    auto& f = b.add(45, "deckkers-aarts", "Deckkers-Aarts");
    f.dimension = fixed_dim(2);
    f.bounds = box(-20, 20);
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal");
    f.citation = "ALI2005";
    f.optima = {opt_points({{0, 15}, {0, -15}}, -24777.0, kExact)};
    f.eval = [](Span x, Ctx&, Noise&) {
      double q = x[0] * x[0] + x[1] * x[1];
      return 1e5 * x[0] * x[0] + x[1] * x[1] - q * q + 1e-5 * q * q * q * q;
    };
  }
  {
    auto& f = b.add(46, "devilliers-glasser-1", "deVilliers Glasser 1");
    f.dimension = fixed_dim(4);
    f.bounds = box(-500, 500);
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal");
    f.citation = "deVILLERS1981";
    f.optima = {opt_value_only(0.0, kExact, "no location printed")};
    f.eval = [](Span x, Ctx&, Noise&) {
      double s = 0;
      for (int i = 1; i <= 24; ++i) {
        double t = 0.1 * (i - 1);
        double y = 60.137 * std::pow(1.371, t) * std::sin(3.112 * t + 1.761);
        if (x[1] < 0 && t != std::floor(t)) domain_error("x2^t undefined for x2 < 0");
        s += sqr(x[0] * std::pow(x[1], t) * std::sin(x[2] * t + x[3]) - y);
      }
      return s;
    };
  }
  {
    auto& f = b.add(47, "devilliers-glasser-2", "deVilliers Glasser 2");
    f.dimension = fixed_dim(5);
    f.bounds = box(-500, 500);
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal");
    f.citation = "deVILLERS1981";
    f.optima = {opt_value_only(0.0, kExact, "no location printed")};
    f.eval = [](Span x, Ctx&, Noise&) {
      double s = 0;
      for (int i = 1; i <= 16; ++i) {
        double t = 0.1 * (i - 1);
        double y = 53.81 * std::pow(1.27, t) * std::tanh(3.012 * t + std::sin(2.13 * t)) *
                   std::cos(std::exp(0.507) * t);
        if (x[1] < 0 && t != std::floor(t)) domain_error("x2^t undefined for x2 < 0");
        s += sqr(x[0] * std::pow(x[1], t) * std::tanh(x[2] * t + std::sin(x[3] * t)) *
                     std::cos(t * std::exp(x[4])) -
                 y);
      }
      return s;
    };
  }
  {
    auto& f = b.add(48, "dixon-price", "Dixon & Price");
    f.dimension = scalable_dim(2, 2);
    f.bounds = box(-10, 10);
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Scalable, Unimodal");
    f.citation = "DIXON1989";
    f.optima = {opt_points({{1.0, std::pow(2.0, 0.5)}}, 0.0, kExact,
                           "location from the printed closed form x_i = 2^((2^i-2)/2^i) at D=2")};
    f.eval = [](Span x, Ctx&, Noise&) {
      double s = sqr(x[0] - 1);
      for (size_t i = 1; i < x.size(); ++i)
        s += static_cast<double>(i + 1) * sqr(2 * x[i] * x[i] - x[i - 1]);
      return s;
    };
  }
  {
    auto& f = b.add(49, "dolan", "Dolan");
    f.dimension = fixed_dim(5);
    f.bounds = box(-100, 100);
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal");
    f.optima = {opt_value_only(0.0, kExact, "no location printed")};
    f.eval = [](Span x, Ctx&, Noise&) {
      return (x[0] + 1.7 * x[1]) * std::sin(x[0]) - 1.5 * x[2] -
             0.1 * x[3] * std::cos(x[3] + x[4] - x[0]) + 0.2 * x[4] * x[4] - x[1] - 1;
    };
  }
  {
    auto& f = b.add(50, "easom", "Easom");
    f.dimension = fixed_dim(2);
    f.bounds = box(-100, 100);
    f.flags = parse_flags("Continuous, Differentiable, Separable, Non-Scalable, Multimodal");
    f.citation = "CHUNG1998";
    f.optima = {opt_points({{kPi, kPi}}, -1.0, kExact)};
    f.eval = [](Span x, Ctx&, Noise&) {
      return -std::cos(x[0]) * std::cos(x[1]) *
             std::exp(-sqr(x[0] - kPi) - sqr(x[1] - kPi));
    };
  }
  {
    auto& f = b.add(51, "el-attar-vidyasagar-dutta", "El-Attar-Vidyasagar-Dutta");
    f.dimension = fixed_dim(2);
    f.bounds = box(-500, 500);
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Non-Scalable, Unimodal");
    f.citation = "EL-ATTAR1979";
    f.optima = {opt_points({{2.842503, 1.920175}}, 0.470427, kRounded)};
    f.eval = [](Span x, Ctx&, Noise&) {
      return sqr(x[0] * x[0] + x[1] - 10) + sqr(x[0] + x[1] * x[1] - 7) +
             sqr(x[0] * x[0] + x[1] * x[1] * x[1] - 1);
    };
  }
  {
    auto& f = b.add(52, "egg-crate", "Egg Crate");
    f.dimension = fixed_dim(2);
    f.bounds = box(-5, 5);
    f.flags = parse_flags("Continuous, Separable, Non-Scalable");
    f.optima = {opt_points({{0, 0}}, 0.0, kExact)};
    f.eval = [](Span x, Ctx&, Noise&) {
      return x[0] * x[0] + x[1] * x[1] +
             25 * (sqr(std::sin(x[0])) + sqr(std::sin(x[1])));
    };
  }
  {
    auto& f = b.add(53, "egg-holder", "Egg Holder");
    f.dimension = scalable_dim(2, 2);
    f.bounds = box(-512, 512);
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Scalable, Multimodal");
    f.optima = {opt_points({{512, 404.2319}}, 959.64, kApprox,
                           "printed value is positive; evaluation at the printed point is "
                           "negative")};
    f.eval = [](Span x, Ctx&, Noise&) {
      double s = 0;
      for (size_t i = 0; i + 1 < x.size(); ++i)
        s += -(x[i + 1] + 47) * std::sin(std::sqrt(std::fabs(x[i + 1] + x[i] / 2 + 47))) -
             x[i] * std::sin(std::sqrt(std::fabs(x[i] - (x[i + 1] + 47))));
      return s;
    };
  }
  {
    auto& f = b.add(54, "exponential", "Exponential");
    f.dimension = scalable_dim(2, 1);
    f.bounds = box(-1, 1);
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Scalable, Multimodal");
    f.citation = "RAHNAMAYAN2007_1";
    f.optima = {opt_points({{0, 0}}, 1.0, kExact,
                           "printed value 1; the formula gives -1 at the origin")};
    f.eval = [](Span x, Ctx&, Noise&) {
      double q = 0;
      for (double v : x) q += v * v;
      return -std::exp(-0.5 * q);
    };
  }
  {
    auto& f = b.add(55, "exp-2", "Exp 2");
    f.dimension = fixed_dim(2);
    f.bounds = box(0, 20);
    f.flags = parse_flags("Separable");
    f.citation = "ADORIO2005";
    f.optima = {opt_points({{1, 10}}, 0.0, kExact)};
    f.eval = [](Span x, Ctx&, Noise&) {
      double s = 0;
      for (int i = 0; i <= 9; ++i) {
        double t = i / 10.0;
        s += sqr(std::exp(-t * x[0]) - 5 * std::exp(-t * x[1]) - std::exp(-t) +
                 5 * std::exp(-static_cast<double>(i)));
      }
      return s;
    };
  }
  {
    auto& f = b.add(56, "freudenstein-roth", "Freudenstein Roth");
    f.dimension = fixed_dim(2);
    f.bounds = box(-10, 10);
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal");
    f.citation = "RAO2009";
    f.optima = {opt_points({{5, 4}}, 0.0, kExact)};
    f.eval = [](Span x, Ctx&, Noise&) {
      return sqr(x[0] - 13 + ((5 - x[1]) * x[1] - 2) * x[1]) +
             sqr(x[0] - 29 + ((x[1] + 1) * x[1] - 14) * x[1]);
    };
  }
  {
    auto& f = b.add(57, "giunta", "Giunta");
    f.dimension = fixed_dim(2);
    f.bounds = box(-1, 1);
    f.flags = parse_flags("Continuous, Differentiable, Separable, Scalable, Multimodal");
    f.citation = "MISHRA2006_6";
    f.optima = {[] {
      auto o = opt_points({{0.45834282, 0.45834282}}, 0.06447042053690566, kRounded,
                          "printed value 0.060447 is inconsistent with the formula itself; "
                          "canonical value used");
      o.corrected = true;
      return o;
    }()};
    f.eval = [](Span x, Ctx&, Noise&) {
      double s = 0.6;
      for (double v : x) {
        double a = 16.0 / 15.0 * v - 1;
        s += std::sin(a) + sqr(std::sin(a)) + std::sin(4 * a) / 50;
      }
      return s;
    };
  }
  {
    auto& f = b.add(58, "goldstein-price", "Goldstein Price");
    f.dimension = fixed_dim(2);
    f.bounds = box(-2, 2);
    f.flags = parse_flags("Continuous, Differentiable, Non-separable, Non-Scalable, Multimodal");
    f.citation = "GOLDSTEIN1971";
    f.optima = {opt_points({{0, -1}}, 3.0, kExact)};
    f.eval = [](Span x, Ctx&, Noise&) {
      double a = x[0] + x[1] + 1;
      double bq = 2 * x[0] - 3 * x[1];
      return (1 + a * a *
                      (19 - 14 * x[0] + 3 * x[0] * x[0] - 14 * x[1] + 6 * x[0] * x[1] +
                       3 * x[1] * x[1])) *
             (30 + bq * bq *
                       (18 - 32 * x[0] + 12 * x[0] * x[0] + 48 * x[1] - 36 * x[0] * x[1] +
                        27 * x[1] * x[1]));
    };
  }
  {
    auto& f = b.add(59, "griewank", "Griewank");
    f.dimension = scalable_dim(2, 1);
    f.bounds = box(-100, 100);
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Scalable, Multimodal");
    f.citation = "GRIEWANK1981";
    f.optima = {opt_points({{0, 0}}, 0.0, kExact)};
    f.eval = [](Span x, Ctx&, Noise&) {
      double q = 0, p = 1;
      for (size_t i = 0; i < x.size(); ++i) {
        q += x[i] * x[i];
        p *= std::cos(x[i] / std::sqrt(static_cast<double>(i + 1)));
      }
      return q / 4000 - p + 1;
    };
  }
  {
    auto& f = b.add(60, "gulf-research", "Gulf Research Problem");
    f.dimension = fixed_dim(3);
    f.bounds = box({{0.1, 100}, {0, 25.6}, {0, 5}});
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal");
    f.citation = "SHANNO1970";
    f.note = "printed denominator 'x_i' read as x1; third bound interval printed for x1 "
             "again, read as x3";
    f.optima = {opt_points({{50, 25, 1.5}}, 0.0, kExact)};
    f.eval = [](Span x, Ctx&, Noise&) {
      double s = 0;
      for (int i = 1; i <= 99; ++i) {
        double u = 25 + std::pow(-50 * std::log(0.01 * i), 1 / 1.5);
        double base = u - x[1];
        if (base < 0 && x[2] != std::floor(x[2]))
          domain_error("(u_i - x2)^x3 undefined for u_i < x2 with fractional x3");
        s += sqr(std::exp(-std::pow(base, x[2]) / x[0]) - 0.01 * i);
      }
      return s;
    };
  }
}

}  // namespace bench
