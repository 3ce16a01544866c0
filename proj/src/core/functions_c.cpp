// Catalog entries 121..175.

#include "core/functions_common.hpp"

namespace bench {

using namespace bench::detail;

void register_functions_c(CatalogBuilder& b) {
  {
    auto& f = b.add(121, "schwefel-2-6", "Schwefel 2.6");
    f.dimension = fixed_dim(2);
    f.bounds = box(-100, 100);
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Non-Scalable, Unimodal");
    f.citation = "SCHWEFEL1981";
    f.optima = {opt_points({{1, 3}}, 0.0, kExact)};
    f.eval = [](Span x, Ctx&, Noise&) {
      return std::max(std::fabs(x[0] + 2 * x[1] - 7), std::fabs(2 * x[0] + x[1] - 5));
    };
  }
  {
    auto& f = b.add(122, "schwefel-2-20", "Schwefel 2.20");
    f.dimension = scalable_dim(2, 1);
    f.bounds = box(-100, 100);
    f.flags = parse_flags("Continuous, Non-Differentiable, Separable, Scalable, Unimodal");
    f.citation = "SCHWEFEL1981";
    f.optima = {opt_points({{0, 0}}, 0.0, kExact,
                           "the printed negated sum attains its maximum, not minimum, at "
                           "the origin")};
    f.eval = [](Span x, Ctx&, Noise&) {
      double s = 0;
      for (double v : x) s += std::fabs(v);
      return -s;
    };
  }
  {
    auto& f = b.add(123, "schwefel-2-21", "Schwefel 2.21");
    f.dimension = scalable_dim(2, 1);
    f.bounds = box(-100, 100);
    f.flags = parse_flags("Continuous, Non-Differentiable, Separable, Scalable, Unimodal");
    f.citation = "SCHWEFEL1981";
    f.optima = {opt_points({{0, 0}}, 0.0, kExact)};
    f.eval = [](Span x, Ctx&, Noise&) {
      double m = 0;
      for (double v : x) m = std::max(m, std::fabs(v));
      return m;
    };
  }
  {
    auto& f = b.add(124, "schwefel-2-22", "Schwefel 2.22");
    f.dimension = scalable_dim(2, 1);
    f.bounds = box(-100, 100);
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Scalable, Unimodal");
    f.citation = "SCHWEFEL1981";
    f.optima = {opt_points({{0, 0}}, 0.0, kExact)};
    f.eval = [](Span x, Ctx&, Noise&) {
      double s = 0, p = 1;
      for (double v : x) {
        s += std::fabs(v);
        p *= std::fabs(v);
      }
      return s + p;
    };
  }
  {
    auto& f = b.add(125, "schwefel-2-23", "Schwefel 2.23");
    f.dimension = scalable_dim(2, 1);
    f.bounds = box(-10, 10);
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Scalable, Unimodal");
    f.citation = "SCHWEFEL1981";
    f.optima = {opt_points({{0, 0}}, 0.0, kExact)};
    f.eval = [](Span x, Ctx&, Noise&) {
      double s = 0;
      for (double v : x) s += std::pow(v, 10);
      return s;
    };
  }
  {
    auto& f = b.add(126, "schwefel-2-23-b", "Schwefel 2.23");
    f.dimension = scalable_dim(2, 1);
    f.bounds = box(-10, 10);
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Scalable, Unimodal");
    f.citation = "SCHWEFEL1981";
    f.note = "duplicate of f125; the collection lists the identical item twice";
    f.optima = {opt_points({{0, 0}}, 0.0, kExact)};
    f.eval = [](Span x, Ctx&, Noise&) {
      double s = 0;
      for (double v : x) s += std::pow(v, 10);
      return s;
    };
  }
  {
    auto& f = b.add(127, "schwefel-2-25", "Schwefel 2.25");
    f.dimension = scalable_dim(2, 2);
    f.bounds = box(0, 10);
    f.flags = parse_flags("Continuous, Differentiable, Separable, Non-Scalable, Multimodal");
    f.citation = "SCHWEFEL1981";
    f.optima = {opt_points({{1, 1}}, 0.0, kExact)};
    f.eval = [](Span x, Ctx&, Noise&) {
      double s = 0;
      for (size_t i = 1; i < x.size(); ++i)
        s += sqr(x[i] - 1) + sqr(x[0] - x[i] * x[i]);
      return s;
    };
  }
  {
    auto& f = b.add(128, "schwefel-2-26", "Schwefel 2.26");
    f.dimension = scalable_dim(2, 1);
    f.bounds = box(-500, 500);
    f.flags = parse_flags("Continuous, Differentiable, Separable, Scalable, Multimodal");
    f.citation = "SCHWEFEL1981";
    f.optima = {[] {
      const double q = (kPi / 2) * (kPi / 2);
      auto o = opt_points({{q, q}, {-q, -q}}, -418.983, kRounded,
                          "audited at the k = 0 branch of the printed family");
      o.family = "x = +-[pi(0.5+k)]^2";
      return o;
    }()};
    f.eval = [](Span x, Ctx&, Noise&) {
      double s = 0;
      for (double v : x) s += v * std::sin(std::sqrt(std::fabs(v)));
      return -s / static_cast<double>(x.size());
    };
  }
  {
    auto& f = b.add(129, "schwefel-2-36", "Schwefel 2.36");
    f.dimension = fixed_dim(2);
    f.bounds = box(0, 500);
    f.flags = parse_flags("Continuous, Differentiable, Separable, Scalable, Multimodal");
    f.citation = "SCHWEFEL1981";
    f.optima = {opt_points({{12, 12}}, -3456.0, kExact)};
    f.eval = [](Span x, Ctx&, Noise&) {
      return -x[0] * x[1] * (72 - 2 * x[0] - 2 * x[1]);
    };
  }
  {
    auto& f = b.add(130, "shekel-5", "Shekel 5");
    f.dimension = fixed_dim(4);
    f.bounds = box(0, 10);
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Scalable, Multimodal");
    f.citation = "OPACIC1973";
    f.optima = {opt_points({{4, 4, 4, 4}}, -10.1499, kApprox)};
    f.eval = [](Span x, Ctx&, Noise&) {
      double s = 0;
      for (int i = 0; i < 5; ++i) {
        double d = tables::shekel_c[static_cast<size_t>(i)];
        for (int j = 0; j < 4; ++j) d += sqr(x[static_cast<size_t>(j)] - tables::shekel_a[i][j]);
        s += 1 / d;
      }
      return -s;
    };
  }
  {
    auto& f = b.add(131, "shekel-7", "Shekel 7");
    f.dimension = fixed_dim(4);
    f.bounds = box(0, 10);
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Scalable, Multimodal");
    f.citation = "OPACIC1973";
    f.optima = {opt_points({{4, 4, 4, 4}}, -10.3999, kApprox)};
    f.eval = [](Span x, Ctx&, Noise&) {
      double s = 0;
      for (int i = 0; i < 7; ++i) {
        double d = tables::shekel_c[static_cast<size_t>(i)];
        for (int j = 0; j < 4; ++j) d += sqr(x[static_cast<size_t>(j)] - tables::shekel_a[i][j]);
        s += 1 / d;
      }
      return -s;
    };
  }
  {
    auto& f = b.add(132, "shekel-10", "Shekel 10");
    f.dimension = fixed_dim(4);
    f.bounds = box(0, 10);
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Scalable, Multimodal");
    f.citation = "OPACIC1973";
    f.optima = {opt_points({{4, 4, 4, 4}}, -10.5319, kApprox)};
    f.eval = [](Span x, Ctx&, Noise&) {
      double s = 0;
      for (int i = 0; i < 10; ++i) {
        double d = tables::shekel_c[static_cast<size_t>(i)];
        for (int j = 0; j < 4; ++j) d += sqr(x[static_cast<size_t>(j)] - tables::shekel_a[i][j]);
        s += 1 / d;
      }
      return -s;
    };
  }
  {
    auto& f = b.add(133, "shubert", "Shubert");
    f.dimension = scalable_dim(2, 1);
    f.bounds = box(-10, 10);
    f.flags = parse_flags("Continuous, Differentiable, Separable?, Non-Scalable, Multimodal");
    f.citation = "HENNART1982";
    f.note = "header prints 'Separable?' with a literal question mark; stored as unstated";
    f.optima = {opt_points({{-7.0835, 4.8580},  {-7.0835, -7.7083}, {-1.4251, -7.0835},
                            {5.4828, 4.8580},   {-1.4251, -0.8003}, {4.8580, 5.4828},
                            {-7.7083, -7.0835}, {-7.0835, -1.4251}, {-7.7083, -0.8003},
                            {-7.7083, 5.4828},  {-0.8003, -7.7083}, {-0.8003, -1.4251},
                            {-0.8003, 4.8580},  {-1.4251, 5.4828},  {5.4828, -7.7083},
                            {4.8580, -7.0835},  {5.4828, -1.4251},  {4.8580, -0.8003}},
                           -186.7309, kApprox)};
    f.eval = [](Span x, Ctx&, Noise&) {
      double p = 1;
      for (double v : x) {
        double s = 0;
        for (int j = 1; j <= 5; ++j) s += std::cos((j + 1) * v + j);
        p *= s;
      }
      return p;
    };
  }
  {
    auto& f = b.add(134, "shubert-3", "Shubert 3");
    f.dimension = scalable_dim(2, 1);
    f.bounds = box(-10, 10);
    f.flags = parse_flags("Continuous, Differentiable, Separable, Non-Scalable, Multimodal");
    f.citation = "ADORIO2005";
    f.optima = {opt_value_only(-29.6733337, kApprox, "multiple solutions, none printed")};
    f.eval = [](Span x, Ctx&, Noise&) {
      double total = 0;
      for (double v : x)
        for (int j = 1; j <= 5; ++j) total += j * std::sin((j + 1) * v + j);
      return total;
    };
  }
  {
    auto& f = b.add(135, "shubert-4", "Shubert 4");
    f.dimension = scalable_dim(2, 1);
    f.bounds = box(-10, 10);
    f.flags = parse_flags("Continuous, Differentiable, Separable, Non-Scalable, Multimodal");
    f.citation = "ADORIO2005";
    f.optima = {opt_value_only(-25.740858, kApprox, "multiple solutions, none printed")};
    f.eval = [](Span x, Ctx&, Noise&) {
      double total = 0;
      for (double v : x)
        for (int j = 1; j <= 5; ++j) total += j * std::cos((j + 1) * v + j);
      return total;
    };
  }
  {
    auto& f = b.add(136, "schaffer-f6", "Schaffer F6");
    f.dimension = scalable_dim(2, 2);
    f.bounds = box(-100, 100);
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Scalable, Multimodal");
    f.citation = "SCHAFFER1989";
    f.note = "sum runs over adjacent pairs (D-1 terms)";
    f.optima = {opt_points({{0, 0}}, 0.0, kExact)};
    f.eval = [](Span x, Ctx&, Noise&) {
      double s = 0;
      for (size_t i = 0; i + 1 < x.size(); ++i) {
        double q = x[i] * x[i] + x[i + 1] * x[i + 1];
        s += 0.5 + (sqr(std::sin(std::sqrt(q))) - 0.5) / sqr(1 + 0.001 * q);
      }
      return s;
    };
  }
  {
    auto& f = b.add(137, "sphere", "Sphere");
    f.dimension = scalable_dim(2, 1);
    f.bounds = box(0, 10);
    f.flags = parse_flags("Continuous, Differentiable, Separable, Scalable, Multimodal");
    f.citation = "SCHUMER1968";
    f.note = "header prints Multimodal; ledger records the flag-level discrepancy";
    f.optima = {opt_points({{0, 0}}, 0.0, kExact)};
    f.eval = [](Span x, Ctx&, Noise&) {
      double s = 0;
      for (double v : x) s += v * v;
      return s;
    };
  }
  {
    auto& f = b.add(138, "step", "Step");
    f.dimension = scalable_dim(2, 1);
    f.bounds = box(-100, 100);
    f.flags = parse_flags("Discontinuous, Non-Differentiable, Separable, Scalable, Unimodal");
    f.optima = {opt_points({{0, 0}}, 0.0, kExact)};
    f.eval = [](Span x, Ctx&, Noise&) {
      double s = 0;
      for (double v : x) s += std::floor(std::fabs(v));
      return s;
    };
  }
  {
    auto& f = b.add(139, "step-2", "Step 2");
    f.dimension = scalable_dim(2, 1);
    f.bounds = box(-100, 100);
    f.flags = parse_flags("Discontinuous, Non-Differentiable, Separable, Scalable, Unimodal");
    f.citation = "BAECK1993";
    f.note = "the rounding term uses nearest-integer (ties to even), so the printed "
             "optimum at 0.5 sits on the zero plateau";
    f.optima = {opt_points({{0.5, 0.5}}, 0.0, kExact)};
    f.eval = [](Span x, Ctx&, Noise&) {
      double s = 0;
      for (double v : x) s += sqr(std::nearbyint(v));
      return s;
    };
  }
  {
    auto& f = b.add(140, "step-3", "Step 3");
    f.dimension = scalable_dim(2, 1);
    f.bounds = box(-100, 100);
    f.flags = parse_flags("Discontinuous, Non-Differentiable, Separable, Scalable, Unimodal");
    f.optima = {opt_points({{0, 0}}, 0.0, kExact)};
    f.eval = [](Span x, Ctx&, Noise&) {
      double s = 0;
      for (double v : x) s += std::floor(v * v);
      return s;
    };
  }
  {
    auto& f = b.add(141, "stepint", "Stepint");
    f.dimension = scalable_dim(2, 1);
    f.bounds = box(-5.12, 5.12);
    f.flags = parse_flags("Discontinuous, Non-Differentiable, Separable, Scalable, Unimodal");
    f.optima = {opt_points({{0, 0}}, 0.0, kExact,
                           "the formula gives 25 at the printed origin and lower values "
                           "for negative coordinates")};
    f.eval = [](Span x, Ctx&, Noise&) {
      double s = 25;
      for (double v : x) s += std::floor(v);
      return s;
    };
  }
  {
    auto& f = b.add(142, "stretched-v-sine-wave", "Stretched V Sine Wave");
    f.dimension = scalable_dim(2, 2);
    f.bounds = box(-10, 10);
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Scalable, Unimodal");
    f.citation = "SCHAFFER1989";
    f.optima = {opt_points({{0, 0}}, 0.0, kExact)};
    f.eval = [](Span x, Ctx&, Noise&) {
      double s = 0;
      for (size_t i = 0; i + 1 < x.size(); ++i) {
        double q = x[i + 1] * x[i + 1] + x[i] * x[i];
        s += std::pow(q, 0.25) * (sqr(std::sin(50 * std::pow(q, 0.1))) + 0.1);
      }
      return s;
    };
  }
  {
    auto& f = b.add(143, "sum-squares", "Sum Squares");
    f.dimension = scalable_dim(2, 1);
    f.bounds = box(-10, 10);
    f.flags = parse_flags("Continuous, Differentiable, Separable, Scalable, Unimodal");
    f.citation = "HEDAR";
    f.optima = {opt_points({{0, 0}}, 0.0, kExact)};
    f.eval = [](Span x, Ctx&, Noise&) {
      double s = 0;
      for (size_t i = 0; i < x.size(); ++i) s += static_cast<double>(i + 1) * x[i] * x[i];
      return s;
    };
  }
  {
    auto& f = b.add(144, "styblinski-tang", "Styblinski-Tang");
    f.dimension = scalable_dim(2, 1);
    f.bounds = box(-5, 5);
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal");
    f.citation = "SILAGADZE2007";
    f.optima = {opt_points({{-2.903534, -2.903534}}, -78.332, kRounded)};
    f.eval = [](Span x, Ctx&, Noise&) {
      double s = 0;
      for (double v : x) s += v * v * v * v - 16 * v * v + 5 * v;
      return 0.5 * s;
    };
  }
  {
    auto& f = b.add(145, "holder-table-1", "Holder Table 1");
    f.dimension = fixed_dim(2);
    f.bounds = box(-10, 10);
    f.flags = parse_flags("Continuous, Differentiable, Separable, Non-Scalable, Multimodal");
    f.citation = "MISHRA2006_6";
    f.note = "exponent uses (x1^2+x2^2)^0.5; the printed (x1+x2)^0.5 contradicts the "
             "printed minima";
    f.optima = {[] {
      auto o = opt_points({{9.646168, 9.646168},
                           {-9.646168, 9.646168},
                           {9.646168, -9.646168},
                           {-9.646168, -9.646168}},
                          -26.920336, kRounded);
      o.corrected = true;
      return o;
    }()};
    f.eval = [](Span x, Ctx&, Noise&) {
      return -std::fabs(std::cos(x[0]) * std::cos(x[1]) *
                        std::exp(std::fabs(1 - std::hypot(x[0], x[1]) / kPi)));
    };
  }
  {
    auto& f = b.add(146, "holder-table-2", "Holder Table 2");
    f.dimension = fixed_dim(2);
    f.bounds = box(-10, 10);
    f.flags = parse_flags("Continuous, Differentiable, Separable, Non-Scalable, Multimodal");
    f.citation = "MISHRA2006_6";
    f.note = "exponent uses (x1^2+x2^2)^0.5; the printed (x1+x2)^0.5 contradicts the "
             "printed minima";
    f.optima = {[] {
      auto o = opt_points({{8.055023472141116, 9.664590028909654},
                           {-8.055023472141116, 9.664590028909654},
                           {8.055023472141116, -9.664590028909654},
                           {-8.055023472141116, -9.664590028909654}},
                          -19.20850, kRounded);
      o.corrected = true;
      return o;
    }()};
    f.eval = [](Span x, Ctx&, Noise&) {
      return -std::fabs(std::sin(x[0]) * std::cos(x[1]) *
                        std::exp(std::fabs(1 - std::hypot(x[0], x[1]) / kPi)));
    };
  }
  {
    auto& f = b.add(147, "carrom-table", "Carrom Table");
    f.dimension = fixed_dim(2);
    f.bounds = box(-10, 10);
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal");
    f.citation = "MISHRA2006_6";
    f.optima = {opt_points({{9.646157266348881, 9.646134286497169},
                            {-9.646157266348881, 9.646134286497169},
                            {9.646157266348881, -9.646134286497169},
                            {-9.646157266348881, -9.646134286497169}},
                           -24.1568155, kRounded)};
    f.eval = [](Span x, Ctx&, Noise&) {
      double t = std::cos(x[0]) * std::cos(x[1]) *
                 std::exp(std::fabs(1 - std::hypot(x[0], x[1]) / kPi));
      return -t * t / 30;
    };
  }
  {
    auto& f = b.add(148, "testtube-holder", "Testtube Holder");
    f.dimension = fixed_dim(2);
    f.bounds = box(-10, 10);
    f.flags = parse_flags("Continuous, Differentiable, Separable, Non-Scalable, Multimodal");
    f.citation = "MISHRA2006_6";
    f.optima = {opt_points({{kPi / 2, 0}, {-kPi / 2, 0}}, -10.872300, kRounded)};
    f.eval = [](Span x, Ctx&, Noise&) {
      return -4 * std::sin(x[0]) * std::cos(x[1]) *
             std::exp(std::fabs(std::cos((x[0] * x[0] + x[1] * x[1]) / 200)));
    };
  }
  {
    auto& f = b.add(149, "trecanni", "Trecanni");
    f.dimension = fixed_dim(2);
    f.bounds = box(-5, 5);
    f.flags = parse_flags("Continuous, Differentiable, Separable, Non-Scalable, Unimodal");
    f.citation = "DIXON1978";
    f.note = "canonical form x1^4 + 4x1^3 + 4x1^2 + x2^2 used; the printed signs "
             "contradict the printed minima";
    f.optima = {[] {
      auto o = opt_points({{0, 0}, {-2, 0}}, 0.0, kExact);
      o.corrected = true;
      return o;
    }()};
    f.eval = [](Span x, Ctx&, Noise&) {
      double a = x[0];
      return a * a * a * a + 4 * a * a * a + 4 * a * a + x[1] * x[1];
    };
  }
  {
    auto& f = b.add(150, "trid-6", "Trid 6");
    f.dimension = fixed_dim(6);
    f.bounds = box(-36, 36);
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal");
    f.citation = "HEDAR";
    f.optima = {opt_value_only(-50.0, kExact, "no location printed")};
    f.eval = [](Span x, Ctx&, Noise&) {
      double s = 0;
      for (double v : x) s += sqr(v - 1);
      for (size_t i = 1; i < x.size(); ++i) s -= x[i] * x[i - 1];
      return s;
    };
  }
  {
    auto& f = b.add(151, "trid-10", "Trid 10");
    f.dimension = fixed_dim(10);
    f.bounds = box(-100, 100);
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal");
    f.citation = "HEDAR";
    f.optima = {opt_value_only(-200.0, kExact, "no location printed")};
    f.eval = [](Span x, Ctx&, Noise&) {
      double s = 0;
      for (double v : x) s += sqr(v - 1);
      for (size_t i = 1; i < x.size(); ++i) s -= x[i] * x[i - 1];
      return s;
    };
  }
  {
    auto& f = b.add(152, "trefethen", "Trefethen");
    f.dimension = fixed_dim(2);
    f.bounds = box(-10, 10);
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal");
    f.citation = "ADORIO2005";
    f.optima = {opt_points({{-0.024403, 0.210612}}, -3.30686865, kRounded)};
    f.eval = [](Span x, Ctx&, Noise&) {
      return std::exp(std::sin(50 * x[0])) + std::sin(60 * std::exp(x[1])) +
             std::sin(70 * std::sin(x[0])) + std::sin(std::sin(80 * x[1])) -
             std::sin(10 * (x[0] + x[1])) + 0.25 * (x[0] * x[0] + x[1] * x[1]);
    };
  }
  {
    auto& f = b.add(153, "trigonometric-1", "Trigonometric 1");
    f.dimension = scalable_dim(2, 1);
    f.bounds = box(0, kPi);
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Scalable, Multimodal");
    f.citation = "DIXON1978";
    f.optima = {opt_points({{0, 0}}, 0.0, kExact)};
    f.eval = [](Span x, Ctx&, Noise&) {
      double n = static_cast<double>(x.size());
      double csum = 0;
      for (double v : x) csum += std::cos(v);
      double s = 0;
      for (size_t i = 0; i < x.size(); ++i)
        s += sqr(n - csum + (i + 1) * (1 - std::cos(x[i]) - std::sin(x[i])));
      return s;
    };
  }
  {
    auto& f = b.add(154, "trigonometric-2", "Trigonometric 2");
    f.dimension = scalable_dim(2, 1);
    f.bounds = box(-500, 500);
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Scalable, Multimodal");
    f.citation = "FU2006";
    f.optima = {opt_points({{0.9, 0.9}}, 1.0, kExact)};
    f.eval = [](Span x, Ctx&, Noise&) {
      double s = 1;
      for (double v : x) {
        s += 8 * sqr(std::sin(7 * sqr(v - 0.9))) + 6 * sqr(std::sin(14 * sqr(x[0] - 0.9))) +
             sqr(v - 0.9);
      }
      return s;
    };
  }
  {
    auto& f = b.add(155, "tripod", "Tripod");
    f.dimension = fixed_dim(2);
    f.bounds = box(-100, 100);
    f.flags = parse_flags("Discontinuous, Non-Differentiable, Non-Separable, Non-Scalable, Multimodal");
    f.citation = "RAHNAMAYAN2007";
    f.optima = {opt_points({{0, -50}}, 0.0, kExact)};
    f.eval = [](Span x, Ctx&, Noise&) {
      double p1 = x[0] >= 0 ? 1.0 : 0.0;
      double p2 = x[1] >= 0 ? 1.0 : 0.0;
      return p2 * (1 + p1) + std::fabs(x[0] + 50 * p2 * (1 - 2 * p1)) +
             std::fabs(x[1] + 50 * (1 - 2 * p2));
    };
  }
  {
    auto& f = b.add(156, "ursem-1", "Ursem 1");
    f.dimension = fixed_dim(2);
    f.bounds = box({{-2.5, 3}, {-2, 2}});
    f.flags = parse_flags("Separable");
    f.citation = "ROENKKOENEN2009";
    f.optima = {opt_unstated("single global minimum, not printed")};
    f.eval = [](Span x, Ctx&, Noise&) {
      return -std::sin(2 * x[0] - 0.5 * kPi) - 3 * std::cos(x[1]) - 0.5 * x[0];
    };
  }
  {
    auto& f = b.add(157, "ursem-3", "Ursem 3");
    f.dimension = fixed_dim(2);
    f.bounds = box({{-2, 2}, {-1.5, 1.5}});
    f.flags = parse_flags("Non-separable");
    f.citation = "ROENKKOENEN2009";
    f.optima = {opt_unstated("single global minimum, not printed")};
    f.eval = [](Span x, Ctx&, Noise&) {
      return -std::sin(2.2 * kPi * x[0] + 0.5 * kPi) * (2 - std::fabs(x[0])) / 2 *
                 (3 - std::fabs(x[0])) / 2 -
             std::sin(0.5 * kPi * x[1] * x[1] + 0.5 * kPi) * (2 - std::fabs(x[1])) / 2 *
                 (3 - std::fabs(x[1])) / 2;
    };
  }
  {
    auto& f = b.add(158, "ursem-4", "Ursem 4");
    f.dimension = fixed_dim(2);
    f.bounds = box(-2, 2);
    f.flags = parse_flags("Non-separable");
    f.citation = "ROENKKOENEN2009";
    f.optima = {opt_unstated("single global minimum at the middle, value not printed")};
    f.eval = [](Span x, Ctx&, Noise&) {
      return -3 * std::sin(0.5 * kPi * x[0] + 0.5 * kPi) *
             (2 - std::hypot(x[0], x[1])) / 4;
    };
  }
  {
    auto& f = b.add(159, "ursem-waves", "Ursem Waves");
    f.dimension = fixed_dim(2);
    f.bounds = box({{-0.9, 1.2}, {-1.2, 1.2}});
    f.flags = parse_flags("Non-separable");
    f.citation = "ROENKKOENEN2009";
    f.optima = {opt_unstated("single global minimum, not printed")};
    f.eval = [](Span x, Ctx&, Noise&) {
      return -0.9 * x[0] * x[0] +
             (x[1] * x[1] - 4.5 * x[1] * x[1]) * x[0] * x[1] +
             4.7 * std::cos(3 * x[0] - x[1] * x[1] * (2 + x[0])) * std::sin(2.5 * kPi * x[0]);
    };
  }
  {
    auto& f = b.add(160, "venter-sobiezcczanski-sobieski", "Venter Sobiezcczanski-Sobieski");
    f.dimension = fixed_dim(2);
    f.bounds = box(-50, 50);
    f.flags = parse_flags("Continuous, Differentiable, Separable, Non-Scalable");
    f.citation = "BEGAMBRE2009";
    f.optima = {opt_points({{0, 0}}, -400.0, kExact)};
    f.eval = [](Span x, Ctx&, Noise&) {
      return x[0] * x[0] - 100 * sqr(std::cos(x[0])) - 100 * std::cos(x[0] * x[0] / 30) +
             x[1] * x[1] - 100 * sqr(std::cos(x[1])) - 100 * std::cos(x[1] * x[1] / 30);
    };
  }
  {
    auto& f = b.add(161, "watson", "Watson");
    f.dimension = fixed_dim(6);
    f.bounds = box(-10, 10);
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Scalable, Unimodal");
    f.citation = "SCHWEFEL1981";
    f.optima = {opt_points({{-0.0158, 1.012, -0.2329, 1.260, -1.513, 0.9928}}, 0.002288,
                           kRounded)};
    f.eval = [](Span x, Ctx&, Noise&) {
      double s = 0;
      for (int i = 0; i <= 29; ++i) {
        double a = i / 29.0;
        double t1 = 0;
        for (int j = 0; j <= 4; ++j)
          t1 += (j - 1) * std::pow(a, j) * x[static_cast<size_t>(j)];
        double t2 = 0;
        for (int j = 0; j <= 5; ++j) t2 += std::pow(a, j) * x[static_cast<size_t>(j)];
        s += sqr(t1 - t2 * t2 - 1);
      }
      return s + x[0] * x[0];
    };
  }
  {
    auto& f = b.add(162, "wayburn-seader-1", "Wayburn Seader 1");
    f.dimension = fixed_dim(2);
    f.bounds = box(-500, 500);
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Scalable, Unimodal");
    f.citation = "WAYBURN1987";
    f.note = "no box printed; [-500,500] adopted from the neighbouring family entries";
    f.optima = {opt_points({{1, 2}, {1.597, 0.806}}, 0.0, kExact)};
    f.eval = [](Span x, Ctx&, Noise&) {
      return sqr(std::pow(x[0], 6) + std::pow(x[1], 4) - 17) + sqr(2 * x[0] + x[1] - 4);
    };
  }
  {
    auto& f = b.add(163, "wayburn-seader-2", "Wayburn Seader 2");
    f.dimension = fixed_dim(2);
    f.bounds = box(-500, 500);
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Scalable, Unimodal");
    f.citation = "WAYBURN1987";
    f.optima = {opt_points({{0.2, 1}, {0.425, 1}}, 0.0, kExact)};
    f.eval = [](Span x, Ctx&, Noise&) {
      return sqr(1.613 - 4 * sqr(x[0] - 0.3125) - 4 * sqr(x[1] - 1.625)) + sqr(x[1] - 1);
    };
  }
  {
    auto& f = b.add(164, "wayburn-seader-3", "Wayburn Seader 3");
    f.dimension = fixed_dim(2);
    f.bounds = box(-500, 500);
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Scalable, Unimodal");
    f.citation = "WAYBURN1987";
    f.optima = {opt_points({{5.611, 6.187}}, 21.35, kRounded)};
    f.eval = [](Span x, Ctx&, Noise&) {
      return 2 * x[0] * x[0] * x[0] / 3 - 8 * x[0] * x[0] + 33 * x[0] - x[0] * x[1] + 5 +
             sqr(sqr(x[0] - 4) + sqr(x[1] - 5) - 4);
    };
  }
  {
    auto& f = b.add(165, "wavy", "Wavy");
    f.dimension = scalable_dim(2, 1);
    f.bounds = box(-kPi, kPi);
    f.flags = parse_flags("Continuous, Differentiable, Separable, Scalable, Multimodal");
    f.citation = "COURRIEU1997";
    f.default_params = {{"k", 10.0}};
    f.optima = {opt_points({{0, 0}}, 0.0, kExact)};
    f.eval = [](Span x, Ctx& ctx, Noise&) {
      double k = ctx.param("k", 10.0);
      double s = 0;
      for (double v : x) s += std::cos(k * v) * std::exp(-v * v / 2);
      return 1 - s / static_cast<double>(x.size());
    };
  }
  {
    auto& f = b.add(166, "weierstrass", "Weierstrass");
    f.dimension = scalable_dim(2, 1);
    f.bounds = box(-0.5, 0.5);
    f.flags = parse_flags("Continuous, Differentiable, Separable, Scalable, Multimodal");
    f.citation = "SUGANTHAN2005";
    f.note = "a=0.5, b=3, kmax=20 defaults; each term subtracts the k-sum at 0 once "
             "(the printed extra factor n contradicts the printed optimum)";
    f.default_params = {{"a", 0.5}, {"b", 3.0}, {"kmax", 20.0}};
    f.optima = {opt_points({{0, 0}}, 0.0, kExact)};
    f.eval = [](Span x, Ctx& ctx, Noise&) {
      double a = ctx.param("a", 0.5);
      double bb = ctx.param("b", 3.0);
      int kmax = static_cast<int>(ctx.param("kmax", 20.0));
      double c = 0;
      for (int k = 0; k <= kmax; ++k) c += std::pow(a, k) * std::cos(kPi * std::pow(bb, k));
      double s = 0;
      for (double v : x) {
        double t = 0;
        for (int k = 0; k <= kmax; ++k)
          t += std::pow(a, k) * std::cos(2 * kPi * std::pow(bb, k) * (v + 0.5));
        s += t - c;
      }
      return s;
    };
  }
  {
    auto& f = b.add(167, "whitley", "Whitley");
    f.dimension = scalable_dim(2, 1);
    f.bounds = box(-10.24, 10.24);
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Scalable, Multimodal");
    f.citation = "WHITLEY1996";
    f.note = "no box printed; the usual [-10.24,10.24] adopted";
    f.optima = {[] {
      KnownOptimum o;
      o.locations = {{1, 1}};
      o.note = "minimum located at all-ones; no value printed";
      return o;
    }()};
    f.eval = [](Span x, Ctx&, Noise&) {
      double s = 0;
      for (size_t i = 0; i < x.size(); ++i)
        for (size_t j = 0; j < x.size(); ++j) {
          double y = 100 * sqr(x[i] * x[i] - x[j]) + sqr(1 - x[j]);
          s += y * y / 4000 - std::cos(y + 1);
        }
      return s;
    };
  }
  {
    auto& f = b.add(168, "wolfe", "Wolfe");
    f.dimension = fixed_dim(3);
    f.bounds = box(0, 2);
    f.flags = parse_flags("Continuous, Differentiable, Separable, Scalable, Multimodal");
    f.citation = "SCHWEFEL1981";
    f.optima = {opt_points({{0, 0, 0}}, 0.0, kExact)};
    f.eval = [](Span x, Ctx&, Noise&) {
      return 4.0 / 3.0 * std::pow(x[0] * x[0] + x[1] * x[1] - x[0] * x[1], 0.75) + x[2];
    };
  }
  {
    auto& f = b.add(169, "xin-she-yang-1", "Xin-She Yang 1");
    f.dimension = scalable_dim(2, 1);
    f.bounds = box(-5, 5);
    f.flags = parse_flags("Separable");
    f.citation = "YANG2010a";
    f.stochastic = true;
    f.optima = {opt_points({{0, 0}}, 0.0, kExact, "audited with the noise suppressed")};
    f.eval = [](Span x, Ctx&, Noise& noise) {
      double s = 0;
      for (size_t i = 0; i < x.size(); ++i) {
        double eps = noise.uniform_or(1.0);
        s += eps * std::pow(std::fabs(x[i]), static_cast<double>(i + 1));
      }
      return s;
    };
  }
  {
    auto& f = b.add(170, "xin-she-yang-2", "Xin-She Yang 2");
    f.dimension = scalable_dim(2, 1);
    f.bounds = box(-2 * kPi, 2 * kPi);
    f.flags = parse_flags("Non-separable");
    f.optima = {opt_points({{0, 0}}, 0.0, kExact)};
    f.eval = [](Span x, Ctx&, Noise&) {
      double s = 0, t = 0;
      for (double v : x) {
        s += std::fabs(v);
        t += std::sin(v * v);
      }
      return s * std::exp(-t);
    };
  }
  {
    auto& f = b.add(171, "xin-she-yang-3", "Xin-She Yang 3");
    f.dimension = scalable_dim(2, 1);
    f.bounds = box(-20, 20);
    f.flags = parse_flags("Non-separable");
    f.default_params = {{"m", 5.0}, {"beta", 15.0}};
    f.optima = {opt_points({{0, 0}}, -1.0, kExact)};
    f.eval = [](Span x, Ctx& ctx, Noise&) {
      double m = ctx.param("m", 5.0);
      double beta = ctx.param("beta", 15.0);
      double a = 0, q = 0, p = 1;
      for (double v : x) {
        a += std::pow(v / beta, 2 * m);
        q += v * v;
        p *= sqr(std::cos(v));
      }
      return std::exp(-a) - 2 * std::exp(-q) * p;
    };
  }
  {
    auto& f = b.add(172, "xin-she-yang-4", "Xin-She Yang 4");
    f.dimension = scalable_dim(2, 1);
    f.bounds = box(-10, 10);
    f.flags = parse_flags("Non-separable");
    f.optima = {opt_points({{0, 0}}, -1.0, kExact)};
    f.eval = [](Span x, Ctx&, Noise&) {
      double s = 0, q = 0, t = 0;
      for (double v : x) {
        s += sqr(std::sin(v));
        q += v * v;
        t += sqr(std::sin(std::sqrt(std::fabs(v))));
      }
      return (s - std::exp(-q)) * std::exp(-t);
    };
  }
  {
    auto& f = b.add(173, "zakharov", "Zakharov");
    f.dimension = scalable_dim(2, 1);
    f.bounds = box(-5, 10);
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Scalable, Multimodal");
    f.citation = "RAHNAMAYAN2007";
    f.optima = {opt_points({{0, 0}}, 0.0, kExact)};
    f.eval = [](Span x, Ctx&, Noise&) {
      double q = 0, w = 0;
      for (size_t i = 0; i < x.size(); ++i) {
        q += x[i] * x[i];
        w += 0.5 * static_cast<double>(i + 1) * x[i];
      }
      return q + w * w + w * w * w * w;
    };
  }
  {
    auto& f = b.add(174, "zettl", "Zettl");
    f.dimension = fixed_dim(2);
    f.bounds = box(-5, 10);
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Non-Scalable, Unimodal");
    f.citation = "SCHWEFEL1995";
    f.optima = {opt_points({{-0.0299, 0}}, -0.003791, kRounded)};
    f.eval = [](Span x, Ctx&, Noise&) {
      return sqr(x[0] * x[0] + x[1] * x[1] - 2 * x[0]) + 0.25 * x[0];
    };
  }
  {
    auto& f = b.add(175, "zirilli", "Zirilli");
    f.dimension = fixed_dim(2);
    f.bounds = box(-10, 10);
    f.flags = parse_flags("Continuous, Differentiable, Separable, Non-Scalable, Unimodal");
    f.citation = "ALI2005";
    f.optima = {opt_points({{-1.0465, 0}}, -0.3523, kApprox)};
    f.eval = [](Span x, Ctx&, Noise&) {
      return 0.25 * std::pow(x[0], 4) - 0.5 * x[0] * x[0] + 0.1 * x[0] + 0.5 * x[1] * x[1];
    };
  }
}

}  // namespace bench
