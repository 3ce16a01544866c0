// Catalog entries 61..120.

#include "core/functions_common.hpp"

namespace bench {

using namespace bench::detail;

void register_functions_b(CatalogBuilder& b) {
  {
    auto& f = b.add(61, "hansen", "Hansen");
    f.dimension = fixed_dim(2);
    f.bounds = box(-10, 10);
    f.flags = parse_flags("Continuous, Differentiable, Separable, Non-Scalable, Multimodal");
    f.citation = "FRALEY1989";
    f.optima = {[] {
      KnownOptimum o;
      o.locations = {{-7.589893, -7.708314}, {-7.589893, -1.425128}, {-7.589893, 4.858057},
                     {-1.306708, -7.708314}, {-1.306708, 4.858057},  {4.976478, 4.858057},
                     {4.976478, -1.425128},  {4.976478, -7.708314}};
      o.note = "no minimum value printed";
      return o;
    }()};
    f.eval = [](Span x, Ctx&, Noise&) {
      double s1 = 0, s2 = 0;
      for (int i = 0; i <= 4; ++i) s1 += (i + 1) * std::cos(i * x[0] + i + 1);
      for (int j = 0; j <= 4; ++j) s2 += (j + 1) * std::cos((j + 2) * x[1] + j + 1);
      return s1 * s2;
    };
  }
  {
    auto& f = b.add(62, "hartman-3", "Hartman 3");
    f.dimension = fixed_dim(3);
    f.bounds = box(0, 1);
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal");
    f.citation = "HARTMAN1972";
    f.optima = {opt_points({{0.1140, 0.556, 0.852}}, -3.862782, kApprox)};
    f.eval = [](Span x, Ctx&, Noise&) {
      double s = 0;
      for (int i = 0; i < 4; ++i) {
        double d = 0;
        for (int j = 0; j < 3; ++j)
          d += tables::hartman3_a[i][j] * sqr(x[static_cast<size_t>(j)] - tables::hartman3_p[i][j]);
        s += tables::hartman3_c[static_cast<size_t>(i)] * std::exp(-d);
      }
      return -s;
    };
  }
  {
    auto& f = b.add(63, "hartman-6", "Hartman 6");
    f.dimension = fixed_dim(6);
    f.bounds = box(0, 1);
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal");
    f.citation = "HARTMAN1972";
    f.optima = {opt_points({{0.201690, 0.150011, 0.476874, 0.275332, 0.311652, 0.657301}},
                           -3.32236, kApprox)};
    f.eval = [](Span x, Ctx&, Noise&) {
      double s = 0;
      for (int i = 0; i < 4; ++i) {
        double d = 0;
        for (int j = 0; j < 6; ++j)
          d += tables::hartman6_a[i][j] * sqr(x[static_cast<size_t>(j)] - tables::hartman6_p[i][j]);
        s += tables::hartman6_c[static_cast<size_t>(i)] * std::exp(-d);
      }
      return -s;
    };
  }
  {
    auto& f = b.add(64, "helical-valley", "Helical Valley");
    f.dimension = fixed_dim(3);
    f.bounds = box(-10, 10);
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Scalable, Multimodal");
    f.citation = "FLETCHER1963";
    f.note = "canonical form used: the printed theta branch and residual structure "
             "contradict the printed optimum";
    f.optima = {[] {
      auto o = opt_points({{1, 0, 0}}, 0.0, kExact);
      o.corrected = true;
      return o;
    }()};
    f.eval = [](Span x, Ctx&, Noise&) {
      double theta = std::atan2(x[1], x[0]) / (2 * kPi);
      double r = std::hypot(x[0], x[1]);
      return 100 * (sqr(x[2] - 10 * theta) + sqr(r - 1)) + x[2] * x[2];
    };
  }
  {
    auto& f = b.add(65, "himmelblau", "Himmelblau");
    f.dimension = fixed_dim(2);
    f.bounds = box(-5, 5);
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal");
    f.citation = "HIMMELBLAU1972";
    f.optima = {opt_points({{3, 2}}, 0.0, kExact)};
    f.eval = [](Span x, Ctx&, Noise&) {
      return sqr(x[0] * x[0] + x[1] - 11) + sqr(x[0] + x[1] * x[1] - 7);
    };
  }
  {
    auto& f = b.add(66, "hosaki", "Hosaki");
    f.dimension = fixed_dim(2);
    f.bounds = box({{0, 5}, {0, 6}});
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal");
    f.citation = "BEKEY1974";
    f.optima = {opt_points({{4, 2}}, -2.3458, kApprox)};
    f.eval = [](Span x, Ctx&, Noise&) {
      double p = 1 - 8 * x[0] + 7 * x[0] * x[0] - 7.0 / 3.0 * x[0] * x[0] * x[0] +
                 0.25 * x[0] * x[0] * x[0] * x[0];
      return p * x[1] * x[1] * std::exp(-x[1]);
    };
  }
  {
    auto& f = b.add(67, "jennrich-sampson", "Jennrich-Sampson");
    f.dimension = fixed_dim(2);
    f.bounds = box(-1, 1);
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal");
    f.citation = "JENNRICH1968";
    f.optima = {opt_points({{0.257825, 0.257825}}, 124.3612, kRounded)};
    f.eval = [](Span x, Ctx&, Noise&) {
      double s = 0;
      for (int i = 1; i <= 10; ++i)
        s += sqr(2 + 2 * i - (std::exp(i * x[0]) + std::exp(i * x[1])));
      return s;
    };
  }
  {
    auto& f = b.add(68, "langerman-5", "Langerman-5");
    f.dimension = scalable_dim(2, 1, 10);
    f.bounds = box(0, 10);
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Scalable, Multimodal");
    f.citation = "BERSINI1996";
    f.note = "the coefficient matrix has 10 columns, so D <= 10";
    f.optima = {opt_value_only(-1.4, kRounded, "no location printed")};
    f.eval = [](Span x, Ctx&, Noise&) {
      double s = 0;
      for (int i = 0; i < 5; ++i) {
        double q = 0;
        for (size_t j = 0; j < x.size(); ++j) q += sqr(x[j] - tables::langerman_a[i][j]);
        s += tables::langerman_c[static_cast<size_t>(i)] * std::exp(-q / kPi) *
             std::cos(kPi * q);
      }
      return -s;
    };
  }
  {
    auto& f = b.add(69, "keane", "Keane");
    f.dimension = fixed_dim(2);
    f.bounds = box(0, 10);
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal");
    f.optima = {opt_points({{0, 1.39325}, {1.39325, 0}}, -0.673668, kRounded,
                           "printed value is negative; the quotient form is non-negative")};
    f.eval = [](Span x, Ctx&, Noise&) {
      double r = std::hypot(x[0], x[1]);
      if (r == 0) domain_error("keane is singular at the origin");
      return sqr(std::sin(x[0] - x[1])) * sqr(std::sin(x[0] + x[1])) / r;
    };
  }
  {
    auto& f = b.add(70, "leon", "Leon");
    f.dimension = fixed_dim(2);
    f.bounds = box(-1.2, 1.2);
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Non-Scalable, Unimodal");
    f.citation = "LAVI1966";
    f.optima = {opt_points({{1, 1}}, 0.0, kExact)};
    f.eval = [](Span x, Ctx&, Noise&) {
      return 100 * sqr(x[1] - x[0] * x[0]) + sqr(1 - x[0]);
    };
  }
  {
    auto& f = b.add(71, "matyas", "Matyas");
    f.dimension = fixed_dim(2);
    f.bounds = box(-10, 10);
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Non-Scalable, Unimodal");
    f.citation = "HEDAR";
    f.optima = {opt_points({{0, 0}}, 0.0, kExact)};
    f.eval = [](Span x, Ctx&, Noise&) {
      return 0.26 * (x[0] * x[0] + x[1] * x[1]) - 0.48 * x[0] * x[1];
    };
  }
  {
    auto& f = b.add(72, "mccormick", "McCormick");
    f.dimension = fixed_dim(2);
    f.bounds = box({{-1.5, 4}, {-3, 3}});
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal");
    f.citation = "LOOTSMA1972";
    f.optima = {opt_points({{-0.547, -1.547}}, -1.9133, kApprox)};
    f.eval = [](Span x, Ctx&, Noise&) {
      return std::sin(x[0] + x[1]) + sqr(x[0] - x[1]) - 1.5 * x[0] + 2.5 * x[1] + 1;
    };
  }
  {
    auto& f = b.add(73, "miele-cantrell", "Miele Cantrell");
    f.dimension = fixed_dim(4);
    f.bounds = box(-1, 1);
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal");
    f.citation = "CRAGG1969";
    f.optima = {opt_points({{0, 1, 1, 1}}, 0.0, kExact)};
    f.eval = [](Span x, Ctx&, Noise&) {
      return std::pow(std::exp(-x[0]) - x[1], 4) + 100 * std::pow(x[1] - x[2], 6) +
             std::pow(std::tan(x[2] - x[3]), 4) + std::pow(x[0], 8);
    };
  }
  {
    auto& f = b.add(74, "mishra-1", "Mishra 1");
    f.dimension = scalable_dim(2, 1);
    f.bounds = box(0, 1);
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Scalable, Multimodal");
    f.citation = "MISHRA2006_1";
    f.optima = {opt_value_only(2.0, kExact, "no location printed")};
    f.eval = [](Span x, Ctx&, Noise&) {
      double g = 0;
      for (size_t i = 0; i + 1 < x.size(); ++i) g += x[i];
      double n = static_cast<double>(x.size());
      return std::pow(1 + n - g, n - g);
    };
  }
  {
    auto& f = b.add(75, "mishra-2", "Mishra 2");
    f.dimension = scalable_dim(2, 1);
    f.bounds = box(0, 1);
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Scalable, Multimodal");
    f.citation = "MISHRA2006_1";
    f.optima = {opt_value_only(2.0, kExact, "no location printed")};
    f.eval = [](Span x, Ctx&, Noise&) {
      double g = 0;
      for (size_t i = 0; i + 1 < x.size(); ++i) g += 0.5 * (x[i] + x[i + 1]);
      double n = static_cast<double>(x.size());
      return std::pow(1 + n - g, n - g);
    };
  }
  {
    auto& f = b.add(76, "mishra-3", "Mishra 3");
    f.dimension = fixed_dim(2);
    f.bounds = box(-10, 10);
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal");
    f.citation = "MISHRA2006_6";
    f.note = "no box printed; family box [-10,10]^2 adopted";
    f.optima = {opt_points({{-8.466, -10}}, -0.18467, kRounded)};
    f.eval = [](Span x, Ctx&, Noise&) {
      return std::sqrt(std::fabs(std::cos(std::sqrt(std::fabs(x[0] * x[0] + x[1] * x[1]))))) +
             0.01 * (x[0] + x[1]);
    };
  }
  {
    auto& f = b.add(77, "mishra-4", "Mishra 4");
    f.dimension = fixed_dim(2);
    f.bounds = box(-10, 10);
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal");
    f.citation = "MISHRA2006_6";
    f.note = "no box printed; family box [-10,10]^2 adopted";
    f.optima = {opt_points({{-9.94112, -10}}, -0.199409, kRounded)};
    f.eval = [](Span x, Ctx&, Noise&) {
      return std::sqrt(std::fabs(std::sin(std::sqrt(std::fabs(x[0] * x[0] + x[1] * x[1]))))) +
             0.01 * (x[0] + x[1]);
    };
  }
  {
    auto& f = b.add(78, "mishra-5", "Mishra 5");
    f.dimension = fixed_dim(2);
    f.bounds = box(-10, 10);
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal");
    f.citation = "MISHRA2006_6";
    f.note = "no box printed; family box [-10,10]^2 adopted; printed sin^2(.)^2 read "
             "with the trailing square on the argument, as in the Schaffer entries";
    f.optima = {opt_points({{-1.98682, -10}}, -1.01983, kRounded)};
    f.eval = [](Span x, Ctx&, Noise&) {
      double t = sqr(std::sin(sqr(std::cos(x[0] + std::cos(x[1]))))) +
                 sqr(std::cos(std::sin(x[0]) + std::sin(x[1]))) + x[0];
      return t * t + 0.01 * (x[0] + x[1]);
    };
  }
  {
    auto& f = b.add(79, "mishra-6", "Mishra 6");
    f.dimension = fixed_dim(2);
    f.bounds = box(-10, 10);
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal");
    f.citation = "MISHRA2006_6";
    f.note = "no box printed; family box [-10,10]^2 adopted; printed sin^2(.)^2 read "
             "with the trailing square on the argument, as in the Schaffer entries";
    f.optima = {opt_points({{2.88631, 1.82326}}, -2.28395, kRounded)};
    f.eval = [](Span x, Ctx&, Noise&) {
      double t = sqr(std::sin(sqr(std::cos(x[0] + std::cos(x[1]))))) -
                 sqr(std::cos(std::sin(x[0]) + std::sin(x[1]))) + x[0];
      return -std::log(t * t) + 0.01 * (sqr(x[0] - 1) + sqr(x[1] - 1));
    };
  }
  {
    auto& f = b.add(80, "mishra-7", "Mishra 7");
    f.dimension = scalable_dim(2, 1);
    f.bounds = box(-10, 10);
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal");
    f.note = "no box printed; family box [-10,10] adopted";
    f.optima = {opt_value_only(0.0, kExact, "no location printed")};
    f.eval = [](Span x, Ctx&, Noise&) {
      double p = 1, fact = 1;
      for (size_t i = 0; i < x.size(); ++i) {
        p *= x[i];
        fact *= static_cast<double>(i + 1);
      }
      return sqr(p - fact);
    };
  }
  {
    auto& f = b.add(81, "mishra-8", "Mishra 8");
    f.dimension = fixed_dim(2);
    f.bounds = box(-10, 10);
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal");
    f.citation = "MISHRA2006_6";
    f.note = "no box printed; family box [-10,10]^2 adopted";
    f.optima = {opt_points({{2, -3}}, 0.0, kExact)};
    f.eval = [](Span x, Ctx&, Noise&) {
      double u = x[0];
      double p1 = std::fabs(std::pow(u, 10) - 20 * std::pow(u, 9) + 180 * std::pow(u, 8) -
                            960 * std::pow(u, 7) + 3360 * std::pow(u, 6) -
                            8064 * std::pow(u, 5) + 1334 * std::pow(u, 4) -
                            15360 * u * u * u + 11520 * u * u - 5120 * u + 2624);
      double v = x[1];
      double p2 = std::fabs(v * v * v * v + 12 * v * v * v + 54 * v * v + 108 * v + 81);
      return 0.001 * sqr(p1 * p2);
    };
  }
  {
    auto& f = b.add(82, "mishra-9", "Mishra 9");
    f.dimension = fixed_dim(3);
    f.bounds = box(-10, 10);
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal");
    f.citation = "MISHRA2006_6";
    f.note = "no box printed; family box [-10,10]^3 adopted";
    f.optima = {opt_points({{1, 2, 3}}, 0.0, kExact)};
    f.eval = [](Span x, Ctx&, Noise&) {
      double a = 2 * x[0] * x[0] * x[0] + 5 * x[0] * x[1] + 4 * x[2] -
                 2 * x[0] * x[0] * x[2] - 18;
      double bb = x[0] + x[1] * x[1] * x[1] + x[0] * x[2] * x[2] - 22;
      double c = 8 * x[0] * x[0] + 2 * x[1] * x[2] + 2 * x[1] * x[1] +
                 3 * x[1] * x[1] * x[1] - 52;
      return sqr(a * bb * bb * c + a * bb * c * c + bb * bb + sqr(x[0] + x[1] - x[2]));
    };
  }
  {
    auto& f = b.add(83, "mishra-10", "Mishra 10");
    f.dimension = fixed_dim(2);
    f.bounds = box(-10, 10);
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal");
    f.citation = "MISHRA2006_6";
    f.note = "no box printed; family box [-10,10]^2 adopted; the printed 'x1 _|_ x2' "
             "operator read as the product x1*x2; the floor terms make the function "
             "discontinuous despite the printed Continuous/Differentiable header";
    f.optima = {opt_points({{0, 0}, {2, 2}}, 0.0, kExact)};
    f.eval = [](Span x, Ctx&, Noise&) {
      return sqr(std::floor(x[0] * x[1]) - std::floor(x[0]) - std::floor(x[1]));
    };
  }
  {
    auto& f = b.add(84, "mishra-11", "Mishra 11");
    f.dimension = scalable_dim(2, 1);
    f.bounds = box(-10, 10);
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal");
    f.citation = "MISHRA2006_6";
    f.note = "no box printed; family box [-10,10] adopted";
    f.optima = {opt_value_only(0.0, kExact, "no location printed")};
    f.eval = [](Span x, Ctx&, Noise&) {
      double s = 0, p = 1;
      for (double v : x) {
        s += std::fabs(v);
        p *= std::fabs(v);
      }
      double n = static_cast<double>(x.size());
      return sqr(s / n - std::pow(p, 1 / n));
    };
  }
  {
    auto& f = b.add(85, "parsopoulos", "Parsopoulos");
    f.dimension = fixed_dim(2);
    f.bounds = box(-5, 5);
    f.flags = parse_flags("Continuous, Differentiable, Separable, Scalable, Multimodal");
    f.optima = {[] {
      std::vector<std::vector<double>> pts;
      for (int k : {-3, -1, 1, 3})
        for (int l : {-1, 0, 1}) pts.push_back({k * kPi / 2, l * kPi});
      auto o = opt_points(std::move(pts), 0.0, kExact);
      o.family = "(k pi/2, l pi), k odd, l integer; 12 minima in the box";
      return o;
    }()};
    f.eval = [](Span x, Ctx&, Noise&) {
      return sqr(std::cos(x[0])) + sqr(std::sin(x[1]));
    };
  }
  {
    auto& f = b.add(86, "pen-holder", "Pen Holder");
    f.dimension = fixed_dim(2);
    f.bounds = box(-11, 11);
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal");
    f.citation = "MISHRA2006_6";
    f.optima = {opt_points({{9.646168, 9.646168},
                            {-9.646168, 9.646168},
                            {9.646168, -9.646168},
                            {-9.646168, -9.646168}},
                           -0.96354, kRounded)};
    f.eval = [](Span x, Ctx&, Noise&) {
      double a = std::fabs(std::cos(x[0]) * std::cos(x[1]) *
                           std::exp(std::fabs(1 - std::hypot(x[0], x[1]) / kPi)));
      return -std::exp(1 / a);
    };
  }
  {
    auto& f = b.add(87, "pathological", "Pathological");
    f.dimension = scalable_dim(2, 2);
    f.bounds = box(-100, 100);
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal");
    f.citation = "RAHNAMAYAN2007";
    f.optima = {opt_points({{0, 0}}, 0.0, kExact)};
    f.eval = [](Span x, Ctx&, Noise&) {
      double s = 0;
      for (size_t i = 0; i + 1 < x.size(); ++i) {
        double num = sqr(std::sin(std::sqrt(100 * x[i] * x[i] + x[i + 1] * x[i + 1]))) - 0.5;
        double den = 1 + 0.001 * sqr(x[i] * x[i] - 2 * x[i] * x[i + 1] + x[i + 1] * x[i + 1]);
        s += 0.5 + num / den;
      }
      return s;
    };
  }
  {
    auto& f = b.add(88, "paviani", "Paviani");
    f.dimension = scalable_dim(10, 1);
    f.bounds = box(2.0001, 10);
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Scalable, Multimodal");
    f.citation = "HIMMELBLAU1972";
    f.optima = {opt_points({std::vector<double>(10, 9.351)}, -45.778, kApprox)};
    f.eval = [](Span x, Ctx&, Noise&) {
      double s = 0, p = 1;
      for (double v : x) {
        if (v <= 2 || v >= 10) domain_error("paviani needs 2 < x < 10 (logarithms)");
        s += sqr(std::log(v - 2)) + sqr(std::log(10 - v));
        p *= v;
      }
      return s - std::pow(p, 0.2);
    };
  }
  {
    auto& f = b.add(89, "pinter", "Pinter");
    f.dimension = scalable_dim(2, 2);
    f.bounds = box(-10, 10);
    f.flags = parse_flags("Continuous, Differentiable, Non-separable, Scalable, Multimodal");
    f.citation = "PINTER1996";
    f.optima = {opt_points({{0, 0}}, 0.0, kExact)};
    f.eval = [](Span x, Ctx&, Noise&) {
      size_t n = x.size();
      double s = 0;
      for (size_t i = 0; i < n; ++i) {
        double prev = x[(i + n - 1) % n];
        double next = x[(i + 1) % n];
        double A = prev * std::sin(x[i]) + std::sin(next);
        double B = prev * prev - 2 * x[i] + 3 * next - std::cos(x[i]) + 1;
        double w = static_cast<double>(i + 1);
        s += w * x[i] * x[i] + 20 * w * sqr(std::sin(A)) + w * std::log10(1 + w * B * B);
      }
      return s;
    };
  }
  {
    auto& f = b.add(90, "periodic", "Periodic");
    f.dimension = fixed_dim(2);
    f.bounds = box(-10, 10);
    f.flags = parse_flags("Separable");
    f.citation = "ALI2005";
    f.optima = {opt_points({{0, 0}}, 0.9, kRounded)};
    f.eval = [](Span x, Ctx&, Noise&) {
      return 1 + sqr(std::sin(x[0])) + sqr(std::sin(x[1])) -
             0.1 * std::exp(-(x[0] * x[0] + x[1] * x[1]));
    };
  }
  {
    auto& f = b.add(91, "powell-singular", "Powell Singular");
    f.dimension = scalable_dim(4, 4, 0, 4);
    f.bounds = box(-4, 5);
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Scalable, Unimodal");
    f.citation = "POWELL1962";
    f.optima = {opt_points({{3, -1, 0, 1}}, 0.0, kExact,
                           "printed location is the classical starting point")};
    f.eval = [](Span x, Ctx&, Noise&) {
      double s = 0;
      for (size_t k = 0; k + 3 < x.size(); k += 4) {
        s += sqr(x[k] + 10 * x[k + 1]) + 5 * sqr(x[k + 2] - x[k + 3]) +
             std::pow(x[k + 1] - x[k + 2], 4) + 10 * std::pow(x[k] - x[k + 3], 4);
      }
      return s;
    };
  }
  {
    auto& f = b.add(92, "powell-singular-2", "Powell Singular 2");
    f.dimension = scalable_dim(4, 4);
    f.bounds = box(-4, 5);
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Scalable, Unimodal");
    f.citation = "FU2006";
    f.note = "printed sum references x_{i-1} from i=1; read with the sum over interior "
             "indices i=2..D-2";
    f.optima = {opt_value_only(0.0, kExact, "no location printed")};
    f.eval = [](Span x, Ctx&, Noise&) {
      double s = 0;
      for (size_t i = 1; i + 2 < x.size(); ++i) {
        s += sqr(x[i - 1] + 10 * x[i]) + 5 * sqr(x[i + 1] - x[i + 2]) +
             std::pow(x[i] - 2 * x[i + 1], 4) + 10 * std::pow(x[i - 1] - x[i + 2], 4);
      }
      return s;
    };
  }
  {
    auto& f = b.add(93, "powell-sum", "Powell Sum");
    f.dimension = scalable_dim(2, 1);
    f.bounds = box(-1, 1);
    f.flags = parse_flags("Continuous, Differentiable, Separable, Scalable, Unimodal");
    f.citation = "RAHNAMAYAN2007";
    f.optima = {opt_value_only(0.0, kExact, "no location printed")};
    f.eval = [](Span x, Ctx&, Noise&) {
      double s = 0;
      for (size_t i = 0; i < x.size(); ++i)
        s += std::pow(std::fabs(x[i]), static_cast<double>(i + 2));
      return s;
    };
  }
  {
    auto& f = b.add(94, "price-1", "Price 1");
    f.dimension = fixed_dim(2);
    f.bounds = box(-500, 500);
    f.flags = parse_flags("Continuous, Non-Differentiable, Separable, Non-Scalable, Multimodal");
    f.citation = "PRICE1977";
    f.optima = {opt_points({{5, 5}, {5, -5}, {-5, 5}, {-5, -5}}, 0.0, kExact)};
    f.eval = [](Span x, Ctx&, Noise&) {
      return sqr(std::fabs(x[0]) - 5) + sqr(std::fabs(x[1]) - 5);
    };
  }
  {
    auto& f = b.add(95, "price-2", "Price 2");
    f.dimension = fixed_dim(2);
    f.bounds = box(-10, 10);
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal");
    f.citation = "PRICE1977";
    f.optima = {opt_points({{0, 0}}, 0.9, kRounded)};
    f.eval = [](Span x, Ctx&, Noise&) {
      return 1 + sqr(std::sin(x[0])) + sqr(std::sin(x[1])) -
             0.1 * std::exp(-x[0] * x[0] - x[1] * x[1]);
    };
  }
  {
    auto& f = b.add(96, "price-3", "Price 3");
    f.dimension = fixed_dim(2);
    f.bounds = box(-500, 500);
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal");
    f.citation = "PRICE1977";
    f.optima = {opt_points({{5, 5}, {5, -5}, {-5, 5}, {-5, -5}}, 0.0, kExact,
                           "printed minima repeat Price 1's points and contradict the formula")};
    f.eval = [](Span x, Ctx&, Noise&) {
      return 100 * sqr(x[1] - x[0] * x[0]) + 6 * sqr(6.4 * sqr(x[1] - 0.5) - x[0] - 0.6);
    };
  }
  {
    auto& f = b.add(97, "price-4", "Price 4");
    f.dimension = fixed_dim(2);
    f.bounds = box(-500, 500);
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal");
    f.citation = "PRICE1977";
    f.optima = {opt_points({{0, 0}, {2, 4}, {1.464, -2.506}}, 0.0, kExact)};
    f.eval = [](Span x, Ctx&, Noise&) {
      return sqr(2 * x[0] * x[0] * x[0] * x[1] - x[1] * x[1] * x[1]) +
             sqr(6 * x[0] - x[1] * x[1] + x[1]);
    };
  }
  {
    auto& f = b.add(98, "qing", "Qing");
    f.dimension = scalable_dim(2, 1);
    f.bounds = box(-500, 500);
    f.flags = parse_flags("Continuous, Differentiable, Separable, Scalable, Multimodal");
    f.citation = "QING2006";
    f.optima = {[] {
      const double r2 = std::sqrt(2.0);
      auto o = opt_points({{1, r2}, {-1, r2}, {1, -r2}, {-1, -r2}}, 0.0, kExact);
      o.family = "x_i = +-sqrt(i); all sign choices are minima";
      return o;
    }()};
    f.eval = [](Span x, Ctx&, Noise&) {
      double s = 0;
      for (size_t i = 0; i < x.size(); ++i)
        s += sqr(x[i] * x[i] - static_cast<double>(i + 1));
      return s;
    };
  }
  {
    auto& f = b.add(99, "quadratic", "Quadratic");
    f.dimension = fixed_dim(2);
    f.bounds = box(-10, 10);
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Non-Scalable");
    f.optima = {opt_points({{0.19388, 0.48513}}, -3873.7243, kRounded)};
    f.eval = [](Span x, Ctx&, Noise&) {
      return -3803.84 - 138.08 * x[0] - 232.92 * x[1] + 128.08 * x[0] * x[0] +
             203.64 * x[1] * x[1] + 182.25 * x[0] * x[1];
    };
  }
  {
    auto& f = b.add(100, "quartic", "Quartic");
    f.dimension = scalable_dim(2, 1);
    f.bounds = box(-1.28, 1.28);
    f.flags = parse_flags("Continuous, Differentiable, Separable, Scalable");
    f.citation = "STORN1996";
    f.stochastic = true;
    f.optima = {opt_points({{0, 0}}, 0.0, kExact, "audited with the noise suppressed")};
    f.eval = [](Span x, Ctx&, Noise& noise) {
      double s = 0;
      for (size_t i = 0; i < x.size(); ++i)
        s += static_cast<double>(i + 1) * std::pow(x[i], 4);
      return s + noise.uniform_or(0.0);
    };
  }
  {
    auto& f = b.add(101, "quintic", "Quintic");
    f.dimension = scalable_dim(2, 1);
    f.bounds = box(-10, 10);
    f.flags = parse_flags("Continuous, Differentiable, Separable, Non-Scalable, Multimodal");
    f.citation = "MISHRA2006_6";
    f.optima = {[] {
      auto o = opt_points({{-1, -1}, {-1, 2}, {2, -1}, {2, 2}}, 0.0, kExact);
      o.family = "each coordinate -1 or 2";
      return o;
    }()};
    f.eval = [](Span x, Ctx&, Noise&) {
      double s = 0;
      for (double v : x)
        s += std::fabs(v * v * v * v * v - 3 * v * v * v * v + 4 * v * v * v + 2 * v * v -
                       10 * v - 4);
      return s;
    };
  }
  {
    auto& f = b.add(102, "rana", "Rana");
    f.dimension = scalable_dim(2, 2);
    f.bounds = box(-500, 500);
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Scalable, Multimodal");
    f.citation = "PRICE2005";
    f.note = "printed '||.||' read as absolute value, '*' as multiplication";
    f.optima = {opt_unstated("no optimum printed")};
    f.eval = [](Span x, Ctx&, Noise&) {
      double s = 0;
      for (size_t i = 0; i + 1 < x.size(); ++i) {
        double t1 = std::sqrt(std::fabs(x[i + 1] + x[i] + 1));
        double t2 = std::sqrt(std::fabs(x[i + 1] - x[i] + 1));
        s += (x[i + 1] + 1) * std::cos(t2) * std::sin(t1) +
             x[i] * std::cos(t1) * std::sin(t2);
      }
      return s;
    };
  }
  {
    auto& f = b.add(103, "ripple-1", "Ripple 1");
    f.dimension = fixed_dim(2);
    f.bounds = box(0, 1);
    f.flags = parse_flags("Non-separable");
    f.optima = {opt_unstated("described qualitatively; 25-hole grid plus cosine ripples")};
    f.eval = [](Span x, Ctx&, Noise&) {
      double s = 0;
      for (int i = 0; i < 2; ++i) {
        double v = x[static_cast<size_t>(i)];
        double env = std::exp(-2 * std::log(2.0) * sqr((v - 0.1) / 0.8));
        s += -env * (std::pow(std::sin(5 * kPi * v), 6) +
                     0.1 * sqr(std::cos(500 * kPi * v)));
      }
      return s;
    };
  }
  {
    auto& f = b.add(104, "ripple-25", "Ripple 25");
    f.dimension = fixed_dim(2);
    f.bounds = box(0, 1);
    f.flags = parse_flags("Non-separable");
    f.optima = {opt_unstated("described qualitatively; Ripple 1 without the cosine ripples")};
    f.eval = [](Span x, Ctx&, Noise&) {
      double s = 0;
      for (int i = 0; i < 2; ++i) {
        double v = x[static_cast<size_t>(i)];
        double env = std::exp(-2 * std::log(2.0) * sqr((v - 0.1) / 0.8));
        s += -env * std::pow(std::sin(5 * kPi * v), 6);
      }
      return s;
    };
  }
  {
    auto& f = b.add(105, "rosenbrock", "Rosenbrock");
    f.dimension = scalable_dim(2, 2);
    f.bounds = box(-30, 30);
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Scalable, Unimodal");
    f.citation = "ROSENBROCK1960";
    f.optima = {opt_points({{1, 1}}, 0.0, kExact)};
    f.eval = [](Span x, Ctx&, Noise&) {
      double s = 0;
      for (size_t i = 0; i + 1 < x.size(); ++i)
        s += 100 * sqr(x[i + 1] - x[i] * x[i]) + sqr(x[i] - 1);
      return s;
    };
  }
  {
    auto& f = b.add(106, "rosenbrock-modified", "Rosenbrock Modified");
    f.dimension = fixed_dim(2);
    f.bounds = box(-2, 2);
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal");
    f.optima = {opt_points({{-1, -1}}, 0.0, kExact)};
    f.eval = [](Span x, Ctx&, Noise&) {
      return 74 + 100 * sqr(x[1] - x[0] * x[0]) + sqr(1 - x[0]) -
             400 * std::exp(-(sqr(x[0] + 1) + sqr(x[1] + 1)) / 0.1);
    };
  }
  {
    auto& f = b.add(107, "rotated-ellipse", "Rotated Ellipse");
    f.dimension = fixed_dim(2);
    f.bounds = box(-500, 500);
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Non-Scalable, Unimodal");
    f.optima = {opt_points({{0, 0}}, 0.0, kExact)};
    f.eval = [](Span x, Ctx&, Noise&) {
      return 7 * x[0] * x[0] - 6 * std::sqrt(3.0) * x[0] * x[1] + 13 * x[1] * x[1];
    };
  }
  {
    auto& f = b.add(108, "rotated-ellipse-2", "Rotated Ellipse 2");
    f.dimension = fixed_dim(2);
    f.bounds = box(-500, 500);
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Non-Scalable, Unimodal");
    f.citation = "PRICE2005";
    f.optima = {opt_points({{0, 0}}, 0.0, kExact)};
    f.eval = [](Span x, Ctx&, Noise&) {
      return x[0] * x[0] - x[0] * x[1] + x[1] * x[1];
    };
  }
  {
    auto& f = b.add(109, "rump", "Rump");
    f.dimension = fixed_dim(2);
    f.bounds = box(-500, 500);
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Non-Scalable, Unimodal");
    f.citation = "MOORE1988";
    f.note = "x1/(2 x2) is singular on the x2 = 0 line, including the printed optimum";
    f.optima = {opt_points({{0, 0}}, 0.0, kExact)};
    f.eval = [](Span x, Ctx&, Noise&) {
      if (x[1] == 0) domain_error("rump divides by x2");
      double a = x[0] * x[0], bq = x[1] * x[1];
      return (333.75 - a) * std::pow(x[1], 6) + a * (11 * a * bq - 121 * bq * bq - 2) +
             5.5 * std::pow(x[1], 8) + x[0] / (2 * x[1]);
    };
  }
  {
    auto& f = b.add(110, "salomon", "Salomon");
    f.dimension = scalable_dim(2, 1);
    f.bounds = box(-100, 100);
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Scalable, Multimodal");
    f.citation = "SALOMON1996";
    f.optima = {opt_points({{0, 0}}, 0.0, kExact)};
    f.eval = [](Span x, Ctx&, Noise&) {
      double q = 0;
      for (double v : x) q += v * v;
      double r = std::sqrt(q);
      return 1 - std::cos(2 * kPi * r) + 0.1 * r;
    };
  }
  {
    auto& f = b.add(111, "sargan", "Sargan");
    f.dimension = scalable_dim(2, 1);
    f.bounds = box(-100, 100);
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Scalable, Multimodal");
    f.citation = "DIXON1978";
    f.note = "printed cross-term condition 'j != 1' read as j != i";
    f.optima = {opt_points({{0, 0}}, 0.0, kExact)};
    f.eval = [](Span x, Ctx&, Noise&) {
      double total = 0;
      double sum_all = 0;
      for (double v : x) sum_all += v;
      for (size_t i = 0; i < x.size(); ++i)
        total += x[i] * x[i] + 0.4 * x[i] * (sum_all - x[i]);
      return total;
    };
  }
  {
    auto& f = b.add(112, "schaffer-1", "Schaffer 1");
    f.dimension = fixed_dim(2);
    f.bounds = box(-100, 100);
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Non-Scalable, Unimodal");
    f.citation = "MISHRA2006_7";
    f.note = "denominator read as [1 + 0.001(x1^2+x2^2)]^2, the family form made explicit "
             "by the Schaffer F6 entry";
    f.optima = {opt_points({{0, 0}}, 0.0, kExact)};
    f.eval = [](Span x, Ctx&, Noise&) {
      double q = x[0] * x[0] + x[1] * x[1];
      return 0.5 + (sqr(std::sin(q * q)) - 0.5) / sqr(1 + 0.001 * q);
    };
  }
  {
    auto& f = b.add(113, "schaffer-2", "Schaffer 2");
    f.dimension = fixed_dim(2);
    f.bounds = box(-100, 100);
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Non-Scalable, Unimodal");
    f.citation = "MISHRA2006_7";
    f.optima = {opt_points({{0, 0}}, 0.0, kExact)};
    f.eval = [](Span x, Ctx&, Noise&) {
      double q = x[0] * x[0] + x[1] * x[1];
      double d = x[0] * x[0] - x[1] * x[1];
      return 0.5 + (sqr(std::sin(d * d)) - 0.5) / sqr(1 + 0.001 * q);
    };
  }
  {
    auto& f = b.add(114, "schaffer-3", "Schaffer 3");
    f.dimension = fixed_dim(2);
    f.bounds = box(-100, 100);
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Non-Scalable, Unimodal");
    f.citation = "MISHRA2006_7";
    f.optima = {opt_points({{0, 1.253115}}, 0.00156685, kRounded)};
    f.eval = [](Span x, Ctx&, Noise&) {
      double q = x[0] * x[0] + x[1] * x[1];
      return 0.5 + (sqr(std::sin(std::cos(std::fabs(x[0] * x[0] - x[1] * x[1])))) - 0.5) /
                       sqr(1 + 0.001 * q);
    };
  }
  {
    auto& f = b.add(115, "schaffer-4", "Schaffer 4");
    f.dimension = fixed_dim(2);
    f.bounds = box(-100, 100);
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Non-Scalable, Unimodal");
    f.citation = "MISHRA2006_7";
    f.optima = {opt_points({{0, 1.253115}}, 0.292579, kRounded)};
    f.eval = [](Span x, Ctx&, Noise&) {
      double q = x[0] * x[0] + x[1] * x[1];
      return 0.5 + (sqr(std::cos(std::sin(x[0] * x[0] - x[1] * x[1]))) - 0.5) /
                       sqr(1 + 0.001 * q);
    };
  }
  {
    auto& f = b.add(116, "schmidt-vetters", "Schmidt Vetters");
    f.dimension = fixed_dim(3);
    f.bounds = box(0, 10);
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal");
    f.citation = "LOOTSMA1972";
    f.note = "no box printed; [0,10]^3 adopted from the usual collection box";
    f.optima = {opt_points({{0.78547, 0.78547, 0.78547}}, 3.0, kExact)};
    f.eval = [](Span x, Ctx&, Noise&) {
      if (x[1] == 0) domain_error("schmidt-vetters divides by x2");
      return 1 / (1 + sqr(x[0] - x[1])) + std::sin((kPi * x[1] + x[2]) / 2) +
             std::exp(sqr((x[0] + x[1]) / x[1] - 2));
    };
  }
  {
    auto& f = b.add(117, "schumer-steiglitz", "Schumer Steiglitz");
    f.dimension = scalable_dim(2, 1);
    f.bounds = box(-100, 100);
    f.flags = parse_flags("Continuous, Differentiable, Separable, Scalable, Unimodal");
    f.citation = "SCHUMER1968";
    f.note = "no box printed; [-100,100] adopted from the neighbouring Schwefel entries";
    f.optima = {opt_points({{0, 0}}, 0.0, kExact)};
    f.eval = [](Span x, Ctx&, Noise&) {
      double s = 0;
      for (double v : x) s += std::pow(v, 4);
      return s;
    };
  }
  {
    auto& f = b.add(118, "schwefel", "Schwefel");
    f.dimension = scalable_dim(2, 1);
    f.bounds = box(-100, 100);
    f.flags = parse_flags("Continuous, Differentiable, Partially-Separable, Scalable, Unimodal");
    f.citation = "SCHWEFEL1981";
    f.note = "the printed form leaves alpha free (alpha >= 0); default alpha = sqrt(pi), "
             "overridable via the 'alpha' parameter";
    f.default_params = {{"alpha", std::sqrt(kPi)}};
    f.optima = {opt_points({{0, 0}}, 0.0, kExact)};
    f.eval = [](Span x, Ctx& ctx, Noise&) {
      double q = 0;
      for (double v : x) q += v * v;
      return std::pow(q, ctx.param("alpha", std::sqrt(kPi)));
    };
  }
  {
    auto& f = b.add(119, "schwefel-1-2", "Schwefel 1.2");
    f.dimension = scalable_dim(2, 1);
    f.bounds = box(-100, 100);
    f.flags = parse_flags("Continuous, Differentiable, Non-Separable, Scalable, Unimodal");
    f.citation = "SCHWEFEL1981";
    f.optima = {opt_points({{0, 0}}, 0.0, kExact)};
    f.eval = [](Span x, Ctx&, Noise&) {
      double s = 0, prefix = 0;
      for (double v : x) {
        prefix += v;
        s += prefix * prefix;
      }
      return s;
    };
  }
  {
    auto& f = b.add(120, "schwefel-2-4", "Schwefel 2.4");
    f.dimension = scalable_dim(2, 1);
    f.bounds = box(0, 10);
    f.flags = parse_flags("Continuous, Differentiable, Separable, Non-Scalable, Multimodal");
    f.citation = "SCHWEFEL1981";
    f.optima = {opt_points({{1, 1}}, 0.0, kExact)};
    f.eval = [](Span x, Ctx&, Noise&) {
      double s = 0;
      for (size_t i = 0; i < x.size(); ++i)
        s += sqr(x[i] - 1) + sqr(x[0] - x[i] * x[i]);
      return s;
    };
  }
}

}  // namespace bench
