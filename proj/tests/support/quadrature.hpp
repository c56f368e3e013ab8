#pragma once

#include <cmath>
#include <functional>

namespace testsupport {

inline double simpson(const std::function<double(double)>& f, double a, double b, int n) {
  // n even
  const double h = (b - a) / n;
  double s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return s * h / 3.0;
}

inline double adaptive(const std::function<double(double)>& f, double a, double b, double eps) {
  int n = 512;
  double prev = simpson(f, a, b, n);
  for (int iter = 0; iter < 14; ++iter) {
    n *= 2;
    double cur = simpson(f, a, b, n);
    if (std::abs(cur - prev) < eps) return cur;
    prev = cur;
  }
  return prev;
}

/// E[x^k] for the density exp(-x^2 / (2 c)) on the line, by quadrature.
inline double gaussian_power_moment(int k, double c) {
  const double limit = 40.0 * std::sqrt(c);
  auto weight = [&](double x) { return std::exp(-x * x / (2.0 * c)); };
  double num = adaptive([&](double x) { return std::pow(x, k) * weight(x); }, -limit, limit, 1e-12);
  double den = adaptive(weight, -limit, limit, 1e-12);
  return num / den;
}

}  // namespace testsupport
