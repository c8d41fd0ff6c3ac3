#pragma once

// Reference solutions that share no code with the library: closed forms, a
// finite-difference Sturm-sequence eigensolver and scalar bisection of the
// Robin endpoint conditions.

#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

namespace oracle {

inline constexpr double pi = std::numbers::pi;

struct Level {
  double E;
  int degeneracy;
};

/// V = 0 on [-a, a]: closed-form levels below e_max.
inline std::vector<Level> box_dirichlet(double a, double e_max) {
  std::vector<Level> out;
  for (int n = 1;; ++n) {
    const double E = std::pow(n * pi / (2.0 * a), 2);
    if (E >= e_max) return out;
    out.push_back({E, 1});
  }
}

inline std::vector<Level> box_neumann(double a, double e_max) {
  std::vector<Level> out{{0.0, 1}};
  for (int n = 1;; ++n) {
    const double E = std::pow(n * pi / (2.0 * a), 2);
    if (E >= e_max) return out;
    out.push_back({E, 1});
  }
}

inline std::vector<Level> box_periodic(double a, double e_max) {
  std::vector<Level> out{{0.0, 1}};
  for (int n = 1;; ++n) {
    const double E = std::pow(n * pi / a, 2);
    if (E >= e_max) return out;
    out.push_back({E, 2});
  }
}

inline std::vector<Level> box_anti_periodic(double a, double e_max) {
  std::vector<Level> out;
  for (int n = 0;; ++n) {
    const double E = std::pow((n + 0.5) * pi / a, 2);
    if (E >= e_max) return out;
    out.push_back({E, 2});
  }
}

/// Number of eigenvalues below x of the symmetric tridiagonal matrix (d, e),
/// e[i] coupling rows i and i + 1.
inline int sturm_count(const std::vector<double>& d, const std::vector<double>& e, double x) {
  int count = 0;
  double q = d[0] - x;
  if (q < 0) ++count;
  for (std::size_t i = 1; i < d.size(); ++i) {
    const double prev = q == 0.0 ? 1e-300 : q;
    q = d[i] - x - e[i - 1] * e[i - 1] / prev;
    if (q < 0) ++count;
  }
  return count;
}

/// Lowest `count` eigenvalues of -f'' + V f on [-a, a] with f(+-a) = 0, central
/// differences on n interior points, each eigenvalue bisected to machine precision.
inline std::vector<double> fd_dirichlet(const std::function<double(double)>& V, double a, int n, int count) {
  const double h = 2.0 * a / (n + 1);
  std::vector<double> d(n), e(n - 1, -1.0 / (h * h));
  double lo = 0.0, hi = 0.0;
  for (int i = 0; i < n; ++i) {
    d[i] = 2.0 / (h * h) + V(-a + (i + 1) * h);
    lo = std::min(lo, d[i] - 2.0 / (h * h));
    hi = std::max(hi, d[i] + 2.0 / (h * h));
  }
  std::vector<double> out;
  for (int k = 0; k < count; ++k) {
    double l = lo, r = hi;
    for (int it = 0; it < 200 && r - l > 1e-14 * std::max(1.0, std::abs(r)); ++it) {
      const double m = 0.5 * (l + r);
      (sturm_count(d, e, m) > k ? r : l) = m;
    }
    out.push_back(0.5 * (l + r));
  }
  return out;
}

/// Second-order Richardson extrapolation of fd_dirichlet from n and 2n + 1 points
/// (the grid spacing exactly halves).
inline std::vector<double> fd_dirichlet_richardson(const std::function<double(double)>& V, double a, int n,
                                                   int count) {
  const auto coarse = fd_dirichlet(V, a, n, count);
  const auto fine = fd_dirichlet(V, a, 2 * n + 1, count);
  std::vector<double> out;
  for (int k = 0; k < count; ++k) out.push_back((4.0 * fine[k] - coarse[k]) / 3.0);
  return out;
}

/// V = 0, f'(a) = alpha f(a), f'(-a) = gamma f(-a). Shooting in closed form from
/// f(-a) = 1, f'(-a) = gamma; the residual f'(a) - alpha f(a) vanishes at eigenvalues.
inline double robin_residual(double alpha, double gamma, double a, double E) {
  const double L = 2.0 * a;
  double f, df;
  if (E > 0) {
    const double k = std::sqrt(E);
    f = std::cos(k * L) + gamma * std::sin(k * L) / k;
    df = -k * std::sin(k * L) + gamma * std::cos(k * L);
  } else if (E < 0) {
    const double k = std::sqrt(-E);
    f = std::cosh(k * L) + gamma * std::sinh(k * L) / k;
    df = k * std::sinh(k * L) + gamma * std::cosh(k * L);
  } else {
    f = 1.0 + gamma * L;
    df = gamma;
  }
  return df - alpha * f;
}

/// Roots of robin_residual in (e_min, e_max): sign changes on a fine grid, then bisection.
inline std::vector<double> robin_levels(double alpha, double gamma, double a, double e_min, double e_max) {
  const auto r = [&](double E) { return robin_residual(alpha, gamma, a, E); };
  const int n = 20000;
  std::vector<double> out;
  double x0 = e_min, r0 = r(x0);
  for (int i = 1; i <= n; ++i) {
    const double x1 = e_min + (e_max - e_min) * i / n;
    const double r1 = r(x1);
    if (r0 == 0.0) {
      out.push_back(x0);
    } else if (r0 * r1 < 0.0) {
      double l = x0, h = x1, rl = r0;
      for (int it = 0; it < 200 && h - l > 1e-15 * std::max(1.0, std::abs(h)); ++it) {
        const double m = 0.5 * (l + h);
        const double rm = r(m);
        if ((rm < 0) == (rl < 0)) {
          l = m;
          rl = rm;
        } else {
          h = m;
        }
      }
      out.push_back(0.5 * (l + h));
    }
    x0 = x1;
    r0 = r1;
  }
  return out;
}

/// Even potential on [-a, a]: levels of one parity on the half interval [0, a], by fixed-step
/// RK4 shooting from x = 0 and bisection on the far-end condition. Even modes start from
/// (1, 0) and odd modes from (0, 1); `far_slope` selects f'(a) = 0 instead of f(a) = 0.
/// Jumps of V must fall on multiples of a / 4000.
inline std::vector<double> half_interval_levels(const std::function<double(double)>& V, double a, bool even,
                                                bool far_slope, double e_min, double e_max) {
  const int steps = 4000;
  const auto end_value = [&](double E) {
    const double h = a / steps;
    double f = even ? 1.0 : 0.0, g = even ? 0.0 : 1.0;
    const auto rhs = [&](double xx, double ff) { return (V(xx) - E) * ff; };
    // Step ends are sampled just inside the step, so jumps on grid nodes are one-sided.
    const double inset = 1e-9 * h;
    for (int i = 0; i < steps; ++i) {
      const double x = i * h;
      const double k1f = g, k1g = rhs(x + inset, f);
      const double k2f = g + 0.5 * h * k1g, k2g = rhs(x + 0.5 * h, f + 0.5 * h * k1f);
      const double k3f = g + 0.5 * h * k2g, k3g = rhs(x + 0.5 * h, f + 0.5 * h * k2f);
      const double k4f = g + h * k3g, k4g = rhs(x + h - inset, f + h * k3f);
      f += h / 6.0 * (k1f + 2.0 * k2f + 2.0 * k3f + k4f);
      g += h / 6.0 * (k1g + 2.0 * k2g + 2.0 * k3g + k4g);
    }
    return far_slope ? g : f;
  };
  const int n = 4000;
  std::vector<double> out;
  double x0 = e_min, r0 = end_value(x0);
  for (int i = 1; i <= n; ++i) {
    const double x1 = e_min + (e_max - e_min) * i / n;
    const double r1 = end_value(x1);
    if (r0 * r1 < 0.0) {
      double l = x0, h = x1, rl = r0;
      for (int it = 0; it < 200 && h - l > 1e-14 * std::max(1.0, std::abs(h)); ++it) {
        const double m = 0.5 * (l + h);
        const double rm = end_value(m);
        if ((rm < 0) == (rl < 0)) {
          l = m;
          rl = rm;
        } else {
          h = m;
        }
      }
      out.push_back(0.5 * (l + h));
    }
    x0 = x1;
    r0 = r1;
  }
  return out;
}

}  // namespace oracle
