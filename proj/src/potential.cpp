#include "saext/potential.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "saext/errors.hpp"

namespace saext {

namespace {

constexpr int kParityGrid = 1001;

void require_half_width(double a) {
  if (!(std::isfinite(a) && a > 0.0)) {
    throw ParameterError("half-width a must be positive and finite, got " + std::to_string(a));
  }
}

void require_finite(double v, const char* name) {
  if (!std::isfinite(v)) throw ParameterError(std::string(name) + " must be finite");
}

}  // namespace

double horner(std::span<const double> coefficients, double x) noexcept {
  double acc = 0.0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Potential Potential::zero(double a) {
  require_half_width(a);
  return Potential(PotentialKind::zero, a);
}

Potential Potential::finite_well(double a, double depth, double half_width) {
  require_half_width(a);
  require_finite(depth, "depth");
  if (!(std::isfinite(half_width) && half_width > 0.0)) {
    throw ParameterError("finite-well half_width must be positive and finite");
  }
  Potential p(PotentialKind::finite_well, a);
  p.params_ = {depth, half_width};
  if (half_width >= a) {
    p.pieces_.push_back({-a, a, {depth}});
  } else {
    p.pieces_.push_back({-a, -half_width, {0.0}});
    p.pieces_.push_back({-half_width, half_width, {depth}});
    p.pieces_.push_back({half_width, a, {0.0}});
    p.breakpoints_ = {-half_width, half_width};
  }
  return p;
}

Potential Potential::harmonic(double a, double coefficient) {
  require_half_width(a);
  require_finite(coefficient, "coefficient");
  Potential p(PotentialKind::harmonic, a);
  p.params_ = {coefficient};
  return p;
}

Potential Potential::cosine(double a, double amplitude, double wavenumber) {
  require_half_width(a);
  require_finite(amplitude, "amplitude");
  require_finite(wavenumber, "wavenumber");
  Potential p(PotentialKind::cosine, a);
  p.params_ = {amplitude, wavenumber};
  return p;
}

Potential Potential::polynomial(double a, std::vector<double> coefficients) {
  require_half_width(a);
  for (double c : coefficients) require_finite(c, "polynomial coefficient");
  Potential p(PotentialKind::polynomial, a);
  p.params_ = std::move(coefficients);
  return p;
}

Potential Potential::piecewise(double a, std::vector<PolynomialPiece> pieces) {
  require_half_width(a);
  if (pieces.empty()) throw ParameterError("piecewise potential needs at least one piece");
  const double eps = 1e-12 * a;
  if (std::abs(pieces.front().from + a) > eps || std::abs(pieces.back().to - a) > eps) {
    throw ParameterError("piecewise pieces must start at -a and end at a");
  }
  Potential p(PotentialKind::piecewise, a);
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    auto& piece = pieces[i];
    if (!(piece.to > piece.from)) throw ParameterError("piecewise piece has empty sub-interval");
    for (double c : piece.coefficients) require_finite(c, "piece coefficient");
    if (i > 0) {
      if (std::abs(piece.from - pieces[i - 1].to) > eps) {
        throw ParameterError("piecewise pieces must be contiguous");
      }
      piece.from = pieces[i - 1].to;
      p.breakpoints_.push_back(piece.from);
    }
  }
  pieces.front().from = -a;
  pieces.back().to = a;
  p.pieces_ = std::move(pieces);
  return p;
}

std::size_t Potential::segment_of(double x) const noexcept {
  // Right-continuous: a breakpoint belongs to the segment on its right.
  return static_cast<std::size_t>(std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x) -
                                  breakpoints_.begin());
}

double Potential::evaluate_in_segment(std::size_t segment, double x) const noexcept {
  switch (kind_) {
    case PotentialKind::zero:
      return 0.0;
    case PotentialKind::harmonic:
      return params_[0] * x * x;
    case PotentialKind::cosine:
      return params_[0] * std::cos(params_[1] * x);
    case PotentialKind::polynomial:
      return horner(params_, x);
    case PotentialKind::finite_well:
    case PotentialKind::piecewise:
      return horner(pieces_[segment].coefficients, x);
  }
  return 0.0;
}

double Potential::evaluate(double x) const {
  if (!(x >= -a_ && x <= a_)) {
    throw DomainError("x = " + std::to_string(x) + " outside [-a, a]");
  }
  return evaluate_in_segment(segment_of(x), x);
}

bool Potential::declared_even() const noexcept {
  switch (kind_) {
    case PotentialKind::zero:
    case PotentialKind::harmonic:
    case PotentialKind::cosine:
    case PotentialKind::finite_well:
      return true;
    default:
      return false;
  }
}

double Potential::sup_norm() const {
  double m = 0.0;
  for (int i = 0; i < kParityGrid; ++i) {
    const double x = -a_ + 2.0 * a_ * i / (kParityGrid - 1);
    m = std::max(m, std::abs(evaluate(x)));
  }
  for (std::size_t s = 0; s < segment_count(); ++s) {
    const double lo = s == 0 ? -a_ : breakpoints_[s - 1];
    const double hi = s + 1 == segment_count() ? a_ : breakpoints_[s];
    m = std::max({m, std::abs(evaluate_in_segment(s, lo)), std::abs(evaluate_in_segment(s, hi))});
  }
  return m;
}

bool is_even(const Potential& p, double tol) {
  if (p.declared_even()) return true;
  const double a = p.half_width();
  const auto bps = p.breakpoints();
  const auto on_breakpoint = [&](double x) {
    return std::any_of(bps.begin(), bps.end(),
                       [&](double b) { return std::abs(b - x) <= 1e-14 * a; });
  };
  for (int i = 0; i < kParityGrid; ++i) {
    const double x = -a + 2.0 * a * i / (kParityGrid - 1);
    // The right-limit convention breaks exact parity on the breakpoints themselves.
    if (on_breakpoint(x) || on_breakpoint(-x)) continue;
    if (std::abs(p.evaluate(x) - p.evaluate(-x)) > tol) return false;
  }
  return true;
}

}  // namespace saext
