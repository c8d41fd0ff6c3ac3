#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace saext {

enum class PotentialKind { zero, finite_well, harmonic, cosine, polynomial, piecewise };

/// One polynomial piece of a piecewise potential, valid on [from, to).
struct PolynomialPiece {
  double from = 0.0;
  double to = 0.0;
  std::vector<double> coefficients;  // c0 + c1 x + c2 x^2 + ...
};

/// Real, bounded potential V(x) on [-a, a] in units hbar = 2m = 1.
///
/// The interval is split into segments at the breakpoints of the potential;
/// within a segment V is smooth, and `evaluate_in_segment` gives the smooth
/// continuation up to both segment ends. At a breakpoint `evaluate` returns the
/// right limit.
class Potential {
 public:
  static Potential zero(double a);
  /// V = depth on |x| < half_width, 0 elsewhere.
  static Potential finite_well(double a, double depth, double half_width);
  /// V = coefficient * x^2.
  static Potential harmonic(double a, double coefficient);
  /// V = amplitude * cos(wavenumber * x).
  static Potential cosine(double a, double amplitude, double wavenumber);
  static Potential polynomial(double a, std::vector<double> coefficients);
  /// Pieces must tile [-a, a] in increasing order.
  static Potential piecewise(double a, std::vector<PolynomialPiece> pieces);

  PotentialKind kind() const noexcept { return kind_; }
  double half_width() const noexcept { return a_; }
  std::span<const double> params() const noexcept { return params_; }
  std::span<const PolynomialPiece> pieces() const noexcept { return pieces_; }

  double evaluate(double x) const;

  /// Interior breakpoints in increasing order.
  std::span<const double> breakpoints() const noexcept { return breakpoints_; }
  std::size_t segment_count() const noexcept { return breakpoints_.size() + 1; }
  std::size_t segment_of(double x) const noexcept;
  double evaluate_in_segment(std::size_t segment, double x) const noexcept;

  /// True for the kinds that are even by construction.
  bool declared_even() const noexcept;
  /// max |V| over the parity grid and all breakpoints.
  double sup_norm() const;

 private:
  Potential(PotentialKind kind, double a) : kind_(kind), a_(a) {}

  PotentialKind kind_;
  double a_;
  std::vector<double> params_;
  std::vector<PolynomialPiece> pieces_;
  std::vector<double> breakpoints_;
};

/// max |V(x) - V(-x)| <= tol over a 1001-point grid; declared-even kinds short-circuit.
bool is_even(const Potential& p, double tol);

double horner(std::span<const double> coefficients, double x) noexcept;

}  // namespace saext
