#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "branchinv/rational.hpp"
#include "branchinv/series.hpp"

namespace branchinv {

/// Exponent pair (i, j) of the monomial x^i y^j.
using Monomial = std::pair<int, int>;

/// Polynomial in x and y with exact rational coefficients.
///
/// Terms are ordered lexicographically by (i, j); zero coefficients are never
/// stored.
class BivarPoly {
 public:
  using TermMap = std::map<Monomial, Coefficient>;

  BivarPoly() = default;
  explicit BivarPoly(TermMap terms);

  static BivarPoly monomial(int i, int j, const Coefficient& c = 1);
  static BivarPoly constant(const Coefficient& c) { return monomial(0, 0, c); }
  static BivarPoly x() { return monomial(1, 0); }
  static BivarPoly y() { return monomial(0, 1); }

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Coefficient coeff(int i, int j) const;

  /// Degree in y (-1 for the zero polynomial).
  int deg_y() const noexcept;
  int deg_x() const noexcept;

  /// Coefficient of y^j as a polynomial in x alone.
  BivarPoly y_coefficient(int j) const;

  /// Minimum of i*wx + j*wy over the support (-1 for the zero polynomial).
  int weighted_order(int wx, int wy) const noexcept;

  BivarPoly swap_xy() const;

  std::string to_string() const;

  friend bool operator==(const BivarPoly&, const BivarPoly&) = default;

 private:
  void prune();

  TermMap terms_;
};

BivarPoly operator+(const BivarPoly& a, const BivarPoly& b);
BivarPoly operator-(const BivarPoly& a, const BivarPoly& b);
BivarPoly operator-(const BivarPoly& a);
BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);
BivarPoly operator*(const Coefficient& c, const BivarPoly& a);
BivarPoly pow(const BivarPoly& a, int k);

/// a / b when b divides a exactly; throws CrossCheckFailed otherwise.
BivarPoly exact_divide(const BivarPoly& a, const BivarPoly& b);

/// Euclidean division by a polynomial monic in y: a = q*h + r with
/// deg_y r < deg_y h. Throws NotMonic when h is not monic in y.
std::pair<BivarPoly, BivarPoly> divmod_monic_y(const BivarPoly& a, const BivarPoly& h);

/// Evaluates P(xs, ys) exactly, with truncation propagated from the inputs.
TSeries substitute(const BivarPoly& p, const TSeries& xs, const TSeries& ys);

}  // namespace branchinv
