#pragma once

#include <string>

#include "branchinv/series.hpp"

namespace branchinv {

/// A branch given as (t^n, y(t)).
///
/// When `polynomial` is set, y(t) is exactly the finite sum of its stored
/// terms (as in a branch file); truncation can then be raised at will.
/// Otherwise y is only known below y.trunc() (e.g. a Newton-Puiseux root).
class Parametrization {
 public:
  Parametrization(int n, TSeries y, bool polynomial);

  static Parametrization from_terms(int n, const TSeries::TermMap& terms);

  int n() const noexcept { return n_; }
  const TSeries& y() const noexcept { return y_; }
  bool is_polynomial() const noexcept { return polynomial_; }
  int trunc() const noexcept { return y_.trunc(); }

  Coefficient coeff(int i) const { return y_.coeff(i); }

  /// x-component t^n as a series with the same tag.
  TSeries x_series() const;

  /// y(t) known below t. Polynomial branches can be extended arbitrarily;
  /// truncated branches refuse to report beyond their own trunc.
  TSeries y_series(int t) const;

  /// Same branch with precision t; throws PrecisionExhausted when t exceeds
  /// the known precision of a non-polynomial branch.
  Parametrization with_precision(int t) const;

  /// Exact polynomial branch made of the terms below t.
  Parametrization truncated_polynomial(int t) const;

  std::string to_string() const;

  friend bool operator==(const Parametrization&, const Parametrization&) = default;

 private:
  int n_;
  TSeries y_;
  bool polynomial_;
};

}  // namespace branchinv
