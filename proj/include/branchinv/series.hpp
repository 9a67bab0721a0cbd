#pragma once

#include <map>
#include <string>

#include "branchinv/rational.hpp"

namespace branchinv {

/// Truncation value meaning "known exactly": no information is missing at any
/// exponent. Arithmetic saturates at this bound.
inline constexpr int kExact = 1 << 28;

int sat_add(int a, int b) noexcept;

/// Result of an order computation on a truncated series.
struct OrderResult {
  enum class Kind { Known, AtLeast };
  Kind kind;
  int value;

  static OrderResult known(int k) { return {Kind::Known, k}; }
  static OrderResult at_least(int t) { return {Kind::AtLeast, t}; }

  bool is_known() const noexcept { return kind == Kind::Known; }
  // Exact order when known, otherwise the truncation bound (a lower bound).
  int lower_bound() const noexcept { return value; }

  friend bool operator==(const OrderResult&, const OrderResult&) = default;
};

/// Univariate power series over the rationals, known exactly below trunc().
///
/// Terms at exponents >= trunc() are unknown; zero coefficients are never
/// stored. A trunc of kExact denotes a polynomial known to all orders.
class TSeries {
 public:
  using TermMap = std::map<int, Coefficient>;

  TSeries() = default;
  TSeries(std::string tag, int trunc);
  TSeries(std::string tag, TermMap terms, int trunc);

  static TSeries monomial(const std::string& tag, int exponent, const Coefficient& c,
                          int trunc = kExact);
  static TSeries constant(const std::string& tag, const Coefficient& c, int trunc = kExact);
  static TSeries variable(const std::string& tag, int trunc = kExact);

  const std::string& tag() const noexcept { return tag_; }
  int trunc() const noexcept { return trunc_; }
  bool is_exact() const noexcept { return trunc_ >= kExact; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Coefficient at k; throws PrecisionExhausted when k >= trunc().
  Coefficient coeff(int k) const;

  OrderResult order() const;

  /// Largest stored exponent, or -1 for the zero series.
  int max_exponent() const noexcept;

  /// Drops information at or beyond t (new trunc = min(t, trunc())).
  TSeries truncated(int t) const;

  TSeries retagged(const std::string& tag) const;

  /// Replaces the coefficient at k (k < trunc()).
  TSeries with_coeff(int k, const Coefficient& c) const;

  std::string to_string() const;

  friend bool operator==(const TSeries& a, const TSeries& b) {
    return a.tag_ == b.tag_ && a.trunc_ == b.trunc_ && a.terms_ == b.terms_;
  }

 private:
  void prune();

  std::string tag_ = "t";
  TermMap terms_;
  int trunc_ = kExact;
};

TSeries operator+(const TSeries& a, const TSeries& b);
TSeries operator-(const TSeries& a, const TSeries& b);
TSeries operator-(const TSeries& a);
TSeries operator*(const TSeries& a, const TSeries& b);
TSeries operator*(const Coefficient& c, const TSeries& a);

TSeries add(const TSeries& a, const TSeries& b);
TSeries mul(const TSeries& a, const TSeries& b);
TSeries pow_int(const TSeries& a, int k);

/// Multiplies by c * tag^shift. Negative shifts require the series to vanish
/// below -shift and lower the truncation accordingly.
TSeries mul_monomial(const TSeries& a, int shift, const Coefficient& c = 1);

/// Multiplicative inverse of a series with nonzero constant term.
TSeries invert_unit(const TSeries& s);

/// s^alpha for a series with constant term exactly one (principal branch,
/// binomial-series coefficients).
TSeries pow_rational_unit(const TSeries& s, const Coefficient& alpha);

/// Principal n-th root of a series with constant term exactly one.
TSeries nth_root_unit(const TSeries& s, int n);

/// Composition s(rho(u)) for a parameter change rho with order exactly one.
TSeries reparametrize(const TSeries& s, const TSeries& rho);

/// Compositional inverse of a series of order exactly one.
TSeries revert(const TSeries& s);

}  // namespace branchinv
