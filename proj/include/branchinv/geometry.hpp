#pragma once

#include "branchinv/bivar.hpp"
#include "branchinv/parametrization.hpp"
#include "branchinv/semigroup.hpp"

namespace branchinv {

/// Contact order of two branches, measured in powers of x.
struct ContactOrder {
  bool infinite = false;
  Coefficient theta;

  static ContactOrder finite(const Coefficient& theta) { return {false, theta}; }
  static ContactOrder infinity() { return {true, Coefficient(0)}; }

  std::string to_string() const;

  friend bool operator==(const ContactOrder&, const ContactOrder&) = default;
};

/// Implicit equation of a polynomial branch (t^n, p(t)): the resultant in t of
/// t^n - x and y - p(t), monic of degree n in y. Throws NonPolynomialInput
/// for truncated branches.
BivarPoly implicitize(const Parametrization& phi);

/// A root of the Weierstrass polynomial f in the form (t^n, y(t)), n = deg_y f,
/// with y known below `precision`. The result is flagged polynomial when the
/// finite root found is exact.
Parametrization puiseux_parametrization(const BivarPoly& f, int precision);

/// Exchanges the roles of x and y: (t^n, a t^m + ...) with m < n becomes
/// (s^m, b s^n + ...). Needs a rational m-th root of a; the result is known
/// below roughly `precision`.
Parametrization swap_xy(const Parametrization& phi, int precision);

/// Divides f by its leading y-coefficient. Throws NotWeierstrass
/// when the leading y-coefficient is not a nonzero constant.
BivarPoly make_monic_y(const BivarPoly& f);

/// ord_t f(t^n, y(t)), which is I(C_f, C_phi).
int intersection_poly_param(const BivarPoly& f, const Parametrization& phi);

/// I(C_a, C_b). Implicitizes the branch of smaller multiplicity (the first on
/// a tie); truncated branches are cut at max(conductor + n, beta_g + 1) and the
/// result is guarded against the cut.
int intersection(const Parametrization& a, const Parametrization& b);

/// I(C_f, C_h) from cont(C_f, C_h) = theta and mult(C_h).
Coefficient intersection_from_contact(const CharData& cd_f, const Coefficient& theta, int mult_h);

/// Inverse of intersection_from_contact. Throws NotRealizable unless exactly
/// one range of theta is consistent with the data.
ContactOrder contact_from_intersection(const CharData& cd_f, long long intersection, int mult_h);

/// cont(C_a, C_b) through the intersection number.
ContactOrder contact(const Parametrization& a, const Parametrization& b);

}  // namespace branchinv
