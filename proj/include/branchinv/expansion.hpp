#pragma once

#include <optional>
#include <vector>

#include "branchinv/bivar.hpp"
#include "branchinv/parametrization.hpp"
#include "branchinv/semigroup.hpp"

namespace branchinv {

/// Equalities verified while building a decomposition.
struct ExpansionChecks {
  bool reconstruction = false;
  int intersection_f_h = 0;
  int intersection_a0_h = 0;
  // I(h, h1); nullopt when h1 = 0
  std::optional<int> intersection_h_h1;
  // p n1 + q m1
  int weight = 0;
};

/// f = h^{e1} + sum_{k=1}^{e1-1} A_k h^k + c x^p y^q + h1.
struct ExpansionResult {
  std::vector<BivarPoly> A;  // A_0 .. A_{e1-1}
  BivarPoly h;
  Coefficient c;
  int p = 0;
  int q = 0;
  BivarPoly h1;
  ExpansionChecks checks;
};

/// f = sum_k A_k h^k with deg_y A_k < deg_y h, by repeated division by h.
/// Throws NotMonic unless h is monic in y of positive degree.
std::vector<BivarPoly> h_adic_expansion(const BivarPoly& f, const BivarPoly& h);

/// Decomposition of f along a branch h_phi equivalent to y^{n1} = x^{m1}
/// with I(f, h_phi) = (n1 - 1)m + lambda.
ExpansionResult zariski_decomposition(const BivarPoly& f, const Parametrization& h_phi, const CharData& cd_f,
                                      int lambda);

}  // namespace branchinv
