#pragma once

#include <string>
#include <vector>

#include "branchinv/parametrization.hpp"

namespace branchinv {

/// Characteristic data of a plane branch in transversal coordinates.
///
/// beta = (beta_0, ..., beta_g), e_j = gcd(e_{j-1}, beta_j) with e_0 = n,
/// n_seq[i-1] = n_i = e_{i-1}/e_i, v the minimal generators of the value
/// semigroup and conductor its conductor.
struct CharData {
  int n = 0;
  int m = 0;
  std::vector<int> beta;
  std::vector<int> e;
  std::vector<int> n_seq;
  std::vector<int> v;
  int conductor = 0;
  int genus = 0;

  int e1() const { return e.at(1); }
  int n1() const { return n_seq.at(0); }
  int m1() const { return m / e1(); }
  // n_0 = 1, n_q = n_seq[q-1]
  int n_at(int q) const { return q == 0 ? 1 : n_seq.at(static_cast<std::size_t>(q - 1)); }

  std::string to_string() const;

  friend bool operator==(const CharData&, const CharData&) = default;
};

/// z = s0 * v_0 + sum_i s[i-1] * v_i with 0 <= s_i < n_i.
struct StandardRep {
  long long s0 = 0;
  std::vector<int> s;

  friend bool operator==(const StandardRep&, const StandardRep&) = default;
};

/// Reads beta and e off a Puiseux parametrization and derives the rest.
CharData char_sequence(const Parametrization& phi);

/// Builds the full record from a characteristic sequence (beta_0 < beta_1 < ...).
CharData char_data_from_beta(const std::vector<int>& beta);

std::vector<int> semigroup_generators(const CharData& cd);
int conductor(const CharData& cd);

StandardRep standard_rep(long long z, const CharData& cd);
bool contains(long long z, const CharData& cd);

}  // namespace branchinv
