#pragma once

// Independent reference computations for the test suites. Nothing here calls
// into the code paths it is used to check.

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "branchinv/bivar.hpp"
#include "branchinv/rational.hpp"

namespace oracle {

using branchinv::BivarPoly;
using branchinv::Coefficient;

/// Brute-force closure of a set of generators up to `limit`.
inline std::vector<bool> semigroup_members(const std::vector<int>& gens, int limit) {
  std::vector<bool> in(static_cast<std::size_t>(limit + 1), false);
  in[0] = true;
  for (int z = 1; z <= limit; ++z) {
    for (int g : gens) {
      if (g <= z && in[z - g]) {
        in[z] = true;
        break;
      }
    }
  }
  return in;
}

/// Conductor by gap enumeration: one past the largest gap.
inline int conductor_by_gaps(const std::vector<int>& gens, int limit) {
  const auto in = semigroup_members(gens, limit);
  int last_gap = -1;
  for (int z = 0; z <= limit; ++z) {
    if (!in[z]) last_gap = z;
  }
  return last_gap + 1;
}

/// Dense univariate coefficient vector of a polynomial in t, exact.
using Dense = std::vector<Coefficient>;

inline Dense dense_mul(const Dense& a, const Dense& b) {
  if (a.empty() || b.empty()) return {};
  Dense out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

inline Dense dense_pow(const Dense& a, int k) {
  Dense r{Coefficient(1)};
  for (int i = 0; i < k; ++i) r = dense_mul(r, a);
  return r;
}

/// Direct expansion of P(t^n, y(t)) as a plain polynomial in t.
inline Dense expand_at(const BivarPoly& p, int n, const Dense& y) {
  Dense out;
  for (const auto& [m, c] : p.terms()) {
    Dense term = dense_pow(y, m.second);
    Dense shifted(term.size() + static_cast<std::size_t>(n * m.first));
    for (std::size_t i = 0; i < term.size(); ++i) shifted[i + n * m.first] = c * term[i];
    if (out.size() < shifted.size()) out.resize(shifted.size());
    for (std::size_t i = 0; i < shifted.size(); ++i) out[i] += shifted[i];
  }
  return out;
}

inline int dense_order(const Dense& a) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) != 0) return static_cast<int>(i);
  }
  return -1;
}

/// Implicit equation of (t^n, p(t)) from power sums of the multiplication-by-p
/// matrix on Q[x][t]/(t^n - x) and Newton's identities.
inline BivarPoly implicitize_newton(int n, const std::map<int, Coefficient>& p) {
  using Mat = std::vector<std::vector<BivarPoly>>;
  // column k of M: p(t) * t^k reduced with t^n = x
  Mat mat(n, std::vector<BivarPoly>(n));
  for (int k = 0; k < n; ++k) {
    for (const auto& [e, c] : p) {
      const int total = e + k;
      mat[total % n][k] = mat[total % n][k] + BivarPoly::monomial(total / n, 0, c);
    }
  }
  auto matmul = [n](const Mat& a, const Mat& b) {
    Mat r(n, std::vector<BivarPoly>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) r[i][j] = r[i][j] + a[i][k] * b[k][j];
    return r;
  };
  std::vector<BivarPoly> power_sums(n + 1);
  Mat pw = mat;
  for (int k = 1; k <= n; ++k) {
    BivarPoly tr;
    for (int i = 0; i < n; ++i) tr = tr + pw[i][i];
    power_sums[k] = tr;
    if (k < n) pw = matmul(pw, mat);
  }
  // y^n + c_1 y^{n-1} + ... + c_n with k c_k = -(p_k + sum_{i<k} c_i p_{k-i})
  std::vector<BivarPoly> c(n + 1);
  for (int k = 1; k <= n; ++k) {
    BivarPoly acc = power_sums[k];
    for (int i = 1; i < k; ++i) acc = acc + c[i] * power_sums[k - i];
    c[k] = branchinv::make_rational(-1, k) * acc;
  }
  BivarPoly f = BivarPoly::monomial(0, n);
  for (int k = 1; k <= n; ++k) f = f + c[k] * BivarPoly::monomial(0, n - k);
  return f;
}

inline Coefficient random_rational(std::mt19937& rng, int span = 5) {
  std::uniform_int_distribution<int> num(-span, span);
  std::uniform_int_distribution<int> den(1, span);
  return branchinv::make_rational(num(rng), den(rng));
}

}  // namespace oracle
