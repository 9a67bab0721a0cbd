#include "branchinv/expansion.hpp"

#include <string>

#include "branchinv/errors.hpp"
#include "branchinv/geometry.hpp"
#include "branchinv/zariski.hpp"

namespace branchinv {

std::vector<BivarPoly> h_adic_expansion(const BivarPoly& f, const BivarPoly& h) {
  std::vector<BivarPoly> out;
  BivarPoly rest = f;
  do {
    auto [quot, rem] = divmod_monic_y(rest, h);
    out.push_back(std::move(rem));
    rest = std::move(quot);
  } while (!rest.is_zero());
  return out;
}

ExpansionResult zariski_decomposition(const BivarPoly& f, const Parametrization& h_phi, const CharData& cd_f,
                                      int lambda) {
  if (cd_f.genus < 1) {
    throw BranchError(ErrorKind::WrongEquisingularityClass, "decomposition needs a singular branch");
  }
  const int n1 = cd_f.n1();
  const int m1 = cd_f.m1();
  const int e1 = cd_f.e1();
  if (!is_in_B(h_phi, n1, m1)) {
    throw BranchError(ErrorKind::WitnessMismatch,
                      h_phi.to_string() + " is not equivalent to y^" + std::to_string(n1) + " = x^" +
                          std::to_string(m1));
  }

  const int value = (n1 - 1) * cd_f.m + lambda;
  ExpansionResult r;
  r.checks.intersection_f_h = intersection_poly_param(f, h_phi);
  if (r.checks.intersection_f_h != value) {
    throw BranchError(ErrorKind::WitnessMismatch, "I(f, h) = " + std::to_string(r.checks.intersection_f_h) +
                                                      ", expected " + std::to_string(value));
  }

  r.h = implicitize(h_phi);
  std::vector<BivarPoly> A = h_adic_expansion(f, r.h);
  if (static_cast<int>(A.size()) != e1 + 1 || A.back() != BivarPoly::constant(1)) {
    throw BranchError(ErrorKind::NotWeierstrass,
                      "f is not of the form h^" + std::to_string(e1) + " + lower terms in h");
  }
  A.pop_back();
  r.A = std::move(A);

  r.q = -1;
  for (int q = 0; q < n1; ++q) {
    if ((value - q * m1) % n1 == 0) {
      r.q = q;
      break;
    }
  }
  r.p = (value - r.q * m1) / n1;
  if (r.q < 0 || r.p < 0) {
    throw BranchError(ErrorKind::WitnessMismatch, std::to_string(value) + " is not p n1 + q m1 with p, q >= 0");
  }
  r.checks.weight = value;

  const BivarPoly& a0 = r.A.front();
  r.c = a0.coeff(r.p, r.q);
  if (sgn(r.c) == 0) {
    throw BranchError(ErrorKind::ZeroLeadingC, "A_0 has no x^" + std::to_string(r.p) + " y^" + std::to_string(r.q));
  }
  const BivarPoly lead = BivarPoly::monomial(r.p, r.q, r.c);
  r.h1 = a0 - lead;

  r.checks.intersection_a0_h = intersection_poly_param(a0, h_phi);
  if (r.checks.intersection_a0_h != value) {
    throw BranchError(ErrorKind::CrossCheckFailed, "I(A_0, h) = " + std::to_string(r.checks.intersection_a0_h));
  }
  for (const auto& [mono, c] : r.h1.terms()) {
    if (mono.first * n1 + mono.second * m1 <= value || mono.second >= n1) {
      throw BranchError(ErrorKind::CrossCheckFailed, "h1 carries a term of weight at most " + std::to_string(value));
    }
  }
  if (!r.h1.is_zero()) {
    r.checks.intersection_h_h1 = intersection_poly_param(r.h1, h_phi);
    if (*r.checks.intersection_h_h1 <= value) {
      throw BranchError(ErrorKind::CrossCheckFailed, "I(h, h1) does not exceed " + std::to_string(value));
    }
  }

  BivarPoly rebuilt = pow(r.h, e1) + lead + r.h1;
  for (int k = 1; k < e1; ++k) rebuilt = rebuilt + r.A[static_cast<std::size_t>(k)] * pow(r.h, k);
  r.checks.reconstruction = rebuilt == f;
  if (!r.checks.reconstruction) throw BranchError(ErrorKind::CrossCheckFailed, "expansion does not rebuild f");
  return r;
}

}  // namespace branchinv
