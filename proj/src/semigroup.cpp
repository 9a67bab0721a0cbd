#include "branchinv/semigroup.hpp"

#include <numeric>
#include <tuple>
#include <sstream>

#include "branchinv/errors.hpp"

namespace branchinv {

namespace {

std::string join(const std::vector<int>& xs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
  return os.str();
}

long long floor_mod(long long a, long long n) { return ((a % n) + n) % n; }

long long mod_inverse(long long a, long long n) {
  long long t0 = 0, t1 = 1, r0 = n, r1 = floor_mod(a, n);
  while (r1 != 0) {
    const long long q = r0 / r1;
    std::tie(t0, t1) = std::make_pair(t1, t0 - q * t1);
    std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
  }
  if (r0 != 1) {
    throw BranchError(ErrorKind::CrossCheckFailed,
                      std::to_string(a) + " is not invertible modulo " + std::to_string(n));
  }
  return floor_mod(t0, n);
}

}  // namespace

std::string CharData::to_string() const {
  std::ostringstream os;
  os << "K(" << join(beta) << "), e=(" << join(e) << "), Gamma=<" << join(v) << ">, conductor="
     << conductor;
  return os.str();
}

CharData char_data_from_beta(const std::vector<int>& beta) {
  if (beta.empty() || beta[0] < 1) throw BranchError(ErrorKind::Parse, "empty characteristic sequence");
  CharData cd;
  cd.beta = beta;
  cd.n = beta[0];
  cd.e.push_back(beta[0]);
  for (std::size_t j = 1; j < beta.size(); ++j) {
    if (beta[j] <= beta[j - 1]) {
      throw BranchError(ErrorKind::NotTransversal, "characteristic exponents must increase");
    }
    const int ej = std::gcd(cd.e.back(), beta[j]);
    if (ej == cd.e.back()) {
      throw BranchError(ErrorKind::Parse, "beta_" + std::to_string(j) + " does not lower the gcd");
    }
    cd.n_seq.push_back(cd.e.back() / ej);
    cd.e.push_back(ej);
  }
  if (cd.e.back() != 1) throw BranchError(ErrorKind::NotPrimitive, "gcd of characteristic sequence is not 1");
  cd.genus = static_cast<int>(beta.size()) - 1;
  cd.m = cd.genus >= 1 ? beta[1] : 0;
  cd.v = semigroup_generators(cd);
  cd.conductor = conductor(cd);
  return cd;
}

CharData char_sequence(const Parametrization& phi) {
  const int n = phi.n();
  const TSeries& y = phi.y();
  const OrderResult ord = y.order();
  if (n > 1) {
    if (!ord.is_known()) {
      if (phi.is_polynomial() || ord.value <= n) {
        throw BranchError(ErrorKind::NotTransversal, "y-series vanishes: " + phi.to_string());
      }
      throw BranchError(ErrorKind::PrecisionExhausted, "y-series is zero below its truncation");
    }
    if (ord.value <= n) {
      throw BranchError(ErrorKind::NotTransversal,
                        "ord y = " + std::to_string(ord.value) + " <= n = " + std::to_string(n));
    }
  }
  std::vector<int> beta{n};
  int e = n;
  for (const auto& [i, c] : y.terms()) {
    if (e == 1) break;
    if (i % e != 0) {
      beta.push_back(i);
      e = std::gcd(e, i);
    }
  }
  if (e != 1) {
    if (phi.is_polynomial()) {
      throw BranchError(ErrorKind::NotPrimitive, "parametrization " + phi.to_string() + " is not primitive");
    }
    throw BranchError(ErrorKind::PrecisionExhausted,
                      "gcd still " + std::to_string(e) + " below truncation t^" + std::to_string(y.trunc()));
  }
  return char_data_from_beta(beta);
}

std::vector<int> semigroup_generators(const CharData& cd) {
  std::vector<int> v;
  if (cd.beta.empty()) return v;
  v.push_back(cd.beta[0]);
  if (cd.beta.size() > 1) v.push_back(cd.beta[1]);
  for (std::size_t j = 2; j < cd.beta.size(); ++j) {
    v.push_back(cd.n_seq[j - 2] * v[j - 1] + cd.beta[j] - cd.beta[j - 1]);
  }
  return v;
}

int conductor(const CharData& cd) {
  int mu = 0;
  for (int i = 1; i <= cd.genus; ++i) mu += (cd.n_seq[i - 1] - 1) * cd.v[i];
  return mu - (cd.v[0] - 1);
}

StandardRep standard_rep(long long z, const CharData& cd) {
  StandardRep rep;
  rep.s.assign(static_cast<std::size_t>(cd.genus), 0);
  long long r = z;
  for (int i = cd.genus; i >= 1; --i) {
    const long long ei = cd.e[i];
    const long long ni = cd.n_seq[i - 1];
    const long long vi = cd.v[i];
    const long long si = floor_mod((r / ei) % ni * mod_inverse((vi / ei) % ni, ni), ni);
    rep.s[i - 1] = static_cast<int>(si);
    r -= si * vi;
  }
  rep.s0 = r / cd.n;
  return rep;
}

bool contains(long long z, const CharData& cd) { return standard_rep(z, cd).s0 >= 0; }

}  // namespace branchinv
