#include "branchinv/series.hpp"

#include <algorithm>
#include <sstream>
#include <utility>
#include <vector>

#include "branchinv/errors.hpp"

namespace branchinv {

int sat_add(int a, int b) noexcept {
  const long long s = static_cast<long long>(a) + b;
  if (s >= kExact) return kExact;
  return static_cast<int>(s);
}

TSeries::TSeries(std::string tag, int trunc) : tag_(std::move(tag)), trunc_(std::min(trunc, kExact)) {}

TSeries::TSeries(std::string tag, TermMap terms, int trunc)
    : tag_(std::move(tag)), terms_(std::move(terms)), trunc_(std::min(trunc, kExact)) {
  prune();
}

void TSeries::prune() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->first < 0) throw BranchError(ErrorKind::Parse, "negative exponent in power series");
    if (it->first >= trunc_ || sgn(it->second) == 0) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
}

TSeries TSeries::monomial(const std::string& tag, int exponent, const Coefficient& c, int trunc) {
  return TSeries(tag, TermMap{{exponent, c}}, trunc);
}

TSeries TSeries::constant(const std::string& tag, const Coefficient& c, int trunc) {
  return monomial(tag, 0, c, trunc);
}

TSeries TSeries::variable(const std::string& tag, int trunc) { return monomial(tag, 1, 1, trunc); }

Coefficient TSeries::coeff(int k) const {
  if (k >= trunc_) {
    throw BranchError(ErrorKind::PrecisionExhausted,
                      "coefficient " + std::to_string(k) + " requested beyond truncation " +
                          std::to_string(trunc_));
  }
  auto it = terms_.find(k);
  return it == terms_.end() ? Coefficient(0) : it->second;
}

OrderResult TSeries::order() const {
  if (terms_.empty()) return OrderResult::at_least(trunc_);
  return OrderResult::known(terms_.begin()->first);
}

int TSeries::max_exponent() const noexcept {
  return terms_.empty() ? -1 : terms_.rbegin()->first;
}

TSeries TSeries::truncated(int t) const {
  TSeries r = *this;
  r.trunc_ = std::min(trunc_, t);
  r.terms_.erase(r.terms_.lower_bound(r.trunc_), r.terms_.end());
  return r;
}

TSeries TSeries::retagged(const std::string& tag) const {
  TSeries r = *this;
  r.tag_ = tag;
  return r;
}

TSeries TSeries::with_coeff(int k, const Coefficient& c) const {
  if (k >= trunc_) {
    throw BranchError(ErrorKind::PrecisionExhausted, "cannot set a coefficient beyond truncation");
  }
  TSeries r = *this;
  if (sgn(c) == 0) {
    r.terms_.erase(k);
  } else {
    r.terms_[k] = c;
  }
  return r;
}

std::string TSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool neg = sgn(c) < 0;
    const Coefficient mag = neg ? Coefficient(-c) : c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1;
    if (e == 0) {
      os << branchinv::to_string(mag);
      continue;
    }
    if (!unit) os << branchinv::to_string(mag) << "*";
    os << tag_;
    if (e != 1) os << "^" << e;
  }
  if (!is_exact()) {
    os << (first ? "" : " + ") << "O(" << tag_ << "^" << trunc_ << ")";
  } else if (first) {
    os << "0";
  }
  return os.str();
}

namespace {

void require_same_tag(const TSeries& a, const TSeries& b) {
  if (a.tag() != b.tag()) {
    throw BranchError(ErrorKind::TagMismatch, "series in '" + a.tag() + "' and '" + b.tag() + "'");
  }
}

void require_finite(const TSeries& s, const char* op) {
  if (s.is_exact()) {
    throw BranchError(ErrorKind::PrecisionExhausted,
                      std::string(op) + " of an exact non-polynomial result needs a finite truncation");
  }
}

}  // namespace

TSeries add(const TSeries& a, const TSeries& b) {
  require_same_tag(a, b);
  const int t = std::min(a.trunc(), b.trunc());
  TSeries::TermMap terms;
  for (const auto& [e, c] : a.terms()) {
    if (e < t) terms[e] = c;
  }
  for (const auto& [e, c] : b.terms()) {
    if (e < t) terms[e] += c;
  }
  return TSeries(a.tag(), std::move(terms), t);
}

TSeries operator+(const TSeries& a, const TSeries& b) { return add(a, b); }

TSeries operator-(const TSeries& a) {
  TSeries::TermMap terms;
  for (const auto& [e, c] : a.terms()) terms[e] = -c;
  return TSeries(a.tag(), std::move(terms), a.trunc());
}

TSeries operator-(const TSeries& a, const TSeries& b) { return add(a, -b); }

TSeries operator*(const Coefficient& c, const TSeries& a) { return mul_monomial(a, 0, c); }

TSeries mul(const TSeries& a, const TSeries& b) {
  require_same_tag(a, b);
  const int oa = a.order().lower_bound();
  const int ob = b.order().lower_bound();
  const int t = std::min(sat_add(a.trunc(), ob), sat_add(b.trunc(), oa));
  if (a.is_zero() || b.is_zero()) return TSeries(a.tag(), t);

  const int top = std::min(t, a.max_exponent() + b.max_exponent() + 1);
  std::vector<Coefficient> acc(static_cast<std::size_t>(top));
  std::vector<char> touched(static_cast<std::size_t>(top), 0);
  for (const auto& [ea, ca] : a.terms()) {
    if (ea + ob >= top) break;
    for (const auto& [eb, cb] : b.terms()) {
      const int e = ea + eb;
      if (e >= top) break;
      acc[e] += ca * cb;
      touched[e] = 1;
    }
  }
  TSeries::TermMap terms;
  for (int e = 0; e < top; ++e) {
    if (touched[e] && sgn(acc[e]) != 0) terms.emplace_hint(terms.end(), e, std::move(acc[e]));
  }
  return TSeries(a.tag(), std::move(terms), t);
}

TSeries operator*(const TSeries& a, const TSeries& b) { return mul(a, b); }

TSeries pow_int(const TSeries& a, int k) {
  if (k < 0) throw BranchError(ErrorKind::NotAUnit, "negative power requested");
  TSeries result = TSeries::constant(a.tag(), 1);
  TSeries base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    k >>= 1;
    if (k > 0) base = mul(base, base);
  }
  return result;
}

TSeries mul_monomial(const TSeries& a, int shift, const Coefficient& c) {
  if (sgn(c) == 0) return TSeries(a.tag(), kExact);
  if (shift < 0) {
    const int need = -shift;
    if (a.trunc() < need || (!a.is_zero() && a.order().value < need)) {
      throw BranchError(ErrorKind::NotAUnit, "division by " + a.tag() + "^" + std::to_string(need) +
                                                 " of a series that does not vanish to that order");
    }
  }
  TSeries::TermMap terms;
  for (const auto& [e, v] : a.terms()) terms.emplace_hint(terms.end(), e + shift, v * c);
  const int t = a.is_exact() ? kExact : a.trunc() + shift;
  return TSeries(a.tag(), std::move(terms), t);
}

TSeries invert_unit(const TSeries& s) {
  const OrderResult ord = s.order();
  if (!ord.is_known() || ord.value != 0) {
    throw BranchError(ErrorKind::NotAUnit, "series " + s.to_string() + " has no constant term");
  }
  const Coefficient inv0 = 1 / s.coeff(0);
  if (s.terms().size() == 1) return TSeries::constant(s.tag(), inv0, s.trunc());
  require_finite(s, "inversion");

  const int t = s.trunc();
  std::vector<Coefficient> r(static_cast<std::size_t>(t));
  r[0] = inv0;
  for (int k = 1; k < t; ++k) {
    Coefficient acc;
    for (auto it = std::next(s.terms().begin()); it != s.terms().end() && it->first <= k; ++it) {
      acc += it->second * r[k - it->first];
    }
    r[k] = -inv0 * acc;
  }
  TSeries::TermMap terms;
  for (int k = 0; k < t; ++k) {
    if (sgn(r[k]) != 0) terms.emplace_hint(terms.end(), k, std::move(r[k]));
  }
  return TSeries(s.tag(), std::move(terms), t);
}

TSeries pow_rational_unit(const TSeries& s, const Coefficient& alpha) {
  if (s.trunc() == 0 || s.coeff(0) != 1) {
    throw BranchError(ErrorKind::ConstantTermNotOne, "constant term of " + s.to_string() + " is not 1");
  }
  if (s.terms().size() == 1) return TSeries::constant(s.tag(), 1, s.trunc());
  require_finite(s, "rational power");

  // J. C. P. Miller recurrence: k b_k = sum_{j=1}^{k} ((alpha + 1) j - k) a_j b_{k-j}.
  const int t = s.trunc();
  std::vector<Coefficient> b(static_cast<std::size_t>(t));
  b[0] = 1;
  const Coefficient alpha1 = alpha + 1;
  for (int k = 1; k < t; ++k) {
    Coefficient acc;
    for (auto it = std::next(s.terms().begin()); it != s.terms().end() && it->first <= k; ++it) {
      const int j = it->first;
      Coefficient w = alpha1 * j - k;
      acc += w * it->second * b[k - j];
    }
    b[k] = acc / k;
  }
  TSeries::TermMap terms;
  for (int k = 0; k < t; ++k) {
    if (sgn(b[k]) != 0) terms.emplace_hint(terms.end(), k, std::move(b[k]));
  }
  return TSeries(s.tag(), std::move(terms), t);
}

TSeries nth_root_unit(const TSeries& s, int n) {
  if (n <= 0) throw BranchError(ErrorKind::ConstantTermNotOne, "root index must be positive");
  return pow_rational_unit(s, make_rational(1, n));
}

namespace {

void require_order_one(const TSeries& rho) {
  const OrderResult o = rho.order();
  if (!o.is_known() || o.value != 1) {
    throw BranchError(ErrorKind::InvalidParameterChange,
                      "parameter change " + rho.to_string() + " does not have order 1");
  }
}

}  // namespace

TSeries reparametrize(const TSeries& s, const TSeries& rho) {
  require_order_one(rho);
  const int cap = s.trunc();
  TSeries acc(rho.tag(), cap);
  if (s.is_zero()) return acc;
  if (s.terms().begin()->first == 0) {
    acc = acc + TSeries::constant(rho.tag(), s.terms().begin()->second);
  }
  TSeries power = TSeries::constant(rho.tag(), 1);
  int k = 0;
  for (const auto& [e, c] : s.terms()) {
    if (e == 0) continue;
    while (k < e) {
      power = mul(power, rho).truncated(cap);
      ++k;
    }
    acc = acc + c * power;
  }
  return acc;
}

TSeries revert(const TSeries& s) {
  require_order_one(s);
  const Coefficient lead = s.coeff(1);
  if (s.terms().size() == 1) {
    return TSeries::monomial(s.tag(), 1, 1 / lead, s.trunc());
  }
  require_finite(s, "series reversion");
  // Lagrange inversion: [u^k] rho = (1/k) [t^{k-1}] (s/t)^{-k}.
  const int t = s.trunc();
  const TSeries w = mul_monomial(s, -1);
  const TSeries winv = invert_unit(w);
  TSeries::TermMap terms;
  TSeries power = TSeries::constant(s.tag(), 1);
  for (int k = 1; k < t; ++k) {
    power = mul(power, winv).truncated(t - 1);
    const Coefficient c = power.coeff(k - 1) / k;
    if (sgn(c) != 0) terms.emplace(k, c);
  }
  return TSeries(s.tag(), std::move(terms), t);
}

}  // namespace branchinv
