#include "branchinv/bivar.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "branchinv/errors.hpp"

namespace branchinv {

BivarPoly::BivarPoly(TermMap terms) : terms_(std::move(terms)) { prune(); }

void BivarPoly::prune() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->first.first < 0 || it->first.second < 0) {
      throw BranchError(ErrorKind::Parse, "negative exponent in polynomial");
    }
    if (sgn(it->second) == 0) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
}

BivarPoly BivarPoly::monomial(int i, int j, const Coefficient& c) {
  return BivarPoly(TermMap{{{i, j}, c}});
}

Coefficient BivarPoly::coeff(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? Coefficient(0) : it->second;
}

int BivarPoly::deg_y() const noexcept {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.second);
  return d;
}

int BivarPoly::deg_x() const noexcept {
  return terms_.empty() ? -1 : terms_.rbegin()->first.first;
}

BivarPoly BivarPoly::y_coefficient(int j) const {
  TermMap out;
  for (const auto& [m, c] : terms_) {
    if (m.second == j) out.emplace(Monomial{m.first, 0}, c);
  }
  return BivarPoly(std::move(out));
}

int BivarPoly::weighted_order(int wx, int wy) const noexcept {
  if (terms_.empty()) return -1;
  int best = std::numeric_limits<int>::max();
  for (const auto& [m, c] : terms_) best = std::min(best, m.first * wx + m.second * wy);
  return best;
}

BivarPoly BivarPoly::swap_xy() const {
  TermMap out;
  for (const auto& [m, c] : terms_) out.emplace(Monomial{m.second, m.first}, c);
  return BivarPoly(std::move(out));
}

std::string BivarPoly::to_string() const {
  if (terms_.empty()) return "0";
  // Descending in y, then ascending in x, which reads like y^n + c(x) y^{n-1} + ...
  std::vector<std::pair<Monomial, Coefficient>> sorted(terms_.begin(), terms_.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    if (a.first.second != b.first.second) return a.first.second > b.first.second;
    return a.first.first < b.first.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : sorted) {
    const bool neg = sgn(c) < 0;
    const Coefficient mag = neg ? Coefficient(-c) : c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    const auto [i, j] = m;
    if (i == 0 && j == 0) {
      os << branchinv::to_string(mag);
      continue;
    }
    bool need_star = false;
    if (mag != 1) {
      os << branchinv::to_string(mag);
      need_star = true;
    }
    if (i > 0) {
      os << (need_star ? "*" : "") << "x";
      if (i > 1) os << "^" << i;
      need_star = true;
    }
    if (j > 0) {
      os << (need_star ? "*" : "") << "y";
      if (j > 1) os << "^" << j;
    }
  }
  return os.str();
}

BivarPoly operator+(const BivarPoly& a, const BivarPoly& b) {
  BivarPoly::TermMap out = a.terms();
  for (const auto& [m, c] : b.terms()) out[m] += c;
  return BivarPoly(std::move(out));
}

BivarPoly operator-(const BivarPoly& a) {
  BivarPoly::TermMap out;
  for (const auto& [m, c] : a.terms()) out.emplace(m, -c);
  return BivarPoly(std::move(out));
}

BivarPoly operator-(const BivarPoly& a, const BivarPoly& b) {
  BivarPoly::TermMap out = a.terms();
  for (const auto& [m, c] : b.terms()) out[m] -= c;
  return BivarPoly(std::move(out));
}

BivarPoly operator*(const Coefficient& c, const BivarPoly& a) {
  if (sgn(c) == 0) return {};
  BivarPoly::TermMap out;
  for (const auto& [m, v] : a.terms()) out.emplace(m, c * v);
  return BivarPoly(std::move(out));
}

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
  BivarPoly::TermMap out;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      out[{ma.first + mb.first, ma.second + mb.second}] += ca * cb;
    }
  }
  return BivarPoly(std::move(out));
}

BivarPoly pow(const BivarPoly& a, int k) {
  BivarPoly result = BivarPoly::constant(1);
  BivarPoly base = a;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

BivarPoly exact_divide(const BivarPoly& a, const BivarPoly& b) {
  if (b.is_zero()) throw BranchError(ErrorKind::CrossCheckFailed, "division by the zero polynomial");
  const auto& [lb, cb] = *b.terms().rbegin();
  BivarPoly rem = a;
  BivarPoly::TermMap quot;
  while (!rem.is_zero()) {
    const auto& [lr, cr] = *rem.terms().rbegin();
    if (lr.first < lb.first || lr.second < lb.second) {
      throw BranchError(ErrorKind::CrossCheckFailed, "inexact polynomial division");
    }
    const Monomial shift{lr.first - lb.first, lr.second - lb.second};
    const Coefficient q = cr / cb;
    quot.emplace(shift, q);
    rem = rem - BivarPoly::monomial(shift.first, shift.second, q) * b;
  }
  return BivarPoly(std::move(quot));
}

std::pair<BivarPoly, BivarPoly> divmod_monic_y(const BivarPoly& a, const BivarPoly& h) {
  const int d = h.deg_y();
  if (d < 1 || h.y_coefficient(d) != BivarPoly::constant(1)) {
    throw BranchError(ErrorKind::NotMonic, "divisor " + h.to_string() + " is not monic in y");
  }
  const BivarPoly tail = h - BivarPoly::monomial(0, d);
  BivarPoly rem = a;
  BivarPoly::TermMap quot;
  for (int k = rem.deg_y(); k >= d; k = std::min(k - 1, rem.deg_y())) {
    BivarPoly lead = rem.y_coefficient(k);
    if (lead.is_zero()) continue;
    // lead(x) y^k = lead(x) y^{k-d} (h - tail)
    const BivarPoly q = lead * BivarPoly::monomial(0, k - d);
    for (const auto& [m, c] : q.terms()) quot[m] += c;
    rem = rem - q * BivarPoly::monomial(0, d) - q * tail;
  }
  return {BivarPoly(std::move(quot)), rem};
}

TSeries substitute(const BivarPoly& p, const TSeries& xs, const TSeries& ys) {
  if (xs.tag() != ys.tag()) {
    throw BranchError(ErrorKind::TagMismatch, "substitution series in '" + xs.tag() + "' and '" +
                                                  ys.tag() + "'");
  }
  const std::string& tag = xs.tag();
  TSeries acc(tag, kExact);
  if (p.is_zero()) return acc;
  const int dy = p.deg_y();
  const int dx = p.deg_x();
  std::vector<TSeries> xp{TSeries::constant(tag, 1)};
  for (int i = 1; i <= dx; ++i) xp.push_back(mul(xp.back(), xs));
  TSeries ypow = TSeries::constant(tag, 1);
  for (int j = 0; j <= dy; ++j) {
    if (j > 0) ypow = mul(ypow, ys);
    TSeries cj(tag, kExact);
    bool any = false;
    for (const auto& [m, c] : p.terms()) {
      if (m.second != j) continue;
      cj = cj + c * xp[m.first];
      any = true;
    }
    if (any) acc = acc + mul(cj, ypow);
  }
  return acc;
}

}  // namespace branchinv
