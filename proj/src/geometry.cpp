#include "branchinv/geometry.hpp"

#include <algorithm>
#include <vector>

#include "branchinv/errors.hpp"

namespace branchinv {

namespace {

// ---------------------------------------------------------------------------
// Univariate polynomials over Q, dense, index = degree.

using UPoly = std::vector<Coefficient>;

void trim(UPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

UPoly derivative(const UPoly& p) {
  UPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(Coefficient(static_cast<long>(i)) * p[i]);
  trim(d);
  return d;
}

// Remainder of a by b (b nonzero).
UPoly remainder(UPoly a, const UPoly& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    const Coefficient q = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
    trim(a);
  }
  return a;
}

UPoly quotient(UPoly a, const UPoly& b) {
  trim(a);
  if (a.size() < b.size()) return {};
  UPoly q(a.size() - b.size() + 1);
  while (a.size() >= b.size() && !a.empty()) {
    const Coefficient c = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    trim(a);
  }
  return q;
}

UPoly monic_gcd(UPoly a, UPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Coefficient lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

Coefficient evaluate(const UPoly& p, const Coefficient& x) {
  Coefficient acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// Exact k-th root of a non-negative integer, if any.
bool integer_root(const Integer& z, int k, Integer& out) {
  return mpz_root(out.get_mpz_t(), z.get_mpz_t(), static_cast<unsigned long>(k)) != 0;
}

// Positive divisors of |z| by trial division; the last cofactor is accepted if
// it tests prime.
std::vector<Integer> divisors(Integer z) {
  z = abs(z);
  std::vector<std::pair<Integer, int>> factors;
  for (Integer p = 2; p * p <= z; ++p) {
    if (p > 1000000) {
      if (mpz_probab_prime_p(z.get_mpz_t(), 30) == 0) {
        throw BranchError(ErrorKind::CrossCheckFailed,
                          "cannot factor " + z.get_str() + " while searching rational roots");
      }
      break;
    }
    int e = 0;
    while (z % p == 0) {
      z /= p;
      ++e;
    }
    if (e > 0) factors.emplace_back(p, e);
  }
  if (z > 1) factors.emplace_back(z, 1);
  std::vector<Integer> out{Integer(1)};
  for (const auto& [p, e] : factors) {
    const std::size_t base = out.size();
    Integer pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  return out;
}

// Distinct nonzero rational roots of p (p(0) != 0 is not required).
std::vector<Coefficient> rational_roots(UPoly p) {
  trim(p);
  std::vector<Coefficient> roots;
  if (p.size() <= 1) return roots;
  while (sgn(p.front()) == 0) p.erase(p.begin());
  if (p.size() <= 1) return roots;
  UPoly g = monic_gcd(p, derivative(p));
  UPoly s = g.size() > 1 ? quotient(p, g) : p;
  const Coefficient lead = s.back();
  for (auto& c : s) c /= lead;
  const int deg = static_cast<int>(s.size()) - 1;

  bool binomial = true;
  for (int i = 1; i < deg; ++i) binomial = binomial && sgn(s[i]) == 0;
  if (binomial) {
    // c^deg = alpha
    const Coefficient alpha = -s[0];
    if (sgn(alpha) < 0 && deg % 2 == 0) return roots;
    Integer rn, rd;
    if (!integer_root(abs(alpha.get_num()), deg, rn) || !integer_root(alpha.get_den(), deg, rd)) {
      return roots;
    }
    Coefficient r(rn, rd);
    r.canonicalize();
    if (sgn(alpha) < 0) r = -r;
    roots.push_back(r);
    if (deg % 2 == 0) roots.push_back(-r);
    return roots;
  }

  Integer common = 1;
  for (const auto& c : s) common = lcm(common, c.get_den());
  const Integer a0 = Coefficient(s.front() * common).get_num();
  const Integer ad = Coefficient(s.back() * common).get_num();
  for (const auto& num : divisors(a0)) {
    for (const auto& den : divisors(ad)) {
      for (int sign : {1, -1}) {
        Coefficient cand(Integer(sign * num), den);
        cand.canonicalize();
        if (sgn(evaluate(s, cand)) == 0 &&
            std::find(roots.begin(), roots.end(), cand) == roots.end()) {
          roots.push_back(cand);
        }
      }
    }
  }
  return roots;
}

// ---------------------------------------------------------------------------
// Fraction-free determinant.

BivarPoly bareiss_determinant(std::vector<std::vector<BivarPoly>> m) {
  const std::size_t n = m.size();
  if (n == 0) return BivarPoly::constant(1);
  bool negate = false;
  BivarPoly prev = BivarPoly::constant(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return {};
      std::swap(m[k], m[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BivarPoly num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] = prev == BivarPoly::constant(1) ? std::move(num) : exact_divide(num, prev);
      }
      m[i][k] = BivarPoly();
    }
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

// ---------------------------------------------------------------------------
// Newton polygon search for a rational root of f(t^n, y).

struct PuiseuxSearch {
  int n;
  int target;  // stop once the root is known below t^target
  int cap;     // truncation of the working coefficients G_j(t)
  TSeries::TermMap prefix;

  // G[j] is the coefficient of y^j after substituting y = prefix + y.
  bool run(const std::vector<TSeries>& g, int k) {
    const int deg = static_cast<int>(g.size()) - 1;
    std::vector<int> ord(deg + 1);
    std::vector<bool> known(deg + 1);
    for (int j = 0; j <= deg; ++j) {
      const OrderResult o = g[j].order();
      ord[j] = o.value;
      known[j] = o.is_known();
    }
    // mu = number of roots with order > k
    int mu = 0;
    long long best = static_cast<long long>(ord[0]);
    for (int j = 1; j <= deg; ++j) {
      const long long v = static_cast<long long>(ord[j]) + static_cast<long long>(k) * j;
      if (v < best) {
        best = v;
        mu = j;
      }
    }
    if (!known[mu]) {
      throw BranchError(ErrorKind::PrecisionExhausted, "Newton polygon vertex beyond working precision");
    }
    if (mu == 0) return false;

    // lower convex hull of (j, ord_j), 0 <= j <= mu
    std::vector<int> hull;
    for (int j = 0; j <= mu; ++j) {
      while (hull.size() >= 2) {
        const int a = hull[hull.size() - 2];
        const int b = hull.back();
        // drop b if it lies on or above the segment a -> j
        const long long lhs = static_cast<long long>(ord[b] - ord[a]) * (j - a);
        const long long rhs = static_cast<long long>(ord[j] - ord[a]) * (b - a);
        if (lhs >= rhs) {
          hull.pop_back();
        } else {
          break;
        }
      }
      hull.push_back(j);
    }

    // edges from the rightmost (smallest slope) to the leftmost
    for (std::size_t e = hull.size() - 1; e >= 1; --e) {
      const int j1 = hull[e - 1];
      const int j2 = hull[e];
      if (!known[j2]) {
        throw BranchError(ErrorKind::PrecisionExhausted, "Newton polygon vertex beyond working precision");
      }
      const int drop = ord[j1] - ord[j2];
      const int len = j2 - j1;
      // The computed slope bounds the true one from below. Roots along an edge
      // this steep agree with the prefix below the target.
      if (static_cast<long long>(drop) >= static_cast<long long>(target) * len) return true;
      if (!known[j1]) {
        throw BranchError(ErrorKind::PrecisionExhausted, "Newton polygon edge beyond working precision");
      }
      if (drop % len != 0) {
        throw BranchError(ErrorKind::NotPrimitive,
                          "fractional Newton slope: the polynomial is not a single branch of degree " +
                              std::to_string(n));
      }
      const int s = drop / len;
      UPoly edge(static_cast<std::size_t>(len + 1));
      for (int j = j1; j <= j2; ++j) edge[j - j1] = g[j].coeff(ord[j1] - s * (j - j1));
      for (const Coefficient& c : rational_roots(edge)) {
        prefix[s] = c;
        if (run(shift(g, c, s), s)) return true;
        prefix.erase(s);
      }
    }
    return false;
  }

  // G'_i = sum_{j >= i} C(j, i) G_j (c t^s)^{j-i}
  std::vector<TSeries> shift(const std::vector<TSeries>& g, const Coefficient& c, int s) const {
    const int deg = static_cast<int>(g.size()) - 1;
    std::vector<TSeries> out;
    out.reserve(g.size());
    for (int i = 0; i <= deg; ++i) {
      TSeries acc(g[0].tag(), cap);
      Integer binom = 1;
      Coefficient cpow = 1;
      for (int j = i; j <= deg; ++j) {
        if (j > i) {
          binom = binom * j / (j - i);
          cpow *= c;
        }
        if (g[j].is_zero()) continue;
        acc = acc + mul_monomial(g[j], s * (j - i), Coefficient(binom) * cpow).truncated(cap);
      }
      out.push_back(acc.truncated(cap));
    }
    return out;
  }
};

void require_weierstrass(const BivarPoly& f) {
  const int d = f.deg_y();
  if (d < 1) throw BranchError(ErrorKind::NotWeierstrass, "polynomial has no y-degree");
  if (f.y_coefficient(d) != BivarPoly::constant(1)) {
    throw BranchError(ErrorKind::NotWeierstrass, "polynomial is not monic in y");
  }
  for (const auto& [m, c] : f.terms()) {
    if (m.first == 0 && m.second < d) {
      throw BranchError(ErrorKind::NotWeierstrass,
                        "coefficient of y^" + std::to_string(m.second) + " does not vanish at x = 0");
    }
  }
}

int order_or_throw(const TSeries& s, const char* what) {
  const OrderResult o = s.order();
  if (!o.is_known()) {
    throw BranchError(ErrorKind::PrecisionExhausted,
                      std::string(what) + " vanishes below t^" + std::to_string(o.value));
  }
  return o.value;
}

}  // namespace

std::string ContactOrder::to_string() const {
  return infinite ? "infinite" : branchinv::to_string(theta);
}

BivarPoly implicitize(const Parametrization& phi) {
  if (!phi.is_polynomial()) {
    throw BranchError(ErrorKind::NonPolynomialInput,
                      "implicitization needs an exact polynomial branch; truncate " + phi.to_string() +
                          " first");
  }
  const int n = phi.n();
  // y - p(t) reduced modulo t^n - x: sum_r q_r(x, y) t^r with r < n
  std::vector<BivarPoly> q(static_cast<std::size_t>(n));
  q[0] = BivarPoly::y();
  for (const auto& [k, c] : phi.y().terms()) q[k % n] = q[k % n] - BivarPoly::monomial(k / n, 0, c);
  int d = n - 1;
  while (d > 0 && q[d].is_zero()) --d;

  BivarPoly f;
  if (d == 0) {
    f = pow(q[0], n);
  } else {
    // Sylvester matrix of t^n - x (d rows) and q(t) (n rows), size n + d
    const std::size_t size = static_cast<std::size_t>(n + d);
    std::vector<std::vector<BivarPoly>> m(size, std::vector<BivarPoly>(size));
    for (int i = 0; i < d; ++i) {
      m[i][i] = BivarPoly::constant(1);
      m[i][i + n] = -BivarPoly::x();
    }
    for (int i = 0; i < n; ++i) {
      for (int r = 0; r <= d; ++r) m[d + i][i + d - r] = q[r];
    }
    f = bareiss_determinant(std::move(m));
  }
  if (f.deg_y() != n || f.y_coefficient(n) != BivarPoly::constant(1)) {
    throw BranchError(ErrorKind::CrossCheckFailed, "resultant is not monic of degree n in y");
  }
  if (!substitute(f, phi.x_series(), phi.y()).is_zero()) {
    throw BranchError(ErrorKind::CrossCheckFailed, "implicit equation does not vanish on the branch");
  }
  return f;
}

Parametrization puiseux_parametrization(const BivarPoly& f, int precision) {
  require_weierstrass(f);
  if (precision < 2) throw BranchError(ErrorKind::PrecisionExhausted, "precision must be at least 2");
  const int n = f.deg_y();
  PuiseuxSearch search{n, precision, sat_add(n * precision, n + 1), {}};
  std::vector<TSeries> g;
  for (int j = 0; j <= n; ++j) {
    TSeries::TermMap terms;
    for (const auto& [m, c] : f.terms()) {
      if (m.second == j) terms[n * m.first] += c;
    }
    g.emplace_back("t", std::move(terms), search.cap);
  }
  if (!search.run(g, 0)) {
    throw BranchError(ErrorKind::NonRationalCoefficient,
                      "no root of " + f.to_string() + " has rational Puiseux coefficients");
  }

  const TSeries exact("t", search.prefix, kExact);
  const TSeries x = TSeries::monomial("t", n, 1);
  if (substitute(f, x, exact).is_zero()) return Parametrization(n, exact, true);
  const TSeries y("t", search.prefix, precision);
  const OrderResult residual = substitute(f, x, y).order();
  if (residual.value < precision) {
    throw BranchError(ErrorKind::CrossCheckFailed, "Puiseux root leaves a residual of order " +
                                                       std::to_string(residual.value));
  }
  return Parametrization(n, y, false);
}

Parametrization swap_xy(const Parametrization& phi, int precision) {
  const TSeries y = phi.y_series(phi.is_polynomial() ? precision : phi.trunc());
  const int m = order_or_throw(y, "y-series");
  const int n = phi.n();
  const Coefficient a = y.coeff(m);
  // s = alpha t (y / (a t^m))^{1/m} with alpha^m = a, so that y = s^m
  const std::vector<Coefficient> roots = rational_roots([&] {
    UPoly p(static_cast<std::size_t>(m + 1));
    p[0] = -a;
    p[m] = 1;
    return p;
  }());
  if (roots.empty()) {
    throw BranchError(ErrorKind::NonRationalCoefficient,
                      "leading coefficient " + to_string(a) + " has no rational " + std::to_string(m) +
                          "-th root");
  }
  const Coefficient alpha = *std::max_element(roots.begin(), roots.end());
  const Coefficient inv_a = 1 / a;
  const TSeries unit = mul_monomial(y, -m, inv_a);
  const TSeries s = mul_monomial(nth_root_unit(unit, m), 1, alpha);
  const TSeries rho = revert(s);
  TSeries new_y = pow_int(rho, n);
  return Parametrization(m, new_y, false);
}

BivarPoly make_monic_y(const BivarPoly& f) {
  const int d = f.deg_y();
  if (d < 1) throw BranchError(ErrorKind::NotWeierstrass, "polynomial has no y-degree");
  const BivarPoly lead = f.y_coefficient(d);
  if (lead.terms().size() != 1 || lead.terms().begin()->first != Monomial{0, 0}) {
    throw BranchError(ErrorKind::NotWeierstrass,
                      "leading y-coefficient " + lead.to_string() + " is not a constant");
  }
  return (1 / lead.terms().begin()->second) * f;
}

int intersection_poly_param(const BivarPoly& f, const Parametrization& phi) {
  const TSeries value = substitute(f, phi.x_series(), phi.y());
  const OrderResult o = value.order();
  if (o.is_known()) return o.value;
  if (value.is_exact()) {
    throw BranchError(ErrorKind::BranchesEqual, f.to_string() + " vanishes on " + phi.to_string());
  }
  throw BranchError(ErrorKind::PrecisionExhausted,
                    "f(phi) vanishes below t^" + std::to_string(o.value) + "; raise the precision");
}

int intersection(const Parametrization& a, const Parametrization& b) {
  const bool swap = b.n() < a.n();
  const Parametrization& first = swap ? b : a;
  const Parametrization& second = swap ? a : b;
  if (first.is_polynomial()) return intersection_poly_param(implicitize(first), second);

  const CharData cd = char_sequence(first);
  const int cut = std::max(cd.conductor + cd.n, cd.beta.back() + 1);
  if (cut > first.trunc()) {
    throw BranchError(ErrorKind::PrecisionExhausted,
                      "branch known below t^" + std::to_string(first.trunc()) + ", need t^" +
                          std::to_string(cut));
  }
  // use every known term: the guard below only gets weaker with a smaller cut
  const int used = first.trunc();
  int value = 0;
  try {
    value = intersection_poly_param(implicitize(first.truncated_polynomial(used)), second);
  } catch (const BranchError& e) {
    if (e.kind() != ErrorKind::BranchesEqual) throw;
    throw BranchError(ErrorKind::PrecisionExhausted,
                      "branches agree to the working precision t^" + std::to_string(used));
  }
  const ContactOrder theta = contact_from_intersection(cd, value, second.n());
  if (theta.theta >= make_rational(used, cd.n)) {
    throw BranchError(ErrorKind::PrecisionExhausted,
                      "contact " + theta.to_string() + " reaches the truncation t^" + std::to_string(used));
  }
  return value;
}

Coefficient intersection_from_contact(const CharData& cd, const Coefficient& theta, int mult_h) {
  if (theta < 1) {
    throw BranchError(ErrorKind::ThetaOutOfRange, "contact " + to_string(theta) + " is below 1");
  }
  const Coefficient nt = theta * cd.n;
  int q = 0;
  while (q < cd.genus && nt >= cd.beta[q + 1]) ++q;
  long long prod = 1;
  for (int i = 1; i <= q; ++i) prod *= cd.n_at(i);
  const Coefficient per = (Coefficient(cd.n_at(q)) * cd.v[q] + nt - cd.beta[q]) / Coefficient(Integer(static_cast<long>(prod)));
  return per * mult_h;
}

ContactOrder contact_from_intersection(const CharData& cd, long long intersection, int mult_h) {
  const Coefficient per = Coefficient(Integer(static_cast<long>(intersection))) / mult_h;
  std::vector<Coefficient> hits;
  long long prod = 1;
  for (int q = 0; q <= cd.genus; ++q) {
    if (q > 0) prod *= cd.n_at(q);
    // per * (n_0 ... n_q) = n_q v_q + n theta - beta_q
    const Coefficient theta =
        (per * Coefficient(Integer(static_cast<long>(prod))) - Coefficient(cd.n_at(q)) * cd.v[q] + cd.beta[q]) / cd.n;
    const Coefficient nt = theta * cd.n;
    const bool above = nt >= cd.beta[q];
    const bool below = q == cd.genus || nt < cd.beta[q + 1];
    if (above && below) hits.push_back(theta);
  }
  if (hits.size() != 1) {
    throw BranchError(ErrorKind::NotRealizable,
                      "I = " + std::to_string(intersection) + " with mult " + std::to_string(mult_h) +
                          " matches " + std::to_string(hits.size()) + " contact ranges of " + cd.to_string());
  }
  return ContactOrder::finite(hits.front());
}

ContactOrder contact(const Parametrization& a, const Parametrization& b) {
  const CharData cd = char_sequence(a);
  try {
    return contact_from_intersection(cd, intersection(a, b), b.n());
  } catch (const BranchError& e) {
    if (e.kind() == ErrorKind::BranchesEqual) return ContactOrder::infinity();
    throw;
  }
}

}  // namespace branchinv
