#include "branchinv/zariski.hpp"

#include <numeric>
#include <sstream>

#include "branchinv/errors.hpp"
#include "branchinv/geometry.hpp"

namespace branchinv {

namespace {

// z = a n + b m with a >= 0 and the smallest b >= 0, if any.
std::optional<std::pair<int, int>> represent(int z, int n, int m) {
  for (int b = 0; b < n && b * m <= z; ++b) {
    if ((z - b * m) % n == 0) return std::make_pair((z - b * m) / n, b);
  }
  return std::nullopt;
}

TSeries identity_rho(const std::string& tag) { return TSeries::variable(tag); }

Parametrization with_y(const Parametrization& phi, TSeries y, bool keep_polynomial) {
  return Parametrization(phi.n(), std::move(y), keep_polynomial && phi.is_polynomial());
}

// Full move application; also returns rho for PMove.
Parametrization move_once(const Parametrization& phi, MoveRecord::Kind kind, int a, int b,
                          const Coefficient& c, int precision, TSeries* rho_out) {
  const int n = phi.n();
  const std::string tag = phi.y().tag();
  switch (kind) {
    case MoveRecord::Kind::Scale:
      if (rho_out) *rho_out = identity_rho(tag);
      return with_y(phi, c * phi.y(), true);
    case MoveRecord::Kind::QMove: {
      if (rho_out) *rho_out = identity_rho(tag);
      const TSeries& y = phi.y();
      return with_y(phi, y + mul_monomial(pow_int(y, b), n * (a - 1), c), true);
    }
    case MoveRecord::Kind::PMove: {
      const TSeries y = phi.is_polynomial() ? phi.y_series(precision) : phi.y();
      // x + c y^{b-1} = s^n with s = t (1 + c y^{b-1} / t^n)^{1/n}
      const TSeries w = mul_monomial(pow_int(y, b - 1), -n, c);
      const TSeries unit = TSeries::constant(tag, 1, w.trunc()) + w;
      const TSeries s = mul_monomial(nth_root_unit(unit, n), 1);
      const TSeries rho = revert(s);
      if (rho_out) *rho_out = rho;
      return Parametrization(n, reparametrize(y, rho).truncated(y.trunc()), false);
    }
  }
  throw BranchError(ErrorKind::CrossCheckFailed, "unknown move kind");
}

int working_precision(const Parametrization& phi, int needed) {
  if (phi.is_polynomial()) return needed;
  if (phi.trunc() < needed) {
    throw BranchError(ErrorKind::PrecisionExhausted,
                      "branch known below t^" + std::to_string(phi.trunc()) + ", reduction needs t^" +
                          std::to_string(needed));
  }
  return phi.trunc();
}

std::pair<Parametrization, MoveRecord> eliminate_in(const Parametrization& phi, int j, int n, int m,
                                                    int precision) {
  const auto rep = represent(j + n, n, m);
  if (!rep) {
    throw BranchError(ErrorKind::NotRemovable,
                      std::to_string(j) + " + " + std::to_string(n) + " is not in <" + std::to_string(n) +
                          "," + std::to_string(m) + ">");
  }
  const Coefficient aj = phi.coeff(j);
  if (sgn(aj) == 0) {
    throw BranchError(ErrorKind::DegenerateMove, "coefficient of t^" + std::to_string(j) + " is already zero");
  }
  const auto [a, b] = *rep;
  if ((a == 0 && b <= 1) || (a == 1 && b == 1)) {
    throw BranchError(ErrorKind::DegenerateMove, "t^" + std::to_string(j) + " cannot be moved by an invertible change");
  }
  const MoveRecord::Kind kind = a >= 1 ? MoveRecord::Kind::QMove : MoveRecord::Kind::PMove;

  // the coefficient of t^j after the move is affine in c
  const Parametrization low(n, phi.y_series(j + 1), false);
  auto probe = [&](const Coefficient& c) {
    return move_once(low, kind, a, b, c, j + 1, nullptr).coeff(j);
  };
  const Coefficient v0 = probe(0);
  const Coefficient v1 = probe(1);
  const Coefficient v2 = probe(2);
  if (v1 == v0) throw BranchError(ErrorKind::DegenerateMove, "move does not reach t^" + std::to_string(j));
  if (v2 - v0 != 2 * (v1 - v0)) {
    throw BranchError(ErrorKind::CrossCheckFailed, "coefficient of t^" + std::to_string(j) + " is not affine in c");
  }
  const Coefficient c = -v0 / (v1 - v0);

  MoveRecord record{kind, a, b, c, j, identity_rho(phi.y().tag())};
  Parametrization out = move_once(phi, kind, a, b, c, precision, &record.reparametrization);
  if (sgn(out.coeff(j)) != 0) {
    throw BranchError(ErrorKind::CrossCheckFailed, "move left t^" + std::to_string(j) + " in place");
  }
  for (int i = 0; i < j; ++i) {
    if (out.coeff(i) != phi.coeff(i)) {
      throw BranchError(ErrorKind::CrossCheckFailed, "move disturbed t^" + std::to_string(i));
    }
  }
  return {std::move(out), record};
}

Parametrization scale_leading(const Parametrization& phi, int m, std::vector<MoveRecord>* log) {
  const Coefficient lead = phi.coeff(m);
  if (lead == 1) return phi;
  MoveRecord record{MoveRecord::Kind::Scale, 0, 0, 1 / lead, m, identity_rho(phi.y().tag())};
  Parametrization out = move_once(phi, record.kind, 0, 0, record.c, 0, nullptr);
  if (log) log->push_back(std::move(record));
  return out;
}

// Adds adjustments to w until its reduction has no survivor.
Parametrization complete_witness(Parametrization w) {
  const CharData cd = char_sequence(w);
  const Coefficient lead = w.coeff(cd.m);
  for (int guard = 0; guard <= cd.conductor + 1; ++guard) {
    const ZariskiResult r = genus1_reduce(w);
    if (r.infinite) return w;
    const Survivor& s = r.survivors.front();
    TSeries::TermMap terms = w.y().terms();
    terms[s.exponent] -= s.coefficient * lead;
    w = Parametrization::from_terms(w.n(), terms);
  }
  throw BranchError(ErrorKind::CrossCheckFailed, "witness construction does not terminate");
}

Parametrization polynomial_below(const Parametrization& phi, int bound, int e, int n) {
  TSeries::TermMap terms;
  for (const auto& [i, c] : phi.y().terms()) {
    if (i >= bound) break;
    if (i % e != 0) throw BranchError(ErrorKind::CrossCheckFailed, "term below beta_2 not divisible by e_1");
    terms.emplace(i / e, c);
  }
  return Parametrization::from_terms(n, terms);
}

}  // namespace

std::string MoveRecord::to_string() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::QMove:
      os << "QMove(a=" << a << ", b=" << b << ", c=" << branchinv::to_string(c) << "): y -> y + "
         << branchinv::to_string(c) << " x^" << (a - 1) << " y^" << b;
      break;
    case Kind::PMove:
      os << "PMove(b=" << b << ", c=" << branchinv::to_string(c) << "): x -> x + " << branchinv::to_string(c)
         << " y^" << (b - 1);
      break;
    case Kind::Scale:
      os << "Scale(c=" << branchinv::to_string(c) << "): y -> " << branchinv::to_string(c) << " y";
      break;
  }
  os << " [t^" << target_exponent << "]";
  return os.str();
}

Parametrization apply_move(const Parametrization& phi, const MoveRecord& move, int precision) {
  return move_once(phi, move.kind, move.a, move.b, move.c, precision, nullptr);
}

Parametrization normalize_leading(const Parametrization& phi) {
  const OrderResult o = phi.y().order();
  if (!o.is_known()) throw BranchError(ErrorKind::NotTransversal, "y-series vanishes");
  return scale_leading(phi, o.value, nullptr);
}

std::pair<Parametrization, MoveRecord> eliminate_term(const Parametrization& phi, int j, int precision) {
  const CharData cd = char_sequence(phi);
  const int work = precision > 0 ? precision : (phi.is_polynomial() ? cd.conductor + 2 * cd.n : phi.trunc());
  return eliminate_in(phi, j, cd.n, cd.m, work);
}

ZariskiResult genus1_reduce(const Parametrization& phi, std::optional<int> sweep_end) {
  const CharData cd = char_sequence(phi);
  if (cd.genus != 1) {
    throw BranchError(ErrorKind::WrongEquisingularityClass,
                      "genus-one reduction applied to " + cd.to_string());
  }
  const int n = cd.n;
  const int m = cd.m;
  const int end = sweep_end.value_or(cd.conductor - n - 1);
  const int precision = working_precision(phi, std::max(cd.conductor + 2 * n, end + 1));

  std::vector<MoveRecord> moves;
  Parametrization cur = phi;
  // terms at multiples of n below m
  for (int j = 2 * n; j < m; j += n) {
    if (sgn(cur.coeff(j)) == 0) continue;
    auto [next, record] = eliminate_in(cur, j, n, m, precision);
    cur = std::move(next);
    moves.push_back(std::move(record));
  }
  cur = scale_leading(cur, m, &moves);

  std::vector<Survivor> survivors;
  for (int j = m + 1; j <= end; ++j) {
    const Coefficient aj = cur.coeff(j);
    if (sgn(aj) == 0) continue;
    if (!represent(j + n, n, m)) {
      survivors.push_back({j, aj});
      continue;
    }
    auto [next, record] = eliminate_in(cur, j, n, m, precision);
    cur = std::move(next);
    moves.push_back(std::move(record));
  }

  ZariskiResult r{.infinite = survivors.empty(),
                  .lambda = survivors.empty() ? 0 : survivors.front().exponent,
                  .b_lambda = survivors.empty() ? Coefficient(0) : survivors.front().coefficient,
                  .survivors = std::move(survivors),
                  .normal_form = std::move(cur),
                  .witness = std::nullopt,
                  .moves = std::move(moves),
                  .witness_intersection = std::nullopt};
  return r;
}

bool is_in_B(const Parametrization& phi, int n1, int m1) {
  const CharData cd = char_sequence(phi);
  if (cd.beta != std::vector<int>{n1, m1}) {
    throw BranchError(ErrorKind::WrongEquisingularityClass,
                      phi.to_string() + " is of class " + cd.to_string() + ", not K(" + std::to_string(n1) + "," +
                          std::to_string(m1) + ")");
  }
  return genus1_reduce(phi).infinite;
}

ZariskiResult zariski_invariant(const Parametrization& phi) {
  const CharData cd = char_sequence(phi);
  if (cd.genus == 0) {
    return ZariskiResult{.infinite = true, .lambda = 0, .b_lambda = 0, .survivors = {}, .normal_form = phi,
                         .witness = phi, .moves = {}, .witness_intersection = std::nullopt};
  }

  ZariskiResult result{.infinite = true, .lambda = 0, .b_lambda = 0, .survivors = {}, .normal_form = phi,
                       .witness = std::nullopt, .moves = {}, .witness_intersection = std::nullopt};
  Parametrization start = phi;
  if (cd.genus == 1) {
    result = genus1_reduce(phi);
    if (result.infinite) {
      result.witness = phi;
      return result;
    }
    start = polynomial_below(phi, result.lambda, 1, cd.n);
  } else {
    const int e1 = cd.e1();
    const int n1 = cd.n1();
    const int m1 = cd.m1();
    const int beta2 = cd.beta[2];
    const int ceil_b2 = (beta2 + e1 - 1) / e1;
    const Parametrization reduced = polynomial_below(phi, beta2, e1, n1);
    const int mu_r = (n1 - 1) * (m1 - 1);
    const ZariskiResult r = genus1_reduce(reduced, std::min(mu_r - n1 - 1, ceil_b2 - 1));
    result.survivors = r.survivors;
    result.normal_form = r.normal_form;
    result.moves = r.moves;
    result.infinite = false;
    int k_start = ceil_b2;
    if (!r.infinite) {
      k_start = r.lambda;
      result.lambda = e1 * r.lambda;
      result.b_lambda = r.b_lambda;
    } else {
      result.lambda = beta2;
      result.b_lambda = phi.coeff(beta2) / phi.coeff(cd.m);
    }
    start = polynomial_below(reduced, k_start, 1, n1);
  }

  // normal-form contract
  const int lambda = result.lambda;
  if (contains(lambda + cd.n, cd) || lambda <= cd.m || (cd.genus >= 2 && lambda > cd.beta[2]) ||
      sgn(result.b_lambda) == 0) {
    throw BranchError(ErrorKind::CrossCheckFailed, "lambda = " + std::to_string(lambda) +
                                                       " violates the normal-form contract for " + cd.to_string());
  }

  const Parametrization witness = complete_witness(start);
  const int n1 = cd.n1();
  const int m1 = cd.m1();
  if (!is_in_B(witness, n1, m1)) throw BranchError(ErrorKind::CrossCheckFailed, "witness is not in B");
  const int value = intersection(witness, phi);
  const int expected = (n1 - 1) * cd.m + lambda;
  if (value != expected) {
    throw BranchError(ErrorKind::CrossCheckFailed,
                      "I(C_f, witness) = " + std::to_string(value) + ", expected " + std::to_string(expected));
  }
  result.witness = witness;
  result.witness_intersection = value;
  return result;
}

int infer_zariski(const CharData& cd_f, int lambda_f, int mult_other, const Evidence& evidence) {
  const Coefficient bound_contact = make_rational(lambda_f, cd_f.n);
  if (evidence.kind == Evidence::Kind::Contact) {
    if (!(evidence.value > bound_contact)) {
      throw BranchError(ErrorKind::HypothesisNotMet,
                        "contact " + to_string(evidence.value) + " is not greater than lambda/n = " +
                            to_string(bound_contact));
    }
  } else {
    const Coefficient bound =
        Coefficient(mult_other) * Coefficient((cd_f.n1() - 1) * cd_f.m + lambda_f) / cd_f.n1();
    if (!(evidence.value > bound)) {
      throw BranchError(ErrorKind::HypothesisNotMet,
                        "intersection " + to_string(evidence.value) + " is not greater than n'((n_1-1)m+lambda)/n_1 = " +
                            to_string(bound));
    }
  }
  const Coefficient value = Coefficient(mult_other) * bound_contact;
  if (!is_integer(value)) {
    throw BranchError(ErrorKind::NonIntegralResult, "n' lambda / n = " + to_string(value) + " is not an integer");
  }
  return static_cast<int>(value.get_num().get_si());
}

}  // namespace branchinv
