#include <doctest.h>

#include <random>

#include "branchinv/bivar.hpp"
#include "branchinv/errors.hpp"
#include "branchinv/fixtures.hpp"
#include "branchinv/series.hpp"
#include "oracles.hpp"

using namespace branchinv;

namespace {

TSeries series(std::initializer_list<std::pair<int, long>> terms, int trunc, const std::string& tag = "t") {
  TSeries::TermMap m;
  for (const auto& [e, c] : terms) m[e] = Coefficient(c);
  return TSeries(tag, std::move(m), trunc);
}

TSeries random_series(std::mt19937& rng, int trunc, int lowest = 0, bool unit = false) {
  TSeries::TermMap m;
  std::uniform_int_distribution<int> coin(0, 2);
  for (int e = lowest; e < trunc; ++e) {
    if (coin(rng) == 0) m[e] = oracle::random_rational(rng);
  }
  if (unit) m[0] = 1;
  return TSeries("t", std::move(m), trunc);
}

}  // namespace

TEST_CASE("ord of known, zero and leading-gap series") {
  const TSeries f2_at_h = series({{44, 9}, {45, -9}, {46, 6}, {47, -9}, {48, 10}, {49, -6}, {51, -1}}, 60);
  CHECK(f2_at_h.order() == OrderResult::known(44));
  CHECK(TSeries("t", 30).order() == OrderResult::at_least(30));
  CHECK(series({{7, 1}, {8, 1}}, 100).order() == OrderResult::known(7));
}

TEST_CASE("ring operations") {
  const TSeries a = series({{7, 1}, {9, 1}}, kExact);
  CHECK(a * a == series({{14, 1}, {16, 2}, {18, 1}}, kExact));
  // (t^7+t^9)^3 by repeated multiplication in the dense oracle
  const auto cube = oracle::dense_pow(oracle::Dense{0, 0, 0, 0, 0, 0, 0, 1, 0, 1}, 3);
  TSeries::TermMap expected;
  for (std::size_t i = 0; i < cube.size(); ++i) {
    if (sgn(cube[i]) != 0) expected[static_cast<int>(i)] = cube[i];
  }
  CHECK(pow_int(a, 3) == TSeries("t", expected, kExact));
  CHECK(pow_int(a, 3) == series({{21, 1}, {23, 3}, {25, 3}, {27, 1}}, kExact));
  const TSeries s = series({{1, 2}, {3, -1}}, 20);
  CHECK(s + TSeries("t", kExact) == s);
}

TEST_CASE("mul truncation follows the operand orders") {
  const TSeries a = series({{3, 1}}, 10);   // t^3 + O(t^10)
  const TSeries b = series({{2, 1}}, 6);    // t^2 + O(t^6)
  CHECK((a * b).trunc() == std::min(10 + 2, 6 + 3));
  const TSeries z("t", 5);
  CHECK((z * b).trunc() == std::min(5 + 2, 6 + 5));
  CHECK((z * b).is_zero());
}

TEST_CASE("tag mismatch is rejected") {
  const TSeries a = series({{1, 1}}, 10, "t");
  const TSeries b = series({{1, 1}}, 10, "u");
  CHECK_THROWS_AS(a + b, BranchError);
  try {
    (void)(a * b);
  } catch (const BranchError& e) {
    CHECK(e.kind() == ErrorKind::TagMismatch);
  }
}

TEST_CASE("invert_unit") {
  const TSeries inv = invert_unit(series({{0, 1}, {1, 1}}, 12));
  for (int k = 0; k < 12; ++k) CHECK(inv.coeff(k) == (k % 2 == 0 ? 1 : -1));
  CHECK(invert_unit(TSeries::constant("t", 2)) == TSeries::constant("t", make_rational(1, 2)));

  const TSeries one_plus_t = series({{0, 1}, {1, 1}}, 25);
  const TSeries back = one_plus_t * invert_unit(one_plus_t);
  CHECK(back.trunc() == 25);
  CHECK(back == TSeries::constant("t", 1, 25));

  try {
    (void)invert_unit(series({{1, 1}}, 10));
    FAIL("expected NotAUnit");
  } catch (const BranchError& e) {
    CHECK(e.kind() == ErrorKind::NotAUnit);
  }
}

TEST_CASE("nth_root_unit") {
  CHECK(nth_root_unit(TSeries::constant("t", 1), 5) == TSeries::constant("t", 1));
  const TSeries s = series({{0, 1}, {1, 4}}, 12);
  const TSeries r = nth_root_unit(s, 4);
  CHECK(r.coeff(0) == 1);
  CHECK(r.coeff(1) == 1);
  CHECK(r.coeff(2) == make_rational(-3, 2));
  CHECK(pow_int(r, 4) == s);

  try {
    (void)nth_root_unit(series({{0, 2}, {1, 1}}, 10), 2);
    FAIL("expected ConstantTermNotOne");
  } catch (const BranchError& e) {
    CHECK(e.kind() == ErrorKind::ConstantTermNotOne);
  }
}

TEST_CASE("root round-trip on random units") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + trial % 5;
    const TSeries s = random_series(rng, 40, 1, true);
    CHECK(pow_int(nth_root_unit(s, n), n) == s);
  }
}

TEST_CASE("ring axioms on random series") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const TSeries a = random_series(rng, 15);
    const TSeries b = random_series(rng, 18);
    const TSeries c = random_series(rng, 12, 1);
    CHECK(a * b == b * a);
    CHECK(a + b == b + a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("substitute") {
  const TSeries x3 = TSeries::monomial("t", 3, 1);
  const TSeries t7 = TSeries::monomial("t", 7, 1);
  CHECK(substitute(fixtures::f2(), x3, t7) ==
        series({{44, 9}, {45, -9}, {46, 6}, {47, -9}, {48, 10}, {49, -6}, {51, -1}}, kExact));
  CHECK(substitute(fixtures::h_prime(), x3, series({{7, 1}, {9, 1}}, 80)).is_zero());
  const BivarPoly cusp =
      BivarPoly::monomial(0, 2) - BivarPoly::monomial(3, 0);
  CHECK(substitute(cusp, TSeries::monomial("t", 2, 1), TSeries::monomial("t", 3, 1)).is_zero());
}

TEST_CASE("substitute agrees with direct expansion") {
  std::mt19937 rng(3);
  const oracle::Dense y{0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 2};
  TSeries::TermMap ym;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (sgn(y[i]) != 0) ym[static_cast<int>(i)] = y[i];
  }
  const TSeries ys("t", ym, kExact);
  const auto direct = oracle::expand_at(fixtures::f2(), 3, y);
  const TSeries via = substitute(fixtures::f2(), TSeries::monomial("t", 3, 1), ys);
  for (std::size_t i = 0; i < direct.size(); ++i) CHECK(via.coeff(static_cast<int>(i)) == direct[i]);
}

TEST_CASE("substitution is a ring homomorphism") {
  std::mt19937 rng(5);
  auto random_poly = [&]() {
    BivarPoly::TermMap m;
    std::uniform_int_distribution<int> deg(0, 4);
    for (int k = 0; k < 5; ++k) m[{deg(rng), deg(rng)}] += oracle::random_rational(rng);
    return BivarPoly(std::move(m));
  };
  for (int trial = 0; trial < 15; ++trial) {
    const BivarPoly p = random_poly();
    const BivarPoly q = random_poly();
    const TSeries xs = random_series(rng, 20, 1);
    const TSeries ys = random_series(rng, 25, 1);
    CHECK(substitute(p * q, xs, ys) == substitute(p, xs, ys) * substitute(q, xs, ys));
    CHECK(substitute(p + q, xs, ys) == substitute(p, xs, ys) + substitute(q, xs, ys));
  }
}

TEST_CASE("reparametrize") {
  const TSeries u = TSeries::variable("u");
  CHECK(reparametrize(TSeries::monomial("t", 2, 1), u) == TSeries::monomial("u", 2, 1));
  CHECK(reparametrize(TSeries::variable("t"), TSeries::monomial("u", 1, 2)) ==
        TSeries::monomial("u", 1, 2));

  // x(t) = t^4 + (4/7)(t^7 + t^10); s = t (x/t^4)^{1/4}; rho = s^{-1}; x(rho(s)) = s^4
  const int trunc = 30;
  const TSeries y = series({{7, 1}, {10, 1}}, trunc);
  const TSeries x = TSeries::monomial("t", 4, 1, trunc) + make_rational(4, 7) * y;
  const TSeries sigma = mul_monomial(nth_root_unit(mul_monomial(x, -4), 4), 1);
  const TSeries rho = revert(sigma).retagged("u");
  const TSeries back = reparametrize(x, rho);
  CHECK(back.trunc() >= trunc - 3);
  CHECK(back == TSeries::monomial("u", 4, 1, back.trunc()));

  try {
    (void)reparametrize(TSeries::variable("t"), TSeries::monomial("u", 2, 1));
    FAIL("expected InvalidParameterChange");
  } catch (const BranchError& e) {
    CHECK(e.kind() == ErrorKind::InvalidParameterChange);
  }
}

TEST_CASE("revert is a compositional inverse") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    TSeries s = random_series(rng, 20, 2).with_coeff(1, oracle::random_rational(rng) + 7);
    const TSeries r = revert(s);
    CHECK(reparametrize(s, r) == TSeries::variable("t", 20));
  }
}

TEST_CASE("truncation soundness") {
  // the same pipeline at two precisions agrees below the smaller bound
  auto pipeline = [](int trunc) {
    const TSeries y = series({{7, 1}, {10, 1}, {12, 1}}, trunc);
    const TSeries x = TSeries::monomial("t", 4, 1, trunc) + make_rational(4, 7) * y;
    const TSeries rho = revert(mul_monomial(nth_root_unit(mul_monomial(x, -4), 4), 1));
    return reparametrize(y, rho);
  };
  const TSeries lo = pipeline(20);
  const TSeries hi = pipeline(35);
  CHECK(lo.trunc() <= hi.trunc());
  CHECK(hi.truncated(lo.trunc()) == lo);
}
