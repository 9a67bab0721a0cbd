#include "branchinv/fixtures.hpp"

namespace branchinv::fixtures {

namespace {

BivarPoly poly(std::initializer_list<std::pair<Monomial, long>> terms) {
  BivarPoly::TermMap map;
  for (const auto& [m, c] : terms) map[m] += Coefficient(c);
  return BivarPoly(std::move(map));
}

}  // namespace

Parametrization quartic_family(const Coefficient& b) {
  return Parametrization::from_terms(4, {{7, 1}, {10, 1}, {12, 1}, {13, b}});
}

Parametrization c1() { return Parametrization::from_terms(3, {{7, 1}, {8, 1}}); }

BivarPoly f2() {
  // y^6 - 6x^5y^4 - 2x^7(1+4x)y^3 + 9x^10(1-x)y^2 + 6x^12(1+x-x^2)y
  //     + x^14(1-x+10x^2-x^3)
  return poly({{{0, 6}, 1},
               {{5, 4}, -6},
               {{7, 3}, -2},
               {{8, 3}, -8},
               {{10, 2}, 9},
               {{11, 2}, -9},
               {{12, 1}, 6},
               {{13, 1}, 6},
               {{14, 1}, -6},
               {{14, 0}, 1},
               {{15, 0}, -1},
               {{16, 0}, 10},
               {{17, 0}, -1}});
}

BivarPoly h() { return poly({{{0, 3}, 1}, {{7, 0}, -1}}); }

BivarPoly h_prime() {
  return poly({{{0, 3}, 1}, {{3, 2}, -3}, {{6, 1}, 3}, {{7, 0}, -1}, {{9, 0}, -1}});
}

Parametrization h_prime_param() { return Parametrization::from_terms(3, {{7, 1}, {9, 1}}); }

std::vector<Named> catalogue() {
  return {
      {"quartic", "(t^4, t^7+t^10+t^12), the b = 0 member of the quartic family"},
      {"quartic:b=<q>", "(t^4, t^7+t^10+t^12+q t^13) for a rational q"},
      {"quartic-witness", "(t^4, t^7+t^10+t^12+(17/14)t^13)"},
      {"c1", "(t^3, t^7+t^8)"},
      {"f2", "degree-6 polynomial of class K(6,14,17)"},
      {"h", "y^3 - x^7"},
      {"h-param", "(t^3, t^7)"},
      {"h-prime", "y^3 - 3x^3y^2 + 3x^6y - x^7 - x^9"},
      {"h-prime-param", "(t^3, t^7+t^9)"},
      {"cusp", "y^2 - x^3"},
      {"cusp-param", "(t^2, t^3)"},
  };
}

std::optional<Branch> lookup(const std::string& name) {
  if (name == "quartic") return quartic_family(0);
  if (name.rfind("quartic:b=", 0) == 0) return quartic_family(parse_rational(name.substr(10)));
  if (name == "quartic-witness") return quartic_family(make_rational(17, 14));
  if (name == "c1") return c1();
  if (name == "f2") return f2();
  if (name == "h") return h();
  if (name == "h-param") return Parametrization::from_terms(3, {{7, 1}});
  if (name == "h-prime") return h_prime();
  if (name == "h-prime-param") return h_prime_param();
  if (name == "cusp") return poly({{{0, 2}, 1}, {{3, 0}, -1}});
  if (name == "cusp-param") return Parametrization::from_terms(2, {{3, 1}});
  return std::nullopt;
}

}  // namespace branchinv::fixtures
