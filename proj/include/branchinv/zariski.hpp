#pragma once

#include <optional>
#include <string>
#include <vector>

#include "branchinv/parametrization.hpp"
#include "branchinv/semigroup.hpp"

namespace branchinv {

/// One analytic coordinate change applied to a branch.
///
///   QMove(a, b, c): y -> y + c x^{a-1} y^b
///   PMove(b, c):    x -> x + c y^{b-1}, followed by the parameter change rho
///                   that restores x = t^n
///   Scale(c):       y -> c y
struct MoveRecord {
  enum class Kind { QMove, PMove, Scale };

  Kind kind = Kind::Scale;
  int a = 0;
  int b = 0;
  Coefficient c;
  int target_exponent = 0;
  TSeries reparametrization;  // t = rho(s); the identity for QMove and Scale

  std::string to_string() const;
};

struct Survivor {
  int exponent;
  Coefficient coefficient;

  friend bool operator==(const Survivor&, const Survivor&) = default;
};

struct ZariskiResult {
  bool infinite = true;
  int lambda = 0;
  Coefficient b_lambda;
  // exponents j with j + n outside <n, m> left after the sweep, in order
  std::vector<Survivor> survivors;
  Parametrization normal_form;
  std::optional<Parametrization> witness;
  std::vector<MoveRecord> moves;
  // I(C_f, witness), when the witness is distinct from the branch
  std::optional<int> witness_intersection;
};

/// Applies a recorded move. Polynomial branches stay polynomial under QMove
/// and Scale; PMove works below t^precision.
Parametrization apply_move(const Parametrization& phi, const MoveRecord& move, int precision);

/// Scales y so that its leading coefficient is 1.
Parametrization normalize_leading(const Parametrization& phi);

/// Removes the term t^j by a single QMove or PMove chosen from the
/// representation j + n = a n + b m. Coefficients below t^j are untouched.
std::pair<Parametrization, MoveRecord> eliminate_term(const Parametrization& phi, int j,
                                                      int precision = 0);

/// Sweeps j = m+1 .. sweep_end (default conductor - n - 1) on a branch of
/// class K(n, m), eliminating every removable term; lambda is the first
/// survivor. Requires the branch to be known below conductor + 2n.
ZariskiResult genus1_reduce(const Parametrization& phi, std::optional<int> sweep_end = std::nullopt);

/// Whether phi belongs to the family of branches of class K(n1, m1)
/// analytically equivalent to y^n1 = x^m1.
bool is_in_B(const Parametrization& phi, int n1, int m1);

/// Zariski invariant with a witness curve attaining the maximal contact,
/// cross-checked by an independent intersection computation.
ZariskiResult zariski_invariant(const Parametrization& phi);

/// Evidence about a second branch C_h of multiplicity n'.
struct Evidence {
  enum class Kind { Contact, Intersection };
  Kind kind;
  Coefficient value;
};

/// lambda' of C_h from lambda of C_f when C_h is close enough to C_f.
int infer_zariski(const CharData& cd_f, int lambda_f, int mult_other, const Evidence& evidence);

}  // namespace branchinv
