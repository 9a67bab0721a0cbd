#include "branchinv/parametrization.hpp"

#include "branchinv/errors.hpp"

namespace branchinv {

Parametrization::Parametrization(int n, TSeries y, bool polynomial)
    : n_(n), y_(std::move(y)), polynomial_(polynomial) {
  if (n_ < 1) throw BranchError(ErrorKind::Parse, "multiplicity n must be positive");
  if (polynomial_) y_ = TSeries(y_.tag(), y_.terms(), kExact);
}

Parametrization Parametrization::from_terms(int n, const TSeries::TermMap& terms) {
  return Parametrization(n, TSeries("t", terms, kExact), true);
}

TSeries Parametrization::x_series() const { return TSeries::monomial(y_.tag(), n_, 1); }

TSeries Parametrization::y_series(int t) const {
  if (!polynomial_ && t > y_.trunc()) {
    throw BranchError(ErrorKind::PrecisionExhausted,
                      "branch known below t^" + std::to_string(y_.trunc()) + ", requested t^" +
                          std::to_string(t));
  }
  return y_.truncated(t);
}

Parametrization Parametrization::with_precision(int t) const {
  return Parametrization(n_, y_series(t), false);
}

Parametrization Parametrization::truncated_polynomial(int t) const {
  return Parametrization(n_, TSeries(y_.tag(), y_.truncated(t).terms(), kExact), true);
}

std::string Parametrization::to_string() const {
  return "(" + y_.tag() + "^" + std::to_string(n_) + ", " + y_.to_string() + ")";
}

}  // namespace branchinv
