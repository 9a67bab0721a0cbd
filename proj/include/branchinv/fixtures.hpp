#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "branchinv/bivar.hpp"
#include "branchinv/parametrization.hpp"

// Worked examples shipped with the library, reachable from the CLI through
// --fixture <name>.
namespace branchinv::fixtures {

/// (t^4, t^7 + t^10 + t^12 + b t^13)
Parametrization quartic_family(const Coefficient& b);

/// (t^3, t^7 + t^8)
Parametrization c1();

/// Degree-6 branch of class K(6,14,17).
BivarPoly f2();

/// y^3 - x^7
BivarPoly h();

/// y^3 - 3x^3y^2 + 3x^6y - x^7 - x^9, implicit equation of (t^3, t^7 + t^9).
BivarPoly h_prime();
Parametrization h_prime_param();

using Branch = std::variant<Parametrization, BivarPoly>;

struct Named {
  std::string name;
  std::string description;
};

/// Catalogue of names accepted by lookup().
std::vector<Named> catalogue();

/// Resolves a fixture name. "quartic:b=<rational>" selects a member of the
/// quartic family; returns nullopt for unknown names.
std::optional<Branch> lookup(const std::string& name);

}  // namespace branchinv::fixtures
