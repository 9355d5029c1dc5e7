#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wilson/daha/operators.hpp"

namespace wilson {

struct RelationCheck {
  std::string name;
  int max_degree = 0;
  bool passed = false;
  // Lowest-degree monomial on which the relation fails.
  std::optional<Poly> witness;
};

struct VerificationReport {
  std::vector<RelationCheck> checks;
  bool overall() const;
};

// Checks the defining relations of the algebra on every monomial x^k with
// k <= max_degree: quadratic relations for T_i and U_i, the sum relation, the
// cross relations with multiplication operators, the commutation of T_i with
// polynomials in Y, and the same relations for the images of the generators
// under the duality map, realized over the dual parameters.
VerificationReport verify_relations(const Representation& rep, int max_degree);
VerificationReport verify_relations(const ParamSet& t, int max_degree);

}  // namespace wilson
