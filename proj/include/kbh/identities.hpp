#pragma once

#include "kbh/random.hpp"

#include <string>
#include <vector>

namespace kbh {

struct CheckResult {
  explicit CheckResult(std::string n) : name(std::move(n)) {}
  std::string name;
  bool passed = true;
  int trials = 0;
  /// First failure, if any.
  std::string detail;
};
using Checks = std::vector<CheckResult>;

/// hassoc, tassoc, thatha, taction, haction, unit laws and dm associativity,
/// each on `trials` random elements with three tails and three heads.
Checks mma_axioms(random::Rng& rng, int D, int trials);
/// Relabelling, cutting and puncturing, inverses, the four conjugation
/// relations, tail-commutativity (on random elements) and framing independence.
Checks mma_relations(random::Rng& rng, int D, int trials);
/// JhProperty, JuvProperty, JtProperty, the linear term of J and J(0) = J(v) = 0.
Checks j_identities(random::Rng& rng, int D, int trials);
/// The div cocycle condition (u = v and u != v) and additivity of div under tm.
Checks div_identities(random::Rng& rng, int D, int trials);

/// The axiom suite of mma_axioms in the beta quotient.
Checks beta_axioms(random::Rng& rng, int trials);
/// The relations of mma_relations in the beta quotient; framing
/// independence up to unit_equiv.
Checks beta_relations(random::Rng& rng, int trials);

bool all_passed(const Checks& checks);

}  // namespace kbh
