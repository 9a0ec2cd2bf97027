#pragma once

#include <string>
#include <vector>

#include "prefcast/argument_set.hpp"
#include "prefcast/framework.hpp"
#include "prefcast/set_family.hpp"

namespace prefcast {

// A rule "premise -> conclusion" with a (possibly empty) premise set and a
// single conclusion argument.
struct Implication {
  ArgumentSet premise;
  int conclusion = 0;

  bool operator==(const Implication& other) const {
    return conclusion == other.conclusion && premise == other.premise;
  }
};

// Duplicate-free rule list in a deterministic order, with the occurrence
// index needed for linear-time forward chaining prebuilt.
class ImplicationalSystem {
 public:
  explicit ImplicationalSystem(int bound);
  ImplicationalSystem(int bound, std::vector<Implication> rules);

  int bound() const { return bound_; }
  const std::vector<Implication>& rules() const { return rules_; }
  int size() const { return static_cast<int>(rules_.size()); }

  // rule ids whose premise contains the element
  const std::vector<int>& rules_watching(int element) const {
    return watchers_[static_cast<std::size_t>(element)];
  }
  const std::vector<int>& empty_premise_rules() const { return empty_premise_; }

  bool operator==(const ImplicationalSystem& other) const {
    return bound_ == other.bound_ && rules_ == other.rules_;
  }

 private:
  int bound_;
  std::vector<Implication> rules_;
  std::vector<std::vector<int>> watchers_;
  std::vector<int> empty_premise_;
};

// The system {y- -> z | (y,z) in R and (z,y) not in R}: one rule per
// one-directional attack, premise the attacker's own attackers. Complements
// of its closed sets are exactly the self-defending sets of f.
ImplicationalSystem build_sigma(const Framework& f);

// Least superset of `start` closed under every rule (forward chaining with
// per-rule unmet-premise counters; linear in total premise size).
ArgumentSet closure(const ImplicationalSystem& sigma, const ArgumentSet& start);

// True iff the complement of s is sigma-closed; agrees with
// is_self_defending when sigma == build_sigma(f).
bool is_sd_via_sigma(const Framework& f, const ImplicationalSystem& sigma,
                     const ArgumentSet& s);

// Unit-premise system representing a family that is closed under union and
// pairwise intersection and contains the empty set. Over the family's
// maximum member S*, emits x -> z for every z in D(x) \ {x} where D(x) is
// the intersection of all members holding x. The sigma-closed subsets of S*
// are then exactly the family plus the empty set. Throws
// std::invalid_argument naming a witness pair when the family is not closed.
ImplicationalSystem unit_system_for_family(const SetFamily& family, int bound);

// All sigma-closed subsets of `universe`, found in lectic order. Every rule
// conclusion reachable from a subset of the universe must stay inside it.
SetFamily enumerate_closed_sets(const ImplicationalSystem& sigma,
                                const ArgumentSet& universe);

// Debug text: one "X -> y" per line, premise elements comma-separated
// labels, `{}` for the empty premise.
std::string render_implications(const ImplicationalSystem& sigma,
                                const std::vector<std::string>& labels);

}  // namespace prefcast
