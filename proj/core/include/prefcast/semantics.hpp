#pragma once

#include "prefcast/argument_set.hpp"
#include "prefcast/framework.hpp"
#include "prefcast/graph.hpp"

namespace prefcast {

// The set of arguments attacked by S (written S+).
ArgumentSet attacked_by(const Framework& f, const ArgumentSet& s);

// The set of arguments that attack at least one member of S (written S-).
ArgumentSet attackers_of(const Framework& f, const ArgumentSet& s);

// S+ union S-.
ArgumentSet gamma(const Framework& f, const ArgumentSet& s);

// No attack runs inside S, self-attacks included.
bool is_conflict_free(const Framework& f, const ArgumentSet& s);

// Every attacker of S is attacked by S (S- subset of S+).
bool is_self_defending(const Framework& f, const ArgumentSet& s);

bool is_admissible(const Framework& f, const ArgumentSet& s);

// All arguments x with (x, x) in R.
ArgumentSet self_attacking(const Framework& f);

ConflictGraph conflict_graph(const Framework& f);

}  // namespace prefcast
