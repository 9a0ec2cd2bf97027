#include "prefcast/oracle.hpp"

#include <bit>
#include <cstdint>
#include <vector>

namespace prefcast {

namespace {

// Mask-level view of a framework, built straight from the attack pair list so
// the oracle does not share predicate code with the fast paths it vouches for.
struct MaskView {
  int n;
  std::vector<std::uint32_t> targets;    // targets[x] = {y | (x,y) in R}
  std::vector<std::uint32_t> attackers;  // attackers[x] = {y | (y,x) in R}

  explicit MaskView(const Framework& f)
      : n(f.size()),
        targets(static_cast<std::size_t>(f.size()), 0),
        attackers(static_cast<std::size_t>(f.size()), 0) {
    for (auto [from, to] : f.attacks()) {
      targets[static_cast<std::size_t>(from)] |= std::uint32_t{1} << to;
      attackers[static_cast<std::size_t>(to)] |= std::uint32_t{1} << from;
    }
  }

  bool conflict_free(std::uint32_t s) const {
    for (std::uint32_t rest = s; rest != 0; rest &= rest - 1) {
      int x = std::countr_zero(rest);
      if (targets[static_cast<std::size_t>(x)] & s) return false;
    }
    return true;
  }

  bool self_defending(std::uint32_t s) const {
    std::uint32_t attacked = 0;
    std::uint32_t attacking = 0;
    for (std::uint32_t rest = s; rest != 0; rest &= rest - 1) {
      int x = std::countr_zero(rest);
      attacked |= targets[static_cast<std::size_t>(x)];
      attacking |= attackers[static_cast<std::size_t>(x)];
    }
    return (attacking & ~attacked) == 0;
  }

  bool admissible(std::uint32_t s) const { return conflict_free(s) && self_defending(s); }
};

ArgumentSet to_argument_set(int n, std::uint32_t mask) {
  ArgumentSet out(n);
  for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1)
    out.insert(std::countr_zero(rest));
  return out;
}

}  // namespace

SetFamily enum_family(const Framework& f, Semantics semantics, int limit) {
  const int n = f.size();
  if (n > limit || limit > 31) {
    int effective = limit > 31 ? 31 : limit;
    if (n > effective) throw OracleLimitError(n, effective);
  }

  MaskView view(f);
  const std::uint64_t total = std::uint64_t{1} << n;
  std::vector<ArgumentSet> hits;

  switch (semantics) {
    case Semantics::kConflictFree:
      for (std::uint64_t m = 0; m < total; ++m)
        if (view.conflict_free(static_cast<std::uint32_t>(m)))
          hits.push_back(to_argument_set(n, static_cast<std::uint32_t>(m)));
      break;
    case Semantics::kSelfDefending:
      for (std::uint64_t m = 0; m < total; ++m)
        if (view.self_defending(static_cast<std::uint32_t>(m)))
          hits.push_back(to_argument_set(n, static_cast<std::uint32_t>(m)));
      break;
    case Semantics::kAdmissible:
      for (std::uint64_t m = 0; m < total; ++m)
        if (view.admissible(static_cast<std::uint32_t>(m)))
          hits.push_back(to_argument_set(n, static_cast<std::uint32_t>(m)));
      break;
    case Semantics::kNaive: {
      // Conflict-freeness is closed under subsets, so maximality reduces to
      // single-argument extensions.
      const std::uint32_t universe = (std::uint32_t{1} << n) - 1;
      for (std::uint64_t m = 0; m < total; ++m) {
        auto s = static_cast<std::uint32_t>(m);
        if (!view.conflict_free(s)) continue;
        bool maximal = true;
        for (std::uint32_t rest = universe & ~s; rest != 0 && maximal; rest &= rest - 1) {
          std::uint32_t ext = s | (rest & (~rest + 1));
          if (view.conflict_free(ext)) maximal = false;
        }
        if (maximal) hits.push_back(to_argument_set(n, s));
      }
      break;
    }
    case Semantics::kPreferred: {
      // Admissibility is not closed under subsets; materialize the family
      // and keep the inclusion-maximal members.
      std::vector<std::uint32_t> adm;
      for (std::uint64_t m = 0; m < total; ++m)
        if (view.admissible(static_cast<std::uint32_t>(m)))
          adm.push_back(static_cast<std::uint32_t>(m));
      for (std::uint32_t s : adm) {
        bool maximal = true;
        for (std::uint32_t t : adm)
          if (t != s && (s & ~t) == 0) {
            maximal = false;
            break;
          }
        if (maximal) hits.push_back(to_argument_set(n, s));
      }
      break;
    }
  }
  return SetFamily::from_vector(n, std::move(hits));
}

}  // namespace prefcast
