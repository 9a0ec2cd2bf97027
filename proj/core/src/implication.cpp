#include "prefcast/implication.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace prefcast {

namespace {

bool rule_less(const Implication& a, const Implication& b) {
  if (a.premise != b.premise) return a.premise < b.premise;
  return a.conclusion < b.conclusion;
}

}  // namespace

ImplicationalSystem::ImplicationalSystem(int bound) : ImplicationalSystem(bound, {}) {}

ImplicationalSystem::ImplicationalSystem(int bound, std::vector<Implication> rules)
    : bound_(bound), watchers_(static_cast<std::size_t>(bound)) {
  for (const auto& rule : rules) {
    if (rule.premise.bound() != bound)
      throw std::invalid_argument("ImplicationalSystem: premise bound mismatch");
    if (rule.conclusion < 0 || rule.conclusion >= bound)
      throw std::invalid_argument("ImplicationalSystem: conclusion out of range");
  }
  std::sort(rules.begin(), rules.end(), rule_less);
  rules.erase(std::unique(rules.begin(), rules.end()), rules.end());
  rules_ = std::move(rules);
  for (int r = 0; r < size(); ++r) {
    const ArgumentSet& premise = rules_[static_cast<std::size_t>(r)].premise;
    if (premise.empty()) {
      empty_premise_.push_back(r);
      continue;
    }
    for (int e = premise.first(); e >= 0; e = premise.next(e + 1))
      watchers_[static_cast<std::size_t>(e)].push_back(r);
  }
}

ImplicationalSystem build_sigma(const Framework& f) {
  std::vector<Implication> rules;
  for (auto [y, z] : f.attacks()) {
    if (f.has_attack(z, y)) continue;
    rules.push_back(Implication{f.attackers(y), z});
  }
  return ImplicationalSystem(f.size(), std::move(rules));
}

ArgumentSet closure(const ImplicationalSystem& sigma, const ArgumentSet& start) {
  if (start.bound() != sigma.bound())
    throw std::invalid_argument("closure: set bound does not match system");

  ArgumentSet closed = start;
  std::vector<int> unmet(static_cast<std::size_t>(sigma.size()), 0);
  std::vector<int> queue;
  queue.reserve(static_cast<std::size_t>(sigma.bound()));

  auto conclude = [&](int rule_id) {
    int c = sigma.rules()[static_cast<std::size_t>(rule_id)].conclusion;
    if (!closed.contains(c)) {
      closed.insert(c);
      queue.push_back(c);
    }
  };

  // Rules whose premise is already met (empty premises included) fire
  // immediately; the rest wait on counters decremented as members arrive.
  for (int r = 0; r < sigma.size(); ++r) {
    const ArgumentSet& premise = sigma.rules()[static_cast<std::size_t>(r)].premise;
    unmet[static_cast<std::size_t>(r)] = (premise - closed).count();
  }
  for (int r = 0; r < sigma.size(); ++r)
    if (unmet[static_cast<std::size_t>(r)] == 0) conclude(r);

  std::size_t head = 0;
  while (head < queue.size()) {
    int e = queue[head++];
    for (int r : sigma.rules_watching(e)) {
      if (--unmet[static_cast<std::size_t>(r)] == 0) conclude(r);
    }
  }
  return closed;
}

bool is_sd_via_sigma(const Framework& f, const ImplicationalSystem& sigma,
                     const ArgumentSet& s) {
  if (s.bound() != f.size() || sigma.bound() != f.size())
    throw std::invalid_argument("is_sd_via_sigma: bound mismatch");
  ArgumentSet comp = s.complement();
  return closure(sigma, comp) == comp;
}

ImplicationalSystem unit_system_for_family(const SetFamily& family, int bound) {
  if (family.bound() != bound)
    throw std::invalid_argument("unit_system_for_family: family bound mismatch");
  if (!family.contains(ArgumentSet(bound)))
    throw std::invalid_argument("unit_system_for_family: family must contain the empty set");

  // Closure checks; report a witness pair on failure.
  for (int i = 0; i < family.size(); ++i) {
    for (int j = i + 1; j < family.size(); ++j) {
      if (!family.contains(family[i] | family[j]))
        throw std::invalid_argument("unit_system_for_family: family not union-closed, witness pair (" +
                                    std::to_string(i) + ", " + std::to_string(j) + ")");
      if (!family.contains(family[i] & family[j]))
        throw std::invalid_argument(
            "unit_system_for_family: family not intersection-closed, witness pair (" +
            std::to_string(i) + ", " + std::to_string(j) + ")");
    }
  }

  ArgumentSet s_star(bound);
  for (const auto& member : family) s_star |= member;

  std::vector<Implication> rules;
  for (int x = s_star.first(); x >= 0; x = s_star.next(x + 1)) {
    ArgumentSet dx = ArgumentSet::full(bound);
    for (const auto& member : family)
      if (member.contains(x)) dx &= member;
    for (int z = dx.first(); z >= 0; z = dx.next(z + 1)) {
      if (z == x) continue;
      ArgumentSet premise(bound);
      premise.insert(x);
      rules.push_back(Implication{std::move(premise), z});
    }
  }
  return ImplicationalSystem(bound, std::move(rules));
}

SetFamily enumerate_closed_sets(const ImplicationalSystem& sigma,
                                const ArgumentSet& universe) {
  if (universe.bound() != sigma.bound())
    throw std::invalid_argument("enumerate_closed_sets: universe bound mismatch");

  auto close = [&](const ArgumentSet& s) {
    ArgumentSet out = closure(sigma, s);
    if (!out.subset_of(universe))
      throw std::logic_error("enumerate_closed_sets: closure escapes the universe");
    return out;
  };

  const std::vector<int> elements = universe.members();
  std::vector<ArgumentSet> found;
  ArgumentSet current = close(ArgumentSet(sigma.bound()));
  found.push_back(current);

  // Ganter's next-closure: advance in lectic order until the top is reached.
  while (current != universe) {
    bool advanced = false;
    for (auto it = elements.rbegin(); it != elements.rend(); ++it) {
      int i = *it;
      if (current.contains(i)) continue;
      ArgumentSet seed(sigma.bound());
      for (int e : elements) {
        if (e >= i) break;
        if (current.contains(e)) seed.insert(e);
      }
      seed.insert(i);
      ArgumentSet candidate = close(seed);
      // lectic successor test: no new element below i
      bool ok = true;
      for (int e : elements) {
        if (e >= i) break;
        if (candidate.contains(e) && !current.contains(e)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        current = std::move(candidate);
        found.push_back(current);
        advanced = true;
        break;
      }
    }
    if (!advanced) break;  // universe itself is not closed under inclusion in it
  }
  return SetFamily::from_vector(sigma.bound(), std::move(found));
}

std::string render_implications(const ImplicationalSystem& sigma,
                                const std::vector<std::string>& labels) {
  std::ostringstream out;
  for (const auto& rule : sigma.rules()) {
    if (rule.premise.empty()) {
      out << "{}";
    } else {
      bool first = true;
      for (int e = rule.premise.first(); e >= 0; e = rule.premise.next(e + 1)) {
        if (!first) out << ",";
        out << labels.at(static_cast<std::size_t>(e));
        first = false;
      }
    }
    out << " -> " << labels.at(static_cast<std::size_t>(rule.conclusion)) << "\n";
  }
  return out.str();
}

}  // namespace prefcast
