#pragma once

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "prefcast/argument_set.hpp"

namespace prefcast {

// Directed attack graph over interned arguments. Argument indices are dense,
// assigned in order of first declaration; labels are unique and non-empty.
// Frameworks are immutable once built (use FrameworkBuilder to derive new
// ones) and safe to share across threads.
class Framework {
 public:
  Framework();

  int size() const { return n_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int arg) const { return labels_.at(static_cast<std::size_t>(arg)); }
  // -1 when the label is unknown.
  int index_of(const std::string& label) const;

  bool has_attack(int from, int to) const;
  int attack_count() const { return attack_count_; }
  // {y | (x, y) in R}
  const ArgumentSet& targets(int x) const { return targets_.at(static_cast<std::size_t>(x)); }
  // {y | (y, x) in R}
  const ArgumentSet& attackers(int x) const { return attackers_.at(static_cast<std::size_t>(x)); }
  // All attack pairs in lexicographic (from, to) order.
  std::vector<std::pair<int, int>> attacks() const;

 private:
  friend class FrameworkBuilder;

  int n_ = 0;
  int attack_count_ = 0;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> index_;
  std::vector<ArgumentSet> targets_;
  std::vector<ArgumentSet> attackers_;
};

class FrameworkBuilder {
 public:
  FrameworkBuilder() = default;
  // Seeds the builder with an existing framework's arguments and attacks.
  explicit FrameworkBuilder(const Framework& base);

  // Throws std::invalid_argument on an empty or duplicate label.
  int add_argument(std::string label);
  // Interns the label, creating the argument on first sight.
  int ensure_argument(const std::string& label);
  int index_of(const std::string& label) const;
  int size() const { return static_cast<int>(labels_.size()); }

  // Duplicate attacks are silently collapsed; indices are range-checked.
  void add_attack(int from, int to);
  bool has_attack(int from, int to) const;

  Framework build() const;

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> index_;
  std::vector<std::vector<bool>> matrix_;  // matrix_[from][to]
};

}  // namespace prefcast
