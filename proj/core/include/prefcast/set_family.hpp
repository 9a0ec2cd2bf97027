#pragma once

#include <vector>

#include "prefcast/argument_set.hpp"

namespace prefcast {

// Canonical, duplicate-free, ordered collection of equal-bound argument sets.
// Members are kept sorted in the ArgumentSet canonical order so that equal
// families compare equal and emitted output is reproducible.
class SetFamily {
 public:
  SetFamily() = default;
  explicit SetFamily(int bound) : bound_(bound) {}

  // Sorts and deduplicates once; the cheap way to build large families.
  static SetFamily from_vector(int bound, std::vector<ArgumentSet> members);

  int bound() const { return bound_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }

  const ArgumentSet& operator[](int i) const { return members_[static_cast<std::size_t>(i)]; }
  std::vector<ArgumentSet>::const_iterator begin() const { return members_.begin(); }
  std::vector<ArgumentSet>::const_iterator end() const { return members_.end(); }
  const std::vector<ArgumentSet>& members() const { return members_; }

  // Keeps canonical order; duplicates are ignored.
  void insert(ArgumentSet s);
  bool contains(const ArgumentSet& s) const;

  bool operator==(const SetFamily& other) const;
  bool operator!=(const SetFamily& other) const { return !(*this == other); }

 private:
  int bound_ = 0;
  std::vector<ArgumentSet> members_;
};

// Inclusion-wise maximal members of a family.
SetFamily maximal_members(const SetFamily& family);

}  // namespace prefcast
