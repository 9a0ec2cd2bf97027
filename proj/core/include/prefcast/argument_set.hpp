#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace prefcast {

// Subset of a fixed argument universe {0, ..., bound-1}, stored as packed
// 64-bit words. Binary operations require both operands to share the same
// bound; a mismatch throws std::invalid_argument.
class ArgumentSet {
 public:
  ArgumentSet() = default;
  explicit ArgumentSet(int bound);

  static ArgumentSet full(int bound);
  static ArgumentSet of(int bound, std::initializer_list<int> members);

  int bound() const { return bound_; }
  bool empty() const;
  int count() const;

  bool contains(int arg) const;
  void insert(int arg);
  void erase(int arg);
  void clear();

  bool subset_of(const ArgumentSet& other) const;
  bool intersects(const ArgumentSet& other) const;

  ArgumentSet& operator|=(const ArgumentSet& other);
  ArgumentSet& operator&=(const ArgumentSet& other);
  ArgumentSet& operator-=(const ArgumentSet& other);

  // Complement relative to the universe {0, ..., bound-1}.
  ArgumentSet complement() const;

  // Smallest member >= from, or -1 when there is none.
  int next(int from) const;
  int first() const { return next(0); }
  std::vector<int> members() const;

  bool operator==(const ArgumentSet& other) const;
  bool operator!=(const ArgumentSet& other) const { return !(*this == other); }

  // Lexicographic order on the ascending member sequence. This is the
  // canonical order used for families: the set holding the smallest element
  // of the symmetric difference sorts first.
  bool operator<(const ArgumentSet& other) const;

  std::uint64_t hash() const;

 private:
  void require_same_bound(const ArgumentSet& other) const;
  void require_in_range(int arg) const;

  int bound_ = 0;
  std::vector<std::uint64_t> words_;
};

ArgumentSet operator|(ArgumentSet lhs, const ArgumentSet& rhs);
ArgumentSet operator&(ArgumentSet lhs, const ArgumentSet& rhs);
ArgumentSet operator-(ArgumentSet lhs, const ArgumentSet& rhs);

}  // namespace prefcast
