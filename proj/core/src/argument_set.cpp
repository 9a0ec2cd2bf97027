#include "prefcast/argument_set.hpp"

#include <bit>
#include <stdexcept>

namespace prefcast {

namespace {
constexpr int kWordBits = 64;

int word_count(int bound) { return (bound + kWordBits - 1) / kWordBits; }
}  // namespace

ArgumentSet::ArgumentSet(int bound) : bound_(bound), words_(word_count(bound), 0) {
  if (bound < 0) throw std::invalid_argument("ArgumentSet: negative bound");
}

ArgumentSet ArgumentSet::full(int bound) {
  ArgumentSet s(bound);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  if (bound % kWordBits != 0 && !s.words_.empty())
    s.words_.back() &= (std::uint64_t{1} << (bound % kWordBits)) - 1;
  return s;
}

ArgumentSet ArgumentSet::of(int bound, std::initializer_list<int> members) {
  ArgumentSet s(bound);
  for (int m : members) s.insert(m);
  return s;
}

bool ArgumentSet::empty() const {
  for (auto w : words_)
    if (w != 0) return false;
  return true;
}

int ArgumentSet::count() const {
  int total = 0;
  for (auto w : words_) total += std::popcount(w);
  return total;
}

bool ArgumentSet::contains(int arg) const {
  if (arg < 0 || arg >= bound_) return false;
  return (words_[arg / kWordBits] >> (arg % kWordBits)) & 1;
}

void ArgumentSet::insert(int arg) {
  require_in_range(arg);
  words_[arg / kWordBits] |= std::uint64_t{1} << (arg % kWordBits);
}

void ArgumentSet::erase(int arg) {
  require_in_range(arg);
  words_[arg / kWordBits] &= ~(std::uint64_t{1} << (arg % kWordBits));
}

void ArgumentSet::clear() {
  for (auto& w : words_) w = 0;
}

bool ArgumentSet::subset_of(const ArgumentSet& other) const {
  require_same_bound(other);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

bool ArgumentSet::intersects(const ArgumentSet& other) const {
  require_same_bound(other);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & other.words_[i]) return true;
  return false;
}

ArgumentSet& ArgumentSet::operator|=(const ArgumentSet& other) {
  require_same_bound(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

ArgumentSet& ArgumentSet::operator&=(const ArgumentSet& other) {
  require_same_bound(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

ArgumentSet& ArgumentSet::operator-=(const ArgumentSet& other) {
  require_same_bound(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

ArgumentSet ArgumentSet::complement() const {
  ArgumentSet out = full(bound_);
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] &= ~words_[i];
  return out;
}

int ArgumentSet::next(int from) const {
  if (from < 0) from = 0;
  if (from >= bound_) return -1;
  std::size_t w = static_cast<std::size_t>(from) / kWordBits;
  std::uint64_t cur = words_[w] >> (from % kWordBits);
  if (cur != 0) return from + std::countr_zero(cur);
  for (++w; w < words_.size(); ++w)
    if (words_[w] != 0)
      return static_cast<int>(w) * kWordBits + std::countr_zero(words_[w]);
  return -1;
}

std::vector<int> ArgumentSet::members() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(count()));
  for (int m = first(); m >= 0; m = next(m + 1)) out.push_back(m);
  return out;
}

bool ArgumentSet::operator==(const ArgumentSet& other) const {
  return bound_ == other.bound_ && words_ == other.words_;
}

bool ArgumentSet::operator<(const ArgumentSet& other) const {
  if (bound_ != other.bound_)
    throw std::invalid_argument("ArgumentSet: comparing sets with different bounds");
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t diff = words_[i] ^ other.words_[i];
    if (diff != 0) {
      // The set holding the smallest differing element sorts first.
      std::uint64_t low = diff & (~diff + 1);
      return (words_[i] & low) != 0;
    }
  }
  return false;
}

std::uint64_t ArgumentSet::hash() const {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(bound_);
  for (auto w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0xbf58476d1ce4e5b9ULL;
    h ^= h >> 31;
  }
  return h;
}

void ArgumentSet::require_same_bound(const ArgumentSet& other) const {
  if (bound_ != other.bound_)
    throw std::invalid_argument("ArgumentSet: bound mismatch between operands");
}

void ArgumentSet::require_in_range(int arg) const {
  if (arg < 0 || arg >= bound_)
    throw std::invalid_argument("ArgumentSet: argument index out of range");
}

ArgumentSet operator|(ArgumentSet lhs, const ArgumentSet& rhs) { return lhs |= rhs; }
ArgumentSet operator&(ArgumentSet lhs, const ArgumentSet& rhs) { return lhs &= rhs; }
ArgumentSet operator-(ArgumentSet lhs, const ArgumentSet& rhs) { return lhs -= rhs; }

}  // namespace prefcast
