#include "prefcast/framework.hpp"

#include <stdexcept>

namespace prefcast {

Framework::Framework() = default;

int Framework::index_of(const std::string& label) const {
  auto it = index_.find(label);
  return it == index_.end() ? -1 : it->second;
}

bool Framework::has_attack(int from, int to) const {
  if (from < 0 || from >= n_ || to < 0 || to >= n_) return false;
  return targets_[static_cast<std::size_t>(from)].contains(to);
}

std::vector<std::pair<int, int>> Framework::attacks() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(attack_count_));
  for (int from = 0; from < n_; ++from)
    for (int to = targets_[static_cast<std::size_t>(from)].first(); to >= 0;
         to = targets_[static_cast<std::size_t>(from)].next(to + 1))
      out.emplace_back(from, to);
  return out;
}

FrameworkBuilder::FrameworkBuilder(const Framework& base) {
  for (const auto& label : base.labels()) add_argument(label);
  for (auto [from, to] : base.attacks()) add_attack(from, to);
}

int FrameworkBuilder::add_argument(std::string label) {
  if (label.empty()) throw std::invalid_argument("argument label must be non-empty");
  if (index_.count(label) != 0)
    throw std::invalid_argument("duplicate argument label: " + label);
  int idx = static_cast<int>(labels_.size());
  index_.emplace(label, idx);
  labels_.push_back(std::move(label));
  for (auto& row : matrix_) row.push_back(false);
  matrix_.emplace_back(labels_.size(), false);
  return idx;
}

int FrameworkBuilder::ensure_argument(const std::string& label) {
  auto it = index_.find(label);
  if (it != index_.end()) return it->second;
  return add_argument(label);
}

int FrameworkBuilder::index_of(const std::string& label) const {
  auto it = index_.find(label);
  return it == index_.end() ? -1 : it->second;
}

void FrameworkBuilder::add_attack(int from, int to) {
  int n = size();
  if (from < 0 || from >= n || to < 0 || to >= n)
    throw std::invalid_argument("attack endpoint out of range");
  matrix_[static_cast<std::size_t>(from)][static_cast<std::size_t>(to)] = true;
}

bool FrameworkBuilder::has_attack(int from, int to) const {
  int n = size();
  if (from < 0 || from >= n || to < 0 || to >= n) return false;
  return matrix_[static_cast<std::size_t>(from)][static_cast<std::size_t>(to)];
}

Framework FrameworkBuilder::build() const {
  Framework f;
  f.n_ = size();
  f.labels_ = labels_;
  f.index_ = index_;
  f.targets_.assign(static_cast<std::size_t>(f.n_), ArgumentSet(f.n_));
  f.attackers_.assign(static_cast<std::size_t>(f.n_), ArgumentSet(f.n_));
  int count = 0;
  for (int from = 0; from < f.n_; ++from) {
    for (int to = 0; to < f.n_; ++to) {
      if (!matrix_[static_cast<std::size_t>(from)][static_cast<std::size_t>(to)]) continue;
      f.targets_[static_cast<std::size_t>(from)].insert(to);
      f.attackers_[static_cast<std::size_t>(to)].insert(from);
      ++count;
    }
  }
  f.attack_count_ = count;
  return f;
}

}  // namespace prefcast
