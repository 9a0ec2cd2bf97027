#include "prefcast/set_family.hpp"

#include <algorithm>
#include <stdexcept>

namespace prefcast {

SetFamily SetFamily::from_vector(int bound, std::vector<ArgumentSet> members) {
  SetFamily f(bound);
  for (const auto& s : members)
    if (s.bound() != bound)
      throw std::invalid_argument("SetFamily: member bound mismatch");
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  f.members_ = std::move(members);
  return f;
}

void SetFamily::insert(ArgumentSet s) {
  if (s.bound() != bound_)
    throw std::invalid_argument("SetFamily: member bound mismatch");
  auto it = std::lower_bound(members_.begin(), members_.end(), s);
  if (it != members_.end() && *it == s) return;
  members_.insert(it, std::move(s));
}

bool SetFamily::contains(const ArgumentSet& s) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), s);
  return it != members_.end() && *it == s;
}

bool SetFamily::operator==(const SetFamily& other) const {
  return bound_ == other.bound_ && members_ == other.members_;
}

SetFamily maximal_members(const SetFamily& family) {
  std::vector<ArgumentSet> out;
  for (int i = 0; i < family.size(); ++i) {
    bool maximal = true;
    for (int j = 0; j < family.size() && maximal; ++j) {
      if (i == j) continue;
      if (family[i].subset_of(family[j]) && family[i] != family[j]) maximal = false;
    }
    if (maximal) out.push_back(family[i]);
  }
  return SetFamily::from_vector(family.bound(), std::move(out));
}

}  // namespace prefcast
