#pragma once

#include <stdexcept>
#include <string>

#include "prefcast/framework.hpp"
#include "prefcast/set_family.hpp"

namespace prefcast {

enum class Semantics { kConflictFree, kNaive, kSelfDefending, kAdmissible, kPreferred };

inline constexpr int kDefaultOracleLimit = 24;

// Raised when an exhaustive computation is asked for more arguments than the
// configured limit allows.
class OracleLimitError : public std::runtime_error {
 public:
  OracleLimitError(int n, int limit)
      : std::runtime_error("oracle refuses " + std::to_string(n) +
                           " arguments (limit " + std::to_string(limit) +
                           "); raise the oracle limit or use a streaming task"),
        n_(n),
        limit_(limit) {}
  int n() const { return n_; }
  int limit() const { return limit_; }

 private:
  int n_;
  int limit_;
};

// Exact family of the requested semantics by exhaustive scan over all 2^n
// subsets. Deliberately simple; every fast path in the library is tested
// against this.
SetFamily enum_family(const Framework& f, Semantics semantics,
                      int limit = kDefaultOracleLimit);

}  // namespace prefcast
