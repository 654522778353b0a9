#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sumprod/harness.hpp"

namespace sumprod::harness::detail {

struct SetSlot {
  std::string name;
  bool nonzero_only = false;  // subsets of Z_p^* instead of Z_p
};

struct ScalarSlot {
  std::string name;
  std::int64_t lo;
  std::int64_t hi;
};

struct Shape {
  std::vector<SetSlot> sets;
  std::vector<ScalarSlot> scalars;
};

/// Indexable enumeration of every instance of a lemma within caps: the
/// shapes are concatenated, and inside a shape the last slot varies fastest.
class ExhaustiveSpace {
 public:
  /// Throws BudgetExceeded when the space is larger than caps.budget.
  ExhaustiveSpace(LemmaId id, PrimeModulus p, const Caps& caps);

  std::uint64_t size() const noexcept { return total_; }
  BoundInstance at(std::uint64_t index) const;

 private:
  PrimeModulus p_;
  std::vector<Shape> shapes_;
  std::vector<std::uint64_t> all_, nonzero_, sizes_;
  std::uint64_t total_ = 0;
};

}  // namespace sumprod::harness::detail
