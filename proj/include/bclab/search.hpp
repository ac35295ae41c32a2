#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

namespace bclab {

/// Node limit for an exact search. Every solver counts one node per recursive call.
struct SearchBudget {
  std::uint64_t max_nodes = std::numeric_limits<std::uint64_t>::max();
};

/// Number of blocks in a decomposition, or "infinite" when none exists.
/// Addition saturates at infinity.
class BlockCount {
 public:
  constexpr BlockCount() = default;
  constexpr explicit BlockCount(int v) : value_(v) {}
  static constexpr BlockCount infinite() { return BlockCount(kInf); }

  constexpr bool is_infinite() const { return value_ >= kInf; }
  constexpr int value() const { return value_; }

  friend constexpr BlockCount operator+(BlockCount a, BlockCount b) {
    if (a.is_infinite() || b.is_infinite()) return infinite();
    return BlockCount(a.value_ + b.value_);
  }
  friend constexpr auto operator<=>(BlockCount, BlockCount) = default;

  std::string to_string() const { return is_infinite() ? "inf" : std::to_string(value_); }

 private:
  static constexpr int kInf = std::numeric_limits<int>::max() / 4;
  int value_ = 0;
};

/// Thrown when a search exhausts its node budget. Carries the bounds known at that point.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, BlockCount lower, BlockCount upper)
      : std::runtime_error(what), lower_(lower), upper_(upper) {}
  BlockCount lower_bound() const { return lower_; }
  BlockCount upper_bound() const { return upper_; }

 private:
  BlockCount lower_;
  BlockCount upper_;
};

namespace detail {

class NodeCounter {
 public:
  explicit NodeCounter(SearchBudget budget) : limit_(budget.max_nodes) {}
  /// Returns false once the limit is exceeded.
  bool tick() { return ++nodes_ <= limit_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  std::uint64_t limit_;
  std::uint64_t nodes_ = 0;
};

}  // namespace detail
}  // namespace bclab
