#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace bclab {

/// Fixed-universe bitset over vertices 0..universe()-1.
class VertexSet {
 public:
  static constexpr int kBits = 64;

  VertexSet() = default;
  explicit VertexSet(int universe) : universe_(universe), words_(word_count(universe), 0) {
    if (universe < 0) throw std::invalid_argument("VertexSet: negative universe");
  }
  VertexSet(int universe, std::initializer_list<int> members) : VertexSet(universe) {
    for (int v : members) insert(v);
  }
  template <typename Range>
  static VertexSet from_range(int universe, const Range& members) {
    VertexSet s(universe);
    for (int v : members) s.insert(v);
    return s;
  }
  static VertexSet full(int universe) {
    VertexSet s(universe);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    s.trim();
    return s;
  }

  int universe() const { return universe_; }

  /// Same members over a different universe; throws if a member does not fit.
  VertexSet with_universe(int universe) const {
    if (universe == universe_) return *this;
    VertexSet s(universe);
    for_each([&](int v) { s.insert(v); });
    return s;
  }
  const std::vector<std::uint64_t>& words() const { return words_; }

  bool contains(int v) const {
    return v >= 0 && v < universe_ && ((words_[v / kBits] >> (v % kBits)) & 1u);
  }
  void insert(int v) {
    check(v);
    words_[v / kBits] |= std::uint64_t{1} << (v % kBits);
  }
  void erase(int v) {
    check(v);
    words_[v / kBits] &= ~(std::uint64_t{1} << (v % kBits));
  }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }
  bool any() const { return !empty(); }

  /// Smallest member, or -1 when empty.
  int first() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return static_cast<int>(i) * kBits + std::countr_zero(words_[i]);
    return -1;
  }
  /// Smallest member strictly greater than v, or -1.
  int next(int v) const {
    int start = v + 1;
    if (start >= universe_) return -1;
    std::size_t i = static_cast<std::size_t>(start / kBits);
    std::uint64_t w = words_[i] & (~std::uint64_t{0} << (start % kBits));
    while (true) {
      if (w) return static_cast<int>(i) * kBits + std::countr_zero(w);
      if (++i == words_.size()) return -1;
      w = words_[i];
    }
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        fn(static_cast<int>(i) * kBits + std::countr_zero(w));
        w &= w - 1;
      }
    }
  }
  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for_each([&](int v) { out.push_back(v); });
    return out;
  }

  bool intersects(const VertexSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  bool is_subset_of(const VertexSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  int intersection_count(const VertexSet& o) const {
    int c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & o.words_[i]);
    return c;
  }

  VertexSet& operator&=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  /// Set difference.
  VertexSet& operator-=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  VertexSet complement() const {
    VertexSet s(*this);
    for (auto& w : s.words_) w = ~w;
    s.trim();
    return s;
  }

  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  static std::size_t word_count(int universe) {
    return universe <= 0 ? 0 : static_cast<std::size_t>((universe + kBits - 1) / kBits);
  }
  void check(int v) const {
    if (v < 0 || v >= universe_) throw std::out_of_range("VertexSet: vertex out of range");
  }
  void trim() {
    if (universe_ % kBits != 0 && !words_.empty())
      words_.back() &= (std::uint64_t{1} << (universe_ % kBits)) - 1;
  }

  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace bclab
