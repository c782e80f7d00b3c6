#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace leavitt {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

// Subset of a graph's vertex indices, stored as a fixed-universe bitset.
// Ordering is by cardinality, then lexicographic on the sorted members, which
// matches the lexicographic order of vertex names since indices follow it.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe);
  VertexSet(std::size_t universe, std::initializer_list<VertexId> members);

  static VertexSet full(std::size_t universe);
  static VertexSet from_members(std::size_t universe, const std::vector<VertexId>& members);

  std::size_t universe() const noexcept { return universe_; }
  std::size_t size() const noexcept;
  bool empty() const noexcept;
  bool contains(VertexId v) const noexcept {
    return v < universe_ && ((words_[v / 64] >> (v % 64)) & 1u) != 0;
  }
  void insert(VertexId v);
  void erase(VertexId v);

  std::vector<VertexId> members() const;
  bool is_subset_of(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;

  VertexSet complement() const;
  VertexSet& operator&=(const VertexSet& o);
  VertexSet& operator|=(const VertexSet& o);
  VertexSet& operator-=(const VertexSet& o);
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }
  friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b);

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int bit = __builtin_ctzll(bits);
        f(static_cast<VertexId>(w * 64 + bit));
        bits &= bits - 1;
      }
    }
  }

 private:
  void check_universe(const VertexSet& o) const;

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace leavitt
