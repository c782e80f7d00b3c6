#include "leavitt/vertex_set.hpp"

#include <algorithm>
#include <bit>

#include "leavitt/error.hpp"

namespace leavitt {

VertexSet::VertexSet(std::size_t universe)
    : universe_(universe), words_((universe + 63) / 64, 0) {}

VertexSet::VertexSet(std::size_t universe, std::initializer_list<VertexId> members)
    : VertexSet(universe) {
  for (VertexId v : members) insert(v);
}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  for (std::size_t v = 0; v < universe; ++v) s.insert(static_cast<VertexId>(v));
  return s;
}

VertexSet VertexSet::from_members(std::size_t universe, const std::vector<VertexId>& members) {
  VertexSet s(universe);
  for (VertexId v : members) s.insert(v);
  return s;
}

std::size_t VertexSet::size() const noexcept {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool VertexSet::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
}

void VertexSet::insert(VertexId v) {
  if (v >= universe_) throw_argument("vertex index out of range");
  words_[v / 64] |= std::uint64_t{1} << (v % 64);
}

void VertexSet::erase(VertexId v) {
  if (v >= universe_) throw_argument("vertex index out of range");
  words_[v / 64] &= ~(std::uint64_t{1} << (v % 64));
}

std::vector<VertexId> VertexSet::members() const {
  std::vector<VertexId> out;
  for_each([&](VertexId v) { out.push_back(v); });
  return out;
}

void VertexSet::check_universe(const VertexSet& o) const {
  if (universe_ != o.universe_) throw_argument("vertex sets over different graphs");
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  check_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  return true;
}

bool VertexSet::intersects(const VertexSet& other) const {
  check_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & other.words_[i]) != 0) return true;
  return false;
}

VertexSet VertexSet::complement() const {
  return full(universe_) - *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
  check_universe(o);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
  check_universe(o);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& o) {
  check_universe(o);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
  return *this;
}

std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  const auto ma = a.members();
  const auto mb = b.members();
  if (auto c = std::lexicographical_compare_three_way(ma.begin(), ma.end(), mb.begin(), mb.end());
      c != 0)
    return c;
  return a.universe_ <=> b.universe_;
}

}  // namespace leavitt
