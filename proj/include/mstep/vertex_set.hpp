#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace mstep {

using Vertex = std::uint32_t;
using Word = std::uint64_t;

inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t n) {
  return (n + kWordBits - 1) / kWordBits;
}

namespace bits {

template <class Container>
std::span<const Word> view(const Container& c) {
  return {c.data(), c.size()};
}

template <class Container>
std::span<Word> mutable_view(Container& c) {
  return {c.data(), c.size()};
}

inline bool test(std::span<const Word> row, Vertex v) {
  return (row[v / kWordBits] >> (v % kWordBits)) & 1U;
}

inline void set(std::span<Word> row, Vertex v) {
  row[v / kWordBits] |= Word{1} << (v % kWordBits);
}

inline bool any(std::span<const Word> row) {
  return std::any_of(row.begin(), row.end(), [](Word w) { return w != 0; });
}

inline bool intersects(std::span<const Word> a, std::span<const Word> b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] & b[i]) return true;
  }
  return false;
}

inline std::size_t count(std::span<const Word> row) {
  std::size_t total = 0;
  for (Word w : row) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

// Calls f(v) for every set bit, in increasing order.
template <class F>
void for_each(std::span<const Word> row, F&& f) {
  for (std::size_t i = 0; i < row.size(); ++i) {
    Word w = row[i];
    while (w != 0) {
      const auto bit = static_cast<std::size_t>(std::countr_zero(w));
      f(static_cast<Vertex>(i * kWordBits + bit));
      w &= w - 1;
    }
  }
}

}  // namespace bits

/// A subset of {0, ..., universe-1}, one bit per vertex. Sets over the
/// same universe compare, combine and intersect word by word.
class VertexSet {
 public:
  using Storage = boost::container::small_vector<Word, 1>;

  VertexSet() = default;
  explicit VertexSet(std::size_t universe)
      : universe_(universe), words_(words_for(universe), 0) {}
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
      : VertexSet(universe) {
    for (Vertex v : members) insert(v);
  }

  static VertexSet from_words(std::size_t universe,
                              std::span<const Word> words) {
    VertexSet s(universe);
    std::copy(words.begin(), words.end(), s.words_.begin());
    return s;
  }

  static VertexSet full(std::size_t universe) {
    VertexSet s(universe);
    for (Vertex v = 0; v < universe; ++v) s.insert(v);
    return s;
  }

  std::size_t universe() const { return universe_; }
  std::span<const Word> words() const { return bits::view(words_); }
  std::span<Word> mutable_words() { return bits::mutable_view(words_); }

  bool contains(Vertex v) const {
    return v < universe_ && bits::test(words(), v);
  }
  void insert(Vertex v) { bits::set(mutable_words(), v); }
  void erase(Vertex v) {
    words_[v / kWordBits] &= ~(Word{1} << (v % kWordBits));
  }

  std::size_t size() const { return bits::count(words()); }
  bool empty() const { return !bits::any(words()); }

  std::optional<Vertex> first() const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] != 0) {
        return static_cast<Vertex>(i * kWordBits +
                                   std::countr_zero(words_[i]));
      }
    }
    return std::nullopt;
  }

  std::vector<Vertex> members() const {
    std::vector<Vertex> out;
    out.reserve(size());
    bits::for_each(words(), [&](Vertex v) { out.push_back(v); });
    return out;
  }

  template <class F>
  void for_each(F&& f) const {
    bits::for_each(words(), std::forward<F>(f));
  }

  bool intersects(const VertexSet& other) const {
    return bits::intersects(words(), other.words());
  }

  bool is_subset_of(const VertexSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & ~other.words_[i]) return false;
    }
    return true;
  }

  VertexSet& operator|=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }

  // Strict weak order on the packed words, for use as a map key.
  friend bool operator<(const VertexSet& a, const VertexSet& b) {
    return std::lexicographical_compare(a.words_.begin(), a.words_.end(),
                                        b.words_.begin(), b.words_.end());
  }

 private:
  std::size_t universe_ = 0;
  Storage words_;
};

}  // namespace mstep
