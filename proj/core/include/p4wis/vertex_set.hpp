#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <optional>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "p4wis/errors.hpp"

namespace p4wis {

/// Subset of {0, ..., universe-1} stored as a bit vector, inline up to 256
/// vertices. Iteration is in ascending vertex order. Binary operations
/// require equal universes.
class VertexSet {
 public:
  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    const_iterator() = default;
    const_iterator(const std::uint64_t* words, std::size_t nwords,
                   std::size_t word)
        : words_(words), nwords_(nwords), word_(word) {
      if (word_ < nwords_) {
        current_ = words_[word_];
        advance_to_set_bit();
      }
    }

    Vertex operator*() const {
      return static_cast<Vertex>(word_ * 64 + std::countr_zero(current_));
    }
    const_iterator& operator++() {
      current_ &= current_ - 1;
      advance_to_set_bit();
      return *this;
    }
    const_iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    friend bool operator==(const const_iterator& x, const const_iterator& y) {
      return x.word_ == y.word_ && x.current_ == y.current_;
    }

   private:
    void advance_to_set_bit() {
      while (current_ == 0) {
        if (++word_ >= nwords_) {
          word_ = nwords_;
          return;
        }
        current_ = words_[word_];
      }
    }

    const std::uint64_t* words_ = nullptr;
    std::size_t nwords_ = 0;
    std::size_t word_ = 0;
    std::uint64_t current_ = 0;
  };

  VertexSet() = default;
  explicit VertexSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
      : VertexSet(universe) {
    for (Vertex v : members) insert(v);
  }

  static VertexSet full(std::size_t universe) {
    VertexSet s(universe);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    s.trim();
    return s;
  }
  template <typename Range>
  static VertexSet from(std::size_t universe, const Range& members) {
    VertexSet s(universe);
    for (auto v : members) s.insert(static_cast<Vertex>(v));
    return s;
  }

  std::size_t universe() const noexcept { return universe_; }

  bool contains(Vertex v) const noexcept {
    return v < universe_ && ((words_[v >> 6] >> (v & 63)) & 1u);
  }
  void insert(Vertex v) {
    check(v);
    words_[v >> 6] |= std::uint64_t{1} << (v & 63);
  }
  void erase(Vertex v) {
    check(v);
    words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
  }

  std::size_t size() const noexcept {
    std::size_t total = 0;
    for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }
  bool empty() const noexcept {
    for (auto w : words_)
      if (w) return false;
    return true;
  }
  std::optional<Vertex> first() const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i])
        return static_cast<Vertex>(i * 64 + std::countr_zero(words_[i]));
    return std::nullopt;
  }

  bool intersects(const VertexSet& other) const {
    same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & other.words_[i]) return true;
    return false;
  }
  bool is_subset_of(const VertexSet& other) const {
    same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }
  /// |this ∩ other| without materializing the intersection.
  std::size_t count_common(const VertexSet& other) const {
    same_universe(other);
    std::size_t total = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      total += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
    return total;
  }

  VertexSet& operator|=(const VertexSet& other) {
    same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& other) {
    same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& other) {
    same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
  }
  friend VertexSet operator|(VertexSet x, const VertexSet& y) { return x |= y; }
  friend VertexSet operator&(VertexSet x, const VertexSet& y) { return x &= y; }
  friend VertexSet operator-(VertexSet x, const VertexSet& y) { return x -= y; }

  VertexSet without(Vertex v) const {
    VertexSet copy = *this;
    copy.erase(v);
    return copy;
  }
  VertexSet with(Vertex v) const {
    VertexSet copy = *this;
    copy.insert(v);
    return copy;
  }

  const_iterator begin() const {
    return const_iterator(words_.data(), words_.size(), 0);
  }
  const_iterator end() const {
    return const_iterator(words_.data(), words_.size(), words_.size());
  }

  std::vector<Vertex> to_vector() const {
    std::vector<Vertex> out;
    out.reserve(size());
    for (Vertex v : *this) out.push_back(v);
    return out;
  }

  friend bool operator==(const VertexSet& x, const VertexSet& y) {
    return x.universe_ == y.universe_ && x.words_ == y.words_;
  }
  /// Lexicographic order on the ascending member lists.
  friend std::strong_ordering operator<=>(const VertexSet& x,
                                         const VertexSet& y) {
    auto xi = x.begin(), yi = y.begin();
    const auto xe = x.end(), ye = y.end();
    for (; xi != xe && yi != ye; ++xi, ++yi) {
      if (*xi != *yi) return *xi <=> *yi;
    }
    if (xi == xe && yi == ye) return x.universe_ <=> y.universe_;
    return xi == xe ? std::strong_ordering::less : std::strong_ordering::greater;
  }

 private:
  void check(Vertex v) const {
    if (v >= universe_)
      throw InputError("vertex " + std::to_string(v) + " out of range (n=" +
                       std::to_string(universe_) + ")");
  }
  void same_universe(const VertexSet& other) const {
    if (universe_ != other.universe_)
      throw InputError("vertex sets over different universes");
  }
  void trim() {
    if (universe_ % 64 && !words_.empty())
      words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
  }

  std::size_t universe_ = 0;
  boost::container::small_vector<std::uint64_t, 4> words_;
};

}  // namespace p4wis
