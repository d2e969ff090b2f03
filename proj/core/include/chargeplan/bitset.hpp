#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace chargeplan {

/// Fixed-universe bitset over locations of interest. All binary operations
/// require operands with equal universe sizes.
class InterestSet {
 public:
  InterestSet() = default;
  explicit InterestSet(std::size_t universe)
      : size_(universe), words_((universe + 63) / 64, 0) {}

  std::size_t universe_size() const { return size_; }

  bool empty() const { return count() == 0; }

  std::size_t count() const {
    std::size_t n = 0;
    for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  void set(std::size_t i) {
    assert(i < size_);
    words_[i >> 6] |= (std::uint64_t{1} << (i & 63));
  }

  void reset(std::size_t i) {
    assert(i < size_);
    words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }

  bool test(std::size_t i) const {
    assert(i < size_);
    return (words_[i >> 6] >> (i & 63)) & 1;
  }

  /// Sets every element of the universe.
  void fill() {
    for (auto& w : words_) w = ~std::uint64_t{0};
    trim();
  }

  InterestSet& operator|=(const InterestSet& o) {
    assert(size_ == o.size_);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }

  InterestSet& operator&=(const InterestSet& o) {
    assert(size_ == o.size_);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }

  /// Removes every element of `o` from this set.
  InterestSet& subtract(const InterestSet& o) {
    assert(size_ == o.size_);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
    return *this;
  }

  /// |this \ o| without materializing the difference.
  std::size_t count_not_in(const InterestSet& o) const {
    assert(size_ == o.size_);
    std::size_t n = 0;
    for (std::size_t k = 0; k < words_.size(); ++k)
      n += static_cast<std::size_t>(std::popcount(words_[k] & ~o.words_[k]));
    return n;
  }

  /// True iff o is a subset of this set.
  bool contains_all(const InterestSet& o) const {
    assert(size_ == o.size_);
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (o.words_[k] & ~words_[k]) return false;
    return true;
  }

  bool intersects(const InterestSet& o) const {
    assert(size_ == o.size_);
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & o.words_[k]) return true;
    return false;
  }

  friend InterestSet operator|(InterestSet a, const InterestSet& b) {
    a |= b;
    return a;
  }

  friend bool operator==(const InterestSet&, const InterestSet&) = default;

  std::vector<std::uint32_t> to_indices() const {
    std::vector<std::uint32_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(static_cast<std::uint32_t>(i)); });
    return out;
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w) {
        const int b = std::countr_zero(w);
        fn(k * 64 + static_cast<std::size_t>(b));
        w &= w - 1;
      }
    }
  }

 private:
  void trim() {
    const std::size_t tail = size_ & 63;
    if (tail != 0 && !words_.empty())
      words_.back() &= (std::uint64_t{1} << tail) - 1;
  }

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace chargeplan
