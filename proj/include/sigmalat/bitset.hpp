#ifndef SIGMALAT_BITSET_HPP
#define SIGMALAT_BITSET_HPP

#include <cstdint>
#include <vector>

namespace sigmalat {

// Fixed-size dynamic bitset tuned for the lattice bitmatrix work:
// first/last common bit of two rows, in-place or, subset tests.
class Bitset {
public:
  Bitset() = default;
  explicit Bitset(std::size_t nbits)
      : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

  std::size_t size() const { return nbits_; }

  void set(std::size_t i) { words_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1;
  }

  void clear() { words_.assign(words_.size(), 0); }

  Bitset& operator|=(const Bitset& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
    return *this;
  }
  Bitset& operator&=(const Bitset& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= o.words_[w];
    return *this;
  }

  bool is_subset_of(const Bitset& o) const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w] & ~o.words_[w]) return false;
    return true;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (std::uint64_t w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  std::size_t find_first() const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w]) return (w << 6) + static_cast<std::size_t>(__builtin_ctzll(words_[w]));
    return npos;
  }

  std::size_t find_next(std::size_t i) const {
    ++i;
    if (i >= nbits_) return npos;
    std::size_t w = i >> 6;
    std::uint64_t cur = words_[w] & (~std::uint64_t{0} << (i & 63));
    while (true) {
      if (cur) return (w << 6) + static_cast<std::size_t>(__builtin_ctzll(cur));
      if (++w == words_.size()) return npos;
      cur = words_[w];
    }
  }

  // First bit of (*this & o); npos if disjoint.
  std::size_t first_common(const Bitset& o) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t x = words_[w] & o.words_[w];
      if (x) return (w << 6) + static_cast<std::size_t>(__builtin_ctzll(x));
    }
    return npos;
  }

  // Last bit of (*this & o); npos if disjoint.
  std::size_t last_common(const Bitset& o) const {
    for (std::size_t w = words_.size(); w-- > 0;) {
      std::uint64_t x = words_[w] & o.words_[w];
      if (x) return (w << 6) + 63 - static_cast<std::size_t>(__builtin_clzll(x));
    }
    return npos;
  }

private:
  std::size_t nbits_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace sigmalat

#endif
