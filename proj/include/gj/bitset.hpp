#ifndef GJ_BITSET_HPP
#define GJ_BITSET_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace gj {

// Fixed-capacity bit vector used for element sets of a group of known order.
// Bit i set means element index i belongs to the set.
class Bitvec {
 public:
  Bitvec() : nbits_(0) {}
  explicit Bitvec(std::size_t nbits) : words_((nbits + 63) / 64, 0), nbits_(nbits) {}

  std::size_t size() const { return nbits_; }

  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  std::size_t count() const {
    std::size_t c = 0;
    for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool none() const {
    for (std::uint64_t w : words_)
      if (w) return false;
    return true;
  }

  Bitvec& operator|=(const Bitvec& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  Bitvec& operator&=(const Bitvec& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }

  bool operator==(const Bitvec& o) const { return nbits_ == o.nbits_ && words_ == o.words_; }
  bool operator!=(const Bitvec& o) const { return !(*this == o); }

  bool is_subset_of(const Bitvec& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  // Lexicographic order on the bit string b_0 b_1 ... b_{n-1} with 0 < 1:
  // the set whose first differing index is absent compares smaller.
  static bool lex_less(const Bitvec& a, const Bitvec& b) {
    for (std::size_t i = 0; i < a.words_.size(); ++i) {
      std::uint64_t d = a.words_[i] ^ b.words_[i];
      if (d) {
        int tz = std::countr_zero(d);
        return ((a.words_[i] >> tz) & 1u) == 0;
      }
    }
    return false;
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w) {
        int tz = std::countr_zero(w);
        fn(static_cast<std::size_t>(wi * 64 + tz));
        w &= w - 1;
      }
    }
  }

  std::vector<std::uint32_t> indices() const {
    std::vector<std::uint32_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(static_cast<std::uint32_t>(i)); });
    return out;
  }

  std::size_t hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull ^ nbits_;
    for (std::uint64_t w : words_) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      h *= 0xff51afd7ed558ccdull;
    }
    return static_cast<std::size_t>(h);
  }

  struct Hash {
    std::size_t operator()(const Bitvec& b) const { return b.hash(); }
  };

 private:
  std::vector<std::uint64_t> words_;
  std::size_t nbits_;
};

}  // namespace gj

#endif
