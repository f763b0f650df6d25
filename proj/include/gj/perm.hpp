#ifndef GJ_PERM_HPP
#define GJ_PERM_HPP

#include <array>
#include <cstdint>
#include <initializer_list>
#include <string>

#include "gj/error.hpp"

namespace gj {

// Permutation of {0, ..., n-1} for n <= 64, stored as an image array.
class Perm {
 public:
  static constexpr int kMaxDegree = 64;

  explicit Perm(int n) : n_(n) {
    if (n < 1 || n > kMaxDegree) throw Error("permutation degree must be in [1,64]");
    for (int i = 0; i < n; ++i) img_[i] = static_cast<std::uint8_t>(i);
  }

  static Perm identity(int n) { return Perm(n); }

  // Single cycle (c0 c1 ... ck) on degree n.
  static Perm cycle(int n, std::initializer_list<int> pts) {
    Perm p(n);
    int prev = -1, first = -1;
    for (int v : pts) {
      if (v < 0 || v >= n) throw Error("cycle point out of range");
      if (first < 0)
        first = v;
      else
        p.img_[prev] = static_cast<std::uint8_t>(v);
      prev = v;
    }
    if (prev >= 0 && first >= 0) p.img_[prev] = static_cast<std::uint8_t>(first);
    return p;
  }

  int degree() const { return n_; }
  int apply(int i) const { return img_[i]; }

  // Composition acting left-to-right is not used; (p*q)(i) = p(q(i)).
  Perm operator*(const Perm& o) const {
    if (n_ != o.n_) throw InconsistentElement("permutation degrees differ");
    Perm r(n_);
    for (int i = 0; i < n_; ++i) r.img_[i] = img_[o.img_[i]];
    return r;
  }

  Perm inverse() const {
    Perm r(n_);
    for (int i = 0; i < n_; ++i) r.img_[img_[i]] = static_cast<std::uint8_t>(i);
    return r;
  }

  bool operator==(const Perm& o) const {
    if (n_ != o.n_) return false;
    for (int i = 0; i < n_; ++i)
      if (img_[i] != o.img_[i]) return false;
    return true;
  }

  std::string key() const {
    std::string k;
    k.reserve(n_ + 1);
    k.push_back(static_cast<char>(n_));
    for (int i = 0; i < n_; ++i) k.push_back(static_cast<char>(img_[i]));
    return k;
  }

 private:
  int n_;
  std::array<std::uint8_t, kMaxDegree> img_{};
};

}  // namespace gj

#endif
