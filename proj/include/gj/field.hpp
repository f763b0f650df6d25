#ifndef GJ_FIELD_HPP
#define GJ_FIELD_HPP

#include <array>
#include <cstdint>
#include <string>

#include "gj/error.hpp"

namespace gj {

// Finite field of order p^d for p in {2,3,5}, d in {1,2}, with exact
// table-based arithmetic.  For d = 2 the field is F_p[x]/(x^2 + c1 x + c0)
// and elements are encoded as a0 + p*a1 for a0 + a1*x.
class FieldDesc {
 public:
  static constexpr int kMaxQ = 25;

  // Monic modulus given by coefficients {c0, c1} of x^2 + c1 x + c0.
  // For d = 1 the modulus is ignored.
  static FieldDesc make(int p, int d, std::array<int, 2> modulus);
  // Uses a fixed default modulus per (p, d): x^2+x+1 over F_2,
  // x^2+1 over F_3, x^2+2 over F_5.
  static FieldDesc make(int p, int d);

  int p() const { return p_; }
  int d() const { return d_; }
  int q() const { return q_; }
  std::array<int, 2> modulus() const { return modulus_; }

  std::uint8_t add(std::uint8_t a, std::uint8_t b) const { return add_[a * kMaxQ + b]; }
  std::uint8_t sub(std::uint8_t a, std::uint8_t b) const { return add_[a * kMaxQ + neg_[b]]; }
  std::uint8_t mul(std::uint8_t a, std::uint8_t b) const { return mul_[a * kMaxQ + b]; }
  std::uint8_t neg(std::uint8_t a) const { return neg_[a]; }
  // Multiplicative inverse; a must be nonzero.
  std::uint8_t inv(std::uint8_t a) const;

  std::uint8_t zero() const { return 0; }
  std::uint8_t one() const { return 1; }

  // Smallest generator of the multiplicative group.
  std::uint8_t mult_generator() const;

  // Element encoding x (the adjoined root) for d = 2.
  std::uint8_t gen_x() const { return static_cast<std::uint8_t>(p_); }

  bool same_field(const FieldDesc& o) const {
    return p_ == o.p_ && d_ == o.d_ && modulus_ == o.modulus_;
  }

  std::string describe() const;

 private:
  FieldDesc() = default;

  int p_ = 0, d_ = 0, q_ = 0;
  std::array<int, 2> modulus_{0, 0};
  std::array<std::uint8_t, kMaxQ * kMaxQ> add_{};
  std::array<std::uint8_t, kMaxQ * kMaxQ> mul_{};
  std::array<std::uint8_t, kMaxQ> neg_{};
  std::array<std::uint8_t, kMaxQ> inv_{};
};

// Canonical shared instance per (p, d) with the default modulus.
const FieldDesc& gf(int p, int d);

}  // namespace gj

#endif
