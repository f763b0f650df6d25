#include "gj/field.hpp"

#include <map>
#include <mutex>

namespace gj {
namespace {

constexpr int mod_pos(int a, int p) { return ((a % p) + p) % p; }

std::array<int, 2> default_modulus(int p) {
  // x^2+x+1 over F_2, x^2+1 over F_3, x^2+2 over F_5; all irreducible.
  if (p == 2) return {1, 1};
  if (p == 3) return {1, 0};
  return {2, 0};
}

}  // namespace

FieldDesc FieldDesc::make(int p, int d, std::array<int, 2> modulus) {
  if ((p != 2 && p != 3 && p != 5) || (d != 1 && d != 2))
    throw Error("field_make: supported parameters are p in {2,3,5}, d in {1,2}");
  FieldDesc f;
  f.p_ = p;
  f.d_ = d;
  f.q_ = (d == 1) ? p : p * p;
  f.modulus_ = {mod_pos(modulus[0], p), mod_pos(modulus[1], p)};
  if (d == 2) {
    // Degree-2 irreducibility is exactly the absence of a root.
    for (int r = 0; r < p; ++r) {
      if (mod_pos(r * r + f.modulus_[1] * r + f.modulus_[0], p) == 0)
        throw ReduciblePolynomial("field_make: modulus has root " + std::to_string(r) +
                                  " over F_" + std::to_string(p));
    }
  }
  const int q = f.q_;
  auto pair_of = [&](int e) { return std::array<int, 2>{e % p, e / p}; };
  for (int a = 0; a < q; ++a) {
    auto [a0, a1] = pair_of(a);
    f.neg_[a] = static_cast<std::uint8_t>(mod_pos(-a0, p) + p * mod_pos(-a1, p));
    for (int b = 0; b < q; ++b) {
      auto [b0, b1] = pair_of(b);
      f.add_[a * kMaxQ + b] =
          static_cast<std::uint8_t>(mod_pos(a0 + b0, p) + p * mod_pos(a1 + b1, p));
      // (a0 + a1 x)(b0 + b1 x) with x^2 = -c1 x - c0.
      int t0 = a0 * b0;
      int t1 = a0 * b1 + a1 * b0;
      int t2 = a1 * b1;
      t1 -= t2 * f.modulus_[1];
      t0 -= t2 * f.modulus_[0];
      f.mul_[a * kMaxQ + b] = static_cast<std::uint8_t>(mod_pos(t0, p) + p * mod_pos(t1, p));
    }
  }
  for (int a = 1; a < q; ++a) {
    for (int b = 1; b < q; ++b) {
      if (f.mul_[a * kMaxQ + b] == 1) {
        f.inv_[a] = static_cast<std::uint8_t>(b);
        break;
      }
    }
  }
  return f;
}

FieldDesc FieldDesc::make(int p, int d) { return make(p, d, default_modulus(p)); }

std::uint8_t FieldDesc::inv(std::uint8_t a) const {
  if (a == 0) throw Error("field inverse of zero");
  return inv_[a];
}

std::uint8_t FieldDesc::mult_generator() const {
  for (int g = 1; g < q_; ++g) {
    int order = 1;
    std::uint8_t x = static_cast<std::uint8_t>(g);
    while (x != 1) {
      x = mul(x, static_cast<std::uint8_t>(g));
      ++order;
    }
    if (order == q_ - 1) return static_cast<std::uint8_t>(g);
  }
  throw Error("no multiplicative generator found");
}

std::string FieldDesc::describe() const {
  if (d_ == 1) return "F" + std::to_string(q_);
  return "F" + std::to_string(q_) + "=F" + std::to_string(p_) + "[x]/(x^2+" +
         std::to_string(modulus_[1]) + "x+" + std::to_string(modulus_[0]) + ")";
}

const FieldDesc& gf(int p, int d) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, FieldDesc> cache;
  std::lock_guard<std::mutex> lk(mu);
  auto key = std::make_pair(p, d);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, FieldDesc::make(p, d)).first;
  return it->second;
}

}  // namespace gj
