#ifndef GJ_MATRIX_HPP
#define GJ_MATRIX_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gj/error.hpp"
#include "gj/field.hpp"

namespace gj {

// Square matrix of dimension 2 or 4 over a small finite field, row-major.
class Mat {
 public:
  Mat() : field_(nullptr), dim_(0) {}
  Mat(const FieldDesc& f, int dim);

  static Mat identity(const FieldDesc& f, int dim);
  // Builds from row-major integer entries reduced into the prime subfield.
  static Mat from_ints(const FieldDesc& f, int dim, std::initializer_list<int> entries);
  static Mat scalar(const FieldDesc& f, int dim, std::uint8_t c);

  const FieldDesc& field() const { return *field_; }
  int dim() const { return dim_; }

  std::uint8_t at(int r, int c) const { return e_[r * dim_ + c]; }
  void set(int r, int c, std::uint8_t v) { e_[r * dim_ + c] = v; }

  Mat operator*(const Mat& o) const;
  bool operator==(const Mat& o) const;
  bool operator!=(const Mat& o) const { return !(*this == o); }

  std::uint8_t det() const;
  // Gaussian elimination; throws SingularMatrix.
  Mat inverse() const;

  // Canonical byte serialization (field parameters, dimension, entries).
  std::string key() const;

  std::string describe() const;

 private:
  void check_compatible(const Mat& o) const;

  const FieldDesc* field_;
  int dim_;
  std::array<std::uint8_t, 16> e_{};
};

// Kronecker product of two 2x2 matrices over the same field (4x4 result,
// block (i,j) equals a(i,j) * b).
Mat kron(const Mat& a, const Mat& b);

struct ConjugationSolution {
  // An invertible T with T*X_i = Y_i*T for all i, normalized so that the
  // first nonzero entry in row-major order is 1.  Empty when the solution
  // space is zero.
  std::optional<Mat> T;
  int space_dim = 0;
};

// Solves the simultaneous conjugation problem T*X_i = Y_i*T.  Reports the
// dimension of the full solution space; throws NoInvertibleSolution when the
// space is nonzero but contains no invertible element.
ConjugationSolution solve_conjugation(const std::vector<Mat>& xs, const std::vector<Mat>& ys);

enum class ClassicalKind { SL, GL };

// Standard generating matrices for SL2/GL2 over F_q, q in {3,5,9}.
std::vector<Mat> classical_generators(ClassicalKind kind, int q);

}  // namespace gj

#endif
