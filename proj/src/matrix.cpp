#include "gj/matrix.hpp"

#include <algorithm>

namespace gj {

Mat::Mat(const FieldDesc& f, int dim) : field_(&f), dim_(dim) {
  if (dim != 2 && dim != 4) throw Error("matrix dimension must be 2 or 4");
}

Mat Mat::identity(const FieldDesc& f, int dim) {
  Mat m(f, dim);
  for (int i = 0; i < dim; ++i) m.set(i, i, 1);
  return m;
}

Mat Mat::scalar(const FieldDesc& f, int dim, std::uint8_t c) {
  Mat m(f, dim);
  for (int i = 0; i < dim; ++i) m.set(i, i, c);
  return m;
}

Mat Mat::from_ints(const FieldDesc& f, int dim, std::initializer_list<int> entries) {
  Mat m(f, dim);
  if (static_cast<int>(entries.size()) != dim * dim)
    throw Error("from_ints: wrong number of entries");
  int i = 0;
  for (int v : entries) {
    int r = ((v % f.p()) + f.p()) % f.p();
    m.e_[i++] = static_cast<std::uint8_t>(r);
  }
  return m;
}

void Mat::check_compatible(const Mat& o) const {
  if (!field_ || !o.field_ || dim_ != o.dim_ || !field_->same_field(*o.field_))
    throw InconsistentElement("matrix operands live in different carriers");
}

Mat Mat::operator*(const Mat& o) const {
  check_compatible(o);
  const FieldDesc& f = *field_;
  Mat r(f, dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) {
      std::uint8_t acc = 0;
      for (int k = 0; k < dim_; ++k) acc = f.add(acc, f.mul(at(i, k), o.at(k, j)));
      r.set(i, j, acc);
    }
  return r;
}

bool Mat::operator==(const Mat& o) const {
  return field_ && o.field_ && dim_ == o.dim_ && field_->same_field(*o.field_) &&
         std::equal(e_.begin(), e_.begin() + dim_ * dim_, o.e_.begin());
}

std::uint8_t Mat::det() const {
  const FieldDesc& f = *field_;
  if (dim_ == 2) return f.sub(f.mul(at(0, 0), at(1, 1)), f.mul(at(0, 1), at(1, 0)));
  // Gaussian elimination with column pivoting, tracking the sign via swaps.
  std::array<std::uint8_t, 16> a = e_;
  auto el = [&](int r, int c) -> std::uint8_t& { return a[r * 4 + c]; };
  std::uint8_t d = 1;
  for (int col = 0; col < 4; ++col) {
    int piv = -1;
    for (int r = col; r < 4; ++r)
      if (el(r, col) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != col) {
      for (int c = 0; c < 4; ++c) std::swap(el(piv, c), el(col, c));
      d = f.neg(d);
    }
    d = f.mul(d, el(col, col));
    std::uint8_t ipiv = f.inv(el(col, col));
    for (int r = col + 1; r < 4; ++r) {
      std::uint8_t factor = f.mul(el(r, col), ipiv);
      if (factor == 0) continue;
      for (int c = col; c < 4; ++c) el(r, c) = f.sub(el(r, c), f.mul(factor, el(col, c)));
    }
  }
  return d;
}

Mat Mat::inverse() const {
  const FieldDesc& f = *field_;
  const int n = dim_;
  std::vector<std::uint8_t> a(e_.begin(), e_.begin() + n * n);
  Mat inv = Mat::identity(f, n);
  auto el = [&](int r, int c) -> std::uint8_t& { return a[r * n + c]; };
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (el(r, col) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) throw SingularMatrix("matrix is singular");
    if (piv != col)
      for (int c = 0; c < n; ++c) {
        std::swap(el(piv, c), el(col, c));
        std::uint8_t t = inv.at(piv, c);
        inv.set(piv, c, inv.at(col, c));
        inv.set(col, c, t);
      }
    std::uint8_t ip = f.inv(el(col, col));
    for (int c = 0; c < n; ++c) {
      el(col, c) = f.mul(el(col, c), ip);
      inv.set(col, c, f.mul(inv.at(col, c), ip));
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      std::uint8_t factor = el(r, col);
      if (factor == 0) continue;
      for (int c = 0; c < n; ++c) {
        el(r, c) = f.sub(el(r, c), f.mul(factor, el(col, c)));
        inv.set(r, c, f.sub(inv.at(r, c), f.mul(factor, inv.at(col, c))));
      }
    }
  }
  return inv;
}

std::string Mat::key() const {
  std::string k;
  k.reserve(6 + dim_ * dim_);
  k.push_back(static_cast<char>(field_->p()));
  k.push_back(static_cast<char>(field_->d()));
  k.push_back(static_cast<char>(field_->modulus()[0]));
  k.push_back(static_cast<char>(field_->modulus()[1]));
  k.push_back(static_cast<char>(dim_));
  for (int i = 0; i < dim_ * dim_; ++i) k.push_back(static_cast<char>(e_[i]));
  return k;
}

std::string Mat::describe() const {
  std::string s = "[";
  for (int r = 0; r < dim_; ++r) {
    s += "[";
    for (int c = 0; c < dim_; ++c) {
      s += std::to_string(int(at(r, c)));
      if (c + 1 < dim_) s += ",";
    }
    s += "]";
  }
  return s + "] over " + field_->describe();
}

Mat kron(const Mat& a, const Mat& b) {
  if (a.dim() != 2 || b.dim() != 2) throw Error("kron expects two 2x2 matrices");
  if (!a.field().same_field(b.field()))
    throw InconsistentElement("kron operands over different fields");
  const FieldDesc& f = a.field();
  Mat r(f, 4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          r.set(2 * i + k, 2 * j + l, f.mul(a.at(i, j), b.at(k, l)));
  return r;
}

ConjugationSolution solve_conjugation(const std::vector<Mat>& xs, const std::vector<Mat>& ys) {
  if (xs.empty() || xs.size() != ys.size())
    throw Error("solve_conjugation: need equally many X and Y matrices");
  const FieldDesc& f = xs[0].field();
  const int n = xs[0].dim();
  for (const Mat& m : xs)
    if (m.dim() != n || !m.field().same_field(f))
      throw InconsistentElement("solve_conjugation: mixed carriers");
  for (const Mat& m : ys)
    if (m.dim() != n || !m.field().same_field(f))
      throw InconsistentElement("solve_conjugation: mixed carriers");

  // Unknown T has n^2 entries t_{rc}; T*X = Y*T yields, per pair and per
  // position (i,j):  sum_k t_{ik} X_{kj} - sum_k Y_{ik} t_{kj} = 0.
  const int nn = n * n;
  std::vector<std::vector<std::uint8_t>> rows;
  for (std::size_t m = 0; m < xs.size(); ++m) {
    const Mat& X = xs[m];
    const Mat& Y = ys[m];
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        std::vector<std::uint8_t> row(nn, 0);
        for (int k = 0; k < n; ++k) {
          int c1 = i * n + k;
          row[c1] = f.add(row[c1], X.at(k, j));
          int c2 = k * n + j;
          row[c2] = f.sub(row[c2], Y.at(i, k));
        }
        rows.push_back(std::move(row));
      }
  }

  // Row-reduce to find a nullspace basis.
  std::vector<int> pivot_col;
  std::size_t rank = 0;
  for (int col = 0; col < nn && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    std::uint8_t ip = f.inv(rows[rank][col]);
    for (int c = 0; c < nn; ++c) rows[rank][c] = f.mul(rows[rank][c], ip);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      std::uint8_t factor = rows[r][col];
      for (int c = 0; c < nn; ++c)
        rows[r][c] = f.sub(rows[r][c], f.mul(factor, rows[rank][c]));
    }
    pivot_col.push_back(col);
    ++rank;
  }

  std::vector<bool> is_pivot(nn, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<std::uint8_t>> basis;
  for (int free = 0; free < nn; ++free) {
    if (is_pivot[free]) continue;
    std::vector<std::uint8_t> v(nn, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < rank; ++r)
      v[pivot_col[r]] = f.neg(rows[r][free]);
    basis.push_back(std::move(v));
  }

  ConjugationSolution sol;
  sol.space_dim = static_cast<int>(basis.size());
  if (basis.empty()) return sol;

  auto to_mat = [&](const std::vector<std::uint8_t>& v) {
    Mat t(f, n);
    for (int i = 0; i < nn; ++i) t.set(i / n, i % n, v[i]);
    return t;
  };
  auto normalize = [&](Mat t) {
    for (int i = 0; i < nn; ++i) {
      std::uint8_t v = t.at(i / n, i % n);
      if (v != 0) {
        std::uint8_t ip = f.inv(v);
        for (int j = 0; j < nn; ++j) t.set(j / n, j % n, f.mul(t.at(j / n, j % n), ip));
        return t;
      }
    }
    return t;
  };

  // Search the projective solution space for an invertible element.
  const int q = f.q();
  long long combos = 1;
  for (int i = 0; i < sol.space_dim; ++i) {
    combos *= q;
    if (combos > 200000) break;
  }
  if (combos <= 200000) {
    std::vector<int> coef(sol.space_dim, 0);
    for (long long it = 1; it < combos; ++it) {
      long long t = it;
      for (int i = 0; i < sol.space_dim; ++i) {
        coef[i] = static_cast<int>(t % q);
        t /= q;
      }
      std::vector<std::uint8_t> v(nn, 0);
      for (int i = 0; i < sol.space_dim; ++i) {
        if (coef[i] == 0) continue;
        for (int j = 0; j < nn; ++j)
          v[j] = f.add(v[j], f.mul(static_cast<std::uint8_t>(coef[i]), basis[i][j]));
      }
      Mat cand = to_mat(v);
      if (cand.det() != 0) {
        sol.T = normalize(cand);
        return sol;
      }
    }
  } else {
    for (const auto& b : basis) {
      Mat cand = to_mat(b);
      if (cand.det() != 0) {
        sol.T = normalize(cand);
        return sol;
      }
    }
  }
  throw NoInvertibleSolution("solve_conjugation: solution space of dimension " +
                             std::to_string(sol.space_dim) + " has no invertible element");
}

std::vector<Mat> classical_generators(ClassicalKind kind, int q) {
  if (q != 3 && q != 5 && q != 9) throw Error("classical_generators: q must be 3, 5 or 9");
  const FieldDesc& f = (q == 9) ? gf(3, 2) : gf(q, 1);
  std::vector<Mat> gens;
  gens.push_back(Mat::from_ints(f, 2, {1, 1, 0, 1}));
  gens.push_back(Mat::from_ints(f, 2, {1, 0, 1, 1}));
  if (q == 9) {
    // Transvections with the adjoined generator x are needed beyond the
    // prime subfield ones.
    Mat tx(f, 2);
    tx.set(0, 0, 1);
    tx.set(1, 1, 1);
    tx.set(0, 1, f.gen_x());
    gens.push_back(tx);
    Mat bx(f, 2);
    bx.set(0, 0, 1);
    bx.set(1, 1, 1);
    bx.set(1, 0, f.gen_x());
    gens.push_back(bx);
  }
  if (kind == ClassicalKind::GL) {
    Mat dg(f, 2);
    dg.set(0, 0, f.mult_generator());
    dg.set(1, 1, 1);
    gens.push_back(dg);
  }
  return gens;
}

}  // namespace gj
