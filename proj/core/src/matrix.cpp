#include "tabalg/matrix.hpp"

#include <algorithm>
#include <stdexcept>

#include "tabalg/errors.hpp"

namespace tabalg {

namespace {

void require_same_shape(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw StructuralError("matrix shape mismatch");
  }
}

struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
  Scalar det_factor = 1;  // product of pivots and row-swap signs
};

// Reduced row echelon form over the first `ncols` columns.
Echelon reduce(Matrix a, std::size_t ncols, double tol) {
  Echelon out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < a.rows(); ++col) {
    std::size_t best = a.rows();
    double best_abs = 0.0;
    for (std::size_t r = row; r < a.rows(); ++r) {
      const Scalar& v = a(r, col);
      if (v.is_zero(tol)) continue;
      if (v.is_exact()) {  // any exact nonzero pivot is fine
        best = r;
        break;
      }
      if (v.abs() > best_abs) {
        best_abs = v.abs();
        best = r;
      }
    }
    if (best == a.rows()) {
      out.det_factor = 0;
      continue;
    }
    if (best != row) {
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(best, c), a(row, c));
      out.det_factor = -out.det_factor;
    }
    Scalar pivot = a(row, col);
    out.det_factor *= pivot;
    for (std::size_t c = col; c < a.cols(); ++c) a(row, c) /= pivot;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row) continue;
      Scalar f = a(r, col);
      if (f.is_zero(0.0)) continue;
      for (std::size_t c = col; c < a.cols(); ++c) a(r, c) -= f * a(row, c);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(a);
  return out;
}

}  // namespace

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool Matrix::is_exact() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_exact(); });
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  require_same_shape(*this, o);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  require_same_shape(*this, o);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
  for (auto& v : data_) v *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw StructuralError("matrix product shape mismatch");
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero(0.0)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Scalar& bkj = b(k, j);
        if (bkj.is_zero(0.0)) continue;
        out(i, j) += aik * bkj;
      }
    }
  }
  return out;
}

Matrix Matrix::hadamard(const Matrix& o) const {
  require_same_shape(*this, o);
  Matrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] * o.data_[i];
  return out;
}

Scalar Matrix::trace() const {
  Scalar s = 0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) s += (*this)(i, i);
  return s;
}

Scalar Matrix::entry_sum() const {
  Scalar s = 0;
  for (const auto& v : data_) s += v;
  return s;
}

bool near(const Matrix& a, const Matrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (!near(a(r, c), b(r, c), tol)) return false;
  return true;
}

double max_abs(const Matrix& m) {
  double best = 0.0;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) best = std::max(best, m(r, c).abs());
  return best;
}

std::size_t rank(const Matrix& m, double tol) { return reduce(m, m.cols(), tol).pivots.size(); }

std::vector<std::vector<Scalar>> nullspace(const Matrix& m, double tol) {
  Echelon e = reduce(m, m.cols(), tol);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(m.cols(), Scalar(0));
    v[free] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Scalar>> solve(const Matrix& m, const std::vector<Scalar>& rhs,
                                         double tol) {
  if (m.rows() != m.cols() || rhs.size() != m.rows()) {
    throw StructuralError("solve: shape mismatch");
  }
  const std::size_t n = m.rows();
  Matrix aug(n, n + 1);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n) = rhs[r];
  }
  Echelon e = reduce(std::move(aug), n, tol);
  if (e.pivots.size() != n) return std::nullopt;
  std::vector<Scalar> x(n);
  for (std::size_t r = 0; r < n; ++r) x[r] = e.reduced(r, n);
  return x;
}

std::optional<Matrix> inverse(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) throw StructuralError("inverse: matrix not square");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  Echelon e = reduce(std::move(aug), n, tol);
  if (e.pivots.size() != n) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
  return inv;
}

Scalar determinant(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) throw StructuralError("determinant: matrix not square");
  Echelon e = reduce(m, m.cols(), tol);
  if (e.pivots.size() != m.rows()) return m.is_exact() ? Scalar(0) : Scalar(0.0);
  return e.det_factor;
}

}  // namespace tabalg
