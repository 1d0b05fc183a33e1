#include "colhopf/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace colhopf {

ComplexMatrix::ComplexMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows <= 0 || cols <= 0) throw std::invalid_argument("ComplexMatrix: nonpositive dimension");
  entries_.assign(static_cast<std::size_t>(rows) * cols, Complex(0.0));
}

ComplexMatrix::ComplexMatrix(int rows, int cols, std::initializer_list<Complex> entries)
    : ComplexMatrix(rows, cols) {
  if (entries.size() != entries_.size())
    throw std::invalid_argument("ComplexMatrix: entry count does not match rows*cols");
  std::copy(entries.begin(), entries.end(), entries_.begin());
}

ComplexMatrix ComplexMatrix::identity(int n) {
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::unit(int n, int i, int j, Complex value) {
  ComplexMatrix m(n, n);
  m(i, j) = value;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<Complex>& d) {
  ComplexMatrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
  for (std::size_t i = 0; i < d.size(); ++i) m(static_cast<int>(i), static_cast<int>(i)) = d[i];
  return m;
}

namespace {

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument(std::string(op) + ": shape mismatch " +
                                std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                " vs " + std::to_string(b.rows()) + "x" +
                                std::to_string(b.cols()));
}

}  // namespace

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "operator+=");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "operator-=");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex c) {
  for (auto& e : entries_) e *= c;
  return *this;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

double ComplexMatrix::max_norm() const {
  double m = 0.0;
  for (const auto& e : entries_) m = std::max(m, std::abs(e));
  return m;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& e : entries_) s += std::norm(e);
  return std::sqrt(s);
}

bool ComplexMatrix::exactly_zero() const {
  for (const auto& e : entries_)
    if (e != Complex(0.0)) return false;
  return true;
}

bool ComplexMatrix::exactly_equal(const ComplexMatrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix r = a;
  r += b;
  return r;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix r = a;
  r -= b;
  return r;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("operator*: inner dimension mismatch");
  ComplexMatrix r(a.rows(), b.cols());
  // i-k-j loop order keeps the inner loop contiguous over both b and r.
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex(0.0)) continue;
      for (int j = 0; j < b.cols(); ++j) r(i, j) += aik * b(k, j);
    }
  }
  return r;
}

ComplexMatrix operator*(Complex c, const ComplexMatrix& a) {
  ComplexMatrix r = a;
  r *= c;
  return r;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex(0.0)) continue;
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l)
          r(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return r;
}

ComplexMatrix embed(const ComplexMatrix& op, const std::vector<int>& legs,
                    const std::vector<int>& dims) {
  const int n = static_cast<int>(dims.size());
  for (std::size_t i = 0; i < legs.size(); ++i) {
    if (legs[i] < 1 || legs[i] > n) throw std::invalid_argument("embed: leg index out of range");
    if (i > 0 && legs[i] <= legs[i - 1])
      throw std::invalid_argument("embed: legs must be strictly increasing");
  }
  long sel_dim = 1;
  for (int leg : legs) sel_dim *= dims[leg - 1];
  if (op.rows() != op.cols() || op.rows() != sel_dim)
    throw std::invalid_argument("embed: operator does not match selected leg dimensions");

  long total = 1;
  for (int d : dims) total *= d;
  const long unsel_dim = total / sel_dim;

  // Strides of each leg in the row-major full index.
  std::vector<long> stride(n, 1);
  for (int i = n - 2; i >= 0; --i) stride[i] = stride[i + 1] * dims[i + 1];

  std::vector<bool> selected(n, false);
  for (int leg : legs) selected[leg - 1] = true;

  // Full-space index offsets of each selected sub-index and each unselected one.
  std::vector<long> sel_offset(sel_dim, 0);
  for (long s = 0; s < sel_dim; ++s) {
    long rem = s;
    long off = 0;
    for (int i = static_cast<int>(legs.size()) - 1; i >= 0; --i) {
      const int leg = legs[i] - 1;
      off += (rem % dims[leg]) * stride[leg];
      rem /= dims[leg];
    }
    sel_offset[s] = off;
  }
  std::vector<long> unsel_offset(unsel_dim, 0);
  {
    std::vector<int> unsel_legs;
    for (int i = 0; i < n; ++i)
      if (!selected[i]) unsel_legs.push_back(i);
    for (long u = 0; u < unsel_dim; ++u) {
      long rem = u;
      long off = 0;
      for (int i = static_cast<int>(unsel_legs.size()) - 1; i >= 0; --i) {
        const int leg = unsel_legs[i];
        off += (rem % dims[leg]) * stride[leg];
        rem /= dims[leg];
      }
      unsel_offset[u] = off;
    }
  }

  ComplexMatrix r(static_cast<int>(total), static_cast<int>(total));
  for (long s = 0; s < sel_dim; ++s)
    for (long t = 0; t < sel_dim; ++t) {
      const Complex v = op(static_cast<int>(s), static_cast<int>(t));
      if (v == Complex(0.0)) continue;
      for (long u = 0; u < unsel_dim; ++u)
        r(static_cast<int>(sel_offset[s] + unsel_offset[u]),
          static_cast<int>(sel_offset[t] + unsel_offset[u])) = v;
    }
  return r;
}

ComplexMatrix flip(int dim_a, int dim_b) {
  ComplexMatrix p(dim_a * dim_b, dim_a * dim_b);
  for (int i = 0; i < dim_a; ++i)
    for (int k = 0; k < dim_b; ++k) p(k * dim_a + i, i * dim_b + k) = 1.0;
  return p;
}

ComplexMatrix partial_transpose(const ComplexMatrix& m, int leg, const std::vector<int>& dims) {
  const int n = static_cast<int>(dims.size());
  if (leg < 1 || leg > n) throw std::invalid_argument("partial_transpose: leg out of range");
  long total = 1;
  for (int d : dims) total *= d;
  if (m.rows() != total || m.cols() != total)
    throw std::invalid_argument("partial_transpose: shape mismatch");

  std::vector<long> stride(n, 1);
  for (int i = n - 2; i >= 0; --i) stride[i] = stride[i + 1] * dims[i + 1];
  const long st = stride[leg - 1];
  const int d = dims[leg - 1];

  ComplexMatrix r(m.rows(), m.cols());
  for (long row = 0; row < total; ++row) {
    const long ri = (row / st) % d;
    const long row_base = row - ri * st;
    for (long col = 0; col < total; ++col) {
      const long ci = (col / st) % d;
      const long col_base = col - ci * st;
      r(static_cast<int>(row_base + ci * st), static_cast<int>(col_base + ri * st)) =
          m(static_cast<int>(row), static_cast<int>(col));
    }
  }
  return r;
}

ComplexMatrix inverse(const ComplexMatrix& m) {
  if (!m.square()) throw std::invalid_argument("inverse: matrix must be square");
  const int n = m.rows();
  ComplexMatrix a = m;
  ComplexMatrix inv = ComplexMatrix::identity(n);
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    double best = std::abs(a(col, col));
    for (int r = col + 1; r < n; ++r) {
      const double v = std::abs(a(r, col));
      if (v > best) {
        best = v;
        pivot = r;
      }
    }
    if (best == 0.0) throw std::runtime_error("inverse: singular matrix");
    if (pivot != col) {
      for (int j = 0; j < n; ++j) {
        std::swap(a(col, j), a(pivot, j));
        std::swap(inv(col, j), inv(pivot, j));
      }
    }
    const Complex p = a(col, col);
    for (int j = 0; j < n; ++j) {
      a(col, j) /= p;
      inv(col, j) /= p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const Complex f = a(r, col);
      if (f == Complex(0.0)) continue;
      for (int j = 0; j < n; ++j) {
        a(r, j) -= f * a(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

const char* series_name(Series s) {
  switch (s) {
    case Series::Exp:
      return "exp";
    case Series::ArcsinhOverX:
      return "arcsinh_over_x";
    case Series::InvSqrt1p4x2:
      return "inv_sqrt_1p4x2";
  }
  return "?";
}

double series_coefficient(Series s, int k) {
  if (k < 0) throw std::invalid_argument("series_coefficient: negative order");
  switch (s) {
    case Series::Exp: {
      double c = 1.0;
      for (int i = 1; i <= k; ++i) c /= i;
      return c;
    }
    case Series::ArcsinhOverX: {
      // arcsinh(x)/x = sum_m (-1)^m (2m)! / (4^m (m!)^2 (2m+1)) x^(2m)
      if (k % 2 != 0) return 0.0;
      double c = 1.0;
      for (int m = 1; m <= k / 2; ++m)
        c *= -(2.0 * m - 1.0) * (2.0 * m - 1.0) / (2.0 * m * (2.0 * m + 1.0));
      return c;
    }
    case Series::InvSqrt1p4x2: {
      // (1+4x^2)^(-1/2) = sum_m (-1)^m C(2m,m) x^(2m)
      if (k % 2 != 0) return 0.0;
      double c = 1.0;
      for (int m = 1; m <= k / 2; ++m) c *= -2.0 * (2.0 * m - 1.0) / m;
      return c;
    }
  }
  return 0.0;
}

ComplexMatrix analytic_apply(Series s, const ComplexMatrix& m) {
  if (!m.square()) throw std::invalid_argument("analytic_apply: matrix must be square");
  constexpr int kMaxTerms = 64;
  constexpr double kTol = 1e-16;

  ComplexMatrix sum = series_coefficient(s, 0) * ComplexMatrix::identity(m.rows());
  ComplexMatrix power = ComplexMatrix::identity(m.rows());
  int small_streak = 0;
  for (int k = 1; k <= kMaxTerms; ++k) {
    power = power * m;
    if (power.exactly_zero()) return sum;  // nilpotent argument: series is exact
    const double fk = series_coefficient(s, k);
    const double term_norm = std::abs(fk) * power.max_norm();
    if (fk != 0.0) {
      ComplexMatrix term = power;
      term *= fk;
      sum += term;
    }
    // Two consecutive small terms are required because the even series have
    // vanishing odd coefficients.
    if (term_norm <= kTol * (1.0 + sum.max_norm())) {
      if (++small_streak >= 2) return sum;
    } else {
      small_streak = 0;
    }
  }
  throw std::runtime_error(std::string("analytic_apply: series for ") + series_name(s) +
                           " did not converge within 64 terms");
}

ResidualReport approx_eq(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
  require_same_shape(a, b, "approx_eq");
  ResidualReport rep;
  const ComplexMatrix diff = a - b;
  rep.max_abs = diff.max_norm();
  const double scale = std::max({1.0, a.frobenius_norm(), b.frobenius_norm()});
  rep.rel = diff.frobenius_norm() / scale;
  rep.pass = rep.rel <= tol;
  return rep;
}

double rel_residual(const ComplexMatrix& a, const ComplexMatrix& b) {
  const double scale = std::max({1.0, a.frobenius_norm(), b.frobenius_norm()});
  return (a - b).frobenius_norm() / scale;
}

}  // namespace colhopf
