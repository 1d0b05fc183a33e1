#pragma once

#include <complex>
#include <initializer_list>
#include <vector>

namespace colhopf {

using Complex = std::complex<double>;

/// Dense complex matrix, row-major storage. Everything in this library is
/// small (at most 125x125 for the Poincare triple product), so no attempt is
/// made at sparse or blocked algebra.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(int rows, int cols);
  ComplexMatrix(int rows, int cols, std::initializer_list<Complex> entries);

  static ComplexMatrix identity(int n);
  /// Matrix unit e_{ij} (0-based) of size n x n.
  static ComplexMatrix unit(int n, int i, int j, Complex value = 1.0);
  static ComplexMatrix diagonal(const std::vector<Complex>& d);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Complex& operator()(int i, int j) { return entries_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Complex& operator()(int i, int j) const {
    return entries_[static_cast<std::size_t>(i) * cols_ + j];
  }
  const std::vector<Complex>& entries() const { return entries_; }

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex c);

  ComplexMatrix transpose() const;

  double max_norm() const;        // max |entry|
  double frobenius_norm() const;
  bool exactly_zero() const;
  bool exactly_equal(const ComplexMatrix& other) const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Complex> entries_;  // row-major, length rows_*cols_
};

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex c, const ComplexMatrix& a);

/// Kronecker product with the (i,j) -> i*dimB + j basis convention.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Embed `op` into the tensor product of legs `dims`, acting as `op` on the
/// selected legs (1-based, strictly increasing) and as identity elsewhere.
/// `op` must act on the product of the selected legs' dimensions, indexed
/// row-major in leg order.
ComplexMatrix embed(const ComplexMatrix& op, const std::vector<int>& legs,
                    const std::vector<int>& dims);

/// Permutation matrix P with P(x (x) y) = y (x) x.
ComplexMatrix flip(int dim_a, int dim_b);

/// Transpose one tensor leg of an operator on the product of `dims`.
ComplexMatrix partial_transpose(const ComplexMatrix& m, int leg, const std::vector<int>& dims);

/// Gauss-Jordan inverse with partial pivoting; throws on singular input.
ComplexMatrix inverse(const ComplexMatrix& m);

/// Analytic functions applied through terminating Taylor series.
enum class Series {
  Exp,            // exp(x)
  ArcsinhOverX,   // arcsinh(x)/x
  InvSqrt1p4x2,   // (1+4x^2)^(-1/2)
};

const char* series_name(Series s);

/// k-th Taylor coefficient at 0 of the named series.
double series_coefficient(Series s, int k);

/// Sum f_k m^k. Stops when m^k is exactly the zero matrix (the nilpotent
/// case, which covers every catalog representation) or when two consecutive
/// terms fall below 1e-16 * (1 + max-norm of the running sum). Throws after
/// 64 terms without convergence.
ComplexMatrix analytic_apply(Series s, const ComplexMatrix& m);

struct ResidualReport {
  double max_abs = 0.0;  // max-norm of a - b
  double rel = 0.0;      // ||a-b||_F / max(1, ||a||_F, ||b||_F)
  bool pass = false;
};

/// pass iff ||a-b||_F <= tol * max(1, ||a||_F, ||b||_F).
ResidualReport approx_eq(const ComplexMatrix& a, const ComplexMatrix& b, double tol);

/// The relative residual used by approx_eq, without the pass/fail decision.
double rel_residual(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace colhopf
