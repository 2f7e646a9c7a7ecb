#ifndef QCORR_MATRIX_HPP
#define QCORR_MATRIX_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace qcorr {

using Complex = std::complex<double>;

/// Dense row-major complex matrix with value semantics.
class ComplexMatrix {
public:
  ComplexMatrix(std::size_t rows, std::size_t cols);
  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix from_rows(
      std::initializer_list<std::initializer_list<Complex>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Complex& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  std::span<const Complex> data() const { return data_; }
  std::span<Complex> data() { return data_; }

  ComplexMatrix adjoint() const;
  Complex trace() const;

  /// Entrywise max modulus (the ||.||_max norm used in invariants).
  double max_abs() const;
  double frobenius_norm() const;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(Complex s);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) {
    return a += b;
  }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) {
    return a -= b;
  }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a,
                                 const ComplexMatrix& b);

private:
  std::size_t rows_, cols_;
  std::vector<Complex> data_;
};

/// Standard matrix product; throws std::invalid_argument on shape mismatch.
ComplexMatrix mat_mul(const ComplexMatrix& a, const ComplexMatrix& b);

/// Kronecker product; output dimensions multiply.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Re tr(a * b) without forming the product.
double trace_product_real(const ComplexMatrix& a, const ComplexMatrix& b);

enum class Keep { A, B };

/// Trace over one tensor factor of a (dim_a*dim_b)-dimensional square matrix.
ComplexMatrix partial_trace(const ComplexMatrix& m, std::size_t dim_a,
                            std::size_t dim_b, Keep keep);

/// (M + M†)/2
ComplexMatrix hermitian_part(const ComplexMatrix& m);

/// Square matrix certified Hermitian at construction: ||M - M†||_max <= tol.
class HermitianMatrix {
public:
  explicit HermitianMatrix(ComplexMatrix m, double tol = 1e-12);
  static HermitianMatrix identity(std::size_t n);
  static HermitianMatrix zero(std::size_t n);

  const ComplexMatrix& matrix() const { return mat_; }
  std::size_t dim() const { return mat_.rows(); }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return mat_(r, c);
  }

private:
  ComplexMatrix mat_;
};

}  // namespace qcorr

#endif
