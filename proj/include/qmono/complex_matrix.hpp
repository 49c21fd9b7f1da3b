#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace qmono {

using cplx = std::complex<double>;

/// Dense row-major complex matrix. Sized for desk-scale problems (dim <= 64).
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const double> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const cplx> data() const { return data_; }
  std::span<cplx> data() { return {data_.data(), data_.size()}; }

  ComplexMatrix adjoint() const;
  ComplexMatrix conjugate() const;
  cplx trace() const;
  double frobenius_norm() const;
  /// max_ij |a(i,j) - conj(a(j,i))|
  double hermiticity_defect() const;
  bool is_finite() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<cplx> data_;
};

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(cplx s, const ComplexMatrix& a);
ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);

/// Kronecker product, (a.rows*b.rows) x (a.cols*b.cols).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace qmono
