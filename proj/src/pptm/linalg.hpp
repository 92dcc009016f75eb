// Copyright 2026 The pptmoments Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PPTM_LINALG_HPP
#define PPTM_LINALG_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace pptm {

using Complex = std::complex<double>;

/// Dense row-major complex matrix. Entries are always finite.
class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    /// Zero matrix.
    ComplexMatrix(std::size_t rows, std::size_t cols);
    /// Throws InvalidArgument when entries.size() != rows*cols or an entry is
    /// not finite.
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix diagonal(std::span<const double> values);
    /// Builds a matrix from real row-major entries.
    static ComplexMatrix from_real(std::size_t rows, std::size_t cols, std::span<const double> entries);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Complex &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Complex &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const Complex> entries() const noexcept { return data_; }
    std::span<Complex> entries() noexcept { return data_; }

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    Complex trace() const;

    ComplexMatrix &operator+=(const ComplexMatrix &other);
    ComplexMatrix &operator-=(const ComplexMatrix &other);
    ComplexMatrix &operator*=(Complex scale);

    friend bool operator==(const ComplexMatrix &, const ComplexMatrix &) = default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator*(Complex scale, ComplexMatrix m);

/// Largest entrywise modulus of a - b. Shapes must match.
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);

/// ‖M − M†‖_max; requires a square matrix.
double hermitian_defect(const ComplexMatrix &m);

/// (M + M†)/2.
ComplexMatrix hermitian_part(const ComplexMatrix &m);

/// Split of a composite index space into H_A ⊗ H_B. Composite index of
/// (i, k) is i * dim_b + k.
struct Bipartition {
    std::size_t dim_a = 1;
    std::size_t dim_b = 1;

    std::size_t dim() const noexcept { return dim_a * dim_b; }
    friend bool operator==(const Bipartition &, const Bipartition &) = default;
};

enum class Subsystem { A, B };

/// Hermitian, unit-trace, PSD matrix with an attached bipartition.
class DensityMatrix {
  public:
    static constexpr double kTolerance = 1e-10;

    /// Validates every invariant (within kTolerance) and stores the Hermitian
    /// part of `matrix`. Throws InvalidArgument on violation.
    DensityMatrix(ComplexMatrix matrix, Bipartition partition);

    const ComplexMatrix &matrix() const noexcept { return matrix_; }
    const Bipartition &partition() const noexcept { return partition_; }
    std::size_t dim() const noexcept { return matrix_.rows(); }
    /// ‖M − M†‖_max of the matrix passed to the constructor.
    double input_hermitian_defect() const noexcept { return input_defect_; }

  private:
    ComplexMatrix matrix_;
    Bipartition partition_;
    double input_defect_ = 0.0;
};

ComplexMatrix matmul(const ComplexMatrix &a, const ComplexMatrix &b);

/// Kronecker product; (a ⊗ b)[i*b.rows + k, j*b.cols + l] = a[i,j] * b[k,l].
ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);

/// tr(m^k), k >= 1.
Complex trace_of_power(const ComplexMatrix &m, std::size_t k);

/// tr(m), tr(m^2), ..., tr(m^count) sharing the running power.
std::vector<Complex> traces_of_powers(const ComplexMatrix &m, std::size_t count);

/// Ascending eigenvalues of a Hermitian matrix (defect <= 1e-8 required).
std::vector<double> hermitian_eigenvalues(const ComplexMatrix &m);

/// exp(scale * m) for Hermitian m, through the eigendecomposition.
ComplexMatrix expm_hermitian(const ComplexMatrix &m, Complex scale);

/// Partial transpose on the chosen factor. Pure entry permutation.
ComplexMatrix partial_transpose(const ComplexMatrix &m, const Bipartition &partition, Subsystem which = Subsystem::B);
ComplexMatrix partial_transpose(const DensityMatrix &rho, Subsystem which = Subsystem::B);

namespace detail {

struct HermitianEigensystem {
    std::vector<double> values;  // ascending
    ComplexMatrix vectors;       // column j pairs with values[j]
};

/// Cyclic complex Jacobi. Fixed sweep order (p < q row-major), stops when the
/// off-diagonal Frobenius norm falls below 1e-12 * max(1, ‖m‖_F).
HermitianEigensystem hermitian_eigensystem(const ComplexMatrix &m);

}  // namespace detail

}  // namespace pptm

#endif  // PPTM_LINALG_HPP
