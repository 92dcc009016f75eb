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

#include "pptm/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "pptm/errors.hpp"

namespace pptm {

namespace {

constexpr double kHermitianInputTolerance = 1e-8;
constexpr double kJacobiThreshold = 1e-12;
constexpr int kJacobiMaxSweeps = 100;

bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void require_square(const ComplexMatrix &m, const char *what) {
    if (!m.is_square()) {
        throw DimensionMismatch(std::string(what) + ": matrix is " + std::to_string(m.rows()) + "x" +
                                std::to_string(m.cols()) + ", expected square");
    }
}

void require_hermitian(const ComplexMatrix &m, const char *what) {
    require_square(m, what);
    double defect = hermitian_defect(m);
    if (defect > kHermitianInputTolerance) {
        throw InvalidArgument(std::string(what) + ": matrix is not Hermitian (defect " + std::to_string(defect) + ")");
    }
}

double frobenius_norm(const ComplexMatrix &m) {
    double s = 0.0;
    for (const auto &z : m.entries()) s += std::norm(z);
    return std::sqrt(s);
}

double off_diagonal_norm(const ComplexMatrix &m) {
    double s = 0.0;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (r != c) s += std::norm(m(r, c));
        }
    }
    return std::sqrt(s);
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows * cols) {
        throw DimensionMismatch("ComplexMatrix: " + std::to_string(data_.size()) + " entries given for a " +
                              std::to_string(rows) + "x" + std::to_string(cols) + " matrix");
    }
    if (!std::all_of(data_.begin(), data_.end(), is_finite)) {
        throw InvalidArgument("ComplexMatrix: non-finite entry");
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
    ComplexMatrix m(values.size(), values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
    return m;
}

ComplexMatrix ComplexMatrix::from_real(std::size_t rows, std::size_t cols, std::span<const double> entries) {
    return ComplexMatrix(rows, cols, std::vector<Complex>(entries.begin(), entries.end()));
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
    }
    return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    }
    return out;
}

Complex ComplexMatrix::trace() const {
    require_square(*this, "trace");
    Complex t = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionMismatch("matrix addition: shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
    return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionMismatch("matrix subtraction: shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
    return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(Complex scale) {
    for (auto &z : data_) z *= scale;
    return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b) { return a -= b; }
ComplexMatrix operator*(Complex scale, ComplexMatrix m) { return m *= scale; }

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("max_abs_diff: shape mismatch");
    double worst = 0.0;
    auto ea = a.entries();
    auto eb = b.entries();
    for (std::size_t i = 0; i < ea.size(); ++i) worst = std::max(worst, std::abs(ea[i] - eb[i]));
    return worst;
}

double hermitian_defect(const ComplexMatrix &m) {
    require_square(m, "hermitian_defect");
    double worst = 0.0;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = r; c < m.cols(); ++c) worst = std::max(worst, std::abs(m(r, c) - std::conj(m(c, r))));
    }
    return worst;
}

ComplexMatrix hermitian_part(const ComplexMatrix &m) {
    require_square(m, "hermitian_part");
    ComplexMatrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = 0.5 * (m(r, c) + std::conj(m(c, r)));
    }
    return out;
}

DensityMatrix::DensityMatrix(ComplexMatrix matrix, Bipartition partition) : partition_(partition) {
    if (partition.dim_a == 0 || partition.dim_b == 0) throw InvalidArgument("DensityMatrix: empty subsystem");
    if (!matrix.is_square()) throw DimensionMismatch("DensityMatrix: matrix must be square");
    if (partition.dim() != matrix.rows()) {
        throw DimensionMismatch("DensityMatrix: bipartition " + std::to_string(partition.dim_a) + "x" +
                                std::to_string(partition.dim_b) + " does not match dimension " +
                                std::to_string(matrix.rows()));
    }
    input_defect_ = hermitian_defect(matrix);
    if (input_defect_ > kTolerance) {
        throw InvalidArgument("DensityMatrix: not Hermitian (defect " + std::to_string(input_defect_) + ")");
    }
    matrix_ = hermitian_part(matrix);
    double tr = matrix_.trace().real();
    if (std::abs(tr - 1.0) > kTolerance) {
        throw InvalidArgument("DensityMatrix: trace is " + std::to_string(tr) + ", expected 1");
    }
    auto eigs = hermitian_eigenvalues(matrix_);
    if (!eigs.empty() && eigs.front() < -kTolerance) {
        throw InvalidArgument("DensityMatrix: not positive semi-definite (min eigenvalue " +
                              std::to_string(eigs.front()) + ")");
    }
}

ComplexMatrix matmul(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.cols() != b.rows()) {
        throw DimensionMismatch("matmul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " times " +
                                std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    }
    ComplexMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex(0.0)) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Complex aij = a(i, j);
            for (std::size_t k = 0; k < b.rows(); ++k) {
                for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
            }
        }
    }
    return out;
}

std::vector<Complex> traces_of_powers(const ComplexMatrix &m, std::size_t count) {
    require_square(m, "trace_of_power");
    std::vector<Complex> out;
    out.reserve(count);
    if (count == 0) return out;
    ComplexMatrix power = m;
    out.push_back(power.trace());
    for (std::size_t k = 2; k <= count; ++k) {
        power = matmul(power, m);
        out.push_back(power.trace());
    }
    return out;
}

Complex trace_of_power(const ComplexMatrix &m, std::size_t k) {
    if (k == 0) throw InvalidArgument("trace_of_power: k must be >= 1");
    return traces_of_powers(m, k).back();
}

namespace detail {

HermitianEigensystem hermitian_eigensystem(const ComplexMatrix &m) {
    require_hermitian(m, "hermitian_eigenvalues");
    const std::size_t n = m.rows();
    ComplexMatrix a = hermitian_part(m);
    ComplexMatrix v = ComplexMatrix::identity(n);
    const double stop = kJacobiThreshold * std::max(1.0, frobenius_norm(a));

    for (int sweep = 0; sweep < kJacobiMaxSweeps && off_diagonal_norm(a) > stop; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex z = a(p, q);
                const double mag = std::abs(z);
                if (mag == 0.0) continue;
                // Phase D = diag(1, e^{-i phi}) makes the (p,q) block real
                // symmetric; a real rotation then annihilates it.
                const Complex phase = std::conj(z) / mag;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double theta = (aqq - app) / (2.0 * mag);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                // J restricted to (p,q): [[c, s], [-s*phase, c*phase]].
                const Complex jpp = c, jpq = s, jqp = -s * phase, jqq = c * phase;

                for (std::size_t r = 0; r < n; ++r) {
                    const Complex arp = a(r, p), arq = a(r, q);
                    a(r, p) = arp * jpp + arq * jqp;
                    a(r, q) = arp * jpq + arq * jqq;
                    const Complex vrp = v(r, p), vrq = v(r, q);
                    v(r, p) = vrp * jpp + vrq * jqp;
                    v(r, q) = vrp * jpq + vrq * jqq;
                }
                for (std::size_t c2 = 0; c2 < n; ++c2) {
                    const Complex apc = a(p, c2), aqc = a(q, c2);
                    a(p, c2) = std::conj(jpp) * apc + std::conj(jqp) * aqc;
                    a(q, c2) = std::conj(jpq) * apc + std::conj(jqq) * aqc;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });
    HermitianEigensystem out{std::vector<double>(n), ComplexMatrix(n, n)};
    for (std::size_t j = 0; j < n; ++j) {
        out.values[j] = a(order[j], order[j]).real();
        for (std::size_t r = 0; r < n; ++r) out.vectors(r, j) = v(r, order[j]);
    }
    return out;
}

}  // namespace detail

std::vector<double> hermitian_eigenvalues(const ComplexMatrix &m) { return detail::hermitian_eigensystem(m).values; }

ComplexMatrix expm_hermitian(const ComplexMatrix &m, Complex scale) {
    auto sys = detail::hermitian_eigensystem(m);
    const std::size_t n = m.rows();
    ComplexMatrix out(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        const Complex w = std::exp(scale * sys.values[k]);
        for (std::size_t r = 0; r < n; ++r) {
            const Complex vr = sys.vectors(r, k) * w;
            for (std::size_t c = 0; c < n; ++c) out(r, c) += vr * std::conj(sys.vectors(c, k));
        }
    }
    return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix &m, const Bipartition &partition, Subsystem which) {
    require_square(m, "partial_transpose");
    if (partition.dim() != m.rows()) throw DimensionMismatch("partial_transpose: bipartition does not match matrix");
    const std::size_t da = partition.dim_a, db = partition.dim_b;
    ComplexMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < da; ++i) {
        for (std::size_t k = 0; k < db; ++k) {
            for (std::size_t j = 0; j < da; ++j) {
                for (std::size_t l = 0; l < db; ++l) {
                    if (which == Subsystem::B) {
                        out(i * db + k, j * db + l) = m(i * db + l, j * db + k);
                    } else {
                        out(i * db + k, j * db + l) = m(j * db + k, i * db + l);
                    }
                }
            }
        }
    }
    return out;
}

ComplexMatrix partial_transpose(const DensityMatrix &rho, Subsystem which) {
    return partial_transpose(rho.matrix(), rho.partition(), which);
}

}  // namespace pptm
