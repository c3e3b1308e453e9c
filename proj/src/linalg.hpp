// Copyright 2026 The qhe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QHE_LINALG_HPP
#define QHE_LINALG_HPP

#include <complex>
#include <functional>

#include <Eigen/Dense>

namespace qhe {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

// Structural checks (hermiticity, unitarity, projector algebra) are validated
// at 1e-10; reconstruction residuals at 1e-9. Target dimensions are <= 16, so
// double precision leaves a wide margin on both.
inline constexpr double kStructuralTol = 1e-10;
inline constexpr double kResidualTol = 1e-9;

/// Largest entry magnitude of a matrix (0 for empty).
double max_abs(const Matrix& m);

/// Re tr(a b), evaluated entrywise without forming the product.
double real_trace_product(const Matrix& a, const Matrix& b);

/// Throws std::invalid_argument unless m is square with finite entries.
void require_square_finite(const Matrix& m, const char* what);

/// Square complex matrix with max |A - A^dag| entry <= 1e-10, checked at
/// construction.
class HermitianOperator {
 public:
  explicit HermitianOperator(Matrix m);

  const Matrix& mat() const { return mat_; }
  int dim() const { return static_cast<int>(mat_.rows()); }

 private:
  Matrix mat_;
};

/// Square complex matrix with max |U U^dag - I| entry <= 1e-10, checked at
/// construction.
class UnitaryMatrix {
 public:
  explicit UnitaryMatrix(Matrix m);

  static UnitaryMatrix identity(int dim);

  const Matrix& mat() const { return mat_; }
  int dim() const { return static_cast<int>(mat_.rows()); }

 private:
  Matrix mat_;
};

/// Eigendecomposition of a Hermitian operator: eigenvalues ascending,
/// eigenvector columns aligned with them and orthonormal.
struct Spectrum {
  RealVector eigenvalues;
  Matrix eigenvectors;
};

/// Kronecker product of two square matrices.
Matrix kron(const Matrix& a, const Matrix& b);

/// Hermitian eigendecomposition with a deterministic representation: every
/// eigenvector is phase-fixed (first significant coordinate real positive),
/// and within a degenerate block the columns are ordered by the index of that
/// coordinate. Identical input bits always produce identical output bits.
/// Throws std::runtime_error carrying the residual if the reconstruction
/// V diag(lambda) V^dag fails to meet the residual tolerance.
Spectrum eig_hermitian(const HermitianOperator& a);

/// V diag(f(lambda)) V^dag. Throws std::invalid_argument if f is not finite
/// on some eigenvalue.
HermitianOperator spectral_apply(const std::function<double(double)>& f,
                                 const HermitianOperator& a);

}  // namespace qhe

#endif  // QHE_LINALG_HPP
