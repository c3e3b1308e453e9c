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

#include "linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace qhe {

double max_abs(const Matrix& m) {
  if (m.size() == 0) {
    return 0.0;
  }
  return m.cwiseAbs().maxCoeff();
}

double real_trace_product(const Matrix& a, const Matrix& b) {
  // tr(ab) = sum_ij a_ij b_ji
  return (a.array() * b.transpose().array()).sum().real();
}

void require_square_finite(const Matrix& m, const char* what) {
  if (m.rows() == 0 || m.rows() != m.cols()) {
    std::ostringstream msg;
    msg << what << ": expected a nonempty square matrix, got " << m.rows()
        << "x" << m.cols();
    throw std::invalid_argument(msg.str());
  }
  if (!m.allFinite()) {
    throw std::invalid_argument(std::string(what) + ": non-finite entries");
  }
}

HermitianOperator::HermitianOperator(Matrix m) : mat_(std::move(m)) {
  require_square_finite(mat_, "HermitianOperator");
  const double dev = max_abs(mat_ - mat_.adjoint());
  if (dev > kStructuralTol) {
    std::ostringstream msg;
    msg << "HermitianOperator: max |A - A^dag| = " << dev << " exceeds "
        << kStructuralTol;
    throw std::invalid_argument(msg.str());
  }
}

UnitaryMatrix::UnitaryMatrix(Matrix m) : mat_(std::move(m)) {
  require_square_finite(mat_, "UnitaryMatrix");
  const Matrix gram = mat_ * mat_.adjoint();
  const double dev =
      max_abs(gram - Matrix::Identity(mat_.rows(), mat_.cols()));
  if (dev > kStructuralTol) {
    std::ostringstream msg;
    msg << "UnitaryMatrix: max |U U^dag - I| = " << dev << " exceeds "
        << kStructuralTol;
    throw std::invalid_argument(msg.str());
  }
}

UnitaryMatrix UnitaryMatrix::identity(int dim) {
  return UnitaryMatrix(Matrix::Identity(dim, dim));
}

Matrix kron(const Matrix& a, const Matrix& b) {
  require_square_finite(a, "kron lhs");
  require_square_finite(b, "kron rhs");
  const auto da = a.rows();
  const auto db = b.rows();
  Matrix out(da * db, da * db);
  for (Eigen::Index i = 0; i < da; ++i) {
    for (Eigen::Index j = 0; j < da; ++j) {
      out.block(i * db, j * db, db, db) = a(i, j) * b;
    }
  }
  return out;
}

namespace {

// Column index of the first coordinate that is clearly nonzero. Columns are
// unit norm, so 1e-6 separates genuine support from rounding noise.
int first_significant_row(const Matrix& vecs, int col) {
  for (int i = 0; i < vecs.rows(); ++i) {
    if (std::abs(vecs(i, col)) > 1e-6) {
      return i;
    }
  }
  return 0;
}

void canonicalize(Spectrum& s) {
  const int d = static_cast<int>(s.eigenvalues.size());
  for (int k = 0; k < d; ++k) {
    const int i = first_significant_row(s.eigenvectors, k);
    const Complex pivot = s.eigenvectors(i, k);
    const double mag = std::abs(pivot);
    if (mag > 0.0) {
      s.eigenvectors.col(k) *= std::conj(pivot) / mag;
    }
  }
  // Within a degenerate block, order columns by the index of their first
  // significant coordinate. Eigenvalues keep their ascending positions; block
  // members agree to the grouping tolerance, so alignment is preserved.
  const double scale = s.eigenvalues.cwiseAbs().maxCoeff();
  const double tie_tol = 1e-12 * (1.0 + scale);
  int start = 0;
  while (start < d) {
    int stop = start + 1;
    while (stop < d &&
           s.eigenvalues(stop) - s.eigenvalues(stop - 1) <= tie_tol) {
      ++stop;
    }
    if (stop - start > 1) {
      std::vector<int> order(stop - start);
      std::iota(order.begin(), order.end(), start);
      std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return first_significant_row(s.eigenvectors, a) <
               first_significant_row(s.eigenvectors, b);
      });
      Matrix block(s.eigenvectors.rows(), stop - start);
      for (int k = 0; k < stop - start; ++k) {
        block.col(k) = s.eigenvectors.col(order[k]);
      }
      s.eigenvectors.middleCols(start, stop - start) = block;
    }
    start = stop;
  }
}

}  // namespace

Spectrum eig_hermitian(const HermitianOperator& a) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(a.mat());
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eig_hermitian: eigensolver did not converge");
  }
  Spectrum s{solver.eigenvalues(), solver.eigenvectors()};
  canonicalize(s);

  const Matrix rebuilt = s.eigenvectors *
                         s.eigenvalues.cast<Complex>().asDiagonal() *
                         s.eigenvectors.adjoint();
  const double residual = max_abs(rebuilt - a.mat());
  const double bound = kResidualTol * (1.0 + max_abs(a.mat()));
  if (residual > bound) {
    std::ostringstream msg;
    msg << "eig_hermitian: reconstruction residual " << residual
        << " exceeds " << bound;
    throw std::runtime_error(msg.str());
  }
  return s;
}

HermitianOperator spectral_apply(const std::function<double(double)>& f,
                                 const HermitianOperator& a) {
  Spectrum s = eig_hermitian(a);
  RealVector mapped(s.eigenvalues.size());
  for (Eigen::Index k = 0; k < s.eigenvalues.size(); ++k) {
    const double y = f(s.eigenvalues(k));
    if (!std::isfinite(y)) {
      std::ostringstream msg;
      msg << "spectral_apply: f(" << s.eigenvalues(k) << ") is not finite";
      throw std::invalid_argument(msg.str());
    }
    mapped(k) = y;
  }
  Matrix out = s.eigenvectors * mapped.cast<Complex>().asDiagonal() *
               s.eigenvectors.adjoint();
  out = 0.5 * (out + out.adjoint().eval());
  return HermitianOperator(std::move(out));
}

}  // namespace qhe
