#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qjt/error.hpp"
#include "qjt/graph.hpp"

namespace qjt {

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Dense square matrix whose entries satisfy a(i,j) == a(j,i) bit for bit.
template <typename Scalar = double>
class SymmetricMatrix {
 public:
  using Matrix = MatrixX<Scalar>;

  explicit SymmetricMatrix(Matrix m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols() || m_.rows() == 0) {
      throw Error(Errc::NotSymmetric, "symmetric matrix must be square and non-empty");
    }
    for (Eigen::Index j = 0; j < m_.cols(); ++j) {
      for (Eigen::Index i = j + 1; i < m_.rows(); ++i) {
        if (m_(i, j) != m_(j, i)) {
          throw Error(Errc::NotSymmetric, "entry (" + std::to_string(i) + ", " +
                                              std::to_string(j) + ") differs from its mirror");
        }
      }
    }
  }

  /// Mirrors the lower triangle of `m` into the upper one.
  static SymmetricMatrix from_lower(const Matrix& m) {
    Matrix full = m.template selfadjointView<Eigen::Lower>();
    return SymmetricMatrix(std::move(full));
  }

  Eigen::Index dim() const noexcept { return m_.rows(); }
  const Matrix& matrix() const noexcept { return m_; }
  Scalar operator()(Eigen::Index i, Eigen::Index j) const { return m_(i, j); }
  Scalar trace() const { return m_.trace(); }

  friend bool operator==(const SymmetricMatrix& a, const SymmetricMatrix& b) {
    return a.m_.rows() == b.m_.rows() && a.m_ == b.m_;
  }

 private:
  Matrix m_;
};

inline constexpr double kTraceTolerance = 1e-12;

/// Symmetric unit-trace matrix. Positive semidefiniteness is checked when the
/// spectrum is taken, where eigenvalues below -1e-10 are rejected.
template <typename Scalar = double>
class DensityMatrix {
 public:
  using Matrix = MatrixX<Scalar>;

  explicit DensityMatrix(SymmetricMatrix<Scalar> s) : s_(std::move(s)) {
    using std::abs;
    const Scalar t = s_.trace();
    if (!(abs(t - Scalar(1)) <= Scalar(kTraceTolerance))) {
      throw Error(Errc::NotADensity, "density matrix trace must be 1");
    }
  }

  explicit DensityMatrix(Matrix m) : DensityMatrix(SymmetricMatrix<Scalar>(std::move(m))) {}

  static DensityMatrix diagonal(const VectorX<Scalar>& p) {
    return DensityMatrix(Matrix(p.asDiagonal()));
  }

  /// Rank-one diagonal projector onto axis `j` of an `n`-dimensional space.
  static DensityMatrix degenerate(Eigen::Index j, Eigen::Index n) {
    if (j < 0 || j >= n) {
      throw Error(Errc::IndexOutOfRange, "degenerate density index outside [0, n)");
    }
    Matrix m = Matrix::Zero(n, n);
    m(j, j) = Scalar(1);
    return DensityMatrix(std::move(m));
  }

  Eigen::Index dim() const noexcept { return s_.dim(); }
  const SymmetricMatrix<Scalar>& symmetric() const noexcept { return s_; }
  const Matrix& matrix() const noexcept { return s_.matrix(); }
  Scalar operator()(Eigen::Index i, Eigen::Index j) const { return s_(i, j); }

  friend bool operator==(const DensityMatrix& a, const DensityMatrix& b) {
    return a.s_ == b.s_;
  }

 private:
  SymmetricMatrix<Scalar> s_;
};

using DegreeVector = std::vector<std::size_t>;

template <typename Scalar = double>
SymmetricMatrix<Scalar> adjacency_matrix(const Graph& g) {
  const auto m = static_cast<Eigen::Index>(g.vertex_count());
  MatrixX<Scalar> a = MatrixX<Scalar>::Zero(m, m);
  for (const auto& e : g.edges()) {
    a(e.first, e.second) = Scalar(1);
    a(e.second, e.first) = Scalar(1);
  }
  return SymmetricMatrix<Scalar>(std::move(a));
}

/// Combinatorial Laplacian L = D - A.
template <typename Scalar = double>
SymmetricMatrix<Scalar> laplacian_matrix(const Graph& g) {
  const auto m = static_cast<Eigen::Index>(g.vertex_count());
  const DegreeVector d = degrees(g);
  MatrixX<Scalar> l = MatrixX<Scalar>::Zero(m, m);
  for (Eigen::Index i = 0; i < m; ++i) l(i, i) = static_cast<Scalar>(d[static_cast<std::size_t>(i)]);
  for (const auto& e : g.edges()) {
    l(e.first, e.second) = Scalar(-1);
    l(e.second, e.first) = Scalar(-1);
  }
  return SymmetricMatrix<Scalar>(std::move(l));
}

/// tr(D) = sum of degrees = 2|E|.
inline std::size_t volume(const Graph& g) { return 2 * g.edge_count(); }

/// rho = L / tr(D). Entries of L are small integers, so each entry of rho is
/// a single correctly rounded division.
template <typename Scalar = double>
DensityMatrix<Scalar> density_matrix(const Graph& g) {
  if (g.edge_count() == 0) {
    throw Error(Errc::EmptyGraph, "graph has no edges; tr(D) = 0");
  }
  const auto vol = static_cast<Scalar>(volume(g));
  MatrixX<Scalar> rho = laplacian_matrix<Scalar>(g).matrix() / vol;
  return DensityMatrix<Scalar>(std::move(rho));
}

}  // namespace qjt
