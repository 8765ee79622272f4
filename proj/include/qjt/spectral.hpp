#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qjt/error.hpp"
#include "qjt/laplacian.hpp"
#include "qjt/probability.hpp"

namespace qjt {

/// Eigenvalues in ascending order with matching orthonormal eigenvector
/// columns.
template <typename Scalar = double>
struct EigenSystem {
  VectorX<Scalar> eigenvalues;
  MatrixX<Scalar> eigenvectors;
};

/// Full symmetric eigendecomposition: Householder tridiagonalization followed
/// by implicitly shifted QR/QL sweeps. Single-threaded and deterministic.
template <typename Scalar = double>
EigenSystem<Scalar> eigendecompose(const SymmetricMatrix<Scalar>& s) {
  Eigen::SelfAdjointEigenSolver<MatrixX<Scalar>> solver(s.matrix(), Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) {
    throw Error(Errc::ConvergenceFailure, "symmetric eigensolver did not converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

template <typename Scalar = double>
VectorX<Scalar> eigenvalues(const SymmetricMatrix<Scalar>& s) {
  Eigen::SelfAdjointEigenSolver<MatrixX<Scalar>> solver(s.matrix(), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw Error(Errc::ConvergenceFailure, "symmetric eigensolver did not converge");
  }
  return solver.eigenvalues();
}

inline constexpr double kNegativeEigenvalueFloor = -1e-10;

/// Eigenvalues of a density matrix cleaned into a probability vector:
/// values in [-1e-10, 0) are clamped to zero, values within solver noise of
/// zero are snapped to zero, and the result is renormalized to sum to one.
template <typename Scalar = double>
class Spectrum {
 public:
  explicit Spectrum(VectorX<Scalar> raw) : mu_(std::move(raw)) {
    using std::abs;
    if (mu_.size() == 0) throw Error(Errc::InvalidArgument, "spectrum is empty");
    std::sort(mu_.data(), mu_.data() + mu_.size());
    if (mu_(0) < Scalar(kNegativeEigenvalueFloor)) {
      throw Error(Errc::NotPositiveSemidefinite,
                  "density has eigenvalue below -1e-10");
    }
    const Scalar noise = Scalar(8) * static_cast<Scalar>(mu_.size()) *
                         std::numeric_limits<Scalar>::epsilon();
    for (Eigen::Index i = 0; i < mu_.size(); ++i) {
      if (mu_(i) < Scalar(0) || abs(mu_(i)) <= noise) mu_(i) = Scalar(0);
    }
    const Scalar total = mu_.sum();
    if (!(total > Scalar(0))) throw Error(Errc::NotADensity, "spectrum sums to zero");
    mu_ /= total;
  }

  Eigen::Index size() const noexcept { return mu_.size(); }
  Scalar operator[](Eigen::Index i) const { return mu_(i); }
  const VectorX<Scalar>& values() const noexcept { return mu_; }

  ProbabilityVector<Scalar> probabilities() const { return ProbabilityVector<Scalar>(mu_); }

 private:
  VectorX<Scalar> mu_;
};

template <typename Scalar = double>
Spectrum<Scalar> spectrum(const DensityMatrix<Scalar>& rho) {
  return Spectrum<Scalar>(eigenvalues(rho.symmetric()));
}

/// tr(phi(rho)) = sum_i phi(mu_i).
template <typename Scalar, typename Fn>
Scalar trace_function(const DensityMatrix<Scalar>& rho, Fn&& phi) {
  const Spectrum<Scalar> mu = spectrum(rho);
  Scalar total(0);
  for (Eigen::Index i = 0; i < mu.size(); ++i) total += phi(mu[i]);
  return total;
}

/// x^alpha on [0, 1] with 0^alpha := 0 for every alpha >= 0, so alpha = 0
/// counts the nonzero entries.
template <typename Scalar>
Scalar power_or_zero(Scalar x, Scalar alpha) {
  using std::pow;
  return x > Scalar(0) ? pow(x, alpha) : Scalar(0);
}

/// tr(rho^alpha) over the cleaned spectrum, alpha >= 0.
template <typename Scalar = double>
Scalar trace_power(const DensityMatrix<Scalar>& rho, Scalar alpha) {
  if (!(alpha >= Scalar(0))) throw Error(Errc::InvalidAlpha, "trace_power needs alpha >= 0");
  return trace_function(rho, [alpha](Scalar x) { return power_or_zero(x, alpha); });
}

/// Sum_j omega_j rho_j.
template <typename Scalar = double>
DensityMatrix<Scalar> mixture(std::span<const DensityMatrix<Scalar>> rhos,
                              const WeightVector<Scalar>& omega) {
  if (rhos.empty()) throw Error(Errc::InvalidArgument, "mixture of zero densities");
  if (static_cast<Eigen::Index>(rhos.size()) != omega.size()) {
    throw Error(Errc::DimensionMismatch,
                std::to_string(rhos.size()) + " densities but " +
                    std::to_string(omega.size()) + " weights");
  }
  const Eigen::Index m = rhos.front().dim();
  MatrixX<Scalar> total = MatrixX<Scalar>::Zero(m, m);
  for (std::size_t j = 0; j < rhos.size(); ++j) {
    if (rhos[j].dim() != m) {
      throw Error(Errc::DimensionMismatch,
                  "density " + std::to_string(j) + " has dimension " +
                      std::to_string(rhos[j].dim()) + ", expected " + std::to_string(m));
    }
    const Scalar w = omega[static_cast<Eigen::Index>(j)];
    if (w != Scalar(0)) total.noalias() += w * rhos[j].matrix();
  }
  return DensityMatrix<Scalar>(std::move(total));
}

/// rho1 (x) rho2, the joint density of two independent subsystems.
template <typename Scalar = double>
DensityMatrix<Scalar> kronecker_joint(const DensityMatrix<Scalar>& rho1,
                                      const DensityMatrix<Scalar>& rho2) {
  const Eigen::Index m1 = rho1.dim();
  const Eigen::Index m2 = rho2.dim();
  MatrixX<Scalar> joint(m1 * m2, m1 * m2);
  for (Eigen::Index i = 0; i < m1; ++i) {
    for (Eigen::Index j = 0; j < m1; ++j) {
      joint.block(i * m2, j * m2, m2, m2) = rho1(i, j) * rho2.matrix();
    }
  }
  return DensityMatrix<Scalar>(std::move(joint));
}

}  // namespace qjt
