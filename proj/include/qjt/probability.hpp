#pragma once

#include <cmath>
#include <initializer_list>
#include <string>
#include <utility>

#include <Eigen/Dense>

#include "qjt/error.hpp"

namespace qjt {

inline constexpr double kSumTolerance = 1e-10;

/// Nonnegative vector summing to one within 1e-10.
template <typename Scalar = double>
class ProbabilityVector {
 public:
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  explicit ProbabilityVector(Vector p, Errc on_error = Errc::InvalidArgument)
      : p_(std::move(p)) {
    using std::abs;
    using std::isfinite;
    if (p_.size() == 0) throw Error(on_error, "probability vector is empty");
    for (Eigen::Index i = 0; i < p_.size(); ++i) {
      if (!isfinite(p_(i)) || p_(i) < Scalar(0)) {
        throw Error(on_error, "entry " + std::to_string(i) + " is negative or not finite");
      }
    }
    if (!(abs(p_.sum() - Scalar(1)) <= Scalar(kSumTolerance))) {
      throw Error(on_error, "entries must sum to 1");
    }
  }

  ProbabilityVector(std::initializer_list<Scalar> values)
      : ProbabilityVector(from_list(values)) {}

  static ProbabilityVector uniform(Eigen::Index n) {
    if (n < 1) throw Error(Errc::InvalidArgument, "uniform distribution needs n >= 1");
    return ProbabilityVector(Vector::Constant(n, Scalar(1) / static_cast<Scalar>(n)));
  }

  Eigen::Index size() const noexcept { return p_.size(); }
  Scalar operator[](Eigen::Index i) const { return p_(i); }
  const Vector& values() const noexcept { return p_; }

 private:
  static Vector from_list(std::initializer_list<Scalar> values) {
    Vector v(static_cast<Eigen::Index>(values.size()));
    Eigen::Index i = 0;
    for (Scalar x : values) v(i++) = x;
    return v;
  }

  Vector p_;
};

/// Mixture weights omega: nonnegative, summing to one.
template <typename Scalar = double>
class WeightVector {
 public:
  using Vector = typename ProbabilityVector<Scalar>::Vector;

  explicit WeightVector(Vector omega) : p_(std::move(omega), Errc::InvalidWeights) {}
  WeightVector(std::initializer_list<Scalar> values) : p_(make(values)) {}

  static WeightVector uniform(Eigen::Index n) {
    if (n < 1) throw Error(Errc::InvalidWeights, "weight vector needs n >= 1");
    return WeightVector(Vector::Constant(n, Scalar(1) / static_cast<Scalar>(n)));
  }

  Eigen::Index size() const noexcept { return p_.size(); }
  Scalar operator[](Eigen::Index i) const { return p_[i]; }
  const Vector& values() const noexcept { return p_.values(); }
  const ProbabilityVector<Scalar>& probabilities() const noexcept { return p_; }

 private:
  static ProbabilityVector<Scalar> make(std::initializer_list<Scalar> values) {
    Vector v(static_cast<Eigen::Index>(values.size()));
    Eigen::Index i = 0;
    for (Scalar x : values) v(i++) = x;
    return ProbabilityVector<Scalar>(std::move(v), Errc::InvalidWeights);
  }

  ProbabilityVector<Scalar> p_;
};

}  // namespace qjt
