#pragma once

#include <cmath>

#include "qjt/error.hpp"
#include "qjt/probability.hpp"
#include "qjt/spectral.hpp"

namespace qjt {

/// Within this distance of 1 the entropies switch to their Shannon /
/// von Neumann limits.
inline constexpr double kShannonWindow = 1e-8;

/// Positive entropic index alpha.
template <typename Scalar = double>
class EntropicIndex {
 public:
  explicit EntropicIndex(Scalar alpha) : alpha_(alpha) {
    using std::isfinite;
    if (!isfinite(alpha_) || !(alpha_ > Scalar(0))) {
      throw Error(Errc::InvalidAlpha, "entropic index must be a positive finite number");
    }
  }

  Scalar value() const noexcept { return alpha_; }

  bool is_shannon_limit() const noexcept {
    using std::abs;
    return abs(alpha_ - Scalar(1)) < Scalar(kShannonWindow);
  }

 private:
  Scalar alpha_;
};

/// log_alpha(x) = (x^(1-alpha) - 1) / (1 - alpha); natural log at alpha = 1.
template <typename Scalar>
Scalar alpha_log(Scalar x, EntropicIndex<Scalar> alpha) {
  using std::expm1;
  using std::log;
  if (!(x > Scalar(0))) throw Error(Errc::NonPositiveArgument, "alpha_log needs x > 0");
  const Scalar ln_x = log(x);
  if (alpha.is_shannon_limit()) return ln_x;
  const Scalar k = Scalar(1) - alpha.value();
  return expm1(k * ln_x) / k;
}

template <typename Scalar>
Scalar shannon_entropy(const ProbabilityVector<Scalar>& p) {
  using std::log;
  Scalar h(0);
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    if (p[i] > Scalar(0)) h -= p[i] * log(p[i]);
  }
  return h + Scalar(0);
}

namespace detail {

// sum_i p_i^alpha - 1, written as sum_i p_i (p_i^(alpha-1) - 1) so it stays
// accurate for alpha near 1. Zero entries contribute nothing. Valid for any
// alpha >= 0.
template <typename Scalar>
Scalar power_sum_minus_one(const ProbabilityVector<Scalar>& p, Scalar alpha) {
  using std::expm1;
  using std::log;
  Scalar s(0);
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    if (p[i] > Scalar(0)) s += p[i] * expm1((alpha - Scalar(1)) * log(p[i]));
  }
  return s;
}

}  // namespace detail

/// H_alpha(p) = (sum p_i^alpha - 1) / (1 - alpha).
template <typename Scalar>
Scalar tsallis_entropy_p(const ProbabilityVector<Scalar>& p, EntropicIndex<Scalar> alpha) {
  if (alpha.is_shannon_limit()) return shannon_entropy(p);
  // Adding +0 turns the -0 of pure states into +0.
  return detail::power_sum_minus_one(p, alpha.value()) / (Scalar(1) - alpha.value()) + Scalar(0);
}

/// R_alpha(p) = log(sum p_i^alpha) / (1 - alpha).
template <typename Scalar>
Scalar renyi_entropy_p(const ProbabilityVector<Scalar>& p, EntropicIndex<Scalar> alpha) {
  using std::log1p;
  if (alpha.is_shannon_limit()) return shannon_entropy(p);
  return log1p(detail::power_sum_minus_one(p, alpha.value())) / (Scalar(1) - alpha.value()) +
         Scalar(0);
}

template <typename Scalar>
Scalar tsallis_entropy(const DensityMatrix<Scalar>& rho, EntropicIndex<Scalar> alpha) {
  return tsallis_entropy_p(spectrum(rho).probabilities(), alpha);
}

template <typename Scalar>
Scalar renyi_entropy(const DensityMatrix<Scalar>& rho, EntropicIndex<Scalar> alpha) {
  return renyi_entropy_p(spectrum(rho).probabilities(), alpha);
}

/// -tr(rho log rho), evaluated on the spectrum.
template <typename Scalar>
Scalar von_neumann_entropy(const DensityMatrix<Scalar>& rho) {
  return shannon_entropy(spectrum(rho).probabilities());
}

/// Tsallis entropy of the joint density rho1 (x) rho2.
template <typename Scalar>
Scalar joint_tsallis_entropy(const DensityMatrix<Scalar>& rho1, const DensityMatrix<Scalar>& rho2,
                             EntropicIndex<Scalar> alpha) {
  return tsallis_entropy(kronecker_joint(rho1, rho2), alpha);
}

}  // namespace qjt
