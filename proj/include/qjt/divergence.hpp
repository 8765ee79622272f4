#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "qjt/entropy.hpp"
#include "qjt/error.hpp"
#include "qjt/probability.hpp"
#include "qjt/spectral.hpp"

namespace qjt {

/// Rounding can leave a Jensen gap slightly below zero; anything below this
/// means the inputs were not densities.
inline constexpr double kNegativeGapFloor = -1e-10;

template <typename Scalar = double>
struct DivergenceResult {
  Scalar value;
  Scalar upper_bound;  // H_alpha(omega)
  Scalar tight_bound;  // log_alpha(n)
  Scalar normalized;   // value / upper_bound, 0 when upper_bound == 0; within
                       // [0, 1] for alpha in [1, 2]
  Scalar alpha;
  std::size_t n;
};

/// H_alpha(omega): the largest divergence any n densities can reach under
/// these weights.
template <typename Scalar>
Scalar upper_bound(const WeightVector<Scalar>& omega, EntropicIndex<Scalar> alpha) {
  return tsallis_entropy_p(omega.probabilities(), alpha);
}

/// log_alpha(n), the upper bound maximized over all weight vectors.
template <typename Scalar>
Scalar tight_bound(std::size_t n, EntropicIndex<Scalar> alpha) {
  if (n < 1) throw Error(Errc::InvalidArgument, "tight bound needs n >= 1");
  return alpha_log(static_cast<Scalar>(n), alpha);
}

namespace detail {

template <typename Scalar>
Scalar clamp_gap(Scalar gap) {
  if (gap < Scalar(kNegativeGapFloor)) {
    throw Error(Errc::NumericalFailure,
                "Jensen gap " + std::to_string(static_cast<double>(gap)) + " is negative");
  }
  return std::max(gap, Scalar(0));
}

// Only rounding-level excess over 1 is clamped. For alpha < 1 the bound
// H_alpha(omega) can genuinely be exceeded and the ratio is reported as is.
template <typename Scalar>
Scalar normalize(Scalar value, Scalar bound) {
  if (!(bound > Scalar(0))) return Scalar(0);
  const Scalar ratio = value / bound;
  return ratio > Scalar(1) && ratio <= Scalar(1) + Scalar(1e-12) ? Scalar(1) : ratio;
}

}  // namespace detail

/// H_alpha(sum_j omega_j rho_j) - sum_j omega_j H_alpha(rho_j). The first
/// term comes from eigendecomposing the mixed matrix itself.
template <typename Scalar>
DivergenceResult<Scalar> jensen_tsallis_divergence(std::span<const DensityMatrix<Scalar>> rhos,
                                                   const WeightVector<Scalar>& omega,
                                                   EntropicIndex<Scalar> alpha) {
  const DensityMatrix<Scalar> mixed = mixture(rhos, omega);

  DivergenceResult<Scalar> result{};
  result.alpha = alpha.value();
  result.n = rhos.size();
  result.upper_bound = upper_bound(omega, alpha);
  result.tight_bound = tight_bound(rhos.size(), alpha);

  const DensityMatrix<Scalar>* first_used = nullptr;
  bool all_equal = true;
  Scalar mean_entropy(0);
  for (std::size_t j = 0; j < rhos.size(); ++j) {
    const Scalar w = omega[static_cast<Eigen::Index>(j)];
    if (w == Scalar(0)) continue;
    if (first_used == nullptr) {
      first_used = &rhos[j];
    } else if (!(rhos[j] == *first_used)) {
      all_equal = false;
    }
    mean_entropy += w * tsallis_entropy(rhos[j], alpha);
  }

  result.value = all_equal ? Scalar(0)
                           : detail::clamp_gap(tsallis_entropy(mixed, alpha) - mean_entropy);
  result.normalized = detail::normalize(result.value, result.upper_bound);
  return result;
}

/// Symmetric matrix of two-density divergences with weights (1/2, 1/2),
/// normalized by H_alpha(1/2, 1/2) unless `normalized` is false. Cells are
/// independent, so spreading them over `threads` workers leaves every value
/// bit-identical to the sequential result.
template <typename Scalar>
MatrixX<Scalar> pairwise_matrix(std::span<const DensityMatrix<Scalar>> rhos,
                                EntropicIndex<Scalar> alpha, bool normalized = true,
                                unsigned threads = 0) {
  const auto n = static_cast<Eigen::Index>(rhos.size());
  MatrixX<Scalar> out = MatrixX<Scalar>::Zero(n, n);
  if (n == 0) return out;
  const Eigen::Index m = rhos.front().dim();
  for (std::size_t j = 0; j < rhos.size(); ++j) {
    if (rhos[j].dim() != m) {
      throw Error(Errc::DimensionMismatch,
                  "density " + std::to_string(j) + " has dimension " +
                      std::to_string(rhos[j].dim()) + ", expected " + std::to_string(m));
    }
  }

  std::vector<Scalar> entropies(rhos.size());
  for (std::size_t j = 0; j < rhos.size(); ++j) entropies[j] = tsallis_entropy(rhos[j], alpha);
  const WeightVector<Scalar> half = WeightVector<Scalar>::uniform(2);
  const Scalar bound = upper_bound(half, alpha);

  std::vector<std::pair<Eigen::Index, Eigen::Index>> cells;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) cells.emplace_back(i, j);
  }

  auto evaluate = [&](std::size_t c) {
    const auto [i, j] = cells[c];
    const auto& a = rhos[static_cast<std::size_t>(i)];
    const auto& b = rhos[static_cast<std::size_t>(j)];
    Scalar value(0);
    if (!(a == b)) {
      // Same operation order as mixture() and jensen_tsallis_divergence().
      MatrixX<Scalar> mixed = Scalar(0.5) * a.matrix();
      mixed.noalias() += Scalar(0.5) * b.matrix();
      Scalar mean = Scalar(0.5) * entropies[static_cast<std::size_t>(i)];
      mean += Scalar(0.5) * entropies[static_cast<std::size_t>(j)];
      value = detail::clamp_gap(
          tsallis_entropy(DensityMatrix<Scalar>(std::move(mixed)), alpha) - mean);
    }
    if (normalized) value = detail::normalize(value, bound);
    out(i, j) = value;
    out(j, i) = value;
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, cells.size()));
  if (threads <= 1) {
    for (std::size_t c = 0; c < cells.size(); ++c) evaluate(c);
    return out;
  }

  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> workers;
  workers.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    workers.emplace_back([&, t] {
      try {
        for (std::size_t c = t; c < cells.size(); c += threads) evaluate(c);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& w : workers) w.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

}  // namespace qjt
