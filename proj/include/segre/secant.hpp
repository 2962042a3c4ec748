// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <optional>

#include "segre/multilinear.hpp"
#include "segre/parametrization.hpp"

namespace segre {

/// Dimension data of a k-th secant variety, from a randomized Terracini
/// computation.
struct SecantDimension {
  int affine_dim = 0;
  int projective_dim = -1;
  int expected_projective_dim = -1;
  int defect = 0;
  double sv_gap = 0.0;  // singular-value gap ratio at the rank threshold
  std::uint64_t seed = 0;
};

/// Expected affine dimension min(ambient, k * cone_dim) of the cone over
/// the k-th secant variety.
int expected_secant_affine_dim(const Parametrization& p, int k);

/// min(N, k*dim(X) + k - 1) for the Segre of the given shape.
int expected_secant_dimension(Shape3 shape, int k);

/// Terracini's lemma at k random points: the affine dimension is the rank
/// of the stacked Jacobians. Two independent draws must agree; a
/// disagreement raises GenericityError with both values in the message.
SecantDimension terracini_dimension(const Parametrization& p, int k, Rng& rng,
                                    double rel_tol = kRankRelTol);

/// Smallest k whose k-th secant variety fills the ambient tensor space.
int generic_rank(Shape3 shape, Rng& rng);

enum class Balance { balanced, unbalanced };

/// The unbalanced-range classification for projective dimensions
/// a1 <= a2 <= a3, and the identifiability bound that is sharp in the
/// unbalanced range.
struct BalanceReport {
  Balance kind = Balance::balanced;
  long long threshold = 0;  // unbalanced iff a3 >= threshold
  long long bound = 0;      // k-identifiable (unbalanced case) iff k <= bound
  std::optional<int> k;
  std::optional<bool> k_within_bound;
};

BalanceReport classify_balance(int a1, int a2, int a3,
                               std::optional<int> k = std::nullopt);

}  // namespace segre
