// SPDX-License-Identifier: MIT
#include "segre/secant.hpp"

#include <sstream>

#include "segre/errors.hpp"

namespace segre {

int expected_secant_affine_dim(const Parametrization& p, int k) {
  return static_cast<int>(
      std::min<Eigen::Index>(p.ambient_dim(), static_cast<Eigen::Index>(k) *
                                                   p.cone_dim()));
}

int expected_secant_dimension(Shape3 shape, int k) {
  const Eigen::Index n = shape.size();
  const long long by_count =
      static_cast<long long>(k) * shape.dim_x() + k - 1;
  return static_cast<int>(std::min<long long>(n - 1, by_count));
}

namespace {

RankResult terracini_rank(const Parametrization& p, int k, Rng& rng,
                          double rel_tol) {
  const Eigen::Index cols = static_cast<Eigen::Index>(k) * p.param_dim();
  Eigen::MatrixXcd stacked(p.ambient_dim(), cols);
  for (int i = 0; i < k; ++i) {
    const Eigen::VectorXcd u = p.sample_params(rng);
    stacked.middleCols(static_cast<Eigen::Index>(i) * p.param_dim(),
                       p.param_dim()) = p.jacobian(u);
  }
  return numerical_rank_gap(stacked, rel_tol);
}

}  // namespace

SecantDimension terracini_dimension(const Parametrization& p, int k, Rng& rng,
                                    double rel_tol) {
  if (k < 1) throw StructuralError("terracini_dimension: k must be >= 1");
  Rng draw_a = rng.fork(0);
  Rng draw_b = rng.fork(1);
  const RankResult ra = terracini_rank(p, k, draw_a, rel_tol);
  const RankResult rb = terracini_rank(p, k, draw_b, rel_tol);
  if (ra.rank != rb.rank) {
    std::ostringstream msg;
    msg << "terracini_dimension: rank disagreement across samples (" << ra.rank
        << " vs " << rb.rank << ") for " << p.name() << ", k=" << k;
    throw GenericityError(msg.str());
  }
  SecantDimension out;
  out.affine_dim = ra.rank;
  out.projective_dim = ra.rank - 1;
  out.expected_projective_dim = expected_secant_affine_dim(p, k) - 1;
  out.defect = out.expected_projective_dim - out.projective_dim;
  out.sv_gap = std::min(ra.gap, rb.gap);
  out.seed = rng.seed();
  return out;
}

int generic_rank(Shape3 shape, Rng& rng) {
  const auto segre = make_segre(shape);
  const Eigen::Index ambient = segre->ambient_dim();
  for (int k = 1; k <= static_cast<int>(ambient) + 1; ++k) {
    const SecantDimension d =
        terracini_dimension(*segre, k, rng.fork(static_cast<uint64_t>(k)));
    if (d.affine_dim == ambient) return k;
  }
  throw SolverError("generic_rank: no k filled the ambient space");
}

BalanceReport classify_balance(int a1, int a2, int a3, std::optional<int> k) {
  if (!(a1 >= 1 && a1 <= a2 && a2 <= a3))
    throw StructuralError("classify_balance: need 1 <= a1 <= a2 <= a3");
  BalanceReport r;
  const long long prod = static_cast<long long>(a1 + 1) * (a2 + 1);
  r.threshold = prod - (a1 + a2);
  r.bound = prod - (1 + a1 + a2);
  r.kind = (a3 >= r.threshold) ? Balance::unbalanced : Balance::balanced;
  r.k = k;
  if (k) r.k_within_bound = (*k <= r.bound);
  return r;
}

}  // namespace segre
