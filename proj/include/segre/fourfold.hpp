// SPDX-License-Identifier: MIT
#pragma once

#include <Eigen/Dense>
#include <memory>
#include <vector>

#include "segre/multilinear.hpp"
#include "segre/parametrization.hpp"
#include "segre/rng.hpp"

namespace segre {

/// Identification C^3 (x) C^2 ~ C^6: entry 3*s + i holds q[i] * t[s]
/// (0-based), i.e. basis vector e_{3(j-1)+l} of C^6 corresponds to
/// e_j (x) e_l with j indexing the C^2 slot and l the C^3 slot.
Eigen::VectorXcd kron32(const Eigen::VectorXcd& q, const Eigen::VectorXcd& t);

/// Point-fitting data: P[i] in C^6 (points of P^5) paired with Q[i] in C^3
/// (their prescribed images in P^2).
struct FitProblem {
  std::vector<Eigen::VectorXcd> P;
  std::vector<Eigen::VectorXcd> Q;

  std::size_t size() const { return P.size(); }
  /// Pairwise chordal separation of the points in each list must exceed
  /// 1e-6; throws DegenerateInputError otherwise.
  void check_distinct() const;
};

/// A fitted Segre embedding s(q,t) = S * (q (x) t) of P^2 x P^1 into P^5
/// with the recovered fiber coordinates t[i] over each input pair.
struct SegreFit {
  Eigen::MatrixXcd S;  // invertible 6x6
  std::vector<Eigen::Vector2cd> t;
  std::vector<double> residuals;  // chordal(S*(Q_i (x) t_i), P_i)
  int nullspace_dim = 0;
  double cond = 0.0;  // condition number of S
};

/// Fits a Segre embedding through the point pairs: solves the linear
/// system M*P_i in span{Q_i (x) C^2} for M = S^{-1} (4 annihilator
/// conditions per pair, generic nullspace dimension 4), draws a random
/// invertible nullspace element, and recovers each t_i by least squares.
SegreFit fit_segre_embedding(const FitProblem& fp, Rng& rng);

/// The special fourfold through 8 points of the Segre of shape (3,6,6):
/// image of zeta(q,t,t') = q (x) S(q (x) t) (x) S'(q (x) t'), a map of
/// multidegree (3,1,1) whose image spans a 40-dimensional subspace of
/// C^108.
struct Fourfold {
  std::vector<SimpleTensor> anchors;           // the 8 fitted points of X
  Eigen::MatrixXcd S, Sp;                      // 6x6 fitted embeddings
  Eigen::MatrixXcd span_basis;                 // 40x108, orthonormal rows
  std::vector<Eigen::VectorXcd> anchor_params; // 7-vectors (q | t | t')
  SegreFit fit_b, fit_c;

  /// zeta(u) in ambient C^108 coordinates.
  Eigen::VectorXcd evaluate_ambient(const Eigen::VectorXcd& u) const;
  /// 108 x 7 holomorphic Jacobian of zeta.
  Eigen::MatrixXcd jacobian_ambient(const Eigen::VectorXcd& u) const;
  /// Factors (q, S(q (x) t), S'(q (x) t')) of the simple tensor zeta(u).
  SimpleTensor point_on_x(const Eigen::VectorXcd& u) const;
};

Fourfold build_fourfold(const std::vector<SimpleTensor>& anchors, Rng& rng);

struct FourfoldEvaluation {
  Eigen::VectorXcd ambient;        // in C^108
  Eigen::VectorXcd coords;         // in the 40-dim span basis
  double span_residual = 0.0;      // relative norm lost projecting onto the span
};

FourfoldEvaluation evaluate_fourfold(const Fourfold& y,
                                     const Eigen::VectorXcd& u);

/// 40 x 7 Jacobian in span coordinates; generic column rank 5.
Eigen::MatrixXcd fourfold_jacobian(const Fourfold& y,
                                   const Eigen::VectorXcd& u);

/// View of the fourfold as a parametrization of its 40-dimensional span,
/// for the tangential-projection machinery.
class FourfoldModel : public Parametrization {
 public:
  explicit FourfoldModel(const Fourfold& y)
      : Parametrization("fourfold", {{3, 3}, {2, 1}, {2, 1}}, 40), y_(&y) {}

  Eigen::VectorXcd evaluate(const Eigen::VectorXcd& params) const override {
    return y_->span_basis * y_->evaluate_ambient(params);
  }
  Eigen::MatrixXcd jacobian(const Eigen::VectorXcd& params) const override {
    return y_->span_basis * y_->jacobian_ambient(params);
  }

 private:
  const Fourfold* y_;
};

}  // namespace segre
