// SPDX-License-Identifier: MIT
#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <vector>

#include "segre/errors.hpp"
#include "segre/rng.hpp"

namespace segre {

using Cx = std::complex<double>;

/// Default relative threshold for numerical rank decisions.
inline constexpr double kRankRelTol = 1e-8;

/// Vector-space dimensions (n1, n2, n3) of a 3-way tensor space.
/// Projectively this is the Segre of P^{n1-1} x P^{n2-1} x P^{n3-1}.
struct Shape3 {
  int n1 = 0;
  int n2 = 0;
  int n3 = 0;

  Shape3() = default;
  Shape3(int n1_, int n2_, int n3_) : n1(n1_), n2(n2_), n3(n3_) {
    if (n1 < 2 || n2 < 2 || n3 < 2)
      throw StructuralError("Shape3: all dimensions must be >= 2");
  }

  Eigen::Index size() const {
    return static_cast<Eigen::Index>(n1) * n2 * n3;
  }
  /// Dimension of the Segre variety X = a1 + a2 + a3.
  int dim_x() const { return n1 + n2 + n3 - 3; }
  /// Ambient projective dimension N = n1*n2*n3 - 1.
  Eigen::Index ambient_projective_dim() const { return size() - 1; }

  bool operator==(const Shape3&) const = default;
};

/// Dense complex 3-way tensor, flat index i*n2*n3 + j*n3 + k.
struct Tensor3 {
  Shape3 shape;
  Eigen::VectorXcd data;

  Tensor3() = default;
  Tensor3(Shape3 s, Eigen::VectorXcd d) : shape(s), data(std::move(d)) {
    if (data.size() != shape.size())
      throw StructuralError("Tensor3: data length does not match shape");
    if (!data.allFinite())
      throw StructuralError("Tensor3: entries must be finite");
  }
  static Tensor3 zero(Shape3 s) {
    return Tensor3(s, Eigen::VectorXcd::Zero(s.size()));
  }

  Cx at(int i, int j, int k) const {
    return data[static_cast<Eigen::Index>(i) * shape.n2 * shape.n3 +
                static_cast<Eigen::Index>(j) * shape.n3 + k];
  }
  double norm() const { return data.norm(); }
};

/// Rank-1 tensor a (x) b (x) c, stored by its factor vectors.
struct SimpleTensor {
  Eigen::VectorXcd a, b, c;

  SimpleTensor() = default;
  SimpleTensor(Eigen::VectorXcd a_, Eigen::VectorXcd b_, Eigen::VectorXcd c_)
      : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
    if (a.norm() == 0.0 || b.norm() == 0.0 || c.norm() == 0.0)
      throw StructuralError("SimpleTensor: zero factor vector");
  }

  Shape3 shape() const {
    return Shape3(static_cast<int>(a.size()), static_cast<int>(b.size()),
                  static_cast<int>(c.size()));
  }
};

/// Ordered sum of simple tensors.
struct Decomposition {
  Shape3 shape;
  std::vector<SimpleTensor> terms;

  Decomposition() = default;
  Decomposition(Shape3 s, std::vector<SimpleTensor> t)
      : shape(s), terms(std::move(t)) {
    if (terms.empty()) throw StructuralError("Decomposition: needs k >= 1 terms");
    for (const auto& st : terms)
      if (st.shape() != shape)
        throw StructuralError("Decomposition: term shape mismatch");
  }

  int k() const { return static_cast<int>(terms.size()); }
};

/// Canonical representative of a point of projective space: unit norm,
/// with the leading coordinate (first one above 1e-8 of the max modulus)
/// rotated to the positive real axis.
struct ProjectivePoint {
  Eigen::VectorXcd rep;

  static ProjectivePoint canon(const Eigen::VectorXcd& v);
};

/// Entrywise sum of the rank-1 terms.
Tensor3 assemble(const Decomposition& d);

/// Rank-1 tensor from a single term.
Tensor3 assemble(const SimpleTensor& t);

/// Mode-m unfolding; rows indexed by mode m, columns by the remaining
/// indices in lexicographic order.
Eigen::MatrixXcd flatten(const Tensor3& t, int mode);

/// Inverse of flatten for the same mode and shape.
Tensor3 unflatten(const Eigen::MatrixXcd& m, Shape3 shape, int mode);

/// Count of singular values above rel_tol * sigma_max. Zero matrix has rank 0.
int numerical_rank(const Eigen::MatrixXcd& m, double rel_tol = kRankRelTol);

/// Rank plus the singular-value gap ratio sigma_r / sigma_{r+1} at the
/// threshold (infinity when the rank is full).
struct RankResult {
  int rank = 0;
  double gap = std::numeric_limits<double>::infinity();
};
RankResult numerical_rank_gap(const Eigen::MatrixXcd& m,
                              double rel_tol = kRankRelTol);

/// sqrt(1 - |<p,q>|^2) on unit representatives; zero iff equal projectively.
double chordal_distance(const ProjectivePoint& p, const ProjectivePoint& q);

/// Same metric on arbitrary nonzero vectors (normalized internally).
double chordal_distance(const Eigen::VectorXcd& p, const Eigen::VectorXcd& q);

/// Random point of the Segre cone: factors with i.i.d. CN(0,1) entries.
SimpleTensor sample_segre_point(Shape3 shape, Rng& rng);

/// Hermitian inner product of two rank-1 tensors via their factors.
Cx simple_inner(const SimpleTensor& s, const SimpleTensor& t);

/// Chordal distance between two rank-1 tensors as points of P^N.
double simple_chordal(const SimpleTensor& s, const SimpleTensor& t);

}  // namespace segre
