// SPDX-License-Identifier: MIT
#pragma once

#include <Eigen/Dense>
#include <memory>
#include <string>
#include <vector>

#include "segre/multilinear.hpp"
#include "segre/rng.hpp"

namespace segre {

/// A multihomogeneous polynomial map C^{m1} x C^{m2} x C^{m3} -> C^A with
/// analytic Jacobian, evaluated on the stacked parameter vector
/// (q | t | t'). Models the cone over an embedded product of projective
/// spaces.
class Parametrization {
 public:
  struct Factor {
    int dim;     // vector-space dimension of the factor
    int degree;  // homogeneity degree of the map in this factor
  };

  Parametrization(std::string name, std::vector<Factor> factors,
                  Eigen::Index ambient_dim)
      : name_(std::move(name)),
        factors_(std::move(factors)),
        ambient_dim_(ambient_dim) {}
  virtual ~Parametrization() = default;

  const std::string& name() const { return name_; }
  const std::vector<Factor>& factors() const { return factors_; }
  Eigen::Index ambient_dim() const { return ambient_dim_; }

  int param_dim() const {
    int n = 0;
    for (const auto& f : factors_) n += f.dim;
    return n;
  }
  /// Dimension of the affine cone over the image: dim of the product
  /// variety plus one for the scaling direction.
  int cone_dim() const {
    int n = 1;
    for (const auto& f : factors_) n += f.dim - 1;
    return n;
  }

  int factor_offset(int f) const {
    int off = 0;
    for (int i = 0; i < f; ++i) off += factors_[i].dim;
    return off;
  }
  Eigen::VectorXcd factor_block(const Eigen::VectorXcd& params, int f) const {
    return params.segment(factor_offset(f), factors_[f].dim);
  }

  virtual Eigen::VectorXcd evaluate(const Eigen::VectorXcd& params) const = 0;
  /// ambient_dim x param_dim matrix of holomorphic partial derivatives.
  virtual Eigen::MatrixXcd jacobian(const Eigen::VectorXcd& params) const = 0;

  /// Gaussian parameter sample, one CN(0,1) entry per coordinate.
  Eigen::VectorXcd sample_params(Rng& rng) const {
    return rng.gaussian_vector(param_dim());
  }

 private:
  std::string name_;
  std::vector<Factor> factors_;
  Eigen::Index ambient_dim_;
};

/// Segre / Segre-Veronese maps in the monomial basis: coordinate
/// (alpha, beta, gamma) of the image is q^alpha * t^beta * u^gamma, where
/// the exponents of each factor run over all monomials of that factor's
/// degree in lexicographically descending order, and the ambient index is
/// row-major over the three monomial indices.
class MonomialParametrization : public Parametrization {
 public:
  MonomialParametrization(std::string name, std::vector<Factor> factors);

  Eigen::VectorXcd evaluate(const Eigen::VectorXcd& params) const override;
  Eigen::MatrixXcd jacobian(const Eigen::VectorXcd& params) const override;

  const std::vector<std::vector<Eigen::VectorXi>>& exponents() const {
    return exps_;
  }

 private:
  // exps_[f][m] is the exponent vector of monomial m of factor f.
  std::vector<std::vector<Eigen::VectorXi>> exps_;

  // Values and per-variable derivatives of one factor's monomials.
  void factor_values(int f, const Eigen::VectorXcd& x, Eigen::VectorXcd& vals,
                     Eigen::MatrixXcd* derivs) const;
};

/// The Segre map of P^{n1-1} x P^{n2-1} x P^{n3-1}: (a,b,c) -> a(x)b(x)c.
/// Ambient coordinates follow the Tensor3 flat order.
std::unique_ptr<Parametrization> make_segre(Shape3 shape);

/// Segre-Veronese embedding of multidegree (d1,d2,d3) of the product of
/// projective spaces with vector-space factor dimensions (m1,m2,m3).
std::unique_ptr<Parametrization> make_segre_veronese(
    std::array<int, 3> degrees, std::array<int, 3> factor_dims);

}  // namespace segre
