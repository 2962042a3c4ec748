// SPDX-License-Identifier: MIT
#include "segre/parametrization.hpp"

#include <array>

#include "segre/errors.hpp"

namespace segre {

namespace {

// All exponent vectors of total degree d in n variables, lexicographically
// descending, so that degree 1 reproduces the standard basis order.
void gen_exponents(int n, int d, Eigen::VectorXi& cur, int pos, int left,
                   std::vector<Eigen::VectorXi>& out) {
  if (pos == n - 1) {
    cur[pos] = left;
    out.push_back(cur);
    return;
  }
  for (int e = left; e >= 0; --e) {
    cur[pos] = e;
    gen_exponents(n, d, cur, pos + 1, left - e, out);
  }
}

std::vector<Eigen::VectorXi> monomials(int n, int d) {
  std::vector<Eigen::VectorXi> out;
  Eigen::VectorXi cur(n);
  gen_exponents(n, d, cur, 0, d, out);
  return out;
}

std::vector<std::vector<Eigen::VectorXi>> build_exponent_tables(
    const std::vector<Parametrization::Factor>& factors) {
  std::vector<std::vector<Eigen::VectorXi>> exps;
  for (const auto& f : factors) {
    if (f.dim < 2 || f.degree < 1)
      throw StructuralError("MonomialParametrization: bad factor");
    exps.push_back(monomials(f.dim, f.degree));
  }
  return exps;
}

Eigen::Index ambient_of(
    const std::vector<std::vector<Eigen::VectorXi>>& exps) {
  Eigen::Index ambient = 1;
  for (const auto& e : exps) ambient *= static_cast<Eigen::Index>(e.size());
  return ambient;
}

}  // namespace

MonomialParametrization::MonomialParametrization(std::string name,
                                                 std::vector<Factor> factors)
    : Parametrization(std::move(name), factors,
                      ambient_of(build_exponent_tables(factors))),
      exps_(build_exponent_tables(factors)) {}

Eigen::VectorXcd MonomialParametrization::evaluate(
    const Eigen::VectorXcd& params) const {
  std::array<Eigen::VectorXcd, 3> vals;
  for (int f = 0; f < 3; ++f)
    factor_values(f, factor_block(params, f), vals[f], nullptr);
  Eigen::VectorXcd out(ambient_dim());
  Eigen::Index idx = 0;
  for (Eigen::Index i = 0; i < vals[0].size(); ++i)
    for (Eigen::Index j = 0; j < vals[1].size(); ++j) {
      const Cx ij = vals[0][i] * vals[1][j];
      for (Eigen::Index k = 0; k < vals[2].size(); ++k)
        out[idx++] = ij * vals[2][k];
    }
  return out;
}

Eigen::MatrixXcd MonomialParametrization::jacobian(
    const Eigen::VectorXcd& params) const {
  std::array<Eigen::VectorXcd, 3> vals;
  std::array<Eigen::MatrixXcd, 3> derivs;
  for (int f = 0; f < 3; ++f)
    factor_values(f, factor_block(params, f), vals[f], &derivs[f]);

  Eigen::MatrixXcd jac(ambient_dim(), param_dim());
  Eigen::Index idx = 0;
  for (Eigen::Index i = 0; i < vals[0].size(); ++i)
    for (Eigen::Index j = 0; j < vals[1].size(); ++j)
      for (Eigen::Index k = 0; k < vals[2].size(); ++k, ++idx) {
        int col = 0;
        for (int v = 0; v < factors()[0].dim; ++v)
          jac(idx, col++) = derivs[0](i, v) * vals[1][j] * vals[2][k];
        for (int v = 0; v < factors()[1].dim; ++v)
          jac(idx, col++) = vals[0][i] * derivs[1](j, v) * vals[2][k];
        for (int v = 0; v < factors()[2].dim; ++v)
          jac(idx, col++) = vals[0][i] * vals[1][j] * derivs[2](k, v);
      }
  return jac;
}

void MonomialParametrization::factor_values(int f, const Eigen::VectorXcd& x,
                                            Eigen::VectorXcd& vals,
                                            Eigen::MatrixXcd* derivs) const {
  const auto& mons = exps_[f];
  const int n = factors()[f].dim;
  vals.resize(static_cast<Eigen::Index>(mons.size()));
  if (derivs) derivs->resize(static_cast<Eigen::Index>(mons.size()), n);
  for (std::size_t m = 0; m < mons.size(); ++m) {
    const Eigen::VectorXi& e = mons[m];
    Cx v(1.0, 0.0);
    for (int v_i = 0; v_i < n; ++v_i)
      for (int p = 0; p < e[v_i]; ++p) v *= x[v_i];
    vals[static_cast<Eigen::Index>(m)] = v;
    if (!derivs) continue;
    for (int v_i = 0; v_i < n; ++v_i) {
      if (e[v_i] == 0) {
        (*derivs)(static_cast<Eigen::Index>(m), v_i) = Cx(0.0, 0.0);
        continue;
      }
      Cx d(static_cast<double>(e[v_i]), 0.0);
      for (int w = 0; w < n; ++w) {
        const int pw = (w == v_i) ? e[w] - 1 : e[w];
        for (int p = 0; p < pw; ++p) d *= x[w];
      }
      (*derivs)(static_cast<Eigen::Index>(m), v_i) = d;
    }
  }
}

std::unique_ptr<Parametrization> make_segre(Shape3 shape) {
  return std::make_unique<MonomialParametrization>(
      "segre", std::vector<Parametrization::Factor>{
                   {shape.n1, 1}, {shape.n2, 1}, {shape.n3, 1}});
}

std::unique_ptr<Parametrization> make_segre_veronese(
    std::array<int, 3> degrees, std::array<int, 3> factor_dims) {
  return std::make_unique<MonomialParametrization>(
      "segre_veronese",
      std::vector<Parametrization::Factor>{{factor_dims[0], degrees[0]},
                                           {factor_dims[1], degrees[1]},
                                           {factor_dims[2], degrees[2]}});
}

}  // namespace segre
