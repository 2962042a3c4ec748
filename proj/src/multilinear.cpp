// SPDX-License-Identifier: MIT
#include "segre/multilinear.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

namespace segre {

ProjectivePoint ProjectivePoint::canon(const Eigen::VectorXcd& v) {
  const double n = v.norm();
  if (n == 0.0) throw StructuralError("ProjectivePoint: zero vector");
  Eigen::VectorXcd rep = v / n;
  const double mx = rep.cwiseAbs().maxCoeff();
  Eigen::Index lead = 0;
  for (; lead < rep.size(); ++lead)
    if (std::abs(rep[lead]) > 1e-8 * mx) break;
  const Cx z = rep[lead];
  rep *= std::conj(z) / std::abs(z);
  return ProjectivePoint{std::move(rep)};
}

Tensor3 assemble(const Decomposition& d) {
  const Shape3 s = d.shape;
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(s.size());
  for (const auto& t : d.terms) {
    Eigen::Index idx = 0;
    for (int i = 0; i < s.n1; ++i)
      for (int j = 0; j < s.n2; ++j) {
        const Cx ab = t.a[i] * t.b[j];
        for (int k = 0; k < s.n3; ++k) out[idx++] += ab * t.c[k];
      }
  }
  return Tensor3(s, std::move(out));
}

Tensor3 assemble(const SimpleTensor& t) {
  return assemble(Decomposition(t.shape(), {t}));
}

Eigen::MatrixXcd flatten(const Tensor3& t, int mode) {
  const auto [n1, n2, n3] = t.shape;
  Eigen::MatrixXcd m;
  switch (mode) {
    case 1:
      m.resize(n1, static_cast<Eigen::Index>(n2) * n3);
      break;
    case 2:
      m.resize(n2, static_cast<Eigen::Index>(n1) * n3);
      break;
    case 3:
      m.resize(n3, static_cast<Eigen::Index>(n1) * n2);
      break;
    default:
      throw StructuralError("flatten: mode must be 1, 2 or 3");
  }
  Eigen::Index idx = 0;
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n2; ++j)
      for (int k = 0; k < n3; ++k, ++idx) {
        if (mode == 1)
          m(i, static_cast<Eigen::Index>(j) * n3 + k) = t.data[idx];
        else if (mode == 2)
          m(j, static_cast<Eigen::Index>(i) * n3 + k) = t.data[idx];
        else
          m(k, static_cast<Eigen::Index>(i) * n2 + j) = t.data[idx];
      }
  return m;
}

Tensor3 unflatten(const Eigen::MatrixXcd& m, Shape3 shape, int mode) {
  const auto [n1, n2, n3] = shape;
  Eigen::VectorXcd data(shape.size());
  Eigen::Index idx = 0;
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n2; ++j)
      for (int k = 0; k < n3; ++k, ++idx) {
        if (mode == 1)
          data[idx] = m(i, static_cast<Eigen::Index>(j) * n3 + k);
        else if (mode == 2)
          data[idx] = m(j, static_cast<Eigen::Index>(i) * n3 + k);
        else if (mode == 3)
          data[idx] = m(k, static_cast<Eigen::Index>(i) * n2 + j);
        else
          throw StructuralError("unflatten: mode must be 1, 2 or 3");
      }
  return Tensor3(shape, std::move(data));
}

namespace {

Eigen::VectorXd singular_values(const Eigen::MatrixXcd& m) {
  if (m.rows() >= 32 && m.cols() >= 32)
    return Eigen::BDCSVD<Eigen::MatrixXcd>(m).singularValues();
  return Eigen::JacobiSVD<Eigen::MatrixXcd>(m).singularValues();
}

}  // namespace

int numerical_rank(const Eigen::MatrixXcd& m, double rel_tol) {
  return numerical_rank_gap(m, rel_tol).rank;
}

RankResult numerical_rank_gap(const Eigen::MatrixXcd& m, double rel_tol) {
  if (rel_tol <= 0.0 || rel_tol >= 1.0)
    throw StructuralError("numerical_rank: rel_tol must be in (0,1)");
  const Eigen::VectorXd sv = singular_values(m);
  if (sv.size() == 0 || sv[0] == 0.0) return {0, 0.0};
  int r = 0;
  while (r < sv.size() && sv[r] > rel_tol * sv[0]) ++r;
  RankResult out;
  out.rank = r;
  if (r > 0 && r < sv.size() && sv[r] > 0.0)
    out.gap = sv[r - 1] / sv[r];
  return out;
}

double chordal_distance(const ProjectivePoint& p, const ProjectivePoint& q) {
  if (p.rep.size() != q.rep.size())
    throw StructuralError("chordal_distance: dimension mismatch");
  const double c = std::abs(p.rep.dot(q.rep));
  return std::sqrt(std::max(0.0, 1.0 - std::min(1.0, c) * std::min(1.0, c)));
}

double chordal_distance(const Eigen::VectorXcd& p, const Eigen::VectorXcd& q) {
  if (p.size() != q.size())
    throw StructuralError("chordal_distance: dimension mismatch");
  const double np = p.norm(), nq = q.norm();
  if (np == 0.0 || nq == 0.0)
    throw StructuralError("chordal_distance: zero vector");
  const double c = std::min(1.0, std::abs(p.dot(q)) / (np * nq));
  return std::sqrt(std::max(0.0, 1.0 - c * c));
}

SimpleTensor sample_segre_point(Shape3 shape, Rng& rng) {
  return SimpleTensor(rng.gaussian_vector(shape.n1),
                      rng.gaussian_vector(shape.n2),
                      rng.gaussian_vector(shape.n3));
}

Cx simple_inner(const SimpleTensor& s, const SimpleTensor& t) {
  // <a(x)b(x)c, a'(x)b'(x)c'> factors through the modes.
  return s.a.dot(t.a) * s.b.dot(t.b) * s.c.dot(t.c);
}

double simple_chordal(const SimpleTensor& s, const SimpleTensor& t) {
  const double ns = s.a.norm() * s.b.norm() * s.c.norm();
  const double nt = t.a.norm() * t.b.norm() * t.c.norm();
  const double c = std::min(1.0, std::abs(simple_inner(s, t)) / (ns * nt));
  return std::sqrt(std::max(0.0, 1.0 - c * c));
}

}  // namespace segre
