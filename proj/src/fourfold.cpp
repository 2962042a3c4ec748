// SPDX-License-Identifier: MIT
#include "segre/fourfold.hpp"

#include <Eigen/SVD>
#include <sstream>

#include "segre/errors.hpp"

namespace segre {

Eigen::VectorXcd kron32(const Eigen::VectorXcd& q, const Eigen::VectorXcd& t) {
  Eigen::VectorXcd v(q.size() * t.size());
  for (Eigen::Index s = 0; s < t.size(); ++s)
    for (Eigen::Index i = 0; i < q.size(); ++i) v[s * q.size() + i] = q[i] * t[s];
  return v;
}

void FitProblem::check_distinct() const {
  if (P.size() != Q.size())
    throw StructuralError("FitProblem: P and Q lengths differ");
  for (std::size_t i = 0; i < P.size(); ++i)
    for (std::size_t j = i + 1; j < P.size(); ++j) {
      if (chordal_distance(P[i], P[j]) <= 1e-6 ||
          chordal_distance(Q[i], Q[j]) <= 1e-6)
        throw DegenerateInputError("FitProblem: coincident points");
    }
}

namespace {

// Basis of the 2-dimensional bilinear annihilator {u : u^T q = 0} of q in C^3.
Eigen::MatrixXcd annihilator(const Eigen::VectorXcd& q) {
  Eigen::MatrixXcd row(1, q.size());
  row.row(0) = q.transpose();
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(row, Eigen::ComputeFullV);
  // Kernel of x -> q^T x is spanned by the trailing right singular vectors
  // of conj(q)^T; conjugate to undo the Hermitian pairing.
  return svd.matrixV().rightCols(q.size() - 1).conjugate();
}

}  // namespace

SegreFit fit_segre_embedding(const FitProblem& fp, Rng& rng) {
  fp.check_distinct();
  const std::size_t n = fp.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (fp.P[i].size() != 6 || fp.Q[i].size() != 3)
      throw StructuralError("fit_segre_embedding: P_i must be in C^6, Q_i in C^3");
  }

  // Conditions on M = S^{-1}, row-major vec(M)[6*r + c] = M(r,c):
  // for each pair, M*P_i must lie in span{Q_i (x) e_1, Q_i (x) e_2}, which
  // is 4 linear conditions (u_a (x) e_s)^T M P_i = 0 with u_a^T Q_i = 0.
  Eigen::MatrixXcd A(4 * n, 36);
  Eigen::Index row = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Eigen::MatrixXcd U = annihilator(fp.Q[i]);  // 3x2
    for (int a = 0; a < 2; ++a)
      for (int s = 0; s < 2; ++s, ++row) {
        Eigen::VectorXcd w = Eigen::VectorXcd::Zero(6);
        for (int l = 0; l < 3; ++l) w[3 * s + l] = U(l, a);
        for (int r = 0; r < 6; ++r)
          for (int c = 0; c < 6; ++c) A(row, 6 * r + c) = w[r] * fp.P[i][c];
      }
  }

  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(A, Eigen::ComputeFullV);
  const Eigen::VectorXd sv = svd.singularValues();
  int rank = 0;
  while (rank < sv.size() && sv[rank] > kRankRelTol * sv[0]) ++rank;
  const int nullity = 36 - rank;
  if (nullity != 4) {
    std::ostringstream msg;
    msg << "fit_segre_embedding: nullspace dimension " << nullity
        << " (expected 4); input points are not in general position";
    throw DegenerateInputError(msg.str());
  }
  const Eigen::MatrixXcd kernel = svd.matrixV().rightCols(4);

  // Invertible elements are dense in the solution space; retry a few draws.
  Eigen::MatrixXcd M(6, 6);
  double cond = 0.0;
  bool ok = false;
  for (int attempt = 0; attempt < 20 && !ok; ++attempt) {
    const Eigen::VectorXcd m = kernel * rng.gaussian_vector(4);
    for (int r = 0; r < 6; ++r)
      for (int c = 0; c < 6; ++c) M(r, c) = m[6 * r + c];
    Eigen::JacobiSVD<Eigen::MatrixXcd> msvd(M);
    cond = msvd.singularValues()(0) / msvd.singularValues()(5);
    ok = std::isfinite(cond) && cond < 1e8;
  }
  if (!ok)
    throw DegenerateInputError(
        "fit_segre_embedding: no invertible nullspace element after 20 draws");

  SegreFit fit;
  fit.nullspace_dim = nullity;
  fit.cond = cond;
  fit.S = M.inverse();
  for (std::size_t i = 0; i < n; ++i) {
    // M*P_i = Q_i (x) t_i; recover t_i by least squares on each C^2 slice.
    const Eigen::VectorXcd v = M * fp.P[i];
    const double qn2 = fp.Q[i].squaredNorm();
    Eigen::Vector2cd t;
    for (int s = 0; s < 2; ++s) {
      Cx acc(0, 0);
      for (int l = 0; l < 3; ++l) acc += v[3 * s + l] * std::conj(fp.Q[i][l]);
      t[s] = acc / qn2;
    }
    fit.t.push_back(t);
    fit.residuals.push_back(
        chordal_distance(fit.S * kron32(fp.Q[i], t), fp.P[i]));
  }
  return fit;
}

Eigen::VectorXcd Fourfold::evaluate_ambient(const Eigen::VectorXcd& u) const {
  const Eigen::VectorXcd q = u.segment(0, 3);
  const Eigen::VectorXcd t = u.segment(3, 2);
  const Eigen::VectorXcd tp = u.segment(5, 2);
  if (q.norm() == 0.0 || t.norm() == 0.0 || tp.norm() == 0.0)
    throw StructuralError("Fourfold: zero parameter factor");
  const Eigen::VectorXcd b = S * kron32(q, t);
  const Eigen::VectorXcd c = Sp * kron32(q, tp);
  Eigen::VectorXcd out(108);
  Eigen::Index idx = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 6; ++j) {
      const Cx ab = q[i] * b[j];
      for (int k = 0; k < 6; ++k) out[idx++] = ab * c[k];
    }
  return out;
}

Eigen::MatrixXcd Fourfold::jacobian_ambient(const Eigen::VectorXcd& u) const {
  const Eigen::VectorXcd q = u.segment(0, 3);
  const Eigen::VectorXcd t = u.segment(3, 2);
  const Eigen::VectorXcd tp = u.segment(5, 2);
  const Eigen::VectorXcd b = S * kron32(q, t);
  const Eigen::VectorXcd c = Sp * kron32(q, tp);

  // Per-variable derivatives of the middle and last factors.
  std::array<Eigen::VectorXcd, 3> db_dq, dc_dq;
  std::array<Eigen::VectorXcd, 2> db_dt, dc_dtp;
  Eigen::VectorXcd e3 = Eigen::VectorXcd::Zero(3), e2 = Eigen::VectorXcd::Zero(2);
  for (int l = 0; l < 3; ++l) {
    e3[l] = 1.0;
    db_dq[l] = S * kron32(e3, t);
    dc_dq[l] = Sp * kron32(e3, tp);
    e3[l] = 0.0;
  }
  for (int s = 0; s < 2; ++s) {
    e2[s] = 1.0;
    db_dt[s] = S * kron32(q, e2);
    dc_dtp[s] = Sp * kron32(q, e2);
    e2[s] = 0.0;
  }

  Eigen::MatrixXcd jac(108, 7);
  Eigen::Index idx = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 6; ++j)
      for (int k = 0; k < 6; ++k, ++idx) {
        for (int l = 0; l < 3; ++l) {
          Cx d = q[i] * (db_dq[l][j] * c[k] + b[j] * dc_dq[l][k]);
          if (l == i) d += b[j] * c[k];
          jac(idx, l) = d;
        }
        for (int s = 0; s < 2; ++s) jac(idx, 3 + s) = q[i] * db_dt[s][j] * c[k];
        for (int s = 0; s < 2; ++s) jac(idx, 5 + s) = q[i] * b[j] * dc_dtp[s][k];
      }
  return jac;
}

SimpleTensor Fourfold::point_on_x(const Eigen::VectorXcd& u) const {
  const Eigen::VectorXcd q = u.segment(0, 3);
  return SimpleTensor(q, S * kron32(q, u.segment(3, 2)),
                      Sp * kron32(q, u.segment(5, 2)));
}

Fourfold build_fourfold(const std::vector<SimpleTensor>& anchors, Rng& rng) {
  if (anchors.size() != 8)
    throw StructuralError("build_fourfold: exactly 8 anchor points required");
  for (const auto& x : anchors)
    if (x.shape() != Shape3(3, 6, 6))
      throw StructuralError("build_fourfold: anchors must have shape (3,6,6)");

  FitProblem fb, fc;
  for (const auto& x : anchors) {
    fb.Q.push_back(x.a);
    fb.P.push_back(x.b);
    fc.Q.push_back(x.a);
    fc.P.push_back(x.c);
  }
  Fourfold y;
  y.anchors = anchors;
  Rng rng_b = rng.fork(0), rng_c = rng.fork(1), rng_span = rng.fork(2);
  y.fit_b = fit_segre_embedding(fb, rng_b);
  y.fit_c = fit_segre_embedding(fc, rng_c);
  y.S = y.fit_b.S;
  y.Sp = y.fit_c.S;
  for (std::size_t i = 0; i < 8; ++i) {
    Eigen::VectorXcd u(7);
    u << anchors[i].a, y.fit_b.t[i], y.fit_c.t[i];
    y.anchor_params.push_back(u);
  }

  // Span of the image: orthonormal column basis of 80 sampled points,
  // twice the expected 40 so a rank deficiency cannot hide.
  constexpr int kSamples = 80;
  Eigen::MatrixXcd images(108, kSamples);
  for (int s = 0; s < kSamples; ++s)
    images.col(s) = y.evaluate_ambient(rng_span.gaussian_vector(7));
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(images, Eigen::ComputeFullU);
  const Eigen::VectorXd sv = svd.singularValues();
  int rank = 0;
  while (rank < sv.size() && sv[rank] > kRankRelTol * sv[0]) ++rank;
  if (rank != 40) {
    std::ostringstream msg;
    msg << "build_fourfold: span of sampled points has dimension " << rank
        << " (expected 40)";
    throw ConstructionError(msg.str());
  }
  y.span_basis = svd.matrixU().leftCols(40).adjoint();

  for (std::size_t i = 0; i < 8; ++i) {
    const double rd = chordal_distance(y.evaluate_ambient(y.anchor_params[i]),
                                       assemble(anchors[i]).data);
    if (rd >= 1e-8) {
      std::ostringstream msg;
      msg << "build_fourfold: anchor " << i << " reproduced to " << rd
          << " only";
      throw ConstructionError(msg.str());
    }
  }
  return y;
}

FourfoldEvaluation evaluate_fourfold(const Fourfold& y,
                                     const Eigen::VectorXcd& u) {
  FourfoldEvaluation ev;
  ev.ambient = y.evaluate_ambient(u);
  ev.coords = y.span_basis * ev.ambient;
  ev.span_residual =
      (ev.ambient - y.span_basis.adjoint() * ev.coords).norm() /
      ev.ambient.norm();
  return ev;
}

Eigen::MatrixXcd fourfold_jacobian(const Fourfold& y,
                                   const Eigen::VectorXcd& u) {
  return y.span_basis * y.jacobian_ambient(u);
}

}  // namespace segre
