#include "nlops/certify.hpp"

#include <cmath>

namespace nlops {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;

// column index of the (re, im) coordinates of H_pq, p < q
int upper_index(int d, int p, int q) {
  // strict-upper pairs in row-major order after the d diagonal slots
  return d + 2 * (p * (2 * d - p - 1) / 2 + (q - p - 1));
}

}  // namespace

const char* party_name(Party p) { return p == Party::Alice ? "alice" : "bob"; }

Eigen::VectorXd pack_hermitian(const Matrix& h) {
  const int d = static_cast<int>(h.rows());
  if (h.cols() != d) throw std::invalid_argument("pack_hermitian: not square");
  Eigen::VectorXd x(d * d);
  for (int p = 0; p < d; ++p) x[p] = h(p, p).real();
  for (int p = 0; p < d; ++p) {
    for (int q = p + 1; q < d; ++q) {
      const int k = upper_index(d, p, q);
      x[k] = h(p, q).real() * kSqrt2;
      x[k + 1] = h(p, q).imag() * kSqrt2;
    }
  }
  return x;
}

Matrix unpack_hermitian(const Eigen::VectorXd& x, int d) {
  if (x.size() != d * d)
    throw std::invalid_argument("unpack_hermitian: coordinate size mismatch");
  Matrix h(d, d);
  for (int p = 0; p < d; ++p) h(p, p) = x[p];
  for (int p = 0; p < d; ++p) {
    for (int q = p + 1; q < d; ++q) {
      const int k = upper_index(d, p, q);
      const Complex v(x[k] / kSqrt2, x[k + 1] / kSqrt2);
      h(p, q) = v;
      h(q, p) = std::conj(v);
    }
  }
  return h;
}

ConstraintSystem assemble_constraints(const StateSet& s, Party party,
                                      double tol) {
  require_valid(s, tol);

  ConstraintSystem c;
  c.party = party;
  c.dim = party == Party::Alice ? s.m : s.n;
  for (const ProductState& st : s.states) {
    c.own.push_back(party == Party::Alice ? st.a : st.b);
    c.other.push_back(party == Party::Alice ? st.b : st.a);
  }

  const int d = c.dim;
  const int k = s.size();
  std::vector<Eigen::VectorXd> rows;
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (i == j) continue;
      if (relative_overlap(c.other[i], c.other[j]) <= tol) continue;
      // <own_i|H|own_j> = 0, split into real and imaginary parts
      Eigen::VectorXd re = Eigen::VectorXd::Zero(d * d);
      Eigen::VectorXd im = Eigen::VectorXd::Zero(d * d);
      const Vector& ai = c.own[i];
      const Vector& aj = c.own[j];
      for (int p = 0; p < d; ++p) {
        const Complex cp = std::conj(ai[p]) * aj[p];
        re[p] = cp.real();
        im[p] = cp.imag();
      }
      for (int p = 0; p < d; ++p) {
        for (int q = p + 1; q < d; ++q) {
          const Complex u = std::conj(ai[p]) * aj[q];
          const Complex v = std::conj(ai[q]) * aj[p];
          const int col = upper_index(d, p, q);
          re[col] = (u + v).real() / kSqrt2;
          re[col + 1] = -(u - v).imag() / kSqrt2;
          im[col] = (u + v).imag() / kSqrt2;
          im[col + 1] = (u - v).real() / kSqrt2;
        }
      }
      c.sources.emplace_back(i, j);
      rows.push_back(std::move(re));
      rows.push_back(std::move(im));
    }
  }

  c.rows.resize(static_cast<Eigen::Index>(rows.size()), d * d);
  for (std::size_t r = 0; r < rows.size(); ++r)
    c.rows.row(static_cast<Eigen::Index>(r)) = rows[r];
  return c;
}

std::vector<Matrix> nullspace_basis(const ConstraintSystem& c,
                                    double rank_tol) {
  const int d = c.dim;
  const int cols = d * d;
  std::vector<Matrix> basis;

  if (c.rows.rows() == 0) {
    for (int k = 0; k < cols; ++k) {
      Eigen::VectorXd x = Eigen::VectorXd::Zero(cols);
      x[k] = 1.0;
      basis.push_back(unpack_hermitian(x, d));
    }
    return basis;
  }

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(c.rows, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  int rank = 0;
  for (Eigen::Index k = 0; k < sv.size(); ++k)
    if (sv[k] > rank_tol * sv[0]) ++rank;
  const Eigen::MatrixXd& v = svd.matrixV();
  for (int k = rank; k < cols; ++k)
    basis.push_back(unpack_hermitian(v.col(k), d));
  return basis;
}

namespace {

double constraint_residual(const ConstraintSystem& c, const Matrix& h) {
  double worst = 0.0;
  const int k = static_cast<int>(c.own.size());
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (i == j) continue;
      const Complex lhs = inner_product(c.own[i], Vector(h * c.own[j]));
      const Complex ov = inner_product(c.other[i], c.other[j]);
      worst = std::max(worst, std::abs(lhs * ov));
    }
  }
  return worst;
}

}  // namespace

PartyAnalysis analyze_party(const StateSet& s, Party party, double tol,
                            double rank_tol) {
  const ConstraintSystem c = assemble_constraints(s, party, tol);
  const std::vector<Matrix> basis = nullspace_basis(c, rank_tol);

  PartyAnalysis out;
  out.party = party;
  out.nullspace_dim = static_cast<int>(basis.size());
  if (out.nullspace_dim == 0)
    throw std::logic_error(
        "analyze_party: empty solution space; the identity must always be "
        "feasible for a valid set");
  out.trivial_only = out.nullspace_dim == 1;

  const int d = c.dim;
  Matrix id_unit = Matrix::Identity(d, d) / std::sqrt(static_cast<double>(d));

  double proj_sq = 0.0;
  for (const Matrix& h : basis) {
    const Complex ov = (id_unit.adjoint() * h).trace();
    proj_sq += std::norm(ov);
  }
  out.identity_overlap = std::sqrt(proj_sq);

  for (const Matrix& h : basis)
    out.max_residual = std::max(out.max_residual, constraint_residual(c, h));

  if (!out.trivial_only) {
    // largest component orthogonal to the identity, renormalized
    double best = -1.0;
    Matrix witness;
    for (const Matrix& h : basis) {
      const Complex ov = (id_unit.adjoint() * h).trace();
      Matrix w = h - ov * id_unit;
      const double norm = w.norm();
      if (norm > best) {
        best = norm;
        witness = std::move(w);
      }
    }
    witness /= best;
    out.witness = witness;
    out.max_residual = std::max(out.max_residual,
                                constraint_residual(c, *out.witness));
  }
  return out;
}

NonlocalityReport certify_nonlocal(const StateSet& s, double tol,
                                   double rank_tol) {
  NonlocalityReport rep;
  rep.alice = analyze_party(s, Party::Alice, tol, rank_tol);
  rep.bob = analyze_party(s, Party::Bob, tol, rank_tol);
  rep.certified_nonlocal = rep.alice.trivial_only && rep.bob.trivial_only;
  return rep;
}

std::pair<Matrix, Matrix> witness_to_povm(const Matrix& w) {
  const int d = static_cast<int>(w.rows());
  if (w.cols() != d || d == 0)
    throw std::invalid_argument("witness_to_povm: not a square matrix");
  if ((w - w.adjoint()).norm() > 1e-10 * std::max(1.0, w.norm()))
    throw std::invalid_argument("witness_to_povm: not Hermitian");
  const Matrix id = Matrix::Identity(d, d);
  const Matrix traceless = w - (w.trace() / static_cast<double>(d)) * id;
  if (traceless.norm() <= 1e-10 * std::max(1.0, w.norm()))
    throw std::invalid_argument(
        "witness_to_povm: witness is proportional to the identity");

  Eigen::SelfAdjointEigenSolver<Matrix> eig(w);
  const double lo = eig.eigenvalues().minCoeff();
  const double hi = eig.eigenvalues().maxCoeff();
  const double lambda = std::max(0.0, -lo);
  const double c = hi + lambda;  // > 0 because w is not <= 0 here
  Matrix e = (w + lambda * id) / c;
  return {e, id - e};
}

}  // namespace nlops
