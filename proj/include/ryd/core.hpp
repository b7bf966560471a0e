// Copyright 2026 rydsim contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <Eigen/SparseCore>
#include <complex>
#include <random>
#include <utility>
#include <vector>

#include "ryd/errors.hpp"

namespace ryd {

using Complex = std::complex<double>;
using SparseOp = Eigen::SparseMatrix<Complex>;
using LocalOp = Eigen::Matrix2cd;
using PureState = Eigen::VectorXcd;
using DensityMatrix = Eigen::MatrixXcd;

// Magnitudes below this are pruned from sparse operators so that equality
// tests on canonical forms are well defined.
inline constexpr double kPruneTol = 1e-14;

// Basis convention, binding for the whole library: computational basis index
// b in [0, 2^N). Bit (N - site) of b, site 1 being the most significant bit,
// encodes the occupation of that site (0 = ground, 1 = excited), so the
// binary string of b reads left-to-right as the chain.
inline int bit_of_site(int site, int n_sites) { return n_sites - site; }

namespace local {

inline LocalOp identity() { return LocalOp::Identity(); }

inline LocalOp sigma_x() {
  LocalOp m;
  m << 0, 1, 1, 0;
  return m;
}

inline LocalOp sigma_y() {
  LocalOp m;
  m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
  return m;
}

// Excitation number n = |1><1|.
inline LocalOp number() {
  LocalOp m = LocalOp::Zero();
  m(1, 1) = 1;
  return m;
}

// Ground-state projector P = 1 - n = |0><0|.
inline LocalOp ground_proj() {
  LocalOp m = LocalOp::Zero();
  m(0, 0) = 1;
  return m;
}

inline Eigen::Vector2cd ket0() { return Eigen::Vector2cd(1, 0); }
inline Eigen::Vector2cd ket1() { return Eigen::Vector2cd(0, 1); }
inline Eigen::Vector2cd ket_plus() {
  return Eigen::Vector2cd(1 / std::sqrt(2.0), 1 / std::sqrt(2.0));
}
inline Eigen::Vector2cd ket_minus() {
  return Eigen::Vector2cd(1 / std::sqrt(2.0), -1 / std::sqrt(2.0));
}

// |-><+|, the antisymmetrizing transfer operator.
inline LocalOp minus_plus() {
  return ket_minus() * ket_plus().adjoint();
}

inline LocalOp sigma_minus() {
  return ket0() * ket1().adjoint();
}

}  // namespace local

inline void require_finite(const LocalOp& op) {
  if (!op.allFinite()) throw argument_error("local operator has non-finite entries");
}

// Removes entries with magnitude below kPruneTol and compresses.
inline SparseOp canonical(const SparseOp& a) {
  SparseOp out = a;
  out.prune([](Eigen::Index, Eigen::Index, const Complex& v) {
    return std::abs(v) > kPruneTol;
  });
  out.makeCompressed();
  return out;
}

inline double operator_norm_inf(const SparseOp& a) {
  std::vector<double> row_sums(a.rows(), 0.0);
  for (int k = 0; k < a.outerSize(); ++k)
    for (SparseOp::InnerIterator it(a, k); it; ++it)
      row_sums[it.row()] += std::abs(it.value());
  double m = 0;
  for (double s : row_sums) m = std::max(m, s);
  return m;
}

inline bool is_hermitian(const SparseOp& a, double tol = 1e-10) {
  if (a.rows() != a.cols()) return false;
  SparseOp d = SparseOp(a - SparseOp(a.adjoint()));
  double m = 0;
  for (int k = 0; k < d.outerSize(); ++k)
    for (SparseOp::InnerIterator it(d, k); it; ++it)
      m = std::max(m, std::abs(it.value()));
  return m <= tol * std::max(1.0, operator_norm_inf(a));
}

// I (x) ... (x) op (x) ... (x) I with op at position `site` (1-based).
inline SparseOp embed_local(const LocalOp& op, int site, int n_sites) {
  if (n_sites < 1) throw argument_error("embed_local: n_sites must be >= 1");
  if (site < 1 || site > n_sites)
    throw argument_error("embed_local: site " + std::to_string(site) +
                         " out of range 1.." + std::to_string(n_sites));
  require_finite(op);
  const Eigen::Index dim = Eigen::Index(1) << n_sites;
  const int bit = bit_of_site(site, n_sites);
  std::vector<Eigen::Triplet<Complex>> trips;
  trips.reserve(2 * std::size_t(dim));
  for (Eigen::Index col = 0; col < dim; ++col) {
    const int c = int((col >> bit) & 1);
    for (int r = 0; r < 2; ++r) {
      const Complex v = op(r, c);
      if (std::abs(v) <= kPruneTol) continue;
      const Eigen::Index row =
          (col & ~(Eigen::Index(1) << bit)) | (Eigen::Index(r) << bit);
      trips.emplace_back(row, col, v);
    }
  }
  SparseOp out(dim, dim);
  out.setFromTriplets(trips.begin(), trips.end());
  return canonical(out);
}

// Product of single-site embeddings on distinct sites (factors commute).
inline SparseOp embed_multi(const std::vector<std::pair<int, LocalOp>>& factors,
                            int n_sites) {
  if (n_sites < 1) throw argument_error("embed_multi: n_sites must be >= 1");
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const int site = factors[i].first;
    if (site < 1 || site > n_sites)
      throw argument_error("embed_multi: site out of range");
    require_finite(factors[i].second);
    for (std::size_t j = i + 1; j < factors.size(); ++j)
      if (factors[j].first == site)
        throw argument_error("embed_multi: duplicate site " + std::to_string(site));
  }
  const Eigen::Index dim = Eigen::Index(1) << n_sites;
  std::vector<Eigen::Triplet<Complex>> trips;
  std::vector<std::pair<Eigen::Index, Complex>> cur, next;
  for (Eigen::Index col = 0; col < dim; ++col) {
    cur.assign(1, {col, Complex(1, 0)});
    for (const auto& [site, op] : factors) {
      const int bit = bit_of_site(site, n_sites);
      next.clear();
      for (const auto& [idx, val] : cur) {
        const int c = int((idx >> bit) & 1);
        for (int r = 0; r < 2; ++r) {
          const Complex v = op(r, c) * val;
          if (std::abs(v) <= kPruneTol) continue;
          const Eigen::Index row =
              (idx & ~(Eigen::Index(1) << bit)) | (Eigen::Index(r) << bit);
          next.emplace_back(row, v);
        }
      }
      cur.swap(next);
      if (cur.empty()) break;
    }
    for (const auto& [row, val] : cur) trips.emplace_back(row, col, val);
  }
  SparseOp out(dim, dim);
  out.setFromTriplets(trips.begin(), trips.end());
  return canonical(out);
}

inline Complex expectation(const SparseOp& op, const PureState& psi) {
  if (op.rows() != psi.size())
    throw argument_error("expectation: dimension mismatch");
  return psi.dot(op * psi);
}

// Tr(A rho), evaluated over the nonzeros of A.
inline Complex expectation(const SparseOp& op, const DensityMatrix& rho) {
  if (op.rows() != rho.rows() || op.cols() != rho.cols())
    throw argument_error("expectation: dimension mismatch");
  Complex tr(0, 0);
  for (int k = 0; k < op.outerSize(); ++k)
    for (SparseOp::InnerIterator it(op, k); it; ++it)
      tr += it.value() * rho(it.col(), it.row());
  return tr;
}

struct GroundState {
  double energy;
  PureState state;
};

namespace detail {

// Lanczos with full reorthogonalization; restarts from the best Ritz vector.
inline GroundState lanczos_ground(const SparseOp& h, double residual_tol) {
  const Eigen::Index dim = h.rows();
  const int m_max = int(std::min<Eigen::Index>(dim, 220));
  std::mt19937_64 gen(0x5eed5eedULL);
  std::normal_distribution<double> normal(0.0, 1.0);
  PureState start(dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    start[i] = Complex(normal(gen), normal(gen));
  start.normalize();

  double best_res = std::numeric_limits<double>::infinity();
  GroundState best{0.0, start};

  for (int restart = 0; restart < 10; ++restart) {
    std::vector<PureState> basis;
    basis.reserve(m_max);
    std::vector<double> alpha, beta;
    PureState v = start;
    PureState w;
    for (int j = 0; j < m_max; ++j) {
      basis.push_back(v);
      w = h * v;
      const double a = std::real(v.dot(w));
      alpha.push_back(a);
      w -= a * v;
      if (j > 0) w -= beta.back() * basis[j - 1];
      // full reorthogonalization, twice
      for (int pass = 0; pass < 2; ++pass)
        for (const auto& q : basis) w -= q.dot(w) * q;
      const double b = w.norm();
      if (b < 1e-14 || j == m_max - 1) break;
      beta.push_back(b);
      v = w / b;
    }
    const int m = int(alpha.size());
    Eigen::MatrixXd tri = Eigen::MatrixXd::Zero(m, m);
    for (int i = 0; i < m; ++i) {
      tri(i, i) = alpha[i];
      if (i + 1 < m) tri(i, i + 1) = tri(i + 1, i) = beta[i];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(tri);
    const Eigen::VectorXd coeffs = es.eigenvectors().col(0);
    PureState x = PureState::Zero(dim);
    for (int i = 0; i < m; ++i) x += coeffs[i] * basis[i];
    x.normalize();
    const double theta = std::real(x.dot(h * x));
    const double res = (h * x - theta * x).norm();
    if (res < best_res) {
      best_res = res;
      best = {theta, x};
    }
    if (best_res <= residual_tol) return best;
    start = x;
  }
  throw convergence_error("ground_state: Lanczos did not reach residual " +
                              std::to_string(residual_tol) +
                              " (best " + std::to_string(best_res) + ")",
                          best_res);
}

}  // namespace detail

// Smallest eigenvalue and a unit-norm eigenvector of a Hermitian operator.
// Dense diagonalization for dim <= 256, Lanczos above. For degenerate ground
// spaces any eigenvector of the lowest eigenvalue may be returned.
inline GroundState ground_state(const SparseOp& h) {
  if (h.rows() != h.cols()) throw argument_error("ground_state: not square");
  if (!is_hermitian(h, 1e-10))
    throw argument_error("ground_state: operator is not Hermitian within 1e-10");
  const Eigen::Index dim = h.rows();
  if (dim <= 256) {
    Eigen::SelfAdjointEigenSolver<DensityMatrix> es(DensityMatrix(h));
    return {es.eigenvalues()[0], es.eigenvectors().col(0)};
  }
  const double tol = 1e-9 * std::max(1e-300, operator_norm_inf(h));
  return detail::lanczos_ground(h, tol);
}

}  // namespace ryd
