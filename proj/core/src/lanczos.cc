// Copyright 2026 The SpecGap Authors.
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

#include "specgap/lanczos.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Eigenvalues>

#include "specgap/error.h"
#include "specgap/random.h"
#include "specgap/tridiagonal.h"

namespace specgap {
namespace {

struct Block {
  Eigen::Index start = 0;
  Tridiagonal t;
  TridiagonalEigen eig;
};

enum class BlockEnd { kConverged, kBreakdown, kBudget };

// Largest `k` of the union of `frozen` and `active`, descending.
std::vector<double> top_values(const std::vector<double>& frozen,
                               const std::vector<double>& active,
                               std::size_t k) {
  std::vector<double> all;
  all.reserve(frozen.size() + active.size());
  all.insert(all.end(), frozen.begin(), frozen.end());
  all.insert(all.end(), active.begin(), active.end());
  const std::size_t kk = std::min(k, all.size());
  std::partial_sort(all.begin(), all.begin() + static_cast<long>(kk), all.end(),
                    std::greater<>());
  all.resize(kk);
  return all;
}

// w <- w - Q (Q^T w) against the basis and the guard vectors; a second pass
// runs when the first removes more than ~30% of the norm.
void reorthogonalize(Eigen::VectorXd& w, const Eigen::MatrixXd& basis,
                     Eigen::Index cols, const Eigen::MatrixXd& guards,
                     Eigen::Index guard_cols, bool force_two_passes) {
  for (int pass = 0; pass < 2; ++pass) {
    const double before = w.norm();
    if (cols > 0) {
      const Eigen::VectorXd h = basis.leftCols(cols).transpose() * w;
      w.noalias() -= basis.leftCols(cols) * h;
    }
    if (guard_cols > 0) {
      const Eigen::VectorXd h = guards.leftCols(guard_cols).transpose() * w;
      w.noalias() -= guards.leftCols(guard_cols) * h;
    }
    if (!force_two_passes && w.norm() > 0.7071067811865476 * before) break;
  }
}

bool fresh_start(Rng& rng, const Eigen::MatrixXd& basis, Eigen::Index cols,
                 const Eigen::MatrixXd& guards, Eigen::Index guard_cols,
                 Eigen::VectorXd& out) {
  const Eigen::Index n = basis.rows();
  for (int attempt = 0; attempt < 3; ++attempt) {
    Eigen::VectorXd r = random_normal_vector(rng, n);
    const double norm0 = r.norm();
    reorthogonalize(r, basis, cols, guards, guard_cols, true);
    const double norm1 = r.norm();
    if (norm1 > 1e-8 * norm0) {
      out = r / norm1;
      return true;
    }
  }
  return false;
}

}  // namespace

void normalize_sign(Eigen::Ref<Eigen::VectorXd> v) {
  Eigen::Index best = 0;
  double best_abs = -1.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v[i]) > best_abs) {
      best_abs = std::abs(v[i]);
      best = i;
    }
  }
  if (v.size() > 0 && v[best] < 0.0) v = -v;
}

bool operator==(const SpectralSummary& a, const SpectralSummary& b) {
  return a.eigenvalues == b.eigenvalues &&
         a.eigenvectors.rows() == b.eigenvectors.rows() &&
         a.eigenvectors.cols() == b.eigenvectors.cols() &&
         a.eigenvectors == b.eigenvectors &&
         a.iterations_used == b.iterations_used && a.restarts == b.restarts &&
         a.converged == b.converged && a.residual_norms == b.residual_norms &&
         a.ritz_history == b.ritz_history &&
         a.orthogonality_loss == b.orthogonality_loss;
}

SpectralSummary lanczos_top_k(const SparseSymMatrix& matrix,
                              const LanczosConfig& config) {
  const std::size_t n = matrix.dim();
  const std::size_t k = config.k;
  if (n == 0) throw ConfigError("lanczos: empty matrix");
  if (k == 0 || k > n) {
    throw ConfigError("lanczos: k = " + std::to_string(k) +
                      " must be in [1, dim = " + std::to_string(n) + "]");
  }
  if (!(config.tol > 0.0)) throw ConfigError("lanczos: tol must be positive");
  const std::size_t requested =
      config.max_iter == 0 ? std::min<std::size_t>(n, 300) : config.max_iter;
  if (requested < k) {
    throw ConfigError("lanczos: max_iter = " + std::to_string(requested) +
                      " is smaller than k = " + std::to_string(k));
  }
  const auto budget = static_cast<Eigen::Index>(std::min(requested, n));
  const auto dim = static_cast<Eigen::Index>(n);

  const double scale = std::max(1.0, matrix.max_abs_row_sum());
  const double breakdown_tol = 1e-10 * scale;
  const double noise = 64.0 * std::numeric_limits<double>::epsilon() * scale;
  const double change_tol = std::max(config.tol, noise);

  Rng rng(config.seed);
  Eigen::MatrixXd basis(dim, budget);
  Eigen::MatrixXd guards(dim, static_cast<Eigen::Index>(config.max_restarts + 1));
  Eigen::Index used = 0;
  Eigen::Index guard_used = 0;
  {
    Eigen::VectorXd r = random_normal_vector(rng, dim);
    basis.col(0) = r / r.norm();
  }

  SpectralSummary out;
  std::vector<Block> blocks;
  std::vector<double> frozen;
  std::vector<double> top_before;
  bool verified = false;
  Eigen::VectorXd w(dim);

  while (true) {
    Block blk;
    blk.start = used;
    std::vector<double> prev_top;
    BlockEnd end = BlockEnd::kBudget;
    double beta = 0.0;

    while (true) {
      const Eigen::Index col = used;
      matrix.multiply(basis.col(col).data(), w.data());
      if (!blk.t.beta.empty()) {
        w.noalias() -= blk.t.beta.back() * basis.col(col - 1);
      }
      const double alpha = w.dot(basis.col(col));
      w.noalias() -= alpha * basis.col(col);
      blk.t.alpha.push_back(alpha);
      ++used;
      if (config.full_reorth) {
        reorthogonalize(w, basis, used, guards, guard_used, false);
      }
      beta = w.norm();

      const std::vector<double> ritz = tridiagonal_eigenvalues(blk.t);
      std::vector<double> block_top = top_values({}, ritz, k);
      if (config.record_history) {
        out.ritz_history.push_back(top_values(frozen, ritz, k));
      }

      if (beta <= breakdown_tol) {
        end = BlockEnd::kBreakdown;
        break;
      }
      bool stable = prev_top.size() == k && block_top.size() == k;
      for (std::size_t i = 0; stable && i < k; ++i) {
        stable = std::abs(block_top[i] - prev_top[i]) < config.tol;
      }
      if (stable) {
        TridiagonalEigen eig = tridiagonal_eigen(blk.t);
        const auto m = static_cast<Eigen::Index>(eig.values.size());
        double lam_max = std::abs(block_top.front());
        if (!frozen.empty()) {
          lam_max = std::max(lam_max, std::abs(top_values(frozen, {}, 1)[0]));
        }
        const double limit = config.residual_tol * std::max(1.0, lam_max);
        bool small = true;
        for (std::size_t i = 0; small && i < k; ++i) {
          small = beta * std::abs(eig.vectors(m - 1, m - 1 - static_cast<Eigen::Index>(i))) <=
                  limit;
        }
        if (small) {
          blk.eig = std::move(eig);
          end = BlockEnd::kConverged;
          break;
        }
      }
      if (used >= budget) {
        end = BlockEnd::kBudget;
        break;
      }
      blk.t.beta.push_back(beta);
      basis.col(used) = w / beta;
      prev_top = std::move(block_top);
    }

    if (blk.eig.values.empty()) blk.eig = tridiagonal_eigen(blk.t);
    frozen.insert(frozen.end(), blk.eig.values.begin(), blk.eig.values.end());
    blocks.push_back(std::move(blk));

    const std::vector<double> top_now = top_values(frozen, {}, k);
    bool changed = blocks.size() == 1 || top_now.size() != top_before.size();
    for (std::size_t i = 0; !changed && i < top_now.size(); ++i) {
      changed = std::abs(top_now[i] - top_before[i]) >= change_tol;
    }
    top_before = top_now;
    const bool verifying = blocks.size() > 1;

    if (end == BlockEnd::kBudget) {
      verified = verifying && !changed;
      break;
    }
    if (verifying && !changed) {
      verified = true;
      break;
    }
    if (!config.full_reorth && end == BlockEnd::kConverged) {
      verified = true;
      break;
    }
    if (used + guard_used >= dim) {
      verified = true;
      break;
    }
    if (out.restarts >= config.max_restarts) {
      verified = config.max_restarts == 0;
      break;
    }
    if (used >= budget) break;
    if (end == BlockEnd::kConverged) guards.col(guard_used++) = w / beta;
    Eigen::VectorXd start;
    if (!fresh_start(rng, basis, used, guards, guard_used, start)) {
      verified = true;
      break;
    }
    basis.col(used) = start;
    ++out.restarts;
  }

  // One block: its Ritz pairs. Several blocks: Rayleigh-Ritz over the union
  // of all blocks and guard vectors, which sees copies of a repeated
  // eigenvalue that landed in different blocks.
  std::vector<double> values;
  Eigen::MatrixXd vectors;
  if (blocks.size() == 1) {
    const auto size = static_cast<Eigen::Index>(blocks[0].eig.values.size());
    const Eigen::Index kk = std::min<Eigen::Index>(static_cast<Eigen::Index>(k), size);
    values.resize(static_cast<std::size_t>(kk));
    vectors.resize(dim, kk);
    for (Eigen::Index i = 0; i < kk; ++i) {
      const Eigen::Index src = size - 1 - i;
      values[static_cast<std::size_t>(i)] = blocks[0].eig.values[static_cast<std::size_t>(src)];
      vectors.col(i) = basis.leftCols(size) * blocks[0].eig.vectors.col(src);
    }
  } else {
    Eigen::MatrixXd q(dim, used + guard_used);
    q << basis.leftCols(used), guards.leftCols(guard_used);
    Eigen::MatrixXd mq(dim, q.cols());
    for (Eigen::Index j = 0; j < q.cols(); ++j) matrix.multiply(q.col(j).data(), mq.col(j).data());
    Eigen::MatrixXd h = q.transpose() * mq;
    h = 0.5 * (h + h.transpose()).eval();
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
    const Eigen::Index kk = std::min<Eigen::Index>(static_cast<Eigen::Index>(k), h.rows());
    values.resize(static_cast<std::size_t>(kk));
    vectors.resize(dim, kk);
    for (Eigen::Index i = 0; i < kk; ++i) {
      const Eigen::Index src = h.rows() - 1 - i;
      values[static_cast<std::size_t>(i)] = es.eigenvalues()[src];
      vectors.col(i) = q * es.eigenvectors().col(src);
    }
  }
  const std::size_t kk = values.size();

  // Values that agree to rounding noise are one eigenvalue; make them
  // bit-equal so a degenerate top pair has a gap of exactly zero.
  for (std::size_t i = 1; i < kk; ++i) {
    if (values[i - 1] - values[i] <= noise) values[i] = values[i - 1];
  }

  out.eigenvalues.resize(kk);
  out.residual_norms.resize(kk);
  out.eigenvectors.resize(dim, static_cast<Eigen::Index>(kk));
  Eigen::VectorXd mu(dim);
  for (std::size_t i = 0; i < kk; ++i) {
    Eigen::VectorXd y = vectors.col(static_cast<Eigen::Index>(i));
    y /= y.norm();
    normalize_sign(y);
    matrix.multiply(y.data(), mu.data());
    out.eigenvalues[i] = values[i];
    out.residual_norms[i] = (mu - values[i] * y).norm();
    out.eigenvectors.col(static_cast<Eigen::Index>(i)) = y;
  }
  out.iterations_used = static_cast<std::size_t>(used);

  const double limit =
      config.residual_tol * std::max(1.0, kk ? std::abs(out.eigenvalues[0]) : 0.0);
  out.converged = verified && kk == k;
  for (double r : out.residual_norms) out.converged = out.converged && r <= limit;

  if (config.record_history) {
    const Eigen::MatrixXd gram =
        basis.leftCols(used).transpose() * basis.leftCols(used) -
        Eigen::MatrixXd::Identity(used, used);
    out.orthogonality_loss = gram.cwiseAbs().maxCoeff();
  }
  return out;
}

Tridiagonal lanczos_tridiagonalize(const SparseSymMatrix& matrix, std::size_t steps,
                                   std::uint64_t seed, bool full_reorth) {
  const auto dim = static_cast<Eigen::Index>(matrix.dim());
  const auto m = static_cast<Eigen::Index>(std::min<std::size_t>(steps, matrix.dim()));
  Tridiagonal t;
  if (m == 0) return t;
  const double breakdown_tol = 1e-10 * std::max(1.0, matrix.max_abs_row_sum());
  Rng rng(seed);
  Eigen::MatrixXd basis(dim, m);
  const Eigen::MatrixXd no_guards(dim, 0);
  Eigen::VectorXd r = random_normal_vector(rng, dim);
  basis.col(0) = r / r.norm();
  Eigen::VectorXd w(dim);
  for (Eigen::Index j = 0; j < m; ++j) {
    matrix.multiply(basis.col(j).data(), w.data());
    if (j > 0) w.noalias() -= t.beta.back() * basis.col(j - 1);
    const double alpha = w.dot(basis.col(j));
    w.noalias() -= alpha * basis.col(j);
    t.alpha.push_back(alpha);
    if (full_reorth) reorthogonalize(w, basis, j + 1, no_guards, 0, false);
    const double beta = w.norm();
    if (j + 1 == m || beta <= breakdown_tol) break;
    t.beta.push_back(beta);
    basis.col(j + 1) = w / beta;
  }
  return t;
}

}  // namespace specgap
