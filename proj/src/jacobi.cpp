#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "sgb/errors.hpp"
#include "sgb/format.hpp"
#include "sgb/simd/kernels.hpp"
#include "sgb/spectral.hpp"

namespace sgb {

namespace {

struct Rotation {
  std::size_t p, q;
  double c, s, t, apq, app, aqq;
};

/// Row-major square working matrix.
class Work {
 public:
  explicit Work(std::size_t n) : n_(n), a_(n * n, 0.0) {}

  std::size_t size() const { return n_; }
  double& at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  std::span<double> row(std::size_t i) { return {a_.data() + i * n_, n_}; }

  void transpose() {
    constexpr std::size_t kBlock = 32;
    for (std::size_t ib = 0; ib < n_; ib += kBlock) {
      for (std::size_t jb = ib; jb < n_; jb += kBlock) {
        const std::size_t iend = std::min(ib + kBlock, n_);
        const std::size_t jend = std::min(jb + kBlock, n_);
        for (std::size_t i = ib; i < iend; ++i) {
          for (std::size_t j = std::max(jb, i + 1); j < jend; ++j) {
            std::swap(a_[i * n_ + j], a_[j * n_ + i]);
          }
        }
      }
    }
  }

  double off_norm(const simd::KernelTable& k) {
    double total = 0.0;
    for (std::size_t i = 0; i < n_; ++i) {
      const double* r = a_.data() + i * n_;
      total += k.sum_squares({r, i}) + k.sum_squares({r + i + 1, n_ - i - 1});
    }
    return std::sqrt(total);
  }

 private:
  std::size_t n_;
  std::vector<double> a_;
};

// Brent-Luk ordering: every round pairs each index with exactly one other, so the
// rotations of a round commute and can be applied as one batch.
class RoundRobin {
 public:
  explicit RoundRobin(std::size_t n) : ring_(n % 2 ? n + 1 : n) {
    std::iota(ring_.begin(), ring_.end(), std::size_t{0});
  }

  std::size_t rounds() const { return ring_.size() - 1; }
  std::size_t pairs() const { return ring_.size() / 2; }
  std::pair<std::size_t, std::size_t> pair(std::size_t k) const {
    return {ring_[k], ring_[ring_.size() - 1 - k]};
  }

  void advance() {
    if (ring_.size() < 3) return;
    std::rotate(ring_.begin() + 1, ring_.end() - 1, ring_.end());
  }

 private:
  std::vector<std::size_t> ring_;
};

void jacobi_component(Work& a, double tol, int max_sweeps, std::vector<double>& out) {
  const std::size_t n = a.size();
  const auto& k = simd::active_kernels();
  if (n > 1) {
    double fro = 0.0;
    for (std::size_t i = 0; i < n; ++i) fro += k.sum_squares(a.row(i));
    const double threshold = tol * (std::sqrt(fro) + 1.0);

    RoundRobin order(n);
    std::vector<Rotation> batch;
    int sweep = 0;
    for (;; ++sweep) {
      const double off = a.off_norm(k);
      if (off < threshold) break;
      if (sweep == max_sweeps) {
        throw ConvergenceError("Jacobi did not converge in " + std::to_string(max_sweeps) +
                               " sweeps (off-diagonal norm " + format_real(off) + ")");
      }
      for (std::size_t round = 0; round < order.rounds(); ++round, order.advance()) {
        batch.clear();
        for (std::size_t idx = 0; idx < order.pairs(); ++idx) {
          auto [p, q] = order.pair(idx);
          if (p >= n || q >= n) continue;
          if (p > q) std::swap(p, q);
          const double apq = a.at(p, q);
          if (apq == 0.0) continue;
          const double app = a.at(p, p);
          const double aqq = a.at(q, q);
          const double g = 100.0 * std::fabs(apq);
          if (sweep > 3 && std::fabs(app) + g == std::fabs(app) &&
              std::fabs(aqq) + g == std::fabs(aqq)) {
            a.at(p, q) = 0.0;
            a.at(q, p) = 0.0;
            continue;
          }
          const double theta = (aqq - app) / (2.0 * apq);
          double t = 1.0 / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
          if (theta < 0.0) t = -t;
          const double c = 1.0 / std::sqrt(t * t + 1.0);
          batch.push_back({p, q, c, t * c, t, apq, app, aqq});
        }
        if (batch.empty()) continue;

        for (const auto& r : batch) k.rotate_pair(a.row(r.p), a.row(r.q), r.c, r.s);
        if (batch.size() * 8 >= n) {
          a.transpose();
          for (const auto& r : batch) k.rotate_pair(a.row(r.p), a.row(r.q), r.c, r.s);
        } else {
          for (std::size_t i = 0; i < n; ++i) {
            for (const auto& r : batch) {
              const double x = a.at(i, r.p);
              const double y = a.at(i, r.q);
              a.at(i, r.p) = r.c * x - r.s * y;
              a.at(i, r.q) = r.s * x + r.c * y;
            }
          }
        }
        // The 2x2 pivot block is known in closed form; overwrite the rounded values.
        for (const auto& r : batch) {
          a.at(r.p, r.q) = 0.0;
          a.at(r.q, r.p) = 0.0;
          a.at(r.p, r.p) = r.app - r.t * r.apq;
          a.at(r.q, r.q) = r.aqq + r.t * r.apq;
        }
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) out.push_back(a.at(i, i));
}

}  // namespace

std::vector<double> numeric_spectrum(const DenseSymmetricMatrix& matrix, double tol,
                                     int max_sweeps) {
  if (!(tol >= 0.0)) throw DomainError("tolerance must be non-negative");
  const std::size_t n = matrix.dimension();

  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i) {
    const auto row = matrix.row(i);
    for (std::size_t j = i + 1; j < n; ++j) {
      if (row[j] != 0.0) parent[find(i)] = find(j);
    }
  }
  std::vector<std::vector<std::size_t>> components(n);
  for (std::size_t i = 0; i < n; ++i) components[find(i)].push_back(i);

  std::vector<double> eigenvalues;
  eigenvalues.reserve(n);
  for (const auto& members : components) {
    if (members.empty()) continue;
    Work a(members.size());
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = 0; j < members.size(); ++j) a.at(i, j) = matrix(members[i], members[j]);
    }
    jacobi_component(a, tol, max_sweeps, eigenvalues);
  }
  std::sort(eigenvalues.begin(), eigenvalues.end());
  return eigenvalues;
}

}  // namespace sgb
