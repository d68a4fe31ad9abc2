#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace zigzag {

struct SolverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Banded LU with partial pivoting, LAPACK GBTRF-style storage: lower
/// bandwidth kl, upper bandwidth ku, with kl extra fill rows for pivoting.
class BandedLU {
 public:
  BandedLU(int n, int kl, int ku)
      : n_(n), kl_(kl), ku_(ku), kw_(kl + ku),
        ab_(static_cast<std::size_t>(2 * kl + ku + 1) * static_cast<std::size_t>(n), 0.0),
        piv_(static_cast<std::size_t>(n), 0) {
    if (n < 1 || kl < 0 || ku < 0) throw std::invalid_argument("BandedLU: bad shape");
  }

  /// Assembly access to A(i, j); valid while |entries| fit the band.
  double& at(int i, int j) {
    if (i < 0 || i >= n_ || j < 0 || j >= n_ || i - j > kl_ || j - i > kw_)
      throw std::invalid_argument("BandedLU: entry (" + std::to_string(i) + "," +
                                  std::to_string(j) + ") outside band");
    return ab_[idx(i, j)];
  }

  void factor() {
    factored_ = true;
    for (int j = 0; j < n_; ++j) {
      const int ilast = std::min(n_ - 1, j + kl_);
      int p = j;
      double pmax = std::fabs(ab_[idx(j, j)]);
      for (int i = j + 1; i <= ilast; ++i) {
        const double v = std::fabs(ab_[idx(i, j)]);
        if (v > pmax) {
          pmax = v;
          p = i;
        }
      }
      if (pmax == 0.0)
        throw SolverError("singular matrix: zero pivot at row " + std::to_string(j));
      piv_[static_cast<std::size_t>(j)] = p;
      const int jlast = std::min(n_ - 1, j + kw_);
      if (p != j)
        for (int k = j; k <= jlast; ++k) std::swap(ab_[idx(j, k)], ab_[idx(p, k)]);
      const double djj = ab_[idx(j, j)];
      for (int i = j + 1; i <= ilast; ++i) {
        const double m = ab_[idx(i, j)] / djj;
        ab_[idx(i, j)] = m;
        if (m != 0.0)
          for (int k = j + 1; k <= jlast; ++k) ab_[idx(i, k)] -= m * ab_[idx(j, k)];
      }
    }
  }

  void solve(std::vector<double>& b) const {
    if (!factored_) throw std::logic_error("BandedLU: solve before factor");
    for (int j = 0; j < n_; ++j) {
      const int p = piv_[static_cast<std::size_t>(j)];
      if (p != j) std::swap(b[static_cast<std::size_t>(j)], b[static_cast<std::size_t>(p)]);
      const int ilast = std::min(n_ - 1, j + kl_);
      const double bj = b[static_cast<std::size_t>(j)];
      for (int i = j + 1; i <= ilast; ++i) b[static_cast<std::size_t>(i)] -= ab_[idx(i, j)] * bj;
    }
    for (int i = n_ - 1; i >= 0; --i) {
      double s = b[static_cast<std::size_t>(i)];
      const int jlast = std::min(n_ - 1, i + kw_);
      for (int j = i + 1; j <= jlast; ++j) s -= ab_[idx(i, j)] * b[static_cast<std::size_t>(j)];
      b[static_cast<std::size_t>(i)] = s / ab_[idx(i, i)];
    }
  }

 private:
  std::size_t idx(int i, int j) const {
    // row (kl + ku + i - j) of column j in a (2kl+ku+1) x n sheet; the kl+ku
    // fill rows at the top absorb pivoting growth up to j - i = kl + ku.
    return static_cast<std::size_t>(kl_ + ku_ + i - j) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(j);
  }

  int n_, kl_, ku_, kw_;
  bool factored_ = false;
  std::vector<double> ab_;
  std::vector<int> piv_;
};

/// Dense LU with partial pivoting; used for the cyclic (periodic) implicit
/// systems, which stay test-sized.
class DenseLU {
 public:
  explicit DenseLU(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0.0), piv_(n) {}

  double& at(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }

  void factor() {
    factored_ = true;
    for (int j = 0; j < n_; ++j) {
      int p = j;
      double pmax = std::fabs(at(j, j));
      for (int i = j + 1; i < n_; ++i)
        if (std::fabs(at(i, j)) > pmax) {
          pmax = std::fabs(at(i, j));
          p = i;
        }
      if (pmax == 0.0)
        throw SolverError("singular matrix: zero pivot at row " + std::to_string(j));
      piv_[static_cast<std::size_t>(j)] = p;
      if (p != j)
        for (int k = 0; k < n_; ++k) std::swap(at(j, k), at(p, k));
      for (int i = j + 1; i < n_; ++i) {
        const double m = at(i, j) / at(j, j);
        at(i, j) = m;
        if (m != 0.0)
          for (int k = j + 1; k < n_; ++k) at(i, k) -= m * at(j, k);
      }
    }
  }

  void solve(std::vector<double>& b) const {
    if (!factored_) throw std::logic_error("DenseLU: solve before factor");
    for (int j = 0; j < n_; ++j) {
      const int p = piv_[static_cast<std::size_t>(j)];
      if (p != j) std::swap(b[static_cast<std::size_t>(j)], b[static_cast<std::size_t>(p)]);
      for (int i = j + 1; i < n_; ++i)
        b[static_cast<std::size_t>(i)] -=
            a_[static_cast<std::size_t>(i) * n_ + j] * b[static_cast<std::size_t>(j)];
    }
    for (int i = n_ - 1; i >= 0; --i) {
      double s = b[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < n_; ++j)
        s -= a_[static_cast<std::size_t>(i) * n_ + j] * b[static_cast<std::size_t>(j)];
      b[static_cast<std::size_t>(i)] = s / at_const(i, i);
    }
  }

 private:
  double at_const(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

  int n_;
  bool factored_ = false;
  std::vector<double> a_;
  std::vector<int> piv_;
};

}  // namespace zigzag
