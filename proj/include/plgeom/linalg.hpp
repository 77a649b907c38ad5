#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace plgeom {

using Vec = std::vector<double>;

// Dense row-major matrix of doubles. Just enough for small fully-connected
// layers and polyhedral bookkeeping; all arithmetic in 64-bit floats.
struct Mat {
  int rows = 0;
  int cols = 0;
  std::vector<double> data;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, 0.0) {}

  double& operator()(int i, int j) { return data[static_cast<std::size_t>(i) * cols + j]; }
  double operator()(int i, int j) const { return data[static_cast<std::size_t>(i) * cols + j]; }
  double* row(int i) { return data.data() + static_cast<std::size_t>(i) * cols; }
  const double* row(int i) const { return data.data() + static_cast<std::size_t>(i) * cols; }
  void set_zero() { std::fill(data.begin(), data.end(), 0.0); }
};

inline void matvec(const Mat& a, const double* x, double* y) {
  for (int i = 0; i < a.rows; ++i) {
    const double* r = a.row(i);
    double s = 0.0;
    for (int j = 0; j < a.cols; ++j) s += r[j] * x[j];
    y[i] = s;
  }
}

inline Vec matvec(const Mat& a, const Vec& x) {
  if (static_cast<int>(x.size()) != a.cols) throw std::invalid_argument("matvec: dimension mismatch");
  Vec y(a.rows);
  matvec(a, x.data(), y.data());
  return y;
}

// c = a * b^T, a: n x k, b: m x k  ->  c: n x m. Rows of both operands are
// contiguous, which is the layout the batched forward pass wants.
inline void gemm_nt(const Mat& a, const Mat& b, Mat& c) {
  c = Mat(a.rows, b.rows);
  for (int i = 0; i < a.rows; ++i) {
    const double* ar = a.row(i);
    double* cr = c.row(i);
    for (int j = 0; j < b.rows; ++j) {
      const double* br = b.row(j);
      double s = 0.0;
      for (int k = 0; k < a.cols; ++k) s += ar[k] * br[k];
      cr[j] = s;
    }
  }
}

// c = a * b, a: n x k, b: k x m.
inline void gemm_nn(const Mat& a, const Mat& b, Mat& c) {
  c = Mat(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i) {
    const double* ar = a.row(i);
    double* cr = c.row(i);
    for (int k = 0; k < a.cols; ++k) {
      const double v = ar[k];
      const double* br = b.row(k);
      for (int j = 0; j < b.cols; ++j) cr[j] += v * br[j];
    }
  }
}

// c += a^T * b, a: n x r, b: n x m  ->  c: r x m (weight gradients).
inline void gemm_tn_acc(const Mat& a, const Mat& b, Mat& c) {
  for (int i = 0; i < a.rows; ++i) {
    const double* ar = a.row(i);
    const double* br = b.row(i);
    for (int r = 0; r < a.cols; ++r) {
      const double v = ar[r];
      double* cr = c.row(r);
      for (int j = 0; j < b.cols; ++j) cr[j] += v * br[j];
    }
  }
}

inline double dot(const Vec& a, const Vec& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double norm(const Vec& a) { return std::sqrt(dot(a, a)); }

inline double sq_dist(const Vec& a, const Vec& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

}  // namespace plgeom
