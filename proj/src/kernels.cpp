// SPDX-License-Identifier: Apache-2.0
#include "rvt/kernels.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rvt::kernels {

namespace {

std::atomic<int> g_worker_override{0};

int default_workers() {
  if (const char* env = std::getenv("RVT_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

inline bool parallel_worthwhile(std::size_t rows) {
  return worker_count() > 1 && rows >= 8;
}

}  // namespace

int worker_count() {
  const int n = g_worker_override.load(std::memory_order_relaxed);
  if (n > 0) return n;
  static const int def = default_workers();
  return def;
}

void set_worker_count(int n) {
  g_worker_override.store(n > 0 ? n : 0, std::memory_order_relaxed);
}

void matmul_serial(const double* a, const double* b, double* out,
                   std::size_t m, std::size_t k, std::size_t n) {
  for (std::size_t i = 0; i < m; ++i) {
    const double* arow = a + i * k;
    double* orow = out + i * n;
    for (std::size_t j = 0; j < n; ++j) orow[j] = 0.0;
    for (std::size_t kk = 0; kk < k; ++kk) {
      const double av = arow[kk];
      const double* brow = b + kk * n;
      for (std::size_t j = 0; j < n; ++j) orow[j] += av * brow[j];
    }
  }
}

void matmul_parallel(const double* a, const double* b, double* out,
                     std::size_t m, std::size_t k, std::size_t n) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(worker_count())
#endif
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(m); ++i) {
    const double* arow = a + static_cast<std::size_t>(i) * k;
    double* orow = out + static_cast<std::size_t>(i) * n;
    for (std::size_t j = 0; j < n; ++j) orow[j] = 0.0;
    for (std::size_t kk = 0; kk < k; ++kk) {
      const double av = arow[kk];
      const double* brow = b + kk * n;
      for (std::size_t j = 0; j < n; ++j) orow[j] += av * brow[j];
    }
  }
}

void matmul(const double* a, const double* b, double* out, std::size_t m,
            std::size_t k, std::size_t n) {
  if (parallel_worthwhile(m)) {
    matmul_parallel(a, b, out, m, k, n);
  } else {
    matmul_serial(a, b, out, m, k, n);
  }
}

namespace {

inline void layer_norm_row(const double* x, const double* gain,
                           const double* bias, double* out, std::size_t width,
                           double eps) {
  double mean = 0.0;
  for (std::size_t j = 0; j < width; ++j) mean += x[j];
  mean /= static_cast<double>(width);
  double var = 0.0;
  for (std::size_t j = 0; j < width; ++j) {
    const double d = x[j] - mean;
    var += d * d;
  }
  var /= static_cast<double>(width);
  const double inv_sigma = 1.0 / std::sqrt(var + eps);
  for (std::size_t j = 0; j < width; ++j) {
    out[j] = (x[j] - mean) * inv_sigma * gain[j] + bias[j];
  }
}

inline void softmax_row(const double* x, double* out, std::size_t width) {
  double max_v = x[0];
  for (std::size_t j = 1; j < width; ++j) max_v = std::max(max_v, x[j]);
  double sum = 0.0;
  for (std::size_t j = 0; j < width; ++j) {
    out[j] = std::exp(x[j] - max_v);
    sum += out[j];
  }
  const double inv = 1.0 / sum;
  for (std::size_t j = 0; j < width; ++j) out[j] *= inv;
}

inline void l2_normalize_row(const double* x, double* out, std::size_t width) {
  double sq = 0.0;
  for (std::size_t j = 0; j < width; ++j) sq += x[j] * x[j];
  const double inv = 1.0 / std::sqrt(sq);
  for (std::size_t j = 0; j < width; ++j) out[j] = x[j] * inv;
}

constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr double kInvSqrt2Pi = 0.39894228040143267794;

inline double gelu_one(double x) {
  return 0.5 * x * (1.0 + std::erf(x * kInvSqrt2));
}

}  // namespace

void layer_norm_rows_serial(const double* x, const double* gain,
                            const double* bias, double* out, std::size_t rows,
                            std::size_t width, double eps) {
  for (std::size_t i = 0; i < rows; ++i) {
    layer_norm_row(x + i * width, gain, bias, out + i * width, width, eps);
  }
}

void layer_norm_rows_parallel(const double* x, const double* gain,
                              const double* bias, double* out,
                              std::size_t rows, std::size_t width, double eps) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(worker_count())
#endif
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(rows); ++i) {
    layer_norm_row(x + static_cast<std::size_t>(i) * width, gain, bias,
                   out + static_cast<std::size_t>(i) * width, width, eps);
  }
}

void layer_norm_rows(const double* x, const double* gain, const double* bias,
                     double* out, std::size_t rows, std::size_t width,
                     double eps) {
  if (parallel_worthwhile(rows)) {
    layer_norm_rows_parallel(x, gain, bias, out, rows, width, eps);
  } else {
    layer_norm_rows_serial(x, gain, bias, out, rows, width, eps);
  }
}

void softmax_rows_serial(const double* x, double* out, std::size_t rows,
                         std::size_t width) {
  for (std::size_t i = 0; i < rows; ++i) {
    softmax_row(x + i * width, out + i * width, width);
  }
}

void softmax_rows_parallel(const double* x, double* out, std::size_t rows,
                           std::size_t width) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(worker_count())
#endif
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(rows); ++i) {
    softmax_row(x + static_cast<std::size_t>(i) * width,
                out + static_cast<std::size_t>(i) * width, width);
  }
}

void softmax_rows(const double* x, double* out, std::size_t rows,
                  std::size_t width) {
  if (parallel_worthwhile(rows)) {
    softmax_rows_parallel(x, out, rows, width);
  } else {
    softmax_rows_serial(x, out, rows, width);
  }
}

void gelu_serial(const double* x, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = gelu_one(x[i]);
}

void gelu_parallel(const double* x, double* out, std::size_t n) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(worker_count())
#endif
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
    out[i] = gelu_one(x[i]);
  }
}

void gelu(const double* x, double* out, std::size_t n) {
  if (parallel_worthwhile(n / 64)) {
    gelu_parallel(x, out, n);
  } else {
    gelu_serial(x, out, n);
  }
}

double gelu_derivative(double x) {
  const double cdf = 0.5 * (1.0 + std::erf(x * kInvSqrt2));
  const double pdf = kInvSqrt2Pi * std::exp(-0.5 * x * x);
  return cdf + x * pdf;
}

void l2_normalize_rows_serial(const double* x, double* out, std::size_t rows,
                              std::size_t width) {
  for (std::size_t i = 0; i < rows; ++i) {
    l2_normalize_row(x + i * width, out + i * width, width);
  }
}

void l2_normalize_rows_parallel(const double* x, double* out, std::size_t rows,
                                std::size_t width) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(worker_count())
#endif
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(rows); ++i) {
    l2_normalize_row(x + static_cast<std::size_t>(i) * width,
                     out + static_cast<std::size_t>(i) * width, width);
  }
}

void l2_normalize_rows(const double* x, double* out, std::size_t rows,
                       std::size_t width) {
  if (parallel_worthwhile(rows)) {
    l2_normalize_rows_parallel(x, out, rows, width);
  } else {
    l2_normalize_rows_serial(x, out, rows, width);
  }
}

}  // namespace rvt::kernels
