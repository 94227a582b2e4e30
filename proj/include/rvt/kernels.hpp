// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>

namespace rvt::kernels {

/// Number of workers used by the parallel kernels and by frame-level
/// parallel loops. Resolution order: set_worker_count() override, then the
/// RVT_THREADS environment variable, then the OpenMP default.
int worker_count();

/// Override the worker count for this process. n == 0 restores the default.
void set_worker_count(int n);

// Each kernel has a serial reference implementation and an OpenMP variant.
// The OpenMP variants parallelize over independent output rows/elements and
// keep every per-element reduction in the same order as the serial code, so
// the two produce bit-identical results. The undecorated name dispatches on
// worker_count().

// out[m x n] = a[m x k] * b[k x n]
void matmul_serial(const double* a, const double* b, double* out,
                   std::size_t m, std::size_t k, std::size_t n);
void matmul_parallel(const double* a, const double* b, double* out,
                     std::size_t m, std::size_t k, std::size_t n);
void matmul(const double* a, const double* b, double* out, std::size_t m,
            std::size_t k, std::size_t n);

// Per-row normalization to zero mean and unit variance (population
// variance, epsilon inside the square root), then affine gain/bias.
void layer_norm_rows_serial(const double* x, const double* gain,
                            const double* bias, double* out, std::size_t rows,
                            std::size_t width, double eps);
void layer_norm_rows_parallel(const double* x, const double* gain,
                              const double* bias, double* out,
                              std::size_t rows, std::size_t width, double eps);
void layer_norm_rows(const double* x, const double* gain, const double* bias,
                     double* out, std::size_t rows, std::size_t width,
                     double eps);

// Row-wise softmax with per-row max subtraction.
void softmax_rows_serial(const double* x, double* out, std::size_t rows,
                         std::size_t width);
void softmax_rows_parallel(const double* x, double* out, std::size_t rows,
                           std::size_t width);
void softmax_rows(const double* x, double* out, std::size_t rows,
                  std::size_t width);

// Exact GELU, x/2 * (1 + erf(x / sqrt(2))), and its derivative.
void gelu_serial(const double* x, double* out, std::size_t n);
void gelu_parallel(const double* x, double* out, std::size_t n);
void gelu(const double* x, double* out, std::size_t n);
double gelu_derivative(double x);

// Row-wise scaling to unit L2 norm.
void l2_normalize_rows_serial(const double* x, double* out, std::size_t rows,
                              std::size_t width);
void l2_normalize_rows_parallel(const double* x, double* out, std::size_t rows,
                                std::size_t width);
void l2_normalize_rows(const double* x, double* out, std::size_t rows,
                       std::size_t width);

}  // namespace rvt::kernels
