#pragma once

#include <cstddef>

namespace supfit::kernels {

// Data-parallel inner loops used by the batched estimator, the cone
// projection and the loss reductions. Each kernel has a scalar reference
// implementation and an AVX2 variant; the backend is chosen once at runtime
// (overridable with SUPFIT_FORCE_SCALAR=1 in the environment).
//
// The elementwise kernels (add_pair_scaled, triple_residual) produce
// bit-identical results on both backends; the reductions (sum_sq_diff,
// min_value, dot) may differ by accumulation order within ~1e-14 relative.

enum class Backend { scalar, avx2 };

Backend active_backend();
const char* backend_name();

/// dst[i] += w * (a[i] + b[i])
void add_pair_scaled(double* dst, const double* a, const double* b, double w,
                     std::size_t n);

/// dst[i] = lo[i] + hi[i] - two_c * mid[i]
void triple_residual(double* dst, const double* lo, const double* hi,
                     const double* mid, double two_c, std::size_t n);

/// sum_i (a[i] - b[i])^2
double sum_sq_diff(const double* a, const double* b, std::size_t n);

/// min_i a[i]  (n >= 1)
double min_value(const double* a, std::size_t n);

namespace detail {
void add_pair_scaled_scalar(double*, const double*, const double*, double,
                            std::size_t);
void triple_residual_scalar(double*, const double*, const double*,
                            const double*, double, std::size_t);
double sum_sq_diff_scalar(const double*, const double*, std::size_t);
double min_value_scalar(const double*, std::size_t);

bool avx2_supported();
void add_pair_scaled_avx2(double*, const double*, const double*, double,
                          std::size_t);
void triple_residual_avx2(double*, const double*, const double*, const double*,
                          double, std::size_t);
double sum_sq_diff_avx2(const double*, const double*, std::size_t);
double min_value_avx2(const double*, std::size_t);
}  // namespace detail

}  // namespace supfit::kernels
