#pragma once

#include <cstddef>
#include <string>

// Data-parallel inner loops shared by the eigensolver and the pair-sum
// checks. Every kernel has a scalar reference implementation and, on
// x86-64 with AVX2+FMA, a vectorized variant selected at runtime. The
// active backend can be forced with set_backend() or the environment
// variable SPECLAP_KERNELS=scalar|avx2 (read once at startup).

namespace speclap::kernels {

enum class Backend { Scalar, Avx2 };

const char* backend_name(Backend b);
bool backend_available(Backend b);
Backend active_backend();
void set_backend(Backend b);  // throws std::invalid_argument if unavailable

// Plane rotation applied to two rows: x' = c*x - s*y, y' = s*x + c*y.
void rotate_pair(double* x, double* y, std::size_t len, double c, double s);

double dot(const double* a, const double* b, std::size_t len);

// sum_{i<j} (z_i - z_j)^2
double pair_energy(const double* z, std::size_t n);

// sum_{i<j} min{(x_i - x_j)^2, (y_i - y_j)^2}
double min_pair_energy(const double* x, const double* y, std::size_t n);

// sum_{i<j} (x_i - x_j)^2 (y_i - y_j)^2
double product_pair_energy(const double* x, const double* y, std::size_t n);

namespace detail {
void rotate_pair_scalar(double* x, double* y, std::size_t len, double c, double s);
double dot_scalar(const double* a, const double* b, std::size_t len);
double pair_energy_scalar(const double* z, std::size_t n);
double min_pair_energy_scalar(const double* x, const double* y, std::size_t n);
double product_pair_energy_scalar(const double* x, const double* y, std::size_t n);

#if defined(__x86_64__) || defined(_M_X64)
void rotate_pair_avx2(double* x, double* y, std::size_t len, double c, double s);
double dot_avx2(const double* a, const double* b, std::size_t len);
double pair_energy_avx2(const double* z, std::size_t n);
double min_pair_energy_avx2(const double* x, const double* y, std::size_t n);
double product_pair_energy_avx2(const double* x, const double* y, std::size_t n);
#endif
}  // namespace detail

}  // namespace speclap::kernels
