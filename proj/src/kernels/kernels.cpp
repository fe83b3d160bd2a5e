#include "speclap/kernels.hpp"

#include <cstdlib>
#include <cstring>
#include <mutex>
#include <stdexcept>

namespace speclap::kernels {

namespace detail {

void rotate_pair_scalar(double* x, double* y, std::size_t len, double c, double s) {
  for (std::size_t k = 0; k < len; ++k) {
    const double xk = x[k];
    const double yk = y[k];
    x[k] = c * xk - s * yk;
    y[k] = s * xk + c * yk;
  }
}

double dot_scalar(const double* a, const double* b, std::size_t len) {
  double acc = 0.0;
  for (std::size_t k = 0; k < len; ++k) acc += a[k] * b[k];
  return acc;
}

double pair_energy_scalar(const double* z, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double zi = z[i];
    double row = 0.0;
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = zi - z[j];
      row += d * d;
    }
    acc += row;
  }
  return acc;
}

double min_pair_energy_scalar(const double* x, const double* y, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double xi = x[i];
    const double yi = y[i];
    double row = 0.0;
    for (std::size_t j = i + 1; j < n; ++j) {
      const double dx = xi - x[j];
      const double dy = yi - y[j];
      const double a = dx * dx;
      const double b = dy * dy;
      row += a < b ? a : b;
    }
    acc += row;
  }
  return acc;
}

double product_pair_energy_scalar(const double* x, const double* y, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double xi = x[i];
    const double yi = y[i];
    double row = 0.0;
    for (std::size_t j = i + 1; j < n; ++j) {
      const double dx = xi - x[j];
      const double dy = yi - y[j];
      row += (dx * dx) * (dy * dy);
    }
    acc += row;
  }
  return acc;
}

}  // namespace detail

namespace {

struct Vtable {
  void (*rotate_pair)(double*, double*, std::size_t, double, double);
  double (*dot)(const double*, const double*, std::size_t);
  double (*pair_energy)(const double*, std::size_t);
  double (*min_pair_energy)(const double*, const double*, std::size_t);
  double (*product_pair_energy)(const double*, const double*, std::size_t);
};

constexpr Vtable kScalar = {
    detail::rotate_pair_scalar,    detail::dot_scalar,
    detail::pair_energy_scalar,    detail::min_pair_energy_scalar,
    detail::product_pair_energy_scalar,
};

#if defined(__x86_64__) || defined(_M_X64)
constexpr Vtable kAvx2 = {
    detail::rotate_pair_avx2,    detail::dot_avx2,
    detail::pair_energy_avx2,    detail::min_pair_energy_avx2,
    detail::product_pair_energy_avx2,
};

bool cpu_has_avx2_fma() {
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}
#endif

Backend g_backend = Backend::Scalar;
const Vtable* g_vtable = &kScalar;
std::once_flag g_init;

void apply_backend(Backend b) {
  if (!backend_available(b)) throw std::invalid_argument("kernel backend not available on this cpu");
  g_backend = b;
#if defined(__x86_64__) || defined(_M_X64)
  g_vtable = (b == Backend::Avx2) ? &kAvx2 : &kScalar;
#else
  g_vtable = &kScalar;
#endif
}

void init_backend() {
  Backend pick = backend_available(Backend::Avx2) ? Backend::Avx2 : Backend::Scalar;
  if (const char* env = std::getenv("SPECLAP_KERNELS")) {
    if (std::strcmp(env, "scalar") == 0) pick = Backend::Scalar;
    if (std::strcmp(env, "avx2") == 0 && backend_available(Backend::Avx2)) pick = Backend::Avx2;
  }
  apply_backend(pick);
}

const Vtable& table() {
  std::call_once(g_init, init_backend);
  return *g_vtable;
}

}  // namespace

const char* backend_name(Backend b) {
  return b == Backend::Avx2 ? "avx2" : "scalar";
}

bool backend_available(Backend b) {
  if (b == Backend::Scalar) return true;
#if defined(__x86_64__) || defined(_M_X64)
  return cpu_has_avx2_fma();
#else
  return false;
#endif
}

Backend active_backend() {
  std::call_once(g_init, init_backend);
  return g_backend;
}

void set_backend(Backend b) {
  std::call_once(g_init, init_backend);
  apply_backend(b);
}

void rotate_pair(double* x, double* y, std::size_t len, double c, double s) {
  table().rotate_pair(x, y, len, c, s);
}

double dot(const double* a, const double* b, std::size_t len) {
  return table().dot(a, b, len);
}

double pair_energy(const double* z, std::size_t n) {
  return table().pair_energy(z, n);
}

double min_pair_energy(const double* x, const double* y, std::size_t n) {
  return table().min_pair_energy(x, y, n);
}

double product_pair_energy(const double* x, const double* y, std::size_t n) {
  return table().product_pair_energy(x, y, n);
}

}  // namespace speclap::kernels
