#include "ising/kernels.hpp"

#include <omp.h>

#include <cstdlib>

namespace ising {

namespace {

int g_override = 0;

int env_threads() {
  const char* s = std::getenv("ISING_CONC_THREADS");
  if (!s) return 0;
  const int v = std::atoi(s);
  return v > 0 ? v : 0;
}

}  // namespace

int max_threads() {
  if (g_override > 0) return g_override;
  static const int env = env_threads();
  int m = omp_get_max_threads();
  if (env > 0) m = std::min(m, env);
  return std::max(1, m);
}

void set_max_threads(int n) { g_override = n > 0 ? n : 0; }

}  // namespace ising
