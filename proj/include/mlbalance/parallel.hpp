#pragma once

#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mlbalance {

// Thread budget for parallel kernels: the OpenMP default, capped by
// MLBALANCE_THREADS when that is set to a smaller positive value; 1 in
// serial builds.
inline int max_threads() {
#ifdef _OPENMP
    int limit = omp_get_max_threads();
#else
    int limit = 1;
#endif
    if (const char* env = std::getenv("MLBALANCE_THREADS")) {
        int requested = std::atoi(env);
        if (requested >= 1 && requested < limit) limit = requested;
    }
    return limit;
}

}  // namespace mlbalance
