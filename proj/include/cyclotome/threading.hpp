#pragma once

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cyclotome {

// Worker count for the parallel kernels.  Priority: explicit request,
// then the CYCLOTOME_THREADS environment variable, then the OpenMP default.
// Always at least 1; a serial build ignores everything and returns 1.
inline int resolve_threads(int requested = 0) {
#ifndef _OPENMP
    (void)requested;
    return 1;
#else
    if (requested > 0) return requested;
    if (const char* env = std::getenv("CYCLOTOME_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    int v = omp_get_max_threads();
    return v > 0 ? v : 1;
#endif
}

}  // namespace cyclotome
