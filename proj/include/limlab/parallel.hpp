#pragma once

#include <cstdlib>

#include <omp.h>

namespace limlab {

// Worker count for parallel scans: LIMLAB_THREADS overrides the OpenMP
// default. Every kernel merges deterministically, so the count never
// shows in output.
inline int thread_budget() {
    if (const char* env = std::getenv("LIMLAB_THREADS")) {
        int cap = std::atoi(env);
        if (cap > 0) return cap;
    }
    int n = omp_get_max_threads();
    return n < 1 ? 1 : n;
}

}  // namespace limlab
