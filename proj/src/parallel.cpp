#include "shellflow/parallel.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace shellflow::parallel {

int thread_cap() {
#ifdef _OPENMP
    static const int cap = [] {
        int n = omp_get_max_threads();
        if (const char* env = std::getenv("SHELLFLOW_THREADS")) {
            try {
                int requested = std::stoi(env);
                if (requested >= 1 && requested < n) n = requested;
            } catch (...) {
                // unparsable value: keep the OpenMP default
            }
        }
        return n;
    }();
    return cap;
#else
    return 1;
#endif
}

}  // namespace shellflow::parallel
