#include "logharm/parallel.hpp"

#include <cstdlib>
#include <string>

namespace logharm::par {

int threads() {
#ifdef _OPENMP
    int n = omp_get_max_threads();
    if (const char* cap = std::getenv("LOGHARM_THREADS")) {
        try {
            const int requested = std::stoi(cap);
            if (requested >= 1 && requested < n) n = requested;
        } catch (...) {
            // unparsable cap: ignore, keep the OpenMP default
        }
    }
    return n;
#else
    return 1;
#endif
}

}  // namespace logharm::par
