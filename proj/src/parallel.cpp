#include "semihopf/parallel.hpp"

namespace semihopf::par {

bool& parallel_enabled() {
    static bool enabled = true;
    return enabled;
}

int worker_count() {
#ifdef _OPENMP
    return parallel_enabled() ? omp_get_max_threads() : 1;
#else
    return 1;
#endif
}

}  // namespace semihopf::par
