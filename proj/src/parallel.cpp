#include "sperner/parallel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sperner {

int thread_count() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

void set_thread_count(int threads) {
#ifdef _OPENMP
    omp_set_num_threads(threads < 1 ? omp_get_num_procs() : threads);
#else
    (void)threads;
#endif
}

} // namespace sperner
