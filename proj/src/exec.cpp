#include "hyperpoly/exec.hpp"

#include <omp.h>

namespace hyperpoly {

int parallel_threads() { return omp_get_max_threads(); }

}  // namespace hyperpoly
