#pragma once

namespace hyperpoly {

/// How batch kernels run their independent cases. `serial` is the reference
/// loop; `parallel` distributes cases over OpenMP threads and must produce the
/// identical result (including which counterexample is reported).
enum class Exec { serial, parallel };

/// Number of OpenMP threads the parallel kernels will use.
int parallel_threads();

}  // namespace hyperpoly
