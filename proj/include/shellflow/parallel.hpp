#pragma once

namespace shellflow {

// How the O(M^2) assembly loops and parameter sweeps are executed.
// Serial is the reference path kept for testing and benchmarking;
// Parallel uses OpenMP (capped by SHELLFLOW_THREADS) when compiled in.
enum class Exec { Serial, Parallel };

namespace parallel {

// Number of worker threads the parallel path may use.  Reads
// SHELLFLOW_THREADS once; values < 1 fall back to the OpenMP default.
// Returns 1 when OpenMP is not compiled in.
int thread_cap();

}  // namespace parallel
}  // namespace shellflow
