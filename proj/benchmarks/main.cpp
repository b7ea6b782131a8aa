#include <benchmark/benchmark.h>

// the packaged benchmark_main archive is built with a different LTO version
BENCHMARK_MAIN();
