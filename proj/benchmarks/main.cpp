#include <benchmark/benchmark.h>

// the packaged benchmark_main archive carries LTO bytecode from another compiler
BENCHMARK_MAIN();
