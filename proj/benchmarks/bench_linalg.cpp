#include <benchmark/benchmark.h>
int main_unused_placeholder;
