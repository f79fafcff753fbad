#pragma once

#include <vector>

namespace hashcost {

// Principal branch W0 for x >= 0.
double lambert_w(double x);
// W0(x) given ln x; usable when x itself overflows a double.
double lambert_w_from_log(double log_x);

// Largest real k with k/2 + v log2 k <= C (equality case).
double max_search_bits(double v, double C);
// Largest integer k with k/2 + v log2 k <= C.
int max_search_bits_floor(double v, double C);

struct AdvantageCell {
    double v = 0, C = 0;
    double k = 0;
    int k_floor = 0;
    double advantage = 0;  // k_floor / C rounded to two decimals
};

std::vector<std::vector<AdvantageCell>> advantage_table(const std::vector<double>& vs, const std::vector<double>& Cs);
std::vector<double> default_table_v();
std::vector<double> default_table_c();

// Smallest integer k >= 2 with k/2 > a log2 k, decided exactly.
int crossover_k(int a);

struct ParallelCost {
    double c_t = 0, c_a = 0;
    double t = 0;
};
ParallelCost parallel_cost(const ParallelCost& base, double t);
ParallelCost classical_parallel_cost(double k, double t);

double overhead_v(double log2_cost, double k);
// log2(depth * qubits) per log2 k: the per-iteration exponent of the reversible layer.
double reversible_layer_overhead(double depth, double qubits, double k);

}  // namespace hashcost
