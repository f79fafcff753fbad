#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hashcost/circuit.hpp"

namespace hashcost {

using BigInt = boost::multiprecision::cpp_int;

struct DivergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PhysicalParams {
    double p_in = 1e-4;
    double p_g = 1e-5;  // p_in / 10 by default
    double epsilon = 1.0;
    double t_sc = 200e-9;  // seconds per surface-code cycle

    static PhysicalParams from_p_in(double p_in) { return {p_in, p_in / 10, 1.0, 200e-9}; }
    void validate() const;
};

struct GroverParams {
    int k = 256;
    ResourceCounts hash_counts;
    std::uint64_t hash_logical_qubits = 0;
};

// Physical qubits per logical qubit at distance d: ceil(2.5 * 1.25 * d^2).
std::uint64_t physical_per_logical(int d);

struct DistillationLayer {
    int distance = 0;
    std::uint64_t logical_qubits = 0;  // 16 * 15^(j-1) for layer j counted from the top
    std::uint64_t physical_qubits = 0;
    std::uint64_t cycles = 0;  // 10 d
};

struct DistillationPlan {
    std::vector<DistillationLayer> layers;  // top (final output) first
    std::uint64_t input_states = 0;         // N_dist, logical qubits of the bottom layer
    std::uint64_t sigma_dist = 0;           // sum of layer cycles
    std::uint64_t phi = 0;                  // magic states produced in parallel
    std::uint64_t bottom_physical = 0;

    bool empty() const { return layers.empty(); }
    std::vector<int> distances() const;
};

// floor(pi/4 * 2^(k/2)), exact.
BigInt grover_iterations(int k);
// T-count of a k-fold controlled NOT.
BigInt cnot_k_tcount(int k);
// (T^c of the oracle U_g, T^c of one Grover iteration G).
std::pair<BigInt, BigInt> oracle_and_iteration_tcount(int k, const BigInt& hash_tcount);

// Does the layer inequality 192 d (100 p_g)^((d+1)/2) < eps p_i / (1 + eps) hold?
bool distillation_layer_ok(int d, double p_i, const PhysicalParams& pp);
// Layer distances are odd (see README); minimal odd d >= 3 per layer.
DistillationPlan plan_distillation(const PhysicalParams& pp, double p_out);

// Does (p_in / 0.0125)^((d+1)/2) < budget hold?
bool code_distance_ok(int d, double budget, double p_in);
int code_distance(double error_budget, double p_in);

double log2_big(const BigInt& x);

struct CostReport {
    std::string counts_source;
    int k = 0;
    PhysicalParams params;
    std::uint64_t hash_t_count = 0, hash_t_depth = 0, hash_cliffords = 0;
    std::uint64_t n_hash = 0;

    BigInt iterations;
    BigInt t_cnot_k, t_cnot_k1;
    BigInt t_oracle, t_iteration, t_total;  // T^c_{U_g}, T^c_G, T^c_GA
    BigInt t_depth_total;                   // T^d_GA = I * 2 * T^d_hash
    double t_width = 0;                     // T^c_GA / T^d_GA
    BigInt cliffords_per_iteration, cliffords_total;
    double p_out = 0, clifford_budget = 0;

    DistillationPlan plan;
    int code_distance = 0;
    std::uint64_t n_dist = 0, distilleries = 0;
    std::uint64_t physical_per_logical = 0;
    BigInt algorithm_physical, factory_physical, total_physical;

    double clifford_cycles_per_t_layer = 0;
    bool t_limited = false;

    BigInt sigma_ga, logical_qubits, total_cost;
    double log2_sigma_ga = 0, log2_logical_qubits = 0, log2_cost = 0;
    double overhead_v = 0;
    double t_dist_seconds = 0;
};

CostReport estimate_attack(const GroverParams& gp, const PhysicalParams& pp, std::string counts_source = "custom");

// Optimized counts quoted for the hash circuits (T-par output), used by --paper-counts.
struct PublishedCounts {
    ResourceCounts counts;
    std::uint64_t qubits;
};
PublishedCounts published_sha256_counts();
PublishedCounts published_sha3_256_counts();

}  // namespace hashcost
