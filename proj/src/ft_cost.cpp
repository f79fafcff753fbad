#include "hashcost/ft_cost.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

namespace hashcost {

namespace {

constexpr int kMaxDistance = 10000;
constexpr int kMaxGroverBits = 4096;

// 700 decimal digits covers pi * 2^2048 with a wide margin.
using Real = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<700>>;

double to_double(const BigInt& x) { return x.convert_to<double>(); }

BigInt ceil_div(const BigInt& a, const BigInt& b) { return (a + b - 1) / b; }

}  // namespace

void PhysicalParams::validate() const {
    if (!(p_in > 0 && p_in < 1)) throw DomainError("p_in must lie in (0, 1)");
    if (!(p_g > 0 && p_g <= p_in)) throw DomainError("p_g must lie in (0, p_in]");
    if (!(epsilon > 0)) throw DomainError("epsilon must be positive");
    if (!(t_sc > 0)) throw DomainError("cycle time must be positive");
}

std::uint64_t physical_per_logical(int d) {
    // 2.5 * 1.25 = 25/8, so the ceiling is exact in integers
    const std::uint64_t dd = static_cast<std::uint64_t>(d) * static_cast<std::uint64_t>(d);
    return (25 * dd + 7) / 8;
}

std::vector<int> DistillationPlan::distances() const {
    std::vector<int> d;
    for (const auto& l : layers) d.push_back(l.distance);
    return d;
}

BigInt grover_iterations(int k) {
    if (k < 0 || k > kMaxGroverBits) throw DomainError("k must lie in [0, 4096]");
    Real x = boost::math::constants::pi<Real>() / 4;
    x = boost::multiprecision::ldexp(x, k / 2);
    if (k % 2) x *= boost::multiprecision::sqrt(Real(2));
    return boost::multiprecision::floor(x).convert_to<BigInt>();
}

BigInt cnot_k_tcount(int k) { return BigInt(32) * k - 84; }

std::pair<BigInt, BigInt> oracle_and_iteration_tcount(int k, const BigInt& hash_tcount) {
    // both 32k-84 and 32(k-1)-84 must be positive
    if (k < 4) throw DomainError("k must be at least 4 for the k-fold CNOT T-count formula");
    if (hash_tcount < 0) throw DomainError("negative hash T-count");
    BigInt oracle = 2 * hash_tcount + cnot_k_tcount(k);
    return {oracle, oracle + cnot_k_tcount(k - 1)};
}

bool distillation_layer_ok(int d, double p_i, const PhysicalParams& pp) {
    // log domain: log(192 d) + (d+1)/2 log(100 p_g) < log(eps p_i / (1 + eps))
    const double lhs = std::log(192.0 * d) + 0.5 * (d + 1) * std::log(100.0 * pp.p_g);
    const double rhs = std::log(pp.epsilon * p_i / (1.0 + pp.epsilon));
    return lhs < rhs;
}

DistillationPlan plan_distillation(const PhysicalParams& pp, double p_out) {
    pp.validate();
    if (!(p_out > 0)) throw DomainError("p_out must be positive");
    DistillationPlan plan;
    if (p_out >= pp.p_in) return plan;
    if (100.0 * pp.p_g >= 1.0) throw DivergenceError("100 p_g >= 1: distillation layers cannot converge");
    double p = p_out;
    std::uint64_t logical = 16;
    while (p < pp.p_in) {
        const double p_i = p;
        int d = 3;
        while (d <= kMaxDistance && !distillation_layer_ok(d, p_i, pp)) d += 2;
        if (d > kMaxDistance) throw DivergenceError("no layer distance up to 10000 satisfies the inequality");
        DistillationLayer layer;
        layer.distance = d;
        layer.logical_qubits = logical;
        layer.physical_qubits = logical * physical_per_logical(d);
        layer.cycles = 10 * static_cast<std::uint64_t>(d);
        plan.layers.push_back(layer);
        if (plan.layers.size() > 32) throw DivergenceError("distillation does not terminate");
        p = std::cbrt(p_i / (35.0 * (1.0 + pp.epsilon)));
        logical *= 15;
    }
    plan.input_states = plan.layers.back().logical_qubits;
    plan.bottom_physical = plan.layers.back().physical_qubits;
    for (const auto& l : plan.layers) plan.sigma_dist += l.cycles;
    plan.phi = plan.layers.size() == 1
                   ? 1
                   : std::max<std::uint64_t>(1, plan.bottom_physical / plan.layers[plan.layers.size() - 2].physical_qubits);
    return plan;
}

bool code_distance_ok(int d, double budget, double p_in) {
    return 0.5 * (d + 1) * std::log(p_in / 0.0125) < std::log(budget);
}

int code_distance(double budget, double p_in) {
    if (!(budget > 0 && budget < 1)) throw DomainError("error budget must lie in (0, 1)");
    if (!(p_in > 0)) throw DomainError("p_in must be positive");
    if (p_in >= 0.0125) throw DomainError("p_in >= 0.0125: the surface code gives no suppression");
    const double guess = 2.0 * std::log(budget) / std::log(p_in / 0.0125) - 1.0;
    if (guess > 1e8) throw DivergenceError("required code distance is unreasonably large");
    int d = std::max(3, static_cast<int>(std::floor(guess)));
    while (d > 3 && code_distance_ok(d - 1, budget, p_in)) --d;
    while (!code_distance_ok(d, budget, p_in)) ++d;
    return d;
}

double log2_big(const BigInt& x) {
    if (x <= 0) return -std::numeric_limits<double>::infinity();
    const unsigned msb = boost::multiprecision::msb(x);
    if (msb < 60) return std::log2(to_double(x));
    const BigInt top = x >> (msb - 60);
    return std::log2(to_double(top)) + static_cast<double>(msb - 60);
}

CostReport estimate_attack(const GroverParams& gp, const PhysicalParams& pp, std::string counts_source) {
    pp.validate();
    const auto& hc = gp.hash_counts;
    if (hc.t_depth < 1) throw DomainError("hash T-depth must be at least 1");
    if (gp.hash_logical_qubits < 1) throw DomainError("hash width must be at least 1");

    CostReport r;
    r.counts_source = std::move(counts_source);
    r.k = gp.k;
    r.params = pp;
    r.hash_t_count = hc.t_count();
    r.hash_t_depth = hc.t_depth;
    r.hash_cliffords = hc.clifford_count();
    r.n_hash = gp.hash_logical_qubits;

    r.iterations = grover_iterations(gp.k);
    std::tie(r.t_oracle, r.t_iteration) = oracle_and_iteration_tcount(gp.k, BigInt(hc.t_count()));
    r.t_cnot_k = cnot_k_tcount(gp.k);
    r.t_cnot_k1 = cnot_k_tcount(gp.k - 1);
    r.t_total = r.iterations * r.t_iteration;
    r.t_depth_total = r.iterations * 2 * BigInt(hc.t_depth);
    r.t_width = r.t_depth_total > 0 ? to_double(r.t_total) / to_double(r.t_depth_total) : 0.0;

    r.cliffords_per_iteration = 2 * BigInt(hc.clifford_count());
    r.cliffords_total = r.iterations * r.cliffords_per_iteration;
    r.p_out = r.t_total > 0 ? 1.0 / to_double(r.t_total) : 1.0;
    r.clifford_budget = r.cliffords_total > 1 ? 1.0 / to_double(r.cliffords_total) : 0.5;

    r.plan = plan_distillation(pp, r.p_out);
    r.code_distance = code_distance(r.clifford_budget, pp.p_in);
    r.physical_per_logical = physical_per_logical(r.code_distance);
    r.n_dist = r.plan.input_states;

    if (!r.plan.empty() && r.t_depth_total > 0) {
        // Phi = ceil(T^w / phi) with T^w = T^c_GA / T^d_GA, done exactly
        r.distilleries = ceil_div(r.t_total, r.t_depth_total * r.plan.phi).convert_to<std::uint64_t>();
    }

    r.algorithm_physical = BigInt(r.n_hash) * r.physical_per_logical;
    r.factory_physical = BigInt(r.distilleries) * r.plan.bottom_physical;
    r.total_physical = r.algorithm_physical + r.factory_physical;

    {
        const double cl = static_cast<double>(hc.clifford_count());
        const double frac_h = cl > 0 ? hc.h_count() / cl : 0.0;
        const double frac_cnot = cl > 0 ? hc.cnot_count() / cl : 0.0;
        const double per_qubit_layer =
            to_double(r.cliffords_per_iteration) / (static_cast<double>(r.n_hash) * 2.0 * static_cast<double>(hc.t_depth));
        r.clifford_cycles_per_t_layer = per_qubit_layer * (frac_h * r.code_distance + frac_cnot * 2.0);
        r.t_limited = r.clifford_cycles_per_t_layer < static_cast<double>(r.plan.sigma_dist);
    }

    r.sigma_ga = r.iterations * r.plan.sigma_dist * 2 * BigInt(hc.t_depth);
    r.logical_qubits = BigInt(r.n_hash) + BigInt(r.distilleries) * r.n_dist;
    r.total_cost = r.logical_qubits * r.sigma_ga;
    r.log2_sigma_ga = log2_big(r.sigma_ga);
    r.log2_logical_qubits = log2_big(r.logical_qubits);
    r.log2_cost = log2_big(r.total_cost);
    r.overhead_v = gp.k > 1 ? (r.log2_cost - gp.k / 2.0) / std::log2(static_cast<double>(gp.k))
                            : std::numeric_limits<double>::quiet_NaN();
    if (r.distilleries > 0)
        r.t_dist_seconds = to_double(r.t_total) / (static_cast<double>(r.plan.phi) * r.distilleries) *
                           static_cast<double>(r.plan.sigma_dist) * pp.t_sc;
    return r;
}

PublishedCounts published_sha256_counts() {
    PublishedCounts p{};
    auto& c = p.counts;
    c.count(GateKind::T) = 228992;
    c.count(GateKind::P) = 72976;
    c.count(GateKind::Z) = 6144;
    c.count(GateKind::H) = 94144;
    c.count(GateKind::CNOT) = 4209072;
    c.t_depth = 70400;
    c.total_depth = 830720;
    c.width = p.qubits = 2402;
    return p;
}

PublishedCounts published_sha3_256_counts() {
    PublishedCounts p{};
    auto& c = p.counts;
    c.count(GateKind::X) = 85;
    c.count(GateKind::P) = 46080;
    c.count(GateKind::T) = 499200;
    c.count(GateKind::H) = 168960;
    c.count(GateKind::CNOT) = 34260480;
    c.t_depth = 432;
    c.total_depth = 11040;
    c.width = p.qubits = 3200;
    return p;
}

}  // namespace hashcost
