#include "hashcost/search_math.hpp"

#include <cmath>
#include <limits>

#include <boost/multiprecision/cpp_int.hpp>

#include "hashcost/circuit.hpp"

namespace hashcost {

namespace {

constexpr double kLn2 = 0.69314718055994530942;

double halley(double x, double w) {
    for (int i = 0; i < 100; ++i) {
        const double ew = std::exp(w);
        const double f = w * ew - x;
        const double step = f / (ew * (w + 1) - (w + 2) * f / (2 * w + 2));
        w -= step;
        if (std::abs(step) <= 1e-16 * (1 + std::abs(w))) break;
    }
    return w;
}

}  // namespace

double lambert_w(double x) {
    if (std::isnan(x) || x < 0) throw DomainError("lambert_w: argument must be >= 0");
    if (x == 0) return 0;
    if (x > 1e300) return lambert_w_from_log(std::log(x));
    const double w0 = x < M_E ? std::log1p(x) * (1 - std::log1p(std::log1p(x)) / (2 + std::log1p(x)))
                              : std::log(x) - std::log(std::log(x));
    return halley(x, w0);
}

double lambert_w_from_log(double log_x) {
    if (std::isnan(log_x)) throw DomainError("lambert_w_from_log: NaN");
    if (log_x < 2) return lambert_w(std::exp(log_x));
    // w + ln w = ln x, Newton from the asymptotic seed
    double w = log_x - std::log(log_x);
    for (int i = 0; i < 100; ++i) {
        const double f = w + std::log(w) - log_x;
        const double step = f / (1 + 1 / w);
        w -= step;
        if (std::abs(step) <= 1e-16 * w) break;
    }
    return w;
}

double max_search_bits(double v, double C) {
    if (v < 0) throw DomainError("overhead v must be >= 0");
    if (!(C > 0)) throw DomainError("cost C must be > 0");
    if (v == 0) return 2 * C;
    // k = (2v / ln 2) W(2^(C/v) ln 2 / (2v))
    const double log_arg = (C / v) * kLn2 + std::log(kLn2 / (2 * v));
    return 2 * v / kLn2 * lambert_w_from_log(log_arg);
}

int max_search_bits_floor(double v, double C) {
    const double k = max_search_bits(v, C);
    auto fits = [&](int n) { return n / 2.0 + v * std::log2(static_cast<double>(n)) <= C + 1e-9 * std::max(1.0, C); };
    int n = static_cast<int>(std::floor(k + 1e-9));
    while (fits(n + 1)) ++n;
    while (n > 1 && !fits(n)) --n;
    return n;
}

std::vector<std::vector<AdvantageCell>> advantage_table(const std::vector<double>& vs, const std::vector<double>& Cs) {
    std::vector<std::vector<AdvantageCell>> rows;
    for (double v : vs) {
        auto& row = rows.emplace_back();
        for (double C : Cs) {
            AdvantageCell cell;
            cell.v = v;
            cell.C = C;
            cell.k = max_search_bits(v, C);
            cell.k_floor = max_search_bits_floor(v, C);
            cell.advantage = std::round(100.0 * cell.k_floor / C) / 100.0;
            row.push_back(cell);
        }
    }
    return rows;
}

std::vector<double> default_table_v() { return {0, 1, 2, 3, 4, 5}; }
std::vector<double> default_table_c() { return {16, 32, 48, 64, 80, 96, 112, 128}; }

int crossover_k(int a) {
    if (a < 1) throw DomainError("crossover_k: a must be >= 1");
    using boost::multiprecision::cpp_int;
    // k/2 > a log2 k  <=>  2^k > k^(2a)
    for (int k = 2; k < 100000; ++k) {
        const cpp_int lhs = cpp_int(1) << k;
        const cpp_int rhs = boost::multiprecision::pow(cpp_int(k), 2 * a);
        if (lhs > rhs) return k;
    }
    throw DomainError("crossover_k: no crossover below 100000");
}

ParallelCost parallel_cost(const ParallelCost& base, double t) {
    if (t < 0) throw DomainError("parallelism exponent t must be >= 0");
    return {std::exp2(-t / 2) * base.c_t, std::exp2(t) * base.c_a, t};
}

ParallelCost classical_parallel_cost(double k, double t) {
    if (t < 0) throw DomainError("parallelism exponent t must be >= 0");
    return {std::exp2(k - t), std::exp2(t), t};
}

double overhead_v(double log2_cost, double k) {
    if (!(k > 1)) throw DomainError("overhead_v: k must be > 1");
    return (log2_cost - k / 2) / std::log2(k);
}

double reversible_layer_overhead(double depth, double qubits, double k) {
    if (!(depth > 0 && qubits > 0)) throw DomainError("depth and qubits must be positive");
    return overhead_v(k / 2 + std::log2(depth) + std::log2(qubits), k);
}

}  // namespace hashcost
