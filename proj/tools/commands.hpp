#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hashcost/ft_cost.hpp"
#include "hashcost/report.hpp"

namespace hashcost::cli {

struct BuildOptions {
    std::string hash = "sha256";  // sha256 | keccak
    std::string out;
    bool lowered = false;
    int rounds = 24;
};

struct VerifyOptions {
    std::string hash = "sha256";  // sha256 | keccak | sha3-256
    std::string vectors;
};

struct EstimatorConfig {
    std::string hash = "sha256";  // sha256 | sha3-256 | custom
    int k = 256;
    double p_in = 1e-4;
    std::optional<double> p_g;  // defaults to p_in / 10
    double epsilon = 1.0;
    double cycle_ns = 200.0;
    bool paper_counts = false;
    // custom counts
    std::uint64_t t_count = 0, t_depth = 0, cnot = 0, h = 0, p = 0, z = 0, x = 0, qubits = 0;
    std::string out;
    std::string format = "json";

    PhysicalParams physical() const;
};

struct AdvantageOptions {
    std::vector<double> v, c;
    bool crossover = false;
    std::string format = "text";
};

int cmd_build(const BuildOptions& o, std::ostream& out);
int cmd_verify(const VerifyOptions& o, std::ostream& out);
int cmd_estimate(const EstimatorConfig& o, std::ostream& out);
int cmd_advantage(const AdvantageOptions& o, std::ostream& out);
// Per-component counts for one Keccak round or the SHA-256 round and stretch.
int cmd_counts(const std::string& hash, const std::string& format, std::ostream& out);

CostReport run_estimate(const EstimatorConfig& o);

}  // namespace hashcost::cli
