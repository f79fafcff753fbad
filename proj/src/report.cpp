#include "hashcost/report.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace hashcost {

Format parse_format(const std::string& s) {
    if (s == "json") return Format::Json;
    if (s == "csv") return Format::Csv;
    if (s == "text") return Format::Text;
    throw std::invalid_argument("unknown format '" + s + "' (json, csv, text)");
}

ordered_json counts_json(const ResourceCounts& rc) {
    ordered_json j;
    for (int k = 0; k < kGateKinds; ++k) j[std::string(kind_name(static_cast<GateKind>(k)))] = rc.by_kind[k];
    j["t_count"] = rc.t_count();
    j["t_depth"] = rc.t_depth;
    j["total_depth"] = rc.total_depth;
    j["toffoli_stages"] = rc.toffoli_stages;
    j["width"] = rc.width;
    return j;
}

namespace {
std::string str(const BigInt& x) { return x.str(); }
// JSON has no infinities; use null for the log of an empty cost.
ordered_json num(double x) { return std::isfinite(x) ? ordered_json(x) : ordered_json(nullptr); }
}  // namespace

ordered_json cost_report_json(const CostReport& r) {
    ordered_json j;
    j["counts_source"] = r.counts_source;
    j["input"] = {
        {"k", r.k},
        {"p_in", r.params.p_in},
        {"p_g", r.params.p_g},
        {"epsilon", r.params.epsilon},
        {"t_sc_seconds", r.params.t_sc},
        {"hash_t_count", r.hash_t_count},
        {"hash_t_depth", r.hash_t_depth},
        {"hash_cliffords", r.hash_cliffords},
        {"hash_logical_qubits", r.n_hash},
    };
    j["grover"] = {
        {"iterations", str(r.iterations)},
        {"log2_iterations", num(log2_big(r.iterations))},
        {"t_count_cnot_k", str(r.t_cnot_k)},
        {"t_count_cnot_k_minus_1", str(r.t_cnot_k1)},
        {"t_count_oracle", str(r.t_oracle)},
        {"t_count_iteration", str(r.t_iteration)},
        {"t_count_total", str(r.t_total)},
        {"t_depth_total", str(r.t_depth_total)},
        {"t_width", num(r.t_width)},
        {"cliffords_per_iteration", str(r.cliffords_per_iteration)},
        {"cliffords_total", str(r.cliffords_total)},
        {"p_out", num(r.p_out)},
        {"clifford_error_budget", num(r.clifford_budget)},
        {"code_distance", r.code_distance},
        {"physical_per_logical", r.physical_per_logical},
        {"algorithm_physical_qubits", str(r.algorithm_physical)},
    };
    ordered_json layers = ordered_json::array();
    for (const auto& l : r.plan.layers)
        layers.push_back({{"distance", l.distance},
                          {"logical_qubits", l.logical_qubits},
                          {"physical_qubits", l.physical_qubits},
                          {"cycles", l.cycles}});
    j["distillation"] = {
        {"distances", r.plan.distances()},
        {"layers", layers},
        {"input_states", r.plan.input_states},
        {"sigma_dist", r.plan.sigma_dist},
        {"phi", r.plan.phi},
        {"bottom_physical_qubits", r.plan.bottom_physical},
        {"distilleries", r.distilleries},
        {"factory_physical_qubits", str(r.factory_physical)},
        {"clifford_cycles_per_t_layer", num(r.clifford_cycles_per_t_layer)},
        {"t_limited", r.t_limited},
        {"t_dist_seconds", num(r.t_dist_seconds)},
    };
    j["total"] = {
        {"logical_qubits", str(r.logical_qubits)},
        {"log2_logical_qubits", num(r.log2_logical_qubits)},
        {"physical_qubits", str(r.total_physical)},
        {"sigma_ga", str(r.sigma_ga)},
        {"log2_sigma_ga", num(r.log2_sigma_ga)},
        {"cost", str(r.total_cost)},
        {"log2_cost", num(r.log2_cost)},
        {"overhead_v", num(r.overhead_v)},
    };
    return j;
}

namespace {
void flatten(const ordered_json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it)
            flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
    } else if (j.is_array() && !j.empty() && j.front().is_object()) {
        for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "." + std::to_string(i), out);
    } else if (j.is_string()) {
        out.emplace_back(prefix, j.get<std::string>());
    } else if (j.is_array()) {
        std::string s;
        for (std::size_t i = 0; i < j.size(); ++i) s += (i ? " " : "") + j[i].dump();
        out.emplace_back(prefix, s);
    } else {
        out.emplace_back(prefix, j.dump());
    }
}
}  // namespace

std::string render(const ordered_json& j, Format f) {
    if (f == Format::Json) return j.dump(2) + "\n";
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(j, "", rows);
    std::ostringstream os;
    if (f == Format::Csv) {
        os << "field,value\n";
        for (const auto& [k, v] : rows) os << k << ',' << v << '\n';
    } else {
        std::size_t w = 0;
        for (const auto& [k, v] : rows) w = std::max(w, k.size());
        for (const auto& [k, v] : rows) os << k << std::string(w - k.size() + 2, ' ') << v << '\n';
    }
    return os.str();
}

}  // namespace hashcost
