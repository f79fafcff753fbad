#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hashcost/circuit_io.hpp"
#include "hashcost/ft_cost.hpp"
#include "hashcost/keccak_circuit.hpp"
#include "hashcost/lowering.hpp"
#include "hashcost/reference.hpp"
#include "hashcost/report.hpp"
#include "hashcost/search_math.hpp"
#include "hashcost/sha256_circuit.hpp"
#include "hashcost/verify.hpp"

namespace py = pybind11;
using namespace hashcost;

namespace {

// JSON text crosses the boundary; the Python side turns it into dicts.
std::string counts_of(const Circuit& c, bool lowered) {
    return counts_json(count_resources(lowered ? lower(c) : c)).dump();
}

Circuit build(const std::string& hash, int rounds) {
    if (hash == "sha256") return build_sha256().circuit;
    if (hash == "keccak") return build_keccak_p(rounds).circuit;
    throw std::invalid_argument("unknown hash '" + hash + "' (sha256, keccak)");
}

ResourceCounts counts_from_dict(const py::dict& d) {
    ResourceCounts rc;
    auto get = [&](const char* k) { return d.contains(k) ? d[k].cast<std::uint64_t>() : std::uint64_t{0}; };
    rc.count(GateKind::T) = get("T");
    rc.count(GateKind::CNOT) = get("CNOT");
    rc.count(GateKind::H) = get("H");
    rc.count(GateKind::P) = get("P");
    rc.count(GateKind::Z) = get("Z");
    rc.count(GateKind::X) = get("X");
    rc.t_depth = get("t_depth");
    return rc;
}

}  // namespace

PYBIND11_MODULE(_hashcost, m) {
    m.doc() = "Reversible SHA-256 / Keccak circuits and Grover attack cost estimates";

    py::register_exception<StructuralError>(m, "StructuralError", PyExc_ValueError);
    py::register_exception<UnsupportedGateError>(m, "UnsupportedGateError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<DivergenceError>(m, "DivergenceError", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    m.def(
        "circuit_counts",
        [](const std::string& hash, bool lowered, int rounds) {
            auto c = build(hash, rounds);
            py::gil_scoped_release nogil;
            return counts_of(c, lowered);
        },
        py::arg("hash"), py::arg("lowered") = false, py::arg("rounds") = 24);
    m.def(
        "keccak_component_counts",
        [](const std::string& part) {
            const auto l = make_keccak_layout();
            if (part == "theta") return counts_of(build_theta(l), false);
            if (part == "theta_inv") return counts_of(build_theta_inv(l), false);
            if (part == "chi") return counts_of(build_chi(l), true);
            if (part == "chi_inv") return counts_of(build_chi_inv(l), true);
            throw std::invalid_argument("unknown component '" + part + "'");
        },
        py::arg("part"));
    m.def("circuit_text", [](const std::string& hash, int rounds) { return to_text(build(hash, rounds)); },
          py::arg("hash"), py::arg("rounds") = 24);
    m.def("text_counts", [](const std::string& text) { return counts_of(from_text(text), false); });

    m.def(
        "sha256_circuit_digest",
        [](const py::bytes& msg) {
            const std::string s = msg;
            static const Sha256Circuit sc = build_sha256();
            const auto v = verify_sha256(sc, {Message(s.begin(), s.end())});
            if (!v[0].ancillas_clean) throw std::runtime_error("ancillas not restored");
            return py::bytes(reinterpret_cast<const char*>(v[0].digest.data()), v[0].digest.size());
        },
        py::arg("message"));
    m.def(
        "keccak_p_circuit",
        [](const std::vector<std::uint64_t>& lanes, int rounds) {
            if (lanes.size() != 25) throw std::invalid_argument("need 25 lanes");
            ref::KeccakState a;
            std::copy(lanes.begin(), lanes.end(), a.begin());
            const auto kc = build_keccak_p(rounds);
            const auto v = verify_keccak_p(kc, {a});
            if (!v[0].ancilla_clean) throw std::runtime_error("ancilla not clean");
            return std::vector<std::uint64_t>(v[0].output.begin(), v[0].output.end());
        },
        py::arg("lanes"), py::arg("rounds") = 24);

    m.def("grover_iterations", [](int k) { return grover_iterations(k).str(); });
    m.def("plan_distillation",
          [](double p_in, double p_out, double epsilon) {
              auto pp = PhysicalParams::from_p_in(p_in);
              pp.epsilon = epsilon;
              const auto plan = plan_distillation(pp, p_out);
              py::dict d;
              d["distances"] = plan.distances();
              d["input_states"] = plan.input_states;
              d["sigma_dist"] = plan.sigma_dist;
              d["phi"] = plan.phi;
              d["bottom_physical"] = plan.bottom_physical;
              return d;
          },
          py::arg("p_in"), py::arg("p_out"), py::arg("epsilon") = 1.0);
    m.def("code_distance", &code_distance, py::arg("error_budget"), py::arg("p_in"));
    m.def(
        "estimate",
        [](const std::string& hash, int k, double p_in, std::optional<double> p_g, double epsilon, double cycle_ns,
           std::optional<py::dict> counts, std::uint64_t qubits) {
            PhysicalParams pp = PhysicalParams::from_p_in(p_in);
            if (p_g) pp.p_g = *p_g;
            pp.epsilon = epsilon;
            pp.t_sc = cycle_ns * 1e-9;
            GroverParams gp;
            gp.k = k;
            std::string source;
            if (hash == "custom") {
                if (!counts) throw std::invalid_argument("custom estimate needs counts");
                gp.hash_counts = counts_from_dict(*counts);
                gp.hash_logical_qubits = qubits;
                source = "custom counts";
            } else if (hash == "sha256" || hash == "sha3-256") {
                const auto pc = hash == "sha256" ? published_sha256_counts() : published_sha3_256_counts();
                gp.hash_counts = pc.counts;
                gp.hash_logical_qubits = pc.qubits;
                source = "published optimized counts";
            } else {
                throw std::invalid_argument("unknown hash '" + hash + "'");
            }
            return cost_report_json(estimate_attack(gp, pp, source)).dump();
        },
        py::arg("hash") = "sha256", py::arg("k") = 256, py::arg("p_in") = 1e-4, py::arg("p_g") = py::none(),
        py::arg("epsilon") = 1.0, py::arg("cycle_ns") = 200.0, py::arg("counts") = py::none(), py::arg("qubits") = 0);

    m.def("lambert_w", &lambert_w);
    m.def("max_search_bits", &max_search_bits, py::arg("v"), py::arg("C"));
    m.def("crossover_k", &crossover_k, py::arg("a"));
    m.def(
        "advantage_table",
        [](std::vector<double> vs, std::vector<double> cs) {
            if (vs.empty()) vs = default_table_v();
            if (cs.empty()) cs = default_table_c();
            std::vector<std::vector<double>> out;
            for (const auto& row : advantage_table(vs, cs)) {
                out.emplace_back();
                for (const auto& cell : row) out.back().push_back(cell.advantage);
            }
            return out;
        },
        py::arg("v") = std::vector<double>{}, py::arg("C") = std::vector<double>{});
}
