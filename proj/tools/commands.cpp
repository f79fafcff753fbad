#include "commands.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "hashcost/circuit_io.hpp"
#include "hashcost/keccak_circuit.hpp"
#include "hashcost/lowering.hpp"
#include "hashcost/search_math.hpp"
#include "hashcost/sha256_circuit.hpp"
#include "hashcost/verify.hpp"

namespace hashcost::cli {

namespace {

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path + " for writing");
    f << text;
}

ResourceCounts lowered_counts(Circuit&& c) {
    Circuit low = lower(c);
    c = Circuit();  // release the Toffoli-level copy before counting
    return count_resources(low);
}

}  // namespace

int cmd_build(const BuildOptions& o, std::ostream& out) {
    Circuit c;
    if (o.hash == "sha256") c = build_sha256().circuit;
    else if (o.hash == "keccak") c = build_keccak_p(o.rounds).circuit;
    else throw std::invalid_argument("build: unknown hash '" + o.hash + "' (sha256, keccak)");
    if (o.lowered) c = lower(c);
    if (!o.out.empty()) save_circuit(o.out, c);
    ordered_json j;
    j["hash"] = o.hash;
    j["lowered"] = o.lowered;
    if (!o.out.empty()) j["file"] = o.out;
    j["counts"] = counts_json(count_resources(c));
    out << j.dump(2) << '\n';
    return 0;
}

int cmd_verify(const VerifyOptions& o, std::ostream& out) {
    const auto vecs = load_vectors(o.vectors);
    int failures = 0;
    auto report = [&](const TestVector& v, bool ok, const std::string& detail) {
        out << (ok ? "PASS" : "FAIL") << " line " << v.line;
        if (!detail.empty()) out << ": " << detail;
        out << '\n';
        failures += !ok;
    };
    if (o.hash == "sha256") {
        const auto sc = build_sha256();
        std::vector<Message> msgs;
        for (const auto& v : vecs) {
            if (v.input.size() > 55 || v.expected.size() != 32)
                throw std::runtime_error("sha256 vectors need a single-block message (<= 55 bytes) and a 32-byte digest (line " +
                                         std::to_string(v.line) + ")");
            msgs.push_back(v.input);
        }
        const auto verdicts = verify_sha256(sc, msgs);
        for (std::size_t i = 0; i < vecs.size(); ++i) {
            const auto& vd = verdicts[i];
            const bool match = std::equal(vd.digest.begin(), vd.digest.end(), vecs[i].expected.begin());
            std::string detail;
            if (!match) {
                int w = 0;
                while (w < 8 && std::equal(vd.digest.begin() + 4 * w, vd.digest.begin() + 4 * w + 4,
                                           vecs[i].expected.begin() + 4 * w))
                    ++w;
                detail = "digest word " + std::to_string(w) + " differs; circuit " + ref::to_hex(vd.digest) +
                         " expected " + ref::to_hex(vecs[i].expected);
            } else if (!vd.ancillas_clean) {
                detail = "ancillas not restored";
            }
            report(vecs[i], match && vd.ancillas_clean, detail);
        }
    } else if (o.hash == "keccak" || o.hash == "sha3-256") {
        const bool sha3 = o.hash == "sha3-256";
        const auto kc = build_keccak_p(24);
        std::vector<ref::KeccakState> states;
        for (const auto& v : vecs) {
            if (sha3) {
                if (v.input.size() != 32 || v.expected.size() != 32)
                    throw std::runtime_error("sha3-256 vectors need 32-byte message and digest (line " +
                                             std::to_string(v.line) + ")");
                std::array<std::uint8_t, 32> m;
                std::copy(v.input.begin(), v.input.end(), m.begin());
                states.push_back(ref::sha3_256_absorb_256(m));
            } else {
                if (v.input.size() != 200 || v.expected.size() != 200)
                    throw std::runtime_error("keccak vectors need 200-byte states (line " + std::to_string(v.line) + ")");
                std::array<std::uint8_t, 200> b;
                std::copy(v.input.begin(), v.input.end(), b.begin());
                states.push_back(ref::keccak_from_bytes(b));
            }
        }
        const auto verdicts = verify_keccak_p(kc, states);
        for (std::size_t i = 0; i < vecs.size(); ++i) {
            const auto bytes = ref::keccak_to_bytes(verdicts[i].output);
            const std::size_t n = sha3 ? 32 : 200;
            const bool match = std::equal(bytes.begin(), bytes.begin() + n, vecs[i].expected.begin());
            std::string detail;
            if (!match) {
                std::ostringstream ds;
                ds << "differs from expected";
                for (std::size_t b = 0; b < n; ++b)
                    if (bytes[b] != vecs[i].expected[b]) {
                        const int lane = static_cast<int>(b / 8);
                        ds << " at lane (" << lane % 5 << "," << lane / 5 << ")";
                        break;
                    }
                detail = ds.str();
            } else if (!verdicts[i].ancilla_clean) {
                detail = "ancilla not clean after round " + std::to_string(verdicts[i].first_bad_round);
            }
            report(vecs[i], match && verdicts[i].ancilla_clean, detail);
        }
    } else {
        throw std::invalid_argument("verify: unknown hash '" + o.hash + "' (sha256, keccak, sha3-256)");
    }
    out << (failures ? "FAILED " : "OK ") << vecs.size() - failures << "/" << vecs.size() << " vectors passed\n";
    return failures ? 1 : 0;
}

PhysicalParams EstimatorConfig::physical() const {
    PhysicalParams pp;
    pp.p_in = p_in;
    pp.p_g = p_g ? *p_g : p_in / 10;
    pp.epsilon = epsilon;
    pp.t_sc = cycle_ns * 1e-9;
    return pp;
}

CostReport run_estimate(const EstimatorConfig& o) {
    GroverParams gp;
    gp.k = o.k;
    std::string source;
    if (o.hash == "custom") {
        auto& c = gp.hash_counts;
        c.count(GateKind::T) = o.t_count;
        c.t_depth = o.t_depth;
        c.count(GateKind::CNOT) = o.cnot;
        c.count(GateKind::H) = o.h;
        c.count(GateKind::P) = o.p;
        c.count(GateKind::Z) = o.z;
        c.count(GateKind::X) = o.x;
        c.width = gp.hash_logical_qubits = o.qubits;
        source = "custom counts";
    } else if (o.hash == "sha256" || o.hash == "sha3-256") {
        const bool sha2 = o.hash == "sha256";
        if (o.paper_counts) {
            const auto pc = sha2 ? published_sha256_counts() : published_sha3_256_counts();
            gp.hash_counts = pc.counts;
            gp.hash_logical_qubits = pc.qubits;
            source = "published optimized counts";
        } else {
            Circuit c = sha2 ? build_sha256().circuit : build_keccak_p(24).circuit;
            gp.hash_counts = lowered_counts(std::move(c));
            gp.hash_logical_qubits = gp.hash_counts.width;
            source = "built and lowered here (unoptimized)";
        }
    } else {
        throw std::invalid_argument("estimate: unknown hash '" + o.hash + "' (sha256, sha3-256, custom)");
    }
    return estimate_attack(gp, o.physical(), source);
}

int cmd_estimate(const EstimatorConfig& o, std::ostream& out) {
    const auto fmt = parse_format(o.format);
    const auto r = run_estimate(o);
    auto j = cost_report_json(r);
    j["input"]["hash"] = o.hash;
    write_output(o.out, render(j, fmt), out);
    return 0;
}

int cmd_advantage(const AdvantageOptions& o, std::ostream& out) {
    const auto fmt = parse_format(o.format);
    std::ostringstream os;
    if (o.crossover) {
        ordered_json j = ordered_json::array();
        if (fmt == Format::Csv) os << "a,k\n";
        else if (fmt == Format::Text) os << "a  k\n";
        for (int a = 1; a <= 5; ++a) {
            const int k = crossover_k(a);
            j.push_back({{"a", a}, {"k", k}});
            if (fmt == Format::Csv) os << a << ',' << k << '\n';
            else if (fmt == Format::Text) os << a << "  " << k << '\n';
        }
        if (fmt == Format::Json) os << j.dump(2) << '\n';
        write_output("", os.str(), out);
        return 0;
    }
    const auto vs = o.v.empty() ? default_table_v() : o.v;
    const auto cs = o.c.empty() ? default_table_c() : o.c;
    const auto table = advantage_table(vs, cs);
    os << std::fixed;
    if (fmt == Format::Json) {
        ordered_json j = ordered_json::array();
        for (const auto& row : table)
            for (const auto& c : row)
                j.push_back({{"a", c.v}, {"C", c.C}, {"k", c.k}, {"k_floor", c.k_floor}, {"advantage", c.advantage}});
        os << j.dump(2) << '\n';
    } else if (fmt == Format::Csv) {
        os << "a,C,k,k_floor,advantage\n";
        for (const auto& row : table)
            for (const auto& c : row)
                os << std::setprecision(6) << c.v << ',' << c.C << ',' << c.k << ',' << c.k_floor << ','
                   << std::setprecision(2) << c.advantage << '\n';
    } else {
        os << std::setprecision(0) << "a \\ C";
        for (double C : cs) os << std::setw(7) << C;
        os << '\n';
        for (const auto& row : table) {
            os << std::setprecision(2) << std::setw(5) << row.front().v;
            for (const auto& c : row) os << std::setw(7) << c.advantage;
            os << '\n';
        }
    }
    write_output("", os.str(), out);
    return 0;
}

int cmd_counts(const std::string& hash, const std::string& format, std::ostream& out) {
    const auto fmt = parse_format(format);
    ordered_json j;
    if (hash == "keccak") {
        const auto l = make_keccak_layout();
        j["theta"] = counts_json(count_resources(build_theta(l)));
        j["theta_inv"] = counts_json(count_resources(build_theta_inv(l)));
        j["chi"] = counts_json(count_resources(lower(build_chi(l))));
        j["chi_inv"] = counts_json(count_resources(lower(build_chi_inv(l))));
        std::uint64_t iota_x = 0;
        for (int r = 0; r < 24; ++r) iota_x += build_iota(r, l).size();
        j["iota_x_total"] = iota_x;
        auto kc = build_keccak_p(24);
        j["full_toffoli_level"] = counts_json(count_resources(kc.circuit));
        j["full_lowered"] = counts_json(lowered_counts(std::move(kc.circuit)));
    } else if (hash == "sha256") {
        const auto l = make_sha256_layout();
        j["width"] = l.width;
        j["round"] = counts_json(count_resources(lower(build_round(0, l))));
        j["stretch"] = counts_json(count_resources(lower(build_stretch(16, l))));
        auto sc = build_sha256();
        j["full_toffoli_level"] = counts_json(count_resources(sc.circuit));
        j["full_lowered"] = counts_json(lowered_counts(std::move(sc.circuit)));
    } else {
        throw std::invalid_argument("counts: unknown hash '" + hash + "' (sha256, keccak)");
    }
    out << render(j, fmt);
    return 0;
}

}  // namespace hashcost::cli
