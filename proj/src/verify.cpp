#include "hashcost/verify.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace hashcost {

BitState sha256_initial_state(const Sha256Layout& l, std::span<const std::uint8_t> msg) {
    BitState s(l.width);
    const auto block = ref::sha256_pad_block(msg);
    for (int j = 0; j < 16; ++j) s.write(l.w, 32 * j, 32, block[j]);
    for (int j = 0; j < 8; ++j) s.write(l.state[j], 0, 32, ref::kSha256IV[j]);
    s.write(l.k, 0, 32, ref::kSha256K[0]);
    return s;
}

ref::Sha256State sha256_read_state(const Sha256Layout& l, const BitState& s, int round) {
    ref::Sha256State out{};
    for (int j = 0; j < 8; ++j) out[j] = static_cast<std::uint32_t>(s.read(l.role(round, j), 0, 32));
    return out;
}

Digest256 sha256_digest_from_state(const ref::Sha256State& st) {
    Digest256 d{};
    for (int i = 0; i < 8; ++i) {
        const std::uint32_t w = st[i] + ref::kSha256IV[i];
        for (int j = 0; j < 4; ++j) d[4 * i + j] = static_cast<std::uint8_t>(w >> (24 - 8 * j));
    }
    return d;
}

std::vector<Sha256Verdict> verify_sha256(const Sha256Circuit& sc, const std::vector<Message>& msgs) {
    const auto& l = sc.layout;
    std::vector<Sha256Verdict> out;
    for (std::size_t base = 0; base < msgs.size(); base += 64) {
        const std::size_t n = std::min<std::size_t>(64, msgs.size() - base);
        BatchState batch(l.width);
        for (std::size_t i = 0; i < n; ++i) batch.load(static_cast<int>(i), sha256_initial_state(l, msgs[base + i]));
        run_batch(sc.circuit, batch);
        for (std::size_t i = 0; i < n; ++i) {
            const auto& msg = msgs[base + i];
            const BitState s = batch.extract(static_cast<int>(i));
            Sha256Verdict v;
            v.digest = sha256_digest_from_state(sha256_read_state(l, s, 64));
            v.expected = ref::sha256(msg);
            v.match = v.digest == v.expected;
            for (int w = 0; w < 8 && !v.match; ++w)
                if (!std::equal(v.digest.begin() + 4 * w, v.digest.begin() + 4 * w + 4, v.expected.begin() + 4 * w)) {
                    v.first_diff_word = w;
                    break;
                }
            // scratch must be clean, K must hold K[63], W must hold the schedule
            bool clean = s.all_zero(l.t) && s.all_zero(l.s1) && s.all_zero(l.s2) && s.all_zero(l.carry) &&
                         s.read(l.k, 0, 32) == ref::kSha256K[63];
            const auto sched = ref::sha256_schedule(ref::sha256_pad_block(msg));
            for (int j = 0; j < 64 && clean; ++j) clean = s.read(l.w, 32 * j, 32) == sched[j];
            v.ancillas_clean = clean;
            out.push_back(v);
        }
    }
    return out;
}

BitState keccak_initial_state(const KeccakLayout& l, const ref::KeccakState& a) {
    BitState s(l.width());
    for (int lane = 0; lane < 25; ++lane) s.write(l.state, 64 * lane, 64, a[lane]);
    return s;
}

ref::KeccakState keccak_read_state(const KeccakLayout& l, const BitState& s) {
    ref::KeccakState a{};
    for (int lane = 0; lane < 25; ++lane) a[lane] = s.read(l.state, 64 * lane, 64);
    return a;
}

std::vector<KeccakVerdict> verify_keccak_p(const KeccakCircuit& kc, const std::vector<ref::KeccakState>& states) {
    const auto& l = kc.layout;
    const int rounds = static_cast<int>(kc.round_end.size());
    const int first_round = 24 - rounds;
    std::vector<KeccakVerdict> out;
    for (std::size_t base = 0; base < states.size(); base += 64) {
        const std::size_t n = std::min<std::size_t>(64, states.size() - base);
        BatchState batch(l.width());
        std::vector<ref::KeccakState> expect(states.begin() + base, states.begin() + base + n);
        std::vector<KeccakVerdict> verdicts(n);
        for (std::size_t i = 0; i < n; ++i) {
            batch.load(static_cast<int>(i), keccak_initial_state(l, expect[i]));
            verdicts[i].ancilla_clean = true;
        }
        std::size_t begin = 0;
        for (int r = 0; r < rounds; ++r) {
            run_batch(kc.circuit, batch, begin, kc.round_end[r]);
            begin = kc.round_end[r];
            std::uint64_t dirty = 0;
            for (std::uint32_t i = 0; i < l.anc.size; ++i) dirty |= batch[l.anc[i]];
            for (std::size_t i = 0; i < n; ++i) {
                ref::keccak_round(expect[i], first_round + r);
                auto& v = verdicts[i];
                if (v.first_bad_round >= 0) continue;
                bool bad = (dirty >> i) & 1;
                if (bad) v.ancilla_clean = false;
                for (int lane = 0; lane < 25 && !bad; ++lane) {
                    std::uint64_t got = 0;
                    for (int z = 0; z < 64; ++z) got |= ((batch[l.state[64 * lane + z]] >> i) & std::uint64_t{1}) << z;
                    bad = got != expect[i][lane];
                }
                if (bad) v.first_bad_round = first_round + r;
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            auto& v = verdicts[i];
            const BitState s = batch.extract(static_cast<int>(i));
            v.output = keccak_read_state(l, s);
            v.expected = expect[i];
            for (int lane = 0; lane < 25; ++lane)
                if (v.output[lane] != v.expected[lane]) v.diff_lanes.emplace_back(lane % 5, lane / 5);
            v.match = v.diff_lanes.empty();
            if (!s.all_zero(l.anc)) v.ancilla_clean = false;
            out.push_back(std::move(v));
        }
    }
    return out;
}

std::vector<TestVector> read_vectors(std::istream& is) {
    std::vector<TestVector> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        std::istringstream ss(line);
        std::string in, exp, extra;
        if (!(ss >> in)) continue;
        if (!(ss >> exp) || (ss >> extra))
            throw std::runtime_error("vector line " + std::to_string(lineno) + ": expected '<input> <expected>'");
        try {
            out.push_back({ref::from_hex(in), ref::from_hex(exp), lineno});
        } catch (const std::invalid_argument& e) {
            throw std::runtime_error("vector line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

std::vector<TestVector> load_vectors(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open " + path);
    return read_vectors(is);
}

}  // namespace hashcost
