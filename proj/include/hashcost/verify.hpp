#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "hashcost/keccak_circuit.hpp"
#include "hashcost/reference.hpp"
#include "hashcost/sha256_circuit.hpp"
#include "hashcost/sim.hpp"

// Harnesses that prepare inputs, run the hash circuits and compare against the
// software references.
namespace hashcost {

// Any single-block message, at most 55 bytes.
using Message = std::vector<std::uint8_t>;
using Digest256 = std::array<std::uint8_t, 32>;

// Padded block in W[0..15], IV in A..H, K[0] in the constants register, rest zero.
BitState sha256_initial_state(const Sha256Layout& l, std::span<const std::uint8_t> msg);
// Logical words A..H held at the start of round `round` (64 = after the last round).
ref::Sha256State sha256_read_state(const Sha256Layout& l, const BitState& s, int round = 64);
// The feed-forward addition of the IV is a classical constant and is applied here.
Digest256 sha256_digest_from_state(const ref::Sha256State& s);

struct Sha256Verdict {
    bool match = false;
    int first_diff_word = -1;  // -1 when the digests agree
    bool ancillas_clean = false;
    Digest256 digest{}, expected{};
    bool ok() const { return match && ancillas_clean; }
};

std::vector<Sha256Verdict> verify_sha256(const Sha256Circuit& sc, const std::vector<Message>& msgs);

BitState keccak_initial_state(const KeccakLayout& l, const ref::KeccakState& a);
ref::KeccakState keccak_read_state(const KeccakLayout& l, const BitState& s);

struct KeccakVerdict {
    bool match = false;
    bool ancilla_clean = false;
    int first_bad_round = -1;  // first round whose output or ancilla was wrong
    std::vector<std::pair<int, int>> diff_lanes;  // (x, y)
    ref::KeccakState output{}, expected{};
    bool ok() const { return match && ancilla_clean; }
};

// Checks every round boundary: state against the reference round function, ancilla all zero.
std::vector<KeccakVerdict> verify_keccak_p(const KeccakCircuit& kc, const std::vector<ref::KeccakState>& states);

// Test-vector files: "<input hex> <expected hex>" per line, '#' starts a comment.
struct TestVector {
    std::vector<std::uint8_t> input, expected;
    std::size_t line = 0;
};
std::vector<TestVector> read_vectors(std::istream& is);
std::vector<TestVector> load_vectors(const std::string& path);

}  // namespace hashcost
