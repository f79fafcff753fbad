#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

// Plain software SHA-256 and Keccak, used as oracles for the circuits.
namespace hashcost::ref {

using Word = std::uint32_t;
using Sha256State = std::array<Word, 8>;
using Block = std::array<Word, 16>;

extern const std::array<Word, 64> kSha256K;
extern const Sha256State kSha256IV;

inline constexpr Word rotr(Word x, int n) { return (x >> n) | (x << (32 - n)); }
inline constexpr Word big_sigma0(Word x) { return rotr(x, 2) ^ rotr(x, 13) ^ rotr(x, 22); }
inline constexpr Word big_sigma1(Word x) { return rotr(x, 6) ^ rotr(x, 11) ^ rotr(x, 25); }
inline constexpr Word small_sigma0(Word x) { return rotr(x, 7) ^ rotr(x, 18) ^ (x >> 3); }
inline constexpr Word small_sigma1(Word x) { return rotr(x, 17) ^ rotr(x, 19) ^ (x >> 10); }

std::array<Word, 64> sha256_schedule(const Block& block);
// State after `rounds` rounds of compression, before the feed-forward addition.
Sha256State sha256_rounds(const Sha256State& in, const Block& block, int rounds = 64);
Sha256State sha256_compress(const Sha256State& in, const Block& block);
std::array<std::uint8_t, 32> sha256(std::span<const std::uint8_t> msg);
// FIPS 180-4 single-block padding of a 32-byte message.
Block sha256_pad_256(std::span<const std::uint8_t, 32> msg);
// Same for any message that fits in one block (at most 55 bytes).
Block sha256_pad_block(std::span<const std::uint8_t> msg);

// Keccak-f[1600]; lane (x,y) lives at index x + 5y.
using KeccakState = std::array<std::uint64_t, 25>;

extern const std::array<std::uint64_t, 24> kKeccakRC;
// Rotation offset of lane (x,y), index x + 5y.
extern const std::array<int, 25> kKeccakRho;

void keccak_theta(KeccakState& a);
void keccak_rho(KeccakState& a);
void keccak_pi(KeccakState& a);
void keccak_chi(KeccakState& a);
void keccak_iota(KeccakState& a, int round);
void keccak_round(KeccakState& a, int round);
void keccak_f1600(KeccakState& a, int rounds = 24);

KeccakState keccak_from_bytes(std::span<const std::uint8_t, 200> bytes);
std::array<std::uint8_t, 200> keccak_to_bytes(const KeccakState& a);

// SHA3-256 state after absorbing a 32-byte message (pad10*1, domain bits 01), before the permutation.
KeccakState sha3_256_absorb_256(std::span<const std::uint8_t, 32> msg);
std::array<std::uint8_t, 32> sha3_256(std::span<const std::uint8_t> msg);

std::string to_hex(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> from_hex(const std::string& hex);

}  // namespace hashcost::ref
