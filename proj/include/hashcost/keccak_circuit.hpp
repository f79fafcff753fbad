#pragma once

#include <array>
#include <vector>

#include "hashcost/circuit.hpp"
#include "hashcost/gf2.hpp"

namespace hashcost {

inline constexpr int kLaneBits = 64;
inline constexpr int kKeccakBits = 25 * kLaneBits;

// Bit (x,y,z) of a 1600-bit state, lanes in x + 5y order as in FIPS 202.
constexpr std::uint32_t keccak_index(int x, int y, int z) {
    return static_cast<std::uint32_t>(kLaneBits * (((x % 5) + 5) % 5 + 5 * (((y % 5) + 5) % 5)) +
                                      ((z % kLaneBits) + kLaneBits) % kLaneBits);
}

struct KeccakLayout {
    Register state;  // A; also receives chi's output each round
    Register anc;    // theta(A) lands here, then is read through the rho/pi relabelling
    Circuit shell;
    // Wire holding bit (x,y,z) of pi(rho(theta(A))) once theta has run into anc.
    std::vector<WireId> permuted;

    WireId a(int x, int y, int z) const { return state[keccak_index(x, y, z)]; }
    WireId a_anc(int x, int y, int z) const { return anc[keccak_index(x, y, z)]; }
    WireId b(int x, int y, int z) const { return permuted[keccak_index(x, y, z)]; }
    std::uint32_t width() const { return shell.width(); }
};

KeccakLayout make_keccak_layout();

// perm[i] = index that bit i of theta's output occupies after rho then pi.
std::vector<std::uint32_t> rho_pi_permutation();

// Row i of theta's matrix lists the state bits xored into output bit i.
Gf2Matrix theta_matrix();
const Gf2Matrix& theta_inverse_matrix();

void emit_theta(Circuit& c, const KeccakLayout& l);
void emit_theta_inv(Circuit& c, const KeccakLayout& l);
void emit_chi(Circuit& c, const KeccakLayout& l);
void emit_chi_inv(Circuit& c, const KeccakLayout& l);
void emit_iota(Circuit& c, const KeccakLayout& l, int round);
void emit_keccak_round(Circuit& c, const KeccakLayout& l, int round);

Circuit build_theta(const KeccakLayout& l);
Circuit build_theta_inv(const KeccakLayout& l);
Circuit build_chi(const KeccakLayout& l);
Circuit build_chi_inv(const KeccakLayout& l);
Circuit build_iota(int round, const KeccakLayout& l);

struct KeccakCircuit {
    Circuit circuit;
    KeccakLayout layout;
    std::vector<std::size_t> round_end;  // gate index one past each round
};

// Rounds 24-rounds .. 23 of Keccak-p[1600].
KeccakCircuit build_keccak_p(int rounds = 24);

}  // namespace hashcost
