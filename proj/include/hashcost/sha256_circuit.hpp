#pragma once

#include <array>
#include <span>
#include <vector>

#include "hashcost/circuit.hpp"

namespace hashcost {

using WireSpan = std::span<const WireId>;
using Word32 = std::array<WireId, 32>;  // bit 0 = least significant

enum class SigmaKind { Big0, Big1, Small0, Small1 };

// Component emitters append to an existing circuit. Operands are checked for
// pairwise disjointness and range.
void emit_sigma(Circuit& c, SigmaKind kind, WireSpan src, WireSpan dst);
// b += a (mod 2^n), a unchanged, anc 0 -> 0. CDKM ripple carry with MAJ/UMA cells.
void emit_adder(Circuit& c, WireSpan a, WireSpan b, WireId anc);
// anc ^= maj(a,b,c); leaves b = a^b until the inverse runs.
void emit_maj(Circuit& c, WireId a, WireId b, WireId x, WireId anc);
void emit_maj_inv(Circuit& c, WireId a, WireId b, WireId x, WireId anc);
// anc ^= ch(a,b,x) = ab ^ !a x; leaves x = b^x until the inverse runs.
void emit_ch(Circuit& c, WireId a, WireId b, WireId x, WireId anc);
void emit_ch_inv(Circuit& c, WireId a, WireId b, WireId x, WireId anc);

// Standalone versions; width is one past the largest operand unless given.
Circuit build_sigma(SigmaKind kind, WireSpan src, WireSpan dst, std::uint32_t width = 0);
Circuit build_adder(WireSpan a, WireSpan b, WireId anc, std::uint32_t width = 0);
Circuit build_maj(WireId a, WireId b, WireId x, WireId anc, std::uint32_t width = 0);
Circuit build_ch(WireId a, WireId b, WireId x, WireId anc, std::uint32_t width = 0);

struct Sha256Layout {
    Register w;                     // 64 words; words 0..15 hold the padded block
    std::array<Register, 8> state;  // physical registers, named after their round-0 roles A..H
    Register k;                     // round constant, updated by X gates between rounds
    Register t;                     // T2 accumulator
    Register s1, s2;                // Sigma/Ch and Maj scratch
    Register carry;                 // two adder carries
    std::uint32_t width = 0;
    Circuit shell;                  // registers only

    Word32 w_word(int j) const;
    Word32 word(const Register& r) const;
    // Physical state register holding logical word j (0 = A ... 7 = H) at the start of round r.
    const Register& role(int round, int j) const { return state[((j - round) % 8 + 8) % 8]; }
};

Sha256Layout make_sha256_layout();

void emit_round(Circuit& c, const Sha256Layout& l, int i);
void emit_stretch(Circuit& c, const Sha256Layout& l, int i);
// X gates turning K[i] into K[i+1].
void emit_k_update(Circuit& c, const Sha256Layout& l, int i);

Circuit build_round(int i, const Sha256Layout& l);
Circuit build_stretch(int i, const Sha256Layout& l);

struct Sha256Circuit {
    Circuit circuit;
    Sha256Layout layout;
};

// 48 stretch blocks, then 64 rounds with K updates in between.
Sha256Circuit build_sha256();

}  // namespace hashcost
