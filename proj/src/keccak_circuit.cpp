#include "hashcost/keccak_circuit.hpp"

#include <stdexcept>

#include "hashcost/reference.hpp"

namespace hashcost {

KeccakLayout make_keccak_layout() {
    KeccakLayout l;
    l.state = l.shell.add_register("A", kKeccakBits);
    l.anc = l.shell.add_register("anc", kKeccakBits);
    auto perm = rho_pi_permutation();
    l.permuted.resize(kKeccakBits);
    for (std::uint32_t i = 0; i < kKeccakBits; ++i) l.permuted[perm[i]] = l.anc[i];
    return l;
}

std::vector<std::uint32_t> rho_pi_permutation() {
    std::vector<std::uint32_t> perm(kKeccakBits);
    for (int x = 0; x < 5; ++x)
        for (int y = 0; y < 5; ++y) {
            const int r = ref::kKeccakRho[x + 5 * y];
            for (int z = 0; z < kLaneBits; ++z) perm[keccak_index(x, y, z)] = keccak_index(y, 2 * x + 3 * y, z + r);
        }
    return perm;
}

namespace {

struct Term {
    int x, y, dz;  // source lane and z offset
};

// The eleven sources of output lane (x,y). Lanes are emitted one after another
// (x major, y minor), 64 bit slices side by side; each lane opens with the
// source column the previous lane closed with, so the lanes chain into
// 25 x 11 = 275 CNOT layers.
std::array<Term, 11> theta_terms(int x, int y) {
    Term first = y == 0 ? Term{x, 0, 0} : Term{x + 1, y - 1, -1};
    Term last = y < 4 ? Term{x + 1, y, -1} : Term{x + 1, 0, -1};
    auto same = [](Term a, Term b) { return (a.x - b.x) % 5 == 0 && a.y == b.y && a.dz == b.dz; };
    std::vector<Term> all{{x, y, 0}};
    for (int yy = 0; yy < 5; ++yy) all.push_back({x - 1, yy, 0});
    for (int yy = 0; yy < 5; ++yy) all.push_back({x + 1, yy, -1});
    std::array<Term, 11> out{};
    int k = 0;
    out[k++] = first;
    for (auto t : all)
        if (!same(t, first) && !same(t, last)) out[k++] = t;
    out[k++] = last;
    return out;
}

}  // namespace

Gf2Matrix theta_matrix() {
    Gf2Matrix m(kKeccakBits);
    for (int x = 0; x < 5; ++x)
        for (int y = 0; y < 5; ++y)
            for (int z = 0; z < kLaneBits; ++z)
                for (auto t : theta_terms(x, y)) m.flip(keccak_index(x, y, z), keccak_index(t.x, t.y, z + t.dz));
    return m;
}

const Gf2Matrix& theta_inverse_matrix() {
    static const Gf2Matrix inv = [] {
        auto r = theta_matrix().inverse();
        if (!r) throw std::logic_error("theta matrix is singular");
        return *r;
    }();
    return inv;
}

void emit_theta(Circuit& c, const KeccakLayout& l) {
    for (int x = 0; x < 5; ++x)
        for (int y = 0; y < 5; ++y)
            for (auto t : theta_terms(x, y))
                for (int z = 0; z < kLaneBits; ++z) c.cnot(l.a(t.x, t.y, z + t.dz), l.a_anc(x, y, z));
}

void emit_theta_inv(Circuit& c, const KeccakLayout& l) {
    const auto& inv = theta_inverse_matrix();
    for (std::uint32_t i = 0; i < kKeccakBits; ++i)
        for (std::uint32_t j = 0; j < kKeccakBits; ++j)
            if (inv.get(i, j)) c.cnot(l.anc[j], l.state[i]);
}

void emit_chi(Circuit& c, const KeccakLayout& l) {
    for (int y = 0; y < 5; ++y)
        for (int z = 0; z < kLaneBits; ++z)
            for (int x = 0; x < 5; ++x) {
                const WireId t = l.a(x, y, z);
                c.cnot(l.b(x, y, z), t);
                c.cnot(l.b(x + 2, y, z), t);
                c.toffoli(l.b(x + 1, y, z), l.b(x + 2, y, z), t);
            }
}

// Clears the stale row b using c = chi(b) held in the state register.
// u0 = c0 ^ !c1 c2 stands in for b0 part way through; b0 ^ u0 = !c1 (b2 ^ c2).
void emit_chi_inv(Circuit& c, const KeccakLayout& l) {
    for (int y = 0; y < 5; ++y)
        for (int z = 0; z < kLaneBits; ++z) {
            WireId s[5], t[5];
            for (int x = 0; x < 5; ++x) {
                s[x] = l.b(x, y, z);
                t[x] = l.a(x, y, z);
            }
            c.cnot(t[2], s[2]);  // s2 = b2 ^ c2 = !b3 b4
            c.cnot(s[2], s[0]);
            c.toffoli(t[1], s[2], s[0]);  // s0 = u0
            c.cnot(s[4], s[2]);
            c.toffoli(s[3], s[4], s[2]);  // s2 = 0
            c.cnot(t[4], s[4]);
            c.cnot(s[1], s[4]);
            c.toffoli(s[0], s[1], s[4]);  // s4 = 0
            c.cnot(t[1], s[1]);
            c.cnot(s[3], s[1]);
            c.toffoli(t[2], s[3], s[1]);  // s1 = 0
            c.cnot(t[3], s[3]);
            c.cnot(s[0], s[3]);
            c.toffoli(t[4], s[0], s[3]);  // s3 = 0
            c.cnot(t[0], s[0]);
            c.cnot(t[2], s[0]);
            c.toffoli(t[1], t[2], s[0]);  // s0 = 0
        }
}

void emit_iota(Circuit& c, const KeccakLayout& l, int round) {
    const std::uint64_t rc = ref::kKeccakRC.at(round);
    for (int z = 0; z < kLaneBits; ++z)
        if ((rc >> z) & 1) c.x(l.a(0, 0, z));
}

void emit_keccak_round(Circuit& c, const KeccakLayout& l, int round) {
    emit_theta(c, l);
    emit_theta_inv(c, l);
    emit_chi(c, l);
    emit_chi_inv(c, l);
    emit_iota(c, l, round);
}

namespace {
template <class F>
Circuit standalone(const KeccakLayout& l, F&& f) {
    Circuit c = l.shell.shell();
    f(c);
    return c;
}
}  // namespace

Circuit build_theta(const KeccakLayout& l) { return standalone(l, [&](Circuit& c) { emit_theta(c, l); }); }
Circuit build_theta_inv(const KeccakLayout& l) { return standalone(l, [&](Circuit& c) { emit_theta_inv(c, l); }); }
Circuit build_chi(const KeccakLayout& l) { return standalone(l, [&](Circuit& c) { emit_chi(c, l); }); }
Circuit build_chi_inv(const KeccakLayout& l) { return standalone(l, [&](Circuit& c) { emit_chi_inv(c, l); }); }
Circuit build_iota(int round, const KeccakLayout& l) {
    return standalone(l, [&](Circuit& c) { emit_iota(c, l, round); });
}

KeccakCircuit build_keccak_p(int rounds) {
    if (rounds < 1 || rounds > 24) throw StructuralError("Keccak-p rounds must be in 1..24");
    KeccakCircuit out{Circuit(), make_keccak_layout(), {}};
    out.circuit = out.layout.shell.shell();
    const std::size_t per_round = 17600 + theta_inverse_matrix().popcount() + 25 * kLaneBits * 5 * 2 + 64;
    out.circuit.reserve(per_round * rounds);
    for (int r = 24 - rounds; r < 24; ++r) {
        emit_keccak_round(out.circuit, out.layout, r);
        out.round_end.push_back(out.circuit.size());
    }
    return out;
}

}  // namespace hashcost
