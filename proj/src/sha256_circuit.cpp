#include "hashcost/sha256_circuit.hpp"

#include <algorithm>
#include <initializer_list>
#include <string>

#include "hashcost/reference.hpp"

namespace hashcost {

namespace {

void require_disjoint(std::initializer_list<WireSpan> groups, const char* what) {
    std::vector<WireId> all;
    for (auto g : groups) all.insert(all.end(), g.begin(), g.end());
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
        throw StructuralError(std::string(what) + ": operand registers overlap");
}

std::uint32_t width_for(std::initializer_list<WireSpan> groups, std::uint32_t width) {
    if (width) return width;
    WireId m = 0;
    for (auto g : groups)
        for (WireId w : g) m = std::max(m, w + 1);
    return m;
}

struct SigmaSpec {
    int r1, r2, r3;
    bool shift3;  // third term is a shift rather than a rotation
};

SigmaSpec spec(SigmaKind k) {
    switch (k) {
        case SigmaKind::Big0: return {2, 13, 22, false};
        case SigmaKind::Big1: return {6, 11, 25, false};
        case SigmaKind::Small0: return {7, 18, 3, true};
        case SigmaKind::Small1: return {17, 19, 10, true};
    }
    return {};
}

}  // namespace

void emit_sigma(Circuit& c, SigmaKind kind, WireSpan src, WireSpan dst) {
    if (src.size() != 32 || dst.size() != 32) throw StructuralError("sigma: registers must be 32 wires");
    require_disjoint({src, dst}, "sigma");
    const auto s = spec(kind);
    for (int i = 0; i < 32; ++i) {
        c.cnot(src[(i + s.r1) % 32], dst[i]);
        c.cnot(src[(i + s.r2) % 32], dst[i]);
        if (!s.shift3) c.cnot(src[(i + s.r3) % 32], dst[i]);
        else if (i + s.r3 < 32) c.cnot(src[i + s.r3], dst[i]);
    }
}

void emit_adder(Circuit& c, WireSpan a, WireSpan b, WireId anc) {
    const size_t n = a.size();
    if (n == 0 || b.size() != n) throw StructuralError("adder: register sizes differ or are empty");
    WireId ancs[1] = {anc};
    require_disjoint({a, b, WireSpan(ancs)}, "adder");
    if (n == 1) {
        c.cnot(a[0], b[0]);
        return;
    }
    // MAJ(x, y, z): carry lands on z
    auto maj = [&](WireId x, WireId y, WireId z) {
        c.cnot(z, y);
        c.cnot(z, x);
        c.toffoli(x, y, z);
    };
    auto uma = [&](WireId x, WireId y, WireId z) {
        c.toffoli(x, y, z);
        c.cnot(z, x);
        c.cnot(x, y);
    };
    maj(anc, b[0], a[0]);
    for (size_t i = 1; i + 1 < n; ++i) maj(a[i - 1], b[i], a[i]);
    // top bit needs no carry out
    c.cnot(a[n - 1], b[n - 1]);
    c.cnot(a[n - 2], b[n - 1]);
    for (size_t i = n - 2; i >= 1; --i) uma(a[i - 1], b[i], a[i]);
    uma(anc, b[0], a[0]);
}

void emit_maj(Circuit& c, WireId a, WireId b, WireId x, WireId anc) {
    c.toffoli(a, b, anc);
    c.cnot(a, b);
    c.toffoli(b, x, anc);
}

void emit_maj_inv(Circuit& c, WireId a, WireId b, WireId x, WireId anc) {
    c.toffoli(b, x, anc);
    c.cnot(a, b);
    c.toffoli(a, b, anc);
}

void emit_ch(Circuit& c, WireId a, WireId b, WireId x, WireId anc) {
    c.cnot(x, anc);
    c.cnot(b, x);
    c.toffoli(a, x, anc);
}

void emit_ch_inv(Circuit& c, WireId a, WireId b, WireId x, WireId anc) {
    c.toffoli(a, x, anc);
    c.cnot(b, x);
    c.cnot(x, anc);
}

Circuit build_sigma(SigmaKind kind, WireSpan src, WireSpan dst, std::uint32_t width) {
    Circuit c(width_for({src, dst}, width));
    emit_sigma(c, kind, src, dst);
    return c;
}

Circuit build_adder(WireSpan a, WireSpan b, WireId anc, std::uint32_t width) {
    WireId ancs[1] = {anc};
    Circuit c(width_for({a, b, WireSpan(ancs)}, width));
    emit_adder(c, a, b, anc);
    return c;
}

Circuit build_maj(WireId a, WireId b, WireId x, WireId anc, std::uint32_t width) {
    WireId w[4] = {a, b, x, anc};
    Circuit c(width_for({WireSpan(w)}, width));
    emit_maj(c, a, b, x, anc);
    return c;
}

Circuit build_ch(WireId a, WireId b, WireId x, WireId anc, std::uint32_t width) {
    WireId w[4] = {a, b, x, anc};
    Circuit c(width_for({WireSpan(w)}, width));
    emit_ch(c, a, b, x, anc);
    return c;
}

Word32 Sha256Layout::w_word(int j) const {
    if (j < 0 || j >= 64) throw StructuralError("message word index out of range");
    Word32 out;
    for (int i = 0; i < 32; ++i) out[i] = w[32 * j + i];
    return out;
}

Word32 Sha256Layout::word(const Register& r) const {
    Word32 out;
    for (int i = 0; i < 32; ++i) out[i] = r[i];
    return out;
}

Sha256Layout make_sha256_layout() {
    Sha256Layout l;
    Circuit& c = l.shell;
    l.w = c.add_register("W", 64 * 32);
    const char* names[8] = {"A", "B", "C", "D", "E", "F", "G", "H"};
    for (int j = 0; j < 8; ++j) l.state[j] = c.add_register(names[j], 32);
    l.k = c.add_register("K", 32);
    l.t = c.add_register("T", 32);
    l.s1 = c.add_register("S1", 32);
    l.s2 = c.add_register("S2", 32);
    l.carry = c.add_register("carry", 2);
    l.width = c.width();
    return l;
}

void emit_round(Circuit& c, const Sha256Layout& l, int i) {
    if (i < 0 || i >= 64) throw StructuralError("round index out of range");
    const Word32 A = l.word(l.role(i, 0)), B = l.word(l.role(i, 1)), C = l.word(l.role(i, 2)),
                 D = l.word(l.role(i, 3)), E = l.word(l.role(i, 4)), F = l.word(l.role(i, 5)),
                 G = l.word(l.role(i, 6)), H = l.word(l.role(i, 7));
    const Word32 T = l.word(l.t), S1 = l.word(l.s1), S2 = l.word(l.s2), K = l.word(l.k);
    const Word32 Wi = l.w_word(i);
    const WireId c0 = l.carry[0], c1 = l.carry[1];

    auto maj = [&] {
        for (int b = 0; b < 32; ++b) emit_maj(c, A[b], B[b], C[b], S2[b]);
    };
    auto maj_inv = [&] {
        for (int b = 0; b < 32; ++b) emit_maj_inv(c, A[b], B[b], C[b], S2[b]);
    };

    // T = Sigma0(A) + Maj(A,B,C)
    emit_sigma(c, SigmaKind::Big0, A, T);
    maj();
    emit_adder(c, S2, T, c0);
    maj_inv();

    // H = H + Sigma1(E) + Ch(E,F,G) + K[i] + W[i]  (this is T1)
    emit_sigma(c, SigmaKind::Big1, E, S1);
    emit_adder(c, S1, H, c1);
    emit_sigma(c, SigmaKind::Big1, E, S1);
    for (int b = 0; b < 32; ++b) emit_ch(c, E[b], F[b], G[b], S1[b]);
    emit_adder(c, S1, H, c1);
    for (int b = 0; b < 32; ++b) emit_ch_inv(c, E[b], F[b], G[b], S1[b]);
    emit_adder(c, K, H, c1);
    emit_adder(c, Wi, H, c1);

    // new E = D + T1, new A = T1 + T2; both land in place
    emit_adder(c, H, D, c0);
    emit_adder(c, T, H, c1);

    // clear T: subtract Maj (recomputed from the untouched A,B,C), then xor out Sigma0
    maj();
    Circuit sub(c.width());
    emit_adder(sub, S2, T, c0);
    c.append_inverse(sub);
    maj_inv();
    emit_sigma(c, SigmaKind::Big0, A, T);
}

void emit_stretch(Circuit& c, const Sha256Layout& l, int i) {
    if (i < 16 || i >= 64) throw StructuralError("stretch index out of range");
    const Word32 Wi = l.w_word(i), S1 = l.word(l.s1);
    const Word32 W16 = l.w_word(i - 16), W15 = l.w_word(i - 15), W7 = l.w_word(i - 7), W2 = l.w_word(i - 2);
    const WireId c1 = l.carry[1];
    for (int b = 0; b < 32; ++b) c.cnot(W16[b], Wi[b]);
    emit_sigma(c, SigmaKind::Small0, W15, S1);
    emit_adder(c, S1, Wi, c1);
    emit_sigma(c, SigmaKind::Small0, W15, S1);
    emit_adder(c, W7, Wi, c1);
    emit_sigma(c, SigmaKind::Small1, W2, S1);
    emit_adder(c, S1, Wi, c1);
    emit_sigma(c, SigmaKind::Small1, W2, S1);
}

void emit_k_update(Circuit& c, const Sha256Layout& l, int i) {
    if (i < 0 || i >= 63) throw StructuralError("K update index out of range");
    const std::uint32_t diff = ref::kSha256K[i] ^ ref::kSha256K[i + 1];
    for (int b = 0; b < 32; ++b)
        if ((diff >> b) & 1) c.x(l.k[b]);
}

Circuit build_round(int i, const Sha256Layout& l) {
    Circuit c = l.shell.shell();
    emit_round(c, l, i);
    return c;
}

Circuit build_stretch(int i, const Sha256Layout& l) {
    Circuit c = l.shell.shell();
    emit_stretch(c, l, i);
    return c;
}

Sha256Circuit build_sha256() {
    Sha256Circuit out{Circuit(), make_sha256_layout()};
    Circuit& c = out.circuit;
    c = out.layout.shell.shell();
    for (int i = 16; i < 64; ++i) emit_stretch(c, out.layout, i);
    for (int i = 0; i < 64; ++i) {
        emit_round(c, out.layout, i);
        if (i < 63) emit_k_update(c, out.layout, i);
    }
    return out;
}

}  // namespace hashcost
