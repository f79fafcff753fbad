#include <gtest/gtest.h>

#include <openssl/sha.h>

#include <bit>
#include <random>

#include "hashcost/lowering.hpp"
#include "hashcost/reference.hpp"
#include "hashcost/sha256_circuit.hpp"
#include "hashcost/sim.hpp"
#include "hashcost/verify.hpp"

using namespace hashcost;

namespace {

std::uint32_t rotr(std::uint32_t x, int n) { return (x >> n) | (x << (32 - n)); }

std::vector<WireId> range(WireId from, WireId n) {
    std::vector<WireId> w(n);
    for (WireId i = 0; i < n; ++i) w[i] = from + i;
    return w;
}

std::array<std::uint8_t, 32> openssl_sha256(std::span<const std::uint8_t> m) {
    std::array<std::uint8_t, 32> d{};
    SHA256(m.data(), m.size(), d.data());
    return d;
}

std::vector<std::uint8_t> bytes_of(const std::string& s) { return {s.begin(), s.end()}; }

// One Sha256Circuit for the whole binary; building it costs a few hundred ms.
const Sha256Circuit& full() {
    static const Sha256Circuit sc = build_sha256();
    return sc;
}

}  // namespace

TEST(Sha256Reference, MatchesOpenSsl) {
    std::mt19937_64 rng(1);
    for (std::size_t len : {0, 1, 3, 55, 56, 63, 64, 65, 200}) {
        std::vector<std::uint8_t> m(len);
        for (auto& b : m) b = static_cast<std::uint8_t>(rng());
        EXPECT_EQ(ref::sha256(m), openssl_sha256(m)) << len;
    }
    EXPECT_EQ(ref::to_hex(ref::sha256(bytes_of("abc"))),
              "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(Sha256Reference, SingleBlockPadding) {
    const auto b = ref::sha256_pad_block(bytes_of("abc"));
    EXPECT_EQ(b[0], 0x61626380u);
    EXPECT_EQ(b[15], 24u);
    std::array<std::uint8_t, 32> m{};
    m[0] = 0xab;
    EXPECT_EQ(ref::sha256_pad_block(m), ref::sha256_pad_256(m));
    EXPECT_THROW(ref::sha256_pad_block(std::vector<std::uint8_t>(56)), std::invalid_argument);
}

TEST(Sigma, Big0OfOne) {
    Circuit c(64);
    const auto src = range(0, 32), dst = range(32, 32);
    emit_sigma(c, SigmaKind::Big0, src, dst);
    BitState s(64);
    s.write(src, 1);
    s = run(c, s);
    EXPECT_EQ(s.read(dst), rotr(1, 2) ^ rotr(1, 13) ^ rotr(1, 22));
}

TEST(Sigma, AllKindsMatchWordOracle) {
    const auto src = range(0, 32), dst = range(32, 32);
    const std::pair<SigmaKind, std::uint32_t (*)(std::uint32_t)> kinds[] = {
        {SigmaKind::Big0, [](std::uint32_t x) { return rotr(x, 2) ^ rotr(x, 13) ^ rotr(x, 22); }},
        {SigmaKind::Big1, [](std::uint32_t x) { return rotr(x, 6) ^ rotr(x, 11) ^ rotr(x, 25); }},
        {SigmaKind::Small0, [](std::uint32_t x) { return rotr(x, 7) ^ rotr(x, 18) ^ (x >> 3); }},
        {SigmaKind::Small1, [](std::uint32_t x) { return rotr(x, 17) ^ rotr(x, 19) ^ (x >> 10); }},
    };
    std::mt19937 rng(9);
    for (const auto& [kind, f] : kinds) {
        const auto c = build_sigma(kind, src, dst);
        EXPECT_TRUE(is_classical(c.gates()[0].kind()));
        EXPECT_EQ(count_resources(c).gate_count(), count_resources(c).cnot_count());
        for (int i = 0; i < 50; ++i) {
            const std::uint32_t x = rng(), y = rng();
            BitState s(64);
            s.write(src, x);
            s.write(dst, y);
            s = run(c, s);
            EXPECT_EQ(s.read(src), x);
            EXPECT_EQ(s.read(dst), y ^ f(x));
        }
        BitState zero(64);
        zero.write(dst, 0x1234u);
        EXPECT_EQ(run(c, zero).read(dst), 0x1234u);
    }
    // rotation-only kinds are exactly 3 CNOTs per output bit
    EXPECT_EQ(build_sigma(SigmaKind::Big0, src, dst).size(), 96u);
    EXPECT_EQ(build_sigma(SigmaKind::Big1, src, dst).size(), 96u);
}

TEST(Sigma, OverlappingRegistersRejected) {
    EXPECT_THROW(build_sigma(SigmaKind::Big0, range(0, 32), range(16, 32)), StructuralError);
}

TEST(Adder, MatchesModularAddition) {
    const auto a = range(0, 32), b = range(32, 32);
    const WireId anc = 64;
    const auto c = build_adder(a, b, anc);
    auto add = [&](std::uint32_t x, std::uint32_t y) {
        BitState s(65);
        s.write(a, x);
        s.write(b, y);
        s = run(c, s);
        EXPECT_EQ(s.read(a), x);
        EXPECT_FALSE(s.get(anc));
        return static_cast<std::uint32_t>(s.read(b));
    };
    EXPECT_EQ(add(0, 0xabcdef01u), 0xabcdef01u);
    EXPECT_EQ(add(0xffffffffu, 1), 0u);
    EXPECT_EQ(add(3, 5), 8u);
    std::mt19937 rng(17);
    for (int i = 0; i < 1000; ++i) {
        const std::uint32_t x = rng(), y = rng();
        ASSERT_EQ(add(x, y), x + y);
    }
}

TEST(Adder, GateCounts) {
    const auto rc = count_resources(build_adder(range(0, 32), range(32, 32), 64));
    EXPECT_EQ(rc.toffoli_count(), 62u);
    EXPECT_EQ(rc.cnot_count(), 126u);
}

TEST(Adder, SmallWidthsAgainstExhaustiveOracle) {
    for (WireId n = 1; n <= 5; ++n) {
        const auto a = range(0, n), b = range(n, n);
        const auto c = build_adder(a, b, 2 * n);
        for (std::uint32_t x = 0; x < (1u << n); ++x)
            for (std::uint32_t y = 0; y < (1u << n); ++y) {
                BitState s(2 * n + 1);
                s.write(a, x);
                s.write(b, y);
                s = run(c, s);
                ASSERT_EQ(s.read(b), (x + y) & ((1u << n) - 1)) << n;
                ASSERT_FALSE(s.get(2 * n));
            }
    }
}

TEST(Maj, TruthTableAndRestore) {
    const auto c = build_maj(0, 1, 2, 3);
    EXPECT_EQ(count_resources(c).toffoli_count(), 2u);
    EXPECT_EQ(count_resources(c).cnot_count(), 1u);
    Circuit round_trip = c;
    emit_maj_inv(round_trip, 0, 1, 2, 3);
    for (int v = 0; v < 8; ++v) {
        const bool a = v & 1, b = v & 2, x = v & 4;
        BitState s(4);
        s.set(0, a);
        s.set(1, b);
        s.set(2, x);
        const auto out = run(c, s);
        EXPECT_EQ(out.get(3), (a + b + x) >= 2) << v;
        const auto back = run(round_trip, s);
        EXPECT_EQ(back, s);
    }
    // the worked example: (1,1,0,0) -> ancilla 1
    BitState s(4);
    s.set(0, true);
    s.set(1, true);
    EXPECT_TRUE(run(c, s).get(3));
}

TEST(Ch, TruthTableAndRestore) {
    const auto c = build_ch(0, 1, 2, 3);
    EXPECT_EQ(count_resources(c).toffoli_count(), 1u);
    EXPECT_EQ(count_resources(c).cnot_count(), 2u);
    Circuit round_trip = c;
    emit_ch_inv(round_trip, 0, 1, 2, 3);
    for (int v = 0; v < 8; ++v) {
        const bool a = v & 1, b = v & 2, x = v & 4;
        BitState s(4);
        s.set(0, a);
        s.set(1, b);
        s.set(2, x);
        EXPECT_EQ(run(c, s).get(3), a ? b : x) << v;
        EXPECT_EQ(run(round_trip, s), s);
    }
}

TEST(Sha256Layout, RegistersDisjointAndWidth) {
    const auto l = make_sha256_layout();
    EXPECT_NO_THROW(l.shell.validate());
    EXPECT_EQ(l.w.size, 64u * 32u);
    EXPECT_EQ(l.width, l.shell.width());
    // within 10% of the quoted 2402 logical qubits
    EXPECT_NEAR(static_cast<double>(l.width), 2402.0, 240.2);
    EXPECT_EQ(&l.role(8, 3), &l.role(0, 3));
    EXPECT_EQ(&l.role(1, 1), &l.role(0, 0));  // A becomes B
}

TEST(Sha256Round, OneRoundOnAbcMatchesReference) {
    const auto l = make_sha256_layout();
    const auto msg = bytes_of("abc");
    auto s = run(build_round(0, l), sha256_initial_state(l, msg));
    const auto block = ref::sha256_pad_block(msg);
    EXPECT_EQ(sha256_read_state(l, s, 1), ref::sha256_rounds(ref::kSha256IV, block, 1));
    EXPECT_TRUE(s.all_zero(l.t));
    EXPECT_TRUE(s.all_zero(l.s1));
    EXPECT_TRUE(s.all_zero(l.s2));
    EXPECT_TRUE(s.all_zero(l.carry));
}

TEST(Sha256Round, LoweredTCountMatchesStructure) {
    const auto l = make_sha256_layout();
    const auto rc = count_resources(lower(build_round(0, l)));
    // 8 adders (K[i] addition and the T clear included), Maj (2 Toffolis) computed
    // and uncomputed twice, Ch (1 Toffoli) computed and uncomputed once
    EXPECT_EQ(rc.t_count(), 7u * (8 * 62 + 4 * 2 * 32 + 2 * 32));
    const double dev = (static_cast<double>(rc.t_count()) - 5278.0) / 5278.0;
    RecordProperty("round_t_deviation", std::to_string(dev));
    // every round has the same cost
    EXPECT_EQ(count_resources(build_round(17, l)), count_resources(build_round(0, l)));
}

TEST(Sha256Stretch, Word16MatchesSchedule) {
    const auto l = make_sha256_layout();
    std::mt19937 rng(4);
    std::array<std::uint8_t, 32> m;
    for (auto& b : m) b = static_cast<std::uint8_t>(rng());
    auto s = run(build_stretch(16, l), sha256_initial_state(l, m));
    // independent schedule oracle
    const auto block = ref::sha256_pad_256(m);
    const std::uint32_t w1 = block[1], w14 = block[14];
    const std::uint32_t s0 = rotr(w1, 7) ^ rotr(w1, 18) ^ (w1 >> 3);
    const std::uint32_t s1 = rotr(w14, 17) ^ rotr(w14, 19) ^ (w14 >> 10);
    EXPECT_EQ(s.read(l.w, 32 * 16, 32), block[0] + s0 + block[9] + s1);
    EXPECT_TRUE(s.all_zero(l.s1));
    EXPECT_TRUE(s.all_zero(l.carry));
    EXPECT_EQ(count_resources(build_stretch(16, l)).toffoli_count(), 3u * 62u);
}

TEST(Sha256Full, AggregateIsSumOfBlocks) {
    const auto& sc = full();
    const auto& l = sc.layout;
    const auto total = count_resources(sc.circuit);
    const auto round = count_resources(build_round(0, l)), stretch = count_resources(build_stretch(16, l));
    for (auto k : {GateKind::Toffoli, GateKind::CNOT, GateKind::H})
        EXPECT_EQ(total.count(k), 64 * round.count(k) + 48 * stretch.count(k));
    // the only X gates are the constant-register updates
    std::uint64_t k_updates = 0;
    for (int i = 0; i < 63; ++i) k_updates += std::popcount(ref::kSha256K[i] ^ ref::kSha256K[i + 1]);
    EXPECT_EQ(total.count(GateKind::X), k_updates);
    EXPECT_EQ(total.width, l.width);
}

TEST(Sha256Full, AbcAndZeroMessage) {
    const std::vector<Message> msgs = {bytes_of("abc"), Message(32, 0), Message{}, bytes_of(std::string(55, 'x'))};
    const auto v = verify_sha256(full(), msgs);
    for (std::size_t i = 0; i < msgs.size(); ++i) {
        EXPECT_TRUE(v[i].ok()) << i;
        EXPECT_EQ(v[i].digest, openssl_sha256(msgs[i])) << i;
    }
}

TEST(Sha256Full, RandomMessagesAgainstOpenSsl) {
    std::mt19937_64 rng(99);
    std::vector<Message> msgs(20, Message(32));
    for (auto& m : msgs)
        for (auto& b : m) b = static_cast<std::uint8_t>(rng());
    const auto v = verify_sha256(full(), msgs);
    for (std::size_t i = 0; i < msgs.size(); ++i) {
        EXPECT_TRUE(v[i].ancillas_clean);
        EXPECT_EQ(v[i].digest, openssl_sha256(msgs[i]));
    }
}

TEST(Sha256Full, CorruptedExpectationReportsWord) {
    // flip one wire inside the circuit's output path: harness must point at a word
    auto sc = full();
    sc.circuit.x(sc.layout.role(64, 2)[5]);
    const auto v = verify_sha256(sc, {bytes_of("abc")});
    EXPECT_FALSE(v[0].match);
    EXPECT_EQ(v[0].first_diff_word, 2);
}
