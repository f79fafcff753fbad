#include "hashcost/reference.hpp"

#include <algorithm>
#include <stdexcept>

namespace hashcost::ref {

const std::array<Word, 64> kSha256K = {
    0x428a2f98, 0x71374491, 0xb5c0fbcf, 0xe9b5dba5, 0x3956c25b, 0x59f111f1, 0x923f82a4, 0xab1c5ed5,
    0xd807aa98, 0x12835b01, 0x243185be, 0x550c7dc3, 0x72be5d74, 0x80deb1fe, 0x9bdc06a7, 0xc19bf174,
    0xe49b69c1, 0xefbe4786, 0x0fc19dc6, 0x240ca1cc, 0x2de92c6f, 0x4a7484aa, 0x5cb0a9dc, 0x76f988da,
    0x983e5152, 0xa831c66d, 0xb00327c8, 0xbf597fc7, 0xc6e00bf3, 0xd5a79147, 0x06ca6351, 0x14292967,
    0x27b70a85, 0x2e1b2138, 0x4d2c6dfc, 0x53380d13, 0x650a7354, 0x766a0abb, 0x81c2c92e, 0x92722c85,
    0xa2bfe8a1, 0xa81a664b, 0xc24b8b70, 0xc76c51a3, 0xd192e819, 0xd6990624, 0xf40e3585, 0x106aa070,
    0x19a4c116, 0x1e376c08, 0x2748774c, 0x34b0bcb5, 0x391c0cb3, 0x4ed8aa4a, 0x5b9cca4f, 0x682e6ff3,
    0x748f82ee, 0x78a5636f, 0x84c87814, 0x8cc70208, 0x90befffa, 0xa4506ceb, 0xbef9a3f7, 0xc67178f2,
};

const Sha256State kSha256IV = {0x6a09e667, 0xbb67ae85, 0x3c6ef372, 0xa54ff53a,
                               0x510e527f, 0x9b05688c, 0x1f83d9ab, 0x5be0cd19};

std::array<Word, 64> sha256_schedule(const Block& block) {
    std::array<Word, 64> w{};
    for (int i = 0; i < 16; ++i) w[i] = block[i];
    for (int i = 16; i < 64; ++i) w[i] = small_sigma1(w[i - 2]) + w[i - 7] + small_sigma0(w[i - 15]) + w[i - 16];
    return w;
}

Sha256State sha256_rounds(const Sha256State& in, const Block& block, int rounds) {
    auto w = sha256_schedule(block);
    auto [a, b, c, d, e, f, g, h] = in;
    for (int i = 0; i < rounds; ++i) {
        Word ch = (e & f) ^ (~e & g);
        Word maj = (a & b) ^ (a & c) ^ (b & c);
        Word t1 = h + big_sigma1(e) + ch + kSha256K[i] + w[i];
        Word t2 = big_sigma0(a) + maj;
        h = g;
        g = f;
        f = e;
        e = d + t1;
        d = c;
        c = b;
        b = a;
        a = t1 + t2;
    }
    return {a, b, c, d, e, f, g, h};
}

Sha256State sha256_compress(const Sha256State& in, const Block& block) {
    auto s = sha256_rounds(in, block, 64);
    for (int i = 0; i < 8; ++i) s[i] += in[i];
    return s;
}

std::array<std::uint8_t, 32> sha256(std::span<const std::uint8_t> msg) {
    std::vector<std::uint8_t> buf(msg.begin(), msg.end());
    const std::uint64_t bits = static_cast<std::uint64_t>(msg.size()) * 8;
    buf.push_back(0x80);
    while (buf.size() % 64 != 56) buf.push_back(0);
    for (int i = 7; i >= 0; --i) buf.push_back(static_cast<std::uint8_t>(bits >> (8 * i)));
    Sha256State h = kSha256IV;
    for (size_t off = 0; off < buf.size(); off += 64) {
        Block blk;
        for (int i = 0; i < 16; ++i)
            blk[i] = Word{buf[off + 4 * i]} << 24 | Word{buf[off + 4 * i + 1]} << 16 |
                     Word{buf[off + 4 * i + 2]} << 8 | Word{buf[off + 4 * i + 3]};
        h = sha256_compress(h, blk);
    }
    std::array<std::uint8_t, 32> out{};
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 4; ++j) out[4 * i + j] = static_cast<std::uint8_t>(h[i] >> (24 - 8 * j));
    return out;
}

Block sha256_pad_256(std::span<const std::uint8_t, 32> msg) {
    Block b{};
    for (int i = 0; i < 8; ++i)
        b[i] = Word{msg[4 * i]} << 24 | Word{msg[4 * i + 1]} << 16 | Word{msg[4 * i + 2]} << 8 | Word{msg[4 * i + 3]};
    b[8] = 0x80000000u;
    b[15] = 256;
    return b;
}

Block sha256_pad_block(std::span<const std::uint8_t> msg) {
    if (msg.size() > 55) throw std::invalid_argument("message does not fit in a single SHA-256 block");
    std::array<std::uint8_t, 64> bytes{};
    std::copy(msg.begin(), msg.end(), bytes.begin());
    bytes[msg.size()] = 0x80;
    const std::uint64_t bits = 8 * msg.size();
    for (int i = 0; i < 8; ++i) bytes[63 - i] = static_cast<std::uint8_t>(bits >> (8 * i));
    Block b{};
    for (int i = 0; i < 16; ++i)
        b[i] = Word{bytes[4 * i]} << 24 | Word{bytes[4 * i + 1]} << 16 | Word{bytes[4 * i + 2]} << 8 | Word{bytes[4 * i + 3]};
    return b;
}

const std::array<std::uint64_t, 24> kKeccakRC = {
    0x0000000000000001ULL, 0x0000000000008082ULL, 0x800000000000808aULL, 0x8000000080008000ULL,
    0x000000000000808bULL, 0x0000000080000001ULL, 0x8000000080008081ULL, 0x8000000000008009ULL,
    0x000000000000008aULL, 0x0000000000000088ULL, 0x0000000080008009ULL, 0x000000008000000aULL,
    0x000000008000808bULL, 0x800000000000008bULL, 0x8000000000008089ULL, 0x8000000000008003ULL,
    0x8000000000008002ULL, 0x8000000000000080ULL, 0x000000000000800aULL, 0x800000008000000aULL,
    0x8000000080008081ULL, 0x8000000000008080ULL, 0x0000000080000001ULL, 0x8000000080008008ULL,
};

// FIPS 202 rho offsets, indexed x + 5y
const std::array<int, 25> kKeccakRho = {
    0,  1,  62, 28, 27,  //
    36, 44, 6,  55, 20,  //
    3,  10, 43, 25, 39,  //
    41, 45, 15, 21, 8,   //
    18, 2,  61, 56, 14,
};

namespace {
inline std::uint64_t rotl64(std::uint64_t x, int n) { return n == 0 ? x : (x << n) | (x >> (64 - n)); }
}  // namespace

void keccak_theta(KeccakState& a) {
    std::uint64_t c[5], d[5];
    for (int x = 0; x < 5; ++x) c[x] = a[x] ^ a[x + 5] ^ a[x + 10] ^ a[x + 15] ^ a[x + 20];
    for (int x = 0; x < 5; ++x) d[x] = c[(x + 4) % 5] ^ rotl64(c[(x + 1) % 5], 1);
    for (int i = 0; i < 25; ++i) a[i] ^= d[i % 5];
}

void keccak_rho(KeccakState& a) {
    for (int i = 0; i < 25; ++i) a[i] = rotl64(a[i], kKeccakRho[i]);
}

void keccak_pi(KeccakState& a) {
    KeccakState b;
    // A'[x][y] = A[(x + 3y) mod 5][x]
    for (int x = 0; x < 5; ++x)
        for (int y = 0; y < 5; ++y) b[x + 5 * y] = a[(x + 3 * y) % 5 + 5 * x];
    a = b;
}

void keccak_chi(KeccakState& a) {
    KeccakState b;
    for (int y = 0; y < 5; ++y)
        for (int x = 0; x < 5; ++x)
            b[x + 5 * y] = a[x + 5 * y] ^ (~a[(x + 1) % 5 + 5 * y] & a[(x + 2) % 5 + 5 * y]);
    a = b;
}

void keccak_iota(KeccakState& a, int round) { a[0] ^= kKeccakRC.at(round); }

void keccak_round(KeccakState& a, int round) {
    keccak_theta(a);
    keccak_rho(a);
    keccak_pi(a);
    keccak_chi(a);
    keccak_iota(a, round);
}

void keccak_f1600(KeccakState& a, int rounds) {
    for (int r = 24 - rounds; r < 24; ++r) keccak_round(a, r);
}

KeccakState keccak_from_bytes(std::span<const std::uint8_t, 200> bytes) {
    KeccakState a{};
    for (int i = 0; i < 25; ++i)
        for (int j = 0; j < 8; ++j) a[i] |= std::uint64_t{bytes[8 * i + j]} << (8 * j);
    return a;
}

std::array<std::uint8_t, 200> keccak_to_bytes(const KeccakState& a) {
    std::array<std::uint8_t, 200> out{};
    for (int i = 0; i < 25; ++i)
        for (int j = 0; j < 8; ++j) out[8 * i + j] = static_cast<std::uint8_t>(a[i] >> (8 * j));
    return out;
}

KeccakState sha3_256_absorb_256(std::span<const std::uint8_t, 32> msg) {
    std::array<std::uint8_t, 200> bytes{};
    for (int i = 0; i < 32; ++i) bytes[i] = msg[i];
    bytes[32] ^= 0x06;          // domain bits 01 then the first pad bit
    bytes[136 - 1] ^= 0x80;     // last pad bit at the end of the 1088-bit rate
    return keccak_from_bytes(bytes);
}

std::array<std::uint8_t, 32> sha3_256(std::span<const std::uint8_t> msg) {
    constexpr size_t rate = 136;
    std::vector<std::uint8_t> buf(msg.begin(), msg.end());
    buf.push_back(0x06);
    while (buf.size() % rate != 0) buf.push_back(0);
    buf.back() ^= 0x80;
    KeccakState s{};
    for (size_t off = 0; off < buf.size(); off += rate) {
        for (size_t i = 0; i < rate / 8; ++i) {
            std::uint64_t lane = 0;
            for (int j = 0; j < 8; ++j) lane |= std::uint64_t{buf[off + 8 * i + j]} << (8 * j);
            s[i] ^= lane;
        }
        keccak_f1600(s);
    }
    auto bytes = keccak_to_bytes(s);
    std::array<std::uint8_t, 32> out{};
    for (int i = 0; i < 32; ++i) out[i] = bytes[i];
    return out;
}

std::string to_hex(std::span<const std::uint8_t> bytes) {
    static const char* digits = "0123456789abcdef";
    std::string s;
    s.reserve(bytes.size() * 2);
    for (auto b : bytes) {
        s.push_back(digits[b >> 4]);
        s.push_back(digits[b & 15]);
    }
    return s;
}

std::vector<std::uint8_t> from_hex(const std::string& hex) {
    auto nib = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        throw std::invalid_argument(std::string("bad hex digit '") + c + "'");
    };
    if (hex.size() % 2) throw std::invalid_argument("odd-length hex string");
    std::vector<std::uint8_t> out(hex.size() / 2);
    for (size_t i = 0; i < out.size(); ++i) out[i] = static_cast<std::uint8_t>(nib(hex[2 * i]) << 4 | nib(hex[2 * i + 1]));
    return out;
}

}  // namespace hashcost::ref
