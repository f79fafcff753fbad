#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hashcost/circuit.hpp"

namespace hashcost {

// One bit per wire, packed into 64-bit words.
class BitState {
public:
    BitState() = default;
    explicit BitState(std::uint32_t width) : width_(width), words_((width + 63) / 64, 0) {}

    std::uint32_t width() const { return width_; }
    bool get(WireId w) const { return (words_[w >> 6] >> (w & 63)) & 1; }
    void set(WireId w, bool v) {
        std::uint64_t m = std::uint64_t{1} << (w & 63);
        words_[w >> 6] = v ? (words_[w >> 6] | m) : (words_[w >> 6] & ~m);
    }
    void flip(WireId w) { words_[w >> 6] ^= std::uint64_t{1} << (w & 63); }

    // Little-endian value of up to 64 wires: bit i of the result is wire wires[i].
    std::uint64_t read(std::span<const WireId> wires) const;
    void write(std::span<const WireId> wires, std::uint64_t value);
    std::uint64_t read(const Register& r, std::uint32_t start, std::uint32_t len) const;
    void write(const Register& r, std::uint32_t start, std::uint32_t len, std::uint64_t value);

    bool all_zero(const Register& r) const;
    std::size_t popcount() const;

    friend bool operator==(const BitState&, const BitState&) = default;

private:
    std::uint32_t width_ = 0;
    std::vector<std::uint64_t> words_;
};

// Throws UnsupportedGateError unless every gate is X/CNOT/Toffoli.
void check_classical(const Circuit& c);

BitState run(const Circuit& c, BitState s);
void run_in_place(const Circuit& c, BitState& s);

// Bit-sliced batch: lane j of every word is an independent input, so one pass
// simulates up to 64 states.
class BatchState {
public:
    explicit BatchState(std::uint32_t width) : lanes_(width, 0) {}

    std::uint32_t width() const { return static_cast<std::uint32_t>(lanes_.size()); }
    std::uint64_t& operator[](WireId w) { return lanes_[w]; }
    std::uint64_t operator[](WireId w) const { return lanes_[w]; }

    void load(int lane, const BitState& s);
    BitState extract(int lane) const;

    std::vector<std::uint64_t>& data() { return lanes_; }

private:
    std::vector<std::uint64_t> lanes_;
};

void run_batch(const Circuit& c, BatchState& s);
// Runs gates [begin, end) only; used for per-round checks.
void run_batch(const Circuit& c, BatchState& s, std::size_t begin, std::size_t end);

}  // namespace hashcost
