#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hashcost {

struct StructuralError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnsupportedGateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

using WireId = std::uint32_t;

enum class GateKind : std::uint8_t { X, CNOT, Toffoli, H, T, Tdg, P, Pdg, Z };
inline constexpr int kGateKinds = 9;

constexpr int arity(GateKind k) {
    switch (k) {
        case GateKind::CNOT: return 2;
        case GateKind::Toffoli: return 3;
        default: return 1;
    }
}

constexpr bool is_classical(GateKind k) {
    return k == GateKind::X || k == GateKind::CNOT || k == GateKind::Toffoli;
}

constexpr bool is_t(GateKind k) { return k == GateKind::T || k == GateKind::Tdg; }

std::string_view kind_name(GateKind k);

// 16 bytes; the Keccak circuit holds tens of millions of these.
class Gate {
public:
    Gate(GateKind kind, WireId target);
    Gate(GateKind kind, WireId control, WireId target);
    Gate(GateKind kind, WireId c1, WireId c2, WireId target);

    static Gate x(WireId t) { return {GateKind::X, t}; }
    static Gate cnot(WireId c, WireId t) { return {GateKind::CNOT, c, t}; }
    static Gate toffoli(WireId c1, WireId c2, WireId t) { return {GateKind::Toffoli, c1, c2, t}; }

    GateKind kind() const { return kind_; }
    int size() const { return arity(kind_); }
    std::span<const WireId> operands() const { return {ops_.data(), static_cast<size_t>(size())}; }
    WireId target() const { return ops_[size() - 1]; }
    WireId operator[](int i) const { return ops_[i]; }

    Gate inverted() const;

    friend bool operator==(const Gate&, const Gate&) = default;

private:
    std::array<WireId, 3> ops_{};
    GateKind kind_;
};

struct Register {
    std::string name;
    WireId offset = 0;
    std::uint32_t size = 0;

    WireId operator[](std::uint32_t i) const { return offset + i; }
    std::vector<WireId> wires() const;
    std::vector<WireId> slice(std::uint32_t start, std::uint32_t len) const;
};

class Circuit {
public:
    Circuit() = default;
    explicit Circuit(std::uint32_t width);

    // Appends a register of `size` fresh wires at the end of the wire range.
    Register add_register(std::string name, std::uint32_t size);

    void add(const Gate& g) {
        for (WireId w : g.operands())
            if (w >= width_) throw_operand(w);
        gates_.push_back(g);
    }
    void x(WireId t) { add(Gate::x(t)); }
    void cnot(WireId c, WireId t) { add(Gate::cnot(c, t)); }
    void toffoli(WireId a, WireId b, WireId t) { add(Gate::toffoli(a, b, t)); }
    void single(GateKind k, WireId t) { add(Gate(k, t)); }

    void append(const Circuit& other);
    void append_inverse(const Circuit& other);
    void reserve(std::size_t n) { gates_.reserve(n); }
    // Same width and registers, no gates.
    Circuit shell() const {
        Circuit c;
        c.width_ = width_;
        c.registers_ = registers_;
        return c;
    }

    std::uint32_t width() const { return width_; }
    const std::vector<Register>& registers() const { return registers_; }
    const Register& reg(std::string_view name) const;
    const std::vector<Gate>& gates() const { return gates_; }
    std::size_t size() const { return gates_.size(); }
    bool empty() const { return gates_.empty(); }

    // Throws StructuralError if any operand is out of range or registers overlap.
    void validate() const;

private:
    [[noreturn]] void throw_operand(WireId w) const;

    std::uint32_t width_ = 0;
    std::vector<Register> registers_;
    std::vector<Gate> gates_;
};

Circuit compose(const Circuit& a, const Circuit& b);
Circuit inverse(const Circuit& c);

struct ResourceCounts {
    std::array<std::uint64_t, kGateKinds> by_kind{};
    std::uint64_t t_depth = 0;
    std::uint64_t total_depth = 0;
    std::uint64_t width = 0;
    std::uint64_t toffoli_stages = 0;

    std::uint64_t count(GateKind k) const { return by_kind[static_cast<int>(k)]; }
    std::uint64_t& count(GateKind k) { return by_kind[static_cast<int>(k)]; }
    std::uint64_t toffoli_count() const { return count(GateKind::Toffoli); }
    std::uint64_t t_count() const { return count(GateKind::T) + count(GateKind::Tdg); }
    std::uint64_t cnot_count() const { return count(GateKind::CNOT); }
    std::uint64_t h_count() const { return count(GateKind::H); }
    // CNOT + H + P + P† + Z + X
    std::uint64_t clifford_count() const;
    std::uint64_t gate_count() const;

    friend bool operator==(const ResourceCounts&, const ResourceCounts&) = default;
};

ResourceCounts count_resources(const Circuit& c);

}  // namespace hashcost
