#include "hashcost/sim.hpp"

#include <bit>
#include <string>

namespace hashcost {

std::uint64_t BitState::read(std::span<const WireId> wires) const {
    if (wires.size() > 64) throw StructuralError("read wider than 64 bits");
    std::uint64_t v = 0;
    for (size_t i = 0; i < wires.size(); ++i) v |= std::uint64_t{get(wires[i])} << i;
    return v;
}

void BitState::write(std::span<const WireId> wires, std::uint64_t value) {
    if (wires.size() > 64) throw StructuralError("write wider than 64 bits");
    for (size_t i = 0; i < wires.size(); ++i) set(wires[i], (value >> i) & 1);
}

std::uint64_t BitState::read(const Register& r, std::uint32_t start, std::uint32_t len) const {
    auto w = r.slice(start, len);
    return read(w);
}

void BitState::write(const Register& r, std::uint32_t start, std::uint32_t len, std::uint64_t value) {
    auto w = r.slice(start, len);
    write(w, value);
}

bool BitState::all_zero(const Register& r) const {
    for (std::uint32_t i = 0; i < r.size; ++i)
        if (get(r[i])) return false;
    return true;
}

std::size_t BitState::popcount() const {
    std::size_t n = 0;
    for (auto w : words_) n += std::popcount(w);
    return n;
}

void check_classical(const Circuit& c) {
    for (const auto& g : c.gates())
        if (!is_classical(g.kind()))
            throw UnsupportedGateError("cannot simulate " + std::string(kind_name(g.kind())) +
                                       " on classical bits");
}

void run_in_place(const Circuit& c, BitState& s) {
    if (s.width() != c.width())
        throw StructuralError("state width " + std::to_string(s.width()) + " != circuit width " +
                              std::to_string(c.width()));
    check_classical(c);
    for (const auto& g : c.gates()) {
        switch (g.kind()) {
            case GateKind::X: s.flip(g[0]); break;
            case GateKind::CNOT:
                if (s.get(g[0])) s.flip(g[1]);
                break;
            case GateKind::Toffoli:
                if (s.get(g[0]) && s.get(g[1])) s.flip(g[2]);
                break;
            default: break;
        }
    }
}

BitState run(const Circuit& c, BitState s) {
    run_in_place(c, s);
    return s;
}

void BatchState::load(int lane, const BitState& s) {
    if (s.width() != width()) throw StructuralError("batch width mismatch");
    const std::uint64_t m = std::uint64_t{1} << lane;
    for (WireId w = 0; w < width(); ++w) lanes_[w] = s.get(w) ? (lanes_[w] | m) : (lanes_[w] & ~m);
}

BitState BatchState::extract(int lane) const {
    BitState s(width());
    for (WireId w = 0; w < width(); ++w) s.set(w, (lanes_[w] >> lane) & 1);
    return s;
}

void run_batch(const Circuit& c, BatchState& s) { run_batch(c, s, 0, c.size()); }

void run_batch(const Circuit& c, BatchState& s, std::size_t begin, std::size_t end) {
    if (s.width() != c.width()) throw StructuralError("batch width != circuit width");
    if (begin > end || end > c.size()) throw StructuralError("gate range out of bounds");
    check_classical(c);
    std::uint64_t* v = s.data().data();
    const Gate* g = c.gates().data();
    for (std::size_t i = begin; i < end; ++i) {
        const Gate& x = g[i];
        switch (x.kind()) {
            case GateKind::X: v[x[0]] = ~v[x[0]]; break;
            case GateKind::CNOT: v[x[1]] ^= v[x[0]]; break;
            case GateKind::Toffoli: v[x[2]] ^= v[x[0]] & v[x[1]]; break;
            default: break;
        }
    }
}

}  // namespace hashcost
