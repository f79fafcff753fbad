#include "hashcost/lowering.hpp"

namespace hashcost {

namespace {
using K = GateKind;
constexpr std::array<NetlistStep, 16> kNetlist = {{
    {K::H, 2},
    {K::T, 0}, {K::T, 1}, {K::T, 2},
    {K::CNOT, 0, 1}, {K::CNOT, 2, 0}, {K::CNOT, 1, 2},
    {K::Tdg, 0}, {K::Tdg, 1}, {K::T, 2},
    {K::CNOT, 1, 2}, {K::CNOT, 0, 1}, {K::CNOT, 2, 0},
    {K::Tdg, 1},
    {K::CNOT, 2, 1},
    {K::H, 2},
}};
}  // namespace

const std::array<NetlistStep, 16>& toffoli_netlist() { return kNetlist; }

void emit_lowered_toffoli(Circuit& out, WireId c1, WireId c2, WireId target) {
    const WireId role[3] = {c1, c2, target};
    for (const auto& s : kNetlist) {
        if (s.kind == K::CNOT) out.cnot(role[s.a], role[s.b]);
        else out.single(s.kind, role[s.a]);
    }
}

Circuit lower(const Circuit& c) {
    std::size_t tof = 0;
    for (const auto& g : c.gates()) tof += g.kind() == K::Toffoli;
    Circuit out = c.shell();
    out.reserve(c.size() + tof * (kNetlist.size() - 1));
    for (const auto& g : c.gates()) {
        if (g.kind() == K::Toffoli) emit_lowered_toffoli(out, g[0], g[1], g[2]);
        else out.add(g);
    }
    return out;
}

}  // namespace hashcost
