#pragma once

#include <array>

#include "hashcost/circuit.hpp"

namespace hashcost {

// One step of the Toffoli replacement. Roles: 0 = first control, 1 = second control, 2 = target.
struct NetlistStep {
    GateKind kind;
    std::uint8_t a;      // target role for 1-qubit gates, control role for CNOT
    std::uint8_t b = 0;  // CNOT target role
};

// 7 T/T†, 7 CNOT, 2 H; T-depth 3 (T layers on parities {a,b,c}, {a^b^c, a^b, a^c}, {b^c}).
const std::array<NetlistStep, 16>& toffoli_netlist();

void emit_lowered_toffoli(Circuit& out, WireId c1, WireId c2, WireId target);

// Replaces every Toffoli by the netlist; every other gate is copied unchanged.
Circuit lower(const Circuit& c);

}  // namespace hashcost
