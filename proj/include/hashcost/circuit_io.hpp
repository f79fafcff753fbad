#pragma once

#include <iosfwd>
#include <string>

#include "hashcost/circuit.hpp"

namespace hashcost {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// T-par style netlist: `.v` wire names, BEGIN/END body, `tof`/H/T/T*/P/P*/Z lines.
// Wire names are `<register>_<index>`; registers are rebuilt from them on read.
void write_circuit(std::ostream& os, const Circuit& c);
Circuit read_circuit(std::istream& is);

std::string to_text(const Circuit& c);
Circuit from_text(const std::string& text);

void save_circuit(const std::string& path, const Circuit& c);
Circuit load_circuit(const std::string& path);

}  // namespace hashcost
