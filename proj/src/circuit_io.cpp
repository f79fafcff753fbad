#include "hashcost/circuit_io.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>

namespace hashcost {

namespace {

std::vector<std::string> wire_names(const Circuit& c) {
    std::vector<std::string> names(c.width());
    std::vector<bool> named(c.width(), false);
    for (const auto& r : c.registers())
        for (std::uint32_t i = 0; i < r.size; ++i) {
            names[r.offset + i] = r.name + "_" + std::to_string(i);
            named[r.offset + i] = true;
        }
    for (std::uint32_t w = 0; w < c.width(); ++w)
        if (!named[w]) names[w] = "w" + std::to_string(w);
    return names;
}

std::vector<std::string> split(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> toks;
    for (std::string t; ss >> t;) toks.push_back(t);
    return toks;
}

// Splits "name_12" into ("name", 12); returns false when there is no numeric suffix.
bool split_name(const std::string& s, std::string& base, std::uint32_t& idx) {
    auto pos = s.rfind('_');
    if (pos == std::string::npos || pos == 0 || pos + 1 == s.size()) return false;
    for (size_t i = pos + 1; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    base = s.substr(0, pos);
    idx = static_cast<std::uint32_t>(std::stoul(s.substr(pos + 1)));
    return true;
}

}  // namespace

void write_circuit(std::ostream& os, const Circuit& c) {
    auto names = wire_names(c);
    os << ".v";
    for (const auto& n : names) os << ' ' << n;
    os << "\nBEGIN\n";
    for (const auto& g : c.gates()) {
        switch (g.kind()) {
            case GateKind::X:
            case GateKind::CNOT:
            case GateKind::Toffoli:
                os << "tof";
                for (WireId w : g.operands()) os << ' ' << names[w];
                break;
            case GateKind::H: os << "H " << names[g.target()]; break;
            case GateKind::T: os << "T " << names[g.target()]; break;
            case GateKind::Tdg: os << "T* " << names[g.target()]; break;
            case GateKind::P: os << "P " << names[g.target()]; break;
            case GateKind::Pdg: os << "P* " << names[g.target()]; break;
            case GateKind::Z: os << "Z " << names[g.target()]; break;
        }
        os << '\n';
    }
    os << "END\n";
}

Circuit read_circuit(std::istream& is) {
    std::vector<std::string> names;
    std::unordered_map<std::string, WireId> index;
    std::string line;
    std::size_t lineno = 0;
    bool in_body = false, done = false;
    Circuit c;

    auto fail = [&](const std::string& msg) -> ParseError {
        return ParseError("line " + std::to_string(lineno) + ": " + msg);
    };
    auto wire = [&](const std::string& n) {
        auto it = index.find(n);
        if (it == index.end()) throw fail("undeclared wire '" + n + "'");
        return it->second;
    };

    while (std::getline(is, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        auto toks = split(line);
        if (toks.empty()) continue;
        if (done) throw fail("content after END");
        const std::string& op = toks[0];
        if (!in_body) {
            if (op == ".v") {
                if (!names.empty()) throw fail("duplicate .v line");
                names.assign(toks.begin() + 1, toks.end());
                for (WireId i = 0; i < names.size(); ++i)
                    if (!index.emplace(names[i], i).second) throw fail("duplicate wire '" + names[i] + "'");
            } else if (op == ".i" || op == ".o") {
                for (size_t i = 1; i < toks.size(); ++i) wire(toks[i]);
            } else if (op == "BEGIN") {
                in_body = true;
                // group consecutive `base_0 .. base_n` names back into registers
                std::size_t i = 0;
                while (i < names.size()) {
                    std::string base, b2;
                    std::uint32_t idx = 0, j = 0;
                    std::size_t n = 1;
                    if (split_name(names[i], base, idx) && idx == 0) {
                        while (i + n < names.size() && split_name(names[i + n], b2, j) && b2 == base && j == n) ++n;
                    } else {
                        base = names[i];
                    }
                    try {
                        c.add_register(base, static_cast<std::uint32_t>(n));
                    } catch (const StructuralError&) {
                        // name clash: fall back to one register per wire
                        for (std::size_t k = 0; k < n; ++k) c.add_register("#" + names[i + k], 1);
                    }
                    i += n;
                }
            } else {
                throw fail("unexpected '" + op + "' before BEGIN");
            }
            continue;
        }
        if (op == "END") {
            done = true;
            continue;
        }
        std::size_t nargs = toks.size() - 1;
        try {
            if (op == "tof") {
                if (nargs == 1) c.x(wire(toks[1]));
                else if (nargs == 2) c.cnot(wire(toks[1]), wire(toks[2]));
                else if (nargs == 3) c.toffoli(wire(toks[1]), wire(toks[2]), wire(toks[3]));
                else throw fail("tof takes 1-3 operands");
                continue;
            }
            GateKind k;
            if (op == "H") k = GateKind::H;
            else if (op == "T") k = GateKind::T;
            else if (op == "T*") k = GateKind::Tdg;
            else if (op == "P") k = GateKind::P;
            else if (op == "P*") k = GateKind::Pdg;
            else if (op == "Z") k = GateKind::Z;
            else throw fail("unknown gate '" + op + "'");
            if (nargs != 1) throw fail(op + " takes one operand");
            c.single(k, wire(toks[1]));
        } catch (const StructuralError& e) {
            throw fail(e.what());
        }
    }
    if (!in_body) throw ParseError("missing BEGIN");
    if (!done) throw ParseError("missing END");
    return c;
}

std::string to_text(const Circuit& c) {
    std::ostringstream os;
    write_circuit(os, c);
    return os.str();
}

Circuit from_text(const std::string& text) {
    std::istringstream is(text);
    return read_circuit(is);
}

void save_circuit(const std::string& path, const Circuit& c) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open " + path + " for writing");
    write_circuit(os, c);
    if (!os) throw std::runtime_error("write failed: " + path);
}

Circuit load_circuit(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open " + path);
    return read_circuit(is);
}

}  // namespace hashcost
