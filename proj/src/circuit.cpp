#include "hashcost/circuit.hpp"

#include <algorithm>
#include <numeric>

namespace hashcost {

std::string_view kind_name(GateKind k) {
    switch (k) {
        case GateKind::X: return "X";
        case GateKind::CNOT: return "CNOT";
        case GateKind::Toffoli: return "Toffoli";
        case GateKind::H: return "H";
        case GateKind::T: return "T";
        case GateKind::Tdg: return "Tdg";
        case GateKind::P: return "P";
        case GateKind::Pdg: return "Pdg";
        case GateKind::Z: return "Z";
    }
    return "?";
}

Gate::Gate(GateKind kind, WireId target) : ops_{target, 0, 0}, kind_(kind) {
    if (arity(kind) != 1)
        throw StructuralError(std::string(kind_name(kind)) + " takes " + std::to_string(arity(kind)) + " operands");
}

Gate::Gate(GateKind kind, WireId control, WireId target) : ops_{control, target, 0}, kind_(kind) {
    if (kind != GateKind::CNOT) throw StructuralError("only CNOT takes 2 operands");
    if (control == target) throw StructuralError("CNOT control equals target");
}

Gate::Gate(GateKind kind, WireId c1, WireId c2, WireId target) : ops_{c1, c2, target}, kind_(kind) {
    if (kind != GateKind::Toffoli) throw StructuralError("only Toffoli takes 3 operands");
    if (c1 == c2 || c1 == target || c2 == target) throw StructuralError("Toffoli operands not distinct");
}

Gate Gate::inverted() const {
    Gate g = *this;
    switch (kind_) {
        case GateKind::T: g.kind_ = GateKind::Tdg; break;
        case GateKind::Tdg: g.kind_ = GateKind::T; break;
        case GateKind::P: g.kind_ = GateKind::Pdg; break;
        case GateKind::Pdg: g.kind_ = GateKind::P; break;
        default: break;
    }
    return g;
}

std::vector<WireId> Register::wires() const { return slice(0, size); }

std::vector<WireId> Register::slice(std::uint32_t start, std::uint32_t len) const {
    if (start + len > size) throw StructuralError("slice out of range for register " + name);
    std::vector<WireId> out(len);
    std::iota(out.begin(), out.end(), offset + start);
    return out;
}

Circuit::Circuit(std::uint32_t width) : width_(width) {}

Register Circuit::add_register(std::string name, std::uint32_t size) {
    for (const auto& r : registers_)
        if (r.name == name) throw StructuralError("duplicate register " + name);
    Register r{std::move(name), width_, size};
    width_ += size;
    registers_.push_back(r);
    return r;
}

const Register& Circuit::reg(std::string_view name) const {
    for (const auto& r : registers_)
        if (r.name == name) return r;
    throw StructuralError("no register named " + std::string(name));
}

void Circuit::append(const Circuit& other) {
    if (other.width_ > width_) throw StructuralError("appended circuit is wider than target");
    gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
}

void Circuit::append_inverse(const Circuit& other) {
    if (other.width_ > width_) throw StructuralError("appended circuit is wider than target");
    gates_.reserve(gates_.size() + other.gates_.size());
    for (auto it = other.gates_.rbegin(); it != other.gates_.rend(); ++it) gates_.push_back(it->inverted());
}

void Circuit::validate() const {
    for (const auto& g : gates_)
        for (WireId w : g.operands())
            if (w >= width_) throw_operand(w);
    std::vector<std::pair<WireId, WireId>> spans;
    for (const auto& r : registers_) {
        if (r.offset + r.size > width_) throw StructuralError("register " + r.name + " exceeds width");
        spans.emplace_back(r.offset, r.offset + r.size);
    }
    std::sort(spans.begin(), spans.end());
    for (size_t i = 1; i < spans.size(); ++i)
        if (spans[i].first < spans[i - 1].second) throw StructuralError("registers overlap");
}

void Circuit::throw_operand(WireId w) const {
    throw StructuralError("operand " + std::to_string(w) + " out of range for width " + std::to_string(width_));
}

Circuit compose(const Circuit& a, const Circuit& b) {
    if (a.width() != b.width())
        throw StructuralError("compose: width mismatch " + std::to_string(a.width()) + " vs " +
                              std::to_string(b.width()));
    Circuit out = a;
    out.append(b);
    return out;
}

Circuit inverse(const Circuit& c) {
    Circuit out = c.shell();
    out.append_inverse(c);
    return out;
}

std::uint64_t ResourceCounts::clifford_count() const {
    return count(GateKind::CNOT) + count(GateKind::H) + count(GateKind::P) + count(GateKind::Pdg) +
           count(GateKind::Z) + count(GateKind::X);
}

std::uint64_t ResourceCounts::gate_count() const {
    return std::accumulate(by_kind.begin(), by_kind.end(), std::uint64_t{0});
}

ResourceCounts count_resources(const Circuit& c) {
    ResourceCounts rc;
    rc.width = c.width();
    // Per-wire frontiers. layer: full ASAP layering. tlev/flev: the same
    // dependency structure but only T/T† (resp. Toffoli) gates open a new
    // layer, Clifford gates pass dependencies through at zero cost.
    const std::size_t n = c.width();
    std::vector<std::uint32_t> layer(n, 0), tlev(n, 0), flev(n, 0);
    std::uint32_t depth = 0, tdepth = 0, fdepth = 0;
    for (const auto& g : c.gates()) {
        std::uint32_t l = 0, t = 0, f = 0;
        for (WireId w : g.operands()) {
            if (w >= n)
                throw StructuralError("operand " + std::to_string(w) + " out of range for width " +
                                      std::to_string(n));
            l = std::max(l, layer[w]);
            t = std::max(t, tlev[w]);
            f = std::max(f, flev[w]);
        }
        ++l;
        t += is_t(g.kind());
        f += g.kind() == GateKind::Toffoli;
        for (WireId w : g.operands()) {
            layer[w] = l;
            tlev[w] = t;
            flev[w] = f;
        }
        depth = std::max(depth, l);
        tdepth = std::max(tdepth, t);
        fdepth = std::max(fdepth, f);
        ++rc.by_kind[static_cast<int>(g.kind())];
    }
    rc.total_depth = depth;
    rc.t_depth = tdepth;
    rc.toffoli_stages = fdepth;
    return rc;
}

}  // namespace hashcost
