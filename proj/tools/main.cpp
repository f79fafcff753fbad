#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

using namespace hashcost::cli;

int main(int argc, char** argv) {
    CLI::App app{"Reversible SHA-256 / SHA3-256 circuits and Grover attack cost estimates"};
    app.require_subcommand(1);

    BuildOptions build;
    auto* b = app.add_subcommand("build", "build a hash circuit and write it in the netlist format");
    b->add_option("--hash", build.hash, "sha256 or keccak")->check(CLI::IsMember({"sha256", "keccak"}));
    b->add_option("--out", build.out, "output netlist path");
    b->add_flag("--lowered", build.lowered, "expand Toffoli gates to Clifford+T first");
    b->add_option("--rounds", build.rounds, "Keccak rounds (last N of 24)")->check(CLI::Range(1, 24));

    VerifyOptions verify;
    auto* v = app.add_subcommand("verify", "simulate the circuit on test vectors");
    v->add_option("--hash", verify.hash, "sha256, keccak or sha3-256")
        ->check(CLI::IsMember({"sha256", "keccak", "sha3-256"}));
    v->add_option("--vectors", verify.vectors, "file of '<input hex> <expected hex>' lines")->required();

    EstimatorConfig est;
    double p_g = 0;
    auto* e = app.add_subcommand("estimate", "fault-tolerant cost of a Grover pre-image attack");
    e->add_option("--hash", est.hash, "sha256, sha3-256 or custom")
        ->check(CLI::IsMember({"sha256", "sha3-256", "custom"}));
    e->add_option("--k", est.k, "pre-image bits");
    e->add_option("--p-in", est.p_in, "injection error rate");
    auto* pg = e->add_option("--p-g", p_g, "physical gate error rate (default p_in/10)");
    e->add_option("--epsilon", est.epsilon, "distillation balance parameter");
    e->add_option("--cycle-ns", est.cycle_ns, "surface code cycle time in ns");
    e->add_flag("--paper-counts", est.paper_counts, "use the published optimized hash counts");
    e->add_option("--out", est.out, "write the report here instead of stdout");
    e->add_option("--format", est.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    e->add_option("--t-count", est.t_count, "custom: hash T-count");
    e->add_option("--t-depth", est.t_depth, "custom: hash T-depth");
    e->add_option("--cnot-count", est.cnot, "custom: CNOT count");
    e->add_option("--h-count", est.h, "custom: H count");
    e->add_option("--p-count", est.p, "custom: P/P† count");
    e->add_option("--z-count", est.z, "custom: Z count");
    e->add_option("--x-count", est.x, "custom: X count");
    e->add_option("--qubits", est.qubits, "custom: logical qubits");

    AdvantageOptions adv;
    auto* a = app.add_subcommand("advantage", "search advantage k/C table and crossover points");
    a->add_option("--v", adv.v, "overhead exponents (rows)")->delimiter(',');
    a->add_option("--c", adv.c, "log2 cost budgets (columns)")->delimiter(',');
    a->add_flag("--crossover", adv.crossover, "print the crossover k for a = 1..5");
    a->add_option("--format", adv.format, "text, csv or json")->check(CLI::IsMember({"json", "csv", "text"}));

    std::string counts_hash = "keccak", counts_format = "json";
    auto* c = app.add_subcommand("counts", "per-component resource counts");
    c->add_option("--hash", counts_hash, "sha256 or keccak")->check(CLI::IsMember({"sha256", "keccak"}));
    c->add_option("--format", counts_format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));

    CLI11_PARSE(app, argc, argv);
    if (*pg) est.p_g = p_g;

    try {
        if (*b) return cmd_build(build, std::cout);
        if (*v) return cmd_verify(verify, std::cout);
        if (*e) return cmd_estimate(est, std::cout);
        if (*a) return cmd_advantage(adv, std::cout);
        if (*c) return cmd_counts(counts_hash, counts_format, std::cout);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 2;
    }
    return 0;
}
