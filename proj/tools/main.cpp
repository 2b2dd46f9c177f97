#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "tournadyn/harness.hpp"
#include "tournadyn/oracles.hpp"
#include "tournadyn/stream.hpp"
#include "tournadyn/tournament.hpp"

using namespace tournadyn;

namespace {

Tournament load_tournament(const std::string& stream_path, std::string tournament_path) {
    if (tournament_path.empty()) {
        // Default convention: X.stream -> X.tournament.
        std::string base = stream_path;
        auto pos = base.rfind(".stream");
        if (pos != std::string::npos) base.resize(pos);
        tournament_path = base + ".tournament";
    }
    return read_tournament_file(tournament_path);
}

void emit(const UpdateStream& s, const RunResult& r, const std::string& out,
          const std::string& json_out) {
    if (!out.empty()) {
        std::ofstream os(out);
        if (!os) throw FormatError("cannot open output file: " + out);
        write_csv(os, r.records);
    } else {
        write_csv(std::cout, r.records);
    }
    if (!json_out.empty()) {
        std::ofstream os(json_out);
        if (!os) throw FormatError("cannot open output file: " + json_out);
        write_json(os, s, r.records);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dynamic feedback-set structures for tournaments"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a tournament and an update stream");
    std::string kind = "uniform-random", structure, out_prefix = "instance";
    int n = 16, budget = 2, ops = 100;
    std::uint64_t seed = 1;
    gen->add_option("--kind", kind,
                    "transitive-plus-<r> | planted-fvs-<s> | uniform-random");
    gen->add_option("--struct", structure, "fast-promise | fast-full | fvst");
    gen->add_option("--n", n, "vertex count")->check(CLI::NonNegativeNumber);
    gen->add_option("--budget", budget, "promise budget when the kind has no suffix");
    gen->add_option("--ops", ops, "number of stream operations");
    gen->add_option("--seed", seed, "PRNG seed");
    gen->add_option("--out", out_prefix, "output prefix (.tournament/.stream)");

    // shared run/verify/bench options
    std::string in_path, tournament_path, out_path, json_path;
    int repeat = 5;

    auto* run = app.add_subcommand("run", "replay a stream and emit answers + counters");
    run->add_option("--in", in_path, "stream file")->required();
    run->add_option("--tournament", tournament_path, "tournament file (default: derived from --in)");
    run->add_option("--out", out_path, "CSV output (default: stdout)");
    run->add_option("--json", json_path, "JSON output");

    auto* verify = app.add_subcommand("verify", "replay with invariant audits and oracle checks");
    verify->add_option("--in", in_path, "stream file")->required();
    verify->add_option("--tournament", tournament_path, "tournament file");

    auto* bench = app.add_subcommand("bench", "replay with per-op median timings");
    bench->add_option("--in", in_path, "stream file")->required();
    bench->add_option("--tournament", tournament_path, "tournament file");
    bench->add_option("--out", out_path, "CSV output (default: stdout)");
    bench->add_option("--repeat", repeat, "repetitions for the median");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            GenResult g = generate(kind, n, budget, ops, seed, structure);
            write_tournament_file(out_prefix + ".tournament", g.tournament);
            write_stream_file(out_prefix + ".stream", g.stream);
            std::cout << "wrote " << out_prefix << ".tournament and " << out_prefix
                      << ".stream (" << g.stream.ops.size() << " ops)\n";
        } else if (run->parsed()) {
            UpdateStream s = read_stream_file(in_path);
            Tournament t = load_tournament(in_path, tournament_path);
            RunResult r = run_stream(t, s);
            emit(s, r, out_path, json_path);
        } else if (verify->parsed()) {
            UpdateStream s = read_stream_file(in_path);
            Tournament t = load_tournament(in_path, tournament_path);
            VerifyReport rep = verify_stream(t, s);
            if (rep.ok) {
                std::cout << "verify: OK (" << s.ops.size() << " ops, seed " << s.seed << ")\n";
            } else {
                std::cerr << "verify: VIOLATION at op " << rep.failed_op << ": " << rep.message
                          << "\nseed " << s.seed << "; minimized reproduction stream:\n";
                for (const auto& line : rep.reproduction) std::cerr << "  " << line << '\n';
                return 1;
            }
        } else if (bench->parsed()) {
            UpdateStream s = read_stream_file(in_path);
            Tournament t = load_tournament(in_path, tournament_path);
            RunResult r = bench_stream(t, s, repeat);
            emit(s, r, out_path, "");
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
