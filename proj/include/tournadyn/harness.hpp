#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tournadyn/counters.hpp"
#include "tournadyn/drem.hpp"
#include "tournadyn/fast.hpp"
#include "tournadyn/fvst.hpp"
#include "tournadyn/stream.hpp"

namespace tournadyn {

// One CSV row: cumulative counters, per-op wall time (0 outside bench mode)
// and the op's answer ("" for R, 0/1 for Q, a state hash for C).
struct RunRecord {
    int idx = 0;
    char kind = 'R';
    std::uint64_t ns = 0;
    std::string ans;
    Counters ctr;
};

struct RunResult {
    std::vector<RunRecord> records;
    std::vector<bool> answers;  // Q answers in stream order
};

// Structural audits against from-scratch recomputation. Each returns an
// error description, or nothing when the view is sound.
std::optional<std::string> audit_index(const BucketedIndex& idx, const Tournament& t);
std::optional<std::string> audit_promise(const DspTriangle& s);
std::optional<std::string> audit_full(const DsTriangle& s);
std::optional<std::string> audit_drem(const DremState& s);
std::optional<std::string> audit_heavy(const Dremp& d);

// Deterministic state hash for C checkpoints (covers the tournament plus the
// structure's derived views).
std::uint64_t state_hash(const FastPromise& s);
std::uint64_t state_hash(const FastFull& s);
std::uint64_t state_hash(const FvstPromise& s);

// Replays a stream; audit=true re-checks all structure invariants after
// every op (also enabled by TOURNDYN_AUDIT=1), timing=true fills ns.
RunResult run_stream(const Tournament& t, const UpdateStream& s,
                     bool audit = false, bool timing = false);

struct VerifyReport {
    bool ok = true;
    int failed_op = -1;           // index into ops, or -1
    std::string message;
    std::vector<std::string> reproduction;  // header + op prefix up to failure
};

// Replays with full audits and oracle comparison of every query answer.
// Requires n within the exact oracles' capability (n <= 20).
VerifyReport verify_stream(const Tournament& t, const UpdateStream& s);

// Per-op median wall times over `repeat` fresh replays; counters come from a
// deterministic replay.
RunResult bench_stream(const Tournament& t, const UpdateStream& s, int repeat);

void write_csv(std::ostream& out, const std::vector<RunRecord>& records);
void write_json(std::ostream& out, const UpdateStream& s,
                const std::vector<RunRecord>& records);

}  // namespace tournadyn
