#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "tournadyn/tournament.hpp"

namespace tournadyn {

enum class StructKind { FastPromise, FastFull, Fvst };

std::string to_string(StructKind s);
StructKind struct_from_string(const std::string& name);

struct Op {
    char kind = 'R';     // 'R' reverse | 'Q' query | 'C' checkpoint
    int u = 0, v = 0;    // for R
    long long k = 0;     // for Q
};

// Text format: first line "STRUCT <name> N <n> K <k> [G <g>] SEED <s>",
// then one op per line: "R u v" | "Q k" | "C".
struct UpdateStream {
    StructKind structure = StructKind::FastPromise;
    int n = 0;
    long long K = 0;
    long long G = -1;  // -1: absent
    std::uint64_t seed = 0;
    std::vector<Op> ops;

    long long promise() const { return G >= 0 ? G : K; }
};

UpdateStream read_stream(std::istream& in);
UpdateStream read_stream_file(const std::string& path);
void write_stream(std::ostream& out, const UpdateStream& s);
void write_stream_file(const std::string& path, const UpdateStream& s);

// Instance generators. `kind` is one of
//   transitive-plus-<r>   transitive start, at most r flipped pairs alive
//                         at any time (FAST <= r throughout)
//   planted-fvs-<s>       arcs incident to a hidden s-set randomized and
//                         only those arcs ever flipped (FVST <= s)
//   uniform-random        no promise
// A bare kind name takes the budget argument instead of a suffix.
struct GenResult {
    Tournament tournament;
    UpdateStream stream;
};

GenResult generate(const std::string& kind, int n, int budget, int num_ops,
                   std::uint64_t seed, const std::string& structure = "");

}  // namespace tournadyn
