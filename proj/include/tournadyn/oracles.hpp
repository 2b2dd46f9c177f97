#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "tournadyn/tournament.hpp"

namespace tournadyn {

// Exact, slow reference implementations. Every dynamic structure is tested
// against these; none of them shares code with the structures they check.

// Minimum feedback arc set size. Subset DP over orderings; n <= 20.
int brute_fast(const Tournament& t);

// Minimum feedback vertex set size. Subsets by increasing size; n <= 20.
int brute_fvst(const Tournament& t);

// Maximum arc-disjoint triangle packing. Branch and bound; n <= 8.
int brute_adt(const Tournament& t);

bool naive_acyclic(const Tournament& t);

// Definitional recomputation of the derived views.
struct NaiveViews {
    std::set<std::pair<int, int>> back;           // back arcs (u,v), arc u->v
    std::vector<int> prefix;                      // prefix vertices, sorted
    int prefix_len = 0;
    std::set<int> empty;                          // empty bucket degrees
    int max_bucket = 0;
    std::set<std::pair<int, int>> k_long_edges;   // k-long graph, pairs u < v
    std::vector<int> heavy;                       // k-heavy set, sorted
};
NaiveViews naive_views(const Tournament& t, int k = 0);

// Induced subtournament T - F; out_index maps new ids to old ids.
Tournament induced_without(const Tournament& t, const std::vector<int>& f,
                           std::vector<int>* out_index = nullptr);

// Aggregate report for the harness's verify mode. Size-capped fields are
// absent when the instance exceeds the oracle capability.
struct OracleReport {
    std::optional<int> fast;
    std::optional<int> fvst;
    std::optional<int> adt;
    bool acyclic = false;
    NaiveViews views;
};
OracleReport oracle_report(const Tournament& t, int k = 0);

}  // namespace tournadyn
