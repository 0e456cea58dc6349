#ifndef VECSEQ_SEARCH_HPP
#define VECSEQ_SEARCH_HPP

#include <cstdint>
#include <functional>

#include "vecseq/core.hpp"

namespace vecseq {

struct SearchOptions {
  std::uint64_t length_budget = 10;
  std::uint64_t node_budget = 50'000'000;
  // When set, only start vectors with nondecreasing coordinates are explored;
  // coordinate permutations make every other start redundant for the maximum
  // length (but not for the witness).
  bool symmetry_break = false;
};

struct SearchResult {
  std::uint64_t max_length = 0;
  VecSeq witness;
  std::uint64_t nodes_explored = 0;
  std::uint64_t cap_used = 0;
  // True iff the search exhausted the whole space below the budgets, so
  // max_length is the exact maximum.
  bool exact = false;
  bool node_budget_exhausted = false;
};

// Exhaustive DFS for the maximum length of a non-dominating valid sequence in
// dimension d (1 <= d <= 3). Start coordinates are capped at the length
// budget: before its first reset a coordinate is strictly increasing, so in a
// conforming sequence of length L <= B it is only ever compared against
// post-reset values, which are < L; lowering a start value that exceeds B down
// to B preserves every such comparison, hence no longer sequence is lost.
SearchResult max_valid_length(int d, const SearchOptions& opts = {});

// Same search restricted to cyclic sequences (wrap step must be legal). All
// coordinate values are kept below the length budget: a coordinate of a cyclic
// sequence must reset within one period, so its values stay below the length.
SearchResult max_cyclic_length(int d, const SearchOptions& opts = {});

// Emits every valid (optionally cyclic) non-dominating sequence of the exact
// length with coordinates <= cap, in lexicographic order. With use_pruning off
// the DFS descends through dominating prefixes and filters only complete
// sequences; the pruned and unpruned emissions must coincide.
void enumerate_sequences(int d, std::uint64_t exact_length, std::uint64_t cap,
                         bool cyclic,
                         const std::function<void(const VecSeq&)>& sink,
                         std::uint64_t node_budget = 50'000'000,
                         bool use_pruning = true);

}  // namespace vecseq

#endif
