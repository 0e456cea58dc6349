#ifndef VECSEQ_VERIFIER_HPP
#define VECSEQ_VERIFIER_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>

#include "vecseq/construction.hpp"
#include "vecseq/core.hpp"

namespace vecseq {

enum class ViolationKind { BadStep, BrokenCycle, DominatingPair };

// A machine-checkable counterexample: the step a->b that is illegal, the wrap
// step that breaks the cycle, or the pair a < b where b dominates a.
struct Violation {
  ViolationKind kind;
  Big index_a;
  Big index_b;
  std::optional<int> coordinate;

  std::string str() const;
};

// Thrown when a full pairwise scan would exceed its comparison budget.
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Default budget for the full pairwise scan, in pair-coordinate comparisons.
inline constexpr std::uint64_t kDefaultPairBudget = 100'000'000;

// Checks every consecutive step; reports the first bad step in index order.
std::optional<Violation> check_valid(const VecSeq& seq);

// check_valid plus the wrap step last -> first. A singleton must wrap to
// itself, which is never legal; the empty sequence is vacuously cyclic.
std::optional<Violation> check_cyclic(const VecSeq& seq);

// Full pairwise non-domination scan; reports the lexicographically first
// dominating pair (i, j). `threads` 0 means hardware concurrency; the result
// is identical at any thread count.
std::optional<Violation> check_non_dominating_full(
    const VecSeq& seq, std::uint64_t budget = kDefaultPairBudget,
    int threads = 0);

// Streaming validity + cyclicity scan over a spec, without materialization.
std::optional<Violation> check_cyclic_streaming(const ConstructionSpec& spec);

struct SampleReport {
  std::uint64_t pairs_checked = 0;
  std::uint64_t seed = 0;
  std::vector<Violation> violations;
};

// Draws uniform pairs a < b from [0, length) with a fixed, reproducible
// generator (see PairSampler) and asserts non-domination on each; when a
// witness function is supplied, also checks that its coordinate certifies the
// pair.
SampleReport check_non_dominating_sampled(
    const std::function<Vec(const Big&)>& at, const Big& length,
    std::uint64_t samples, std::uint64_t seed,
    const std::function<int(const Big&, const Big&)>* witness = nullptr);

// Sampled check over construct(d), cross-checking domination_witness on every
// pair.
SampleReport check_non_dominating_sampled(const ConstructionSpec& spec,
                                          std::uint64_t samples,
                                          std::uint64_t seed);

// Reproducible uniform sampling over arbitrary-precision ranges, seeded with
// mt19937_64. uniform(n) assembles bits(n)+64 random bits big-endian and
// reduces mod n; the extra 64 bits keep the modular bias below 2^-64 with no
// rejection loop, so the draw sequence is fixed across platforms.
class PairSampler {
 public:
  explicit PairSampler(std::uint64_t seed) : rng_(seed) {}

  Big uniform(const Big& n);

  // Uniform unordered distinct pair from [0, n), returned as (a, b), a < b.
  std::pair<Big, Big> pair(const Big& n);

 private:
  std::mt19937_64 rng_;
};

}  // namespace vecseq

#endif
