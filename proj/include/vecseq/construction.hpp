#ifndef VECSEQ_CONSTRUCTION_HPP
#define VECSEQ_CONSTRUCTION_HPP

#include <cstdint>
#include <functional>

#include "vecseq/core.hpp"

namespace vecseq {

// One application of the d -> d+2 extension. `inner_length` is the length n of
// the sequence being extended (0 for the base level), `length` is this level's
// length m = n(2n+1).
struct Level {
  int dim = 0;
  Big inner_length;
  Big length;
};

// Symbolic description of the stacked construction for a target dimension:
// levels are stored innermost first, so levels.front() is the dimension-2 base
// of length 4. Odd target dimensions append one constant-zero coordinate.
struct ConstructionSpec {
  int target_dim = 0;
  bool padded = false;
  std::vector<Level> levels;

  int effective_dim() const { return padded ? target_dim - 1 : target_dim; }
  const Big& length() const { return levels.back().length; }
};

// Default cell budget for materialized sequences (length * dim).
inline constexpr std::uint64_t kDefaultCellBudget = 100'000'000;

// Thrown when a materialization would exceed its cell budget.
struct MaterializeRefused : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The length-4, dimension-2 cyclic non-dominating sequence everything grows
// from: (1,1), (0,2), (1,0), (0,0).
VecSeq base_sequence();

// Extends a cyclic non-dominating sequence of length n to one of dimension
// dim+2 and length n(2n+1). Inner coordinates repeat the input 2n+1 times; the
// two appended coordinates sweep a sawtooth X and its cyclic shift Y. With
// verify_input set the input is checked and a bad input is rejected; higher
// levels produced by this module can skip the quadratic re-check.
VecSeq extend(const VecSeq& u, bool verify_input = true,
              std::uint64_t cell_budget = kDefaultCellBudget);

// Builds the spec for construct(d), d >= 2.
ConstructionSpec make_spec(int d);

// Exact length of construct(d): 4 for d in {2,3}, then L(d+2) = L(d)(2L(d)+1).
Big length_of(int d);

// The closed-form lower bound 2^(3*2^(floor(d/2)-1) - 1).
Big closed_form_bound(int d);

// Random access into construct(d) without materialization; cost is linear in
// the number of levels.
Vec index_at(const ConstructionSpec& spec, const Big& k);

// Emits vectors index_at(spec, from) .. index_at(spec, from+count-1) in order,
// amortizing the per-level work across consecutive indices.
void stream(const ConstructionSpec& spec, const Big& from, const Big& count,
            const std::function<void(const Vec&)>& sink);

// Materializes construct(d) through stream(); refuses when length * dim
// exceeds the cell budget.
VecSeq materialize(const ConstructionSpec& spec,
                   std::uint64_t cell_budget = kDefaultCellBudget);

// For a < b returns a coordinate l with construct(d)[a][l] > construct(d)[b][l],
// computed structurally in O(levels): recurse into the inner sequence when the
// inner indices differ, otherwise pick the X or Y coordinate of the current
// level depending on which halves of their blocks a and b fall in.
int domination_witness(const ConstructionSpec& spec, const Big& a, const Big& b);

// The reset/increment binary countdown: dimension `bits`, length 2^bits,
// coordinate l at time t is (t mod 2^l)+1 while bit l of the counted value is
// set and 0 otherwise. Valid and non-dominating.
VecSeq binary_counter(int bits);

}  // namespace vecseq

#endif
