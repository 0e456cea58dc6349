#include "vecseq/search.hpp"

#include <algorithm>

#include "vecseq/verifier.hpp"

namespace vecseq {

namespace {

using SmallVec = std::vector<std::uint64_t>;

bool small_step_ok(std::uint64_t a, std::uint64_t b) {
  return b == 0 || b == a + 1;
}

bool small_vec_step_ok(const SmallVec& v, const SmallVec& w) {
  for (std::size_t l = 0; l < v.size(); ++l)
    if (!small_step_ok(v[l], w[l])) return false;
  return true;
}

bool small_leq(const SmallVec& v, const SmallVec& w) {
  for (std::size_t l = 0; l < v.size(); ++l)
    if (v[l] > w[l]) return false;
  return true;
}

VecSeq to_vecseq(int d, const std::vector<SmallVec>& seq) {
  VecSeq out(d);
  for (const auto& v : seq) {
    Vec big(v.size());
    std::transform(v.begin(), v.end(), big.begin(),
                   [](std::uint64_t x) { return Big(x); });
    out.push(std::move(big));
  }
  return out;
}

// Iterates start vectors over [0, cap]^d in lexicographic order.
bool next_start(SmallVec& v, std::uint64_t cap) {
  for (int l = static_cast<int>(v.size()) - 1; l >= 0; --l) {
    if (v[l] < cap) {
      ++v[l];
      std::fill(v.begin() + l + 1, v.end(), 0);
      return true;
    }
  }
  return false;
}

struct MaxSearch {
  int d;
  SearchOptions opts;
  bool cyclic;
  std::uint64_t value_cap;  // cyclic mode only; 0 means unbounded

  std::uint64_t nodes = 0;
  bool node_exhausted = false;
  bool ceiling_hit = false;
  std::uint64_t best_len = 0;
  std::vector<SmallVec> best;
  std::vector<SmallVec> seq;

  bool dominated_by_earlier(const SmallVec& w) const {
    for (const auto& v : seq)
      if (small_leq(v, w)) return true;
    return false;
  }

  void go() {
    if (++nodes > opts.node_budget) {
      node_exhausted = true;
      return;
    }
    const bool candidate =
        !cyclic || small_vec_step_ok(seq.back(), seq.front());
    if (candidate && seq.size() > best_len) {
      best_len = seq.size();
      best = seq;
    }
    if (seq.size() >= opts.length_budget) {
      ceiling_hit = true;
      return;
    }
    const SmallVec cur = seq.back();
    // Masks in ascending order give successors in lexicographic vector order
    // (reset to 0 sorts before increment on every coordinate).
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d); ++mask) {
      SmallVec w(d);
      bool capped = false;
      for (int l = 0; l < d; ++l) {
        const bool inc = (mask >> (d - 1 - l)) & 1;
        w[l] = inc ? cur[l] + 1 : 0;
        if (cyclic && w[l] > value_cap) capped = true;
      }
      if (capped || dominated_by_earlier(w)) continue;
      seq.push_back(std::move(w));
      go();
      seq.pop_back();
      if (node_exhausted) return;
    }
  }
};

SearchResult run_max_search(int d, const SearchOptions& opts, bool cyclic) {
  if (d < 1 || d > 3)
    throw std::invalid_argument("search: dimension must be in [1, 3]");
  if (opts.length_budget < 1)
    throw std::invalid_argument("search: length budget must be >= 1");

  MaxSearch s;
  s.d = d;
  s.opts = opts;
  s.cyclic = cyclic;
  const std::uint64_t start_cap =
      cyclic ? opts.length_budget - 1 : opts.length_budget;
  s.value_cap = start_cap;

  SmallVec start(d, 0);
  do {
    if (opts.symmetry_break && !std::is_sorted(start.begin(), start.end()))
      continue;
    s.seq.assign(1, start);
    s.go();
    if (s.node_exhausted) break;
  } while (next_start(start, start_cap));

  SearchResult result;
  result.max_length = s.best_len;
  result.witness = to_vecseq(d, s.best);
  result.nodes_explored = s.nodes;
  result.cap_used = start_cap;
  result.node_budget_exhausted = s.node_exhausted;
  result.exact = !s.node_exhausted && !s.ceiling_hit;
  return result;
}

struct Enumerator {
  int d;
  std::uint64_t target_len;
  std::uint64_t cap;
  bool cyclic;
  bool use_pruning;
  std::uint64_t node_budget;
  const std::function<void(const VecSeq&)>* sink;

  std::uint64_t nodes = 0;
  std::vector<SmallVec> seq;

  bool has_dominating_pair() const {
    for (std::size_t i = 0; i < seq.size(); ++i)
      for (std::size_t j = i + 1; j < seq.size(); ++j)
        if (small_leq(seq[i], seq[j])) return true;
    return false;
  }

  void go() {
    if (++nodes > node_budget)
      throw BudgetExceeded("enumerate_sequences: node budget exceeded");
    if (seq.size() == target_len) {
      if (use_pruning ? true : !has_dominating_pair()) {
        if (!cyclic || small_vec_step_ok(seq.back(), seq.front()))
          (*sink)(to_vecseq(d, seq));
      }
      return;
    }
    const SmallVec cur = seq.back();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d); ++mask) {
      SmallVec w(d);
      bool over_cap = false;
      for (int l = 0; l < d; ++l) {
        const bool inc = (mask >> (d - 1 - l)) & 1;
        w[l] = inc ? cur[l] + 1 : 0;
        if (w[l] > cap) over_cap = true;
      }
      if (over_cap) continue;
      bool pruned = false;
      if (use_pruning)
        for (const auto& v : seq)
          if (small_leq(v, w)) {
            pruned = true;
            break;
          }
      if (pruned) continue;
      seq.push_back(std::move(w));
      go();
      seq.pop_back();
    }
  }
};

}  // namespace

SearchResult max_valid_length(int d, const SearchOptions& opts) {
  return run_max_search(d, opts, false);
}

SearchResult max_cyclic_length(int d, const SearchOptions& opts) {
  return run_max_search(d, opts, true);
}

void enumerate_sequences(int d, std::uint64_t exact_length, std::uint64_t cap,
                         bool cyclic,
                         const std::function<void(const VecSeq&)>& sink,
                         std::uint64_t node_budget, bool use_pruning) {
  if (d < 1 || d > 3)
    throw std::invalid_argument("enumerate_sequences: dimension must be in [1, 3]");
  if (exact_length == 0) {
    sink(VecSeq(d));
    return;
  }
  Enumerator e;
  e.d = d;
  e.target_len = exact_length;
  e.cap = cap;
  e.cyclic = cyclic;
  e.use_pruning = use_pruning;
  e.node_budget = node_budget;
  e.sink = &sink;

  SmallVec start(d, 0);
  do {
    e.seq.assign(1, start);
    e.go();
  } while (next_start(start, cap));
}

}  // namespace vecseq
