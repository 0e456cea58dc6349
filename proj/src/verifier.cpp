#include "vecseq/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

namespace vecseq {

namespace {

std::optional<int> step_violation(const Vec& v, const Vec& w) {
  for (std::size_t l = 0; l < v.size(); ++l)
    if (!step_ok(v[l], w[l])) return static_cast<int>(l);
  return std::nullopt;
}

}  // namespace

std::string Violation::str() const {
  std::string out;
  switch (kind) {
    case ViolationKind::BadStep: out = "bad-step"; break;
    case ViolationKind::BrokenCycle: out = "broken-cycle"; break;
    case ViolationKind::DominatingPair: out = "dominating-pair"; break;
  }
  out += " " + index_a.str() + " " + index_b.str();
  if (coordinate) out += " coord " + std::to_string(*coordinate);
  return out;
}

std::optional<Violation> check_valid(const VecSeq& seq) {
  for (std::size_t i = 0; i + 1 < seq.length(); ++i) {
    if (auto l = step_violation(seq[i], seq[i + 1]))
      return Violation{ViolationKind::BadStep, Big(i), Big(i + 1), l};
  }
  return std::nullopt;
}

std::optional<Violation> check_cyclic(const VecSeq& seq) {
  if (auto v = check_valid(seq)) return v;
  if (seq.length() == 0) return std::nullopt;
  const std::size_t last = seq.length() - 1;
  if (auto l = step_violation(seq[last], seq[0]))
    return Violation{ViolationKind::BrokenCycle, Big(last), Big(0), l};
  return std::nullopt;
}

std::optional<Violation> check_non_dominating_full(const VecSeq& seq,
                                                   std::uint64_t budget,
                                                   int threads) {
  const std::uint64_t n = seq.length();
  if (n < 2) return std::nullopt;
  const Big cost = Big(n) * (n - 1) / 2 * seq.dim;
  if (cost > budget)
    throw BudgetExceeded(
        "check_non_dominating_full: pair-coordinate budget exceeded (" +
        cost.str() + " > " + std::to_string(budget) + "); use sampled mode");

  unsigned t = threads > 0 ? static_cast<unsigned>(threads)
                           : std::max(1u, std::thread::hardware_concurrency());
  if (n < 4096) t = 1;

  // Workers take i-stripes (i ≡ w mod t) in ascending order; the result is the
  // lexicographic minimum over all workers' first hits, so it does not depend
  // on t or on scheduling.
  std::atomic<std::uint64_t> bound{n};
  std::mutex mu;
  std::optional<Violation> best;

  auto worker = [&](unsigned w) {
    for (std::uint64_t i = w; i + 1 < n; i += t) {
      if (i >= bound.load(std::memory_order_relaxed)) break;
      for (std::uint64_t j = i + 1; j < n; ++j) {
        if (leq(seq[i], seq[j])) {
          std::lock_guard<std::mutex> lock(mu);
          if (!best || Big(i) < best->index_a ||
              (Big(i) == best->index_a && Big(j) < best->index_b)) {
            best = Violation{ViolationKind::DominatingPair, Big(i), Big(j),
                             std::nullopt};
            bound.store(i, std::memory_order_relaxed);
          }
          return;
        }
      }
    }
  };

  if (t == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < t; ++w) pool.emplace_back(worker, w);
    for (auto& th : pool) th.join();
  }
  return best;
}

std::optional<Violation> check_cyclic_streaming(const ConstructionSpec& spec) {
  std::optional<Violation> found;
  Vec first, prev;
  Big idx = 0;
  stream(spec, 0, spec.length(), [&](const Vec& v) {
    if (found) return;
    if (idx == 0) {
      first = v;
    } else if (auto l = step_violation(prev, v)) {
      found = Violation{ViolationKind::BadStep, idx - 1, idx, l};
    }
    prev = v;
    ++idx;
  });
  if (found) return found;
  if (auto l = step_violation(prev, first))
    return Violation{ViolationKind::BrokenCycle, spec.length() - 1, Big(0), l};
  return std::nullopt;
}

Big PairSampler::uniform(const Big& n) {
  if (n < 1) throw std::invalid_argument("PairSampler::uniform: n must be >= 1");
  if (n == 1) return Big(0);
  const unsigned bits = boost::multiprecision::msb(n) + 1;
  const unsigned words = (bits + 64 + 63) / 64;
  Big r = 0;
  for (unsigned w = 0; w < words; ++w) {
    r <<= 64;
    r |= Big(rng_());
  }
  return r % n;
}

std::pair<Big, Big> PairSampler::pair(const Big& n) {
  if (n < 2) throw std::invalid_argument("PairSampler::pair: n must be >= 2");
  const Big u = uniform(n);
  Big v = uniform(n - 1);
  if (v >= u) ++v;
  return u < v ? std::make_pair(u, v) : std::make_pair(v, u);
}

SampleReport check_non_dominating_sampled(
    const std::function<Vec(const Big&)>& at, const Big& length,
    std::uint64_t samples, std::uint64_t seed,
    const std::function<int(const Big&, const Big&)>* witness) {
  SampleReport report;
  report.seed = seed;
  PairSampler sampler(seed);
  for (std::uint64_t s = 0; s < samples; ++s) {
    const auto [a, b] = sampler.pair(length);
    const Vec va = at(a);
    const Vec vb = at(b);
    ++report.pairs_checked;
    if (leq(va, vb)) {
      report.violations.push_back(
          {ViolationKind::DominatingPair, a, b, std::nullopt});
      continue;
    }
    if (witness) {
      const int l = (*witness)(a, b);
      if (!(va[l] > vb[l]))
        report.violations.push_back({ViolationKind::DominatingPair, a, b, l});
    }
  }
  return report;
}

SampleReport check_non_dominating_sampled(const ConstructionSpec& spec,
                                          std::uint64_t samples,
                                          std::uint64_t seed) {
  const std::function<int(const Big&, const Big&)> witness =
      [&spec](const Big& a, const Big& b) {
        return domination_witness(spec, a, b);
      };
  return check_non_dominating_sampled(
      [&spec](const Big& k) { return index_at(spec, k); }, spec.length(),
      samples, seed, &witness);
}

}  // namespace vecseq
