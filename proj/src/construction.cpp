#include "vecseq/construction.hpp"

#include <algorithm>

#include "vecseq/verifier.hpp"

namespace vecseq {

namespace {

Big max_or_zero(const Big& x) { return x < 0 ? Big(0) : x; }

// Inner sequences up to this many cells are materialized once per stream()
// call instead of being re-derived element by element.
constexpr std::uint64_t kInnerCacheCells = 20'000'000;

Vec index_at_levels(const std::vector<Level>& levels, std::size_t nlevels,
                    Big k) {
  const int dim = levels[nlevels - 1].dim;
  Vec v(dim);
  for (std::size_t t = nlevels - 1; t >= 1; --t) {
    const Level& lev = levels[t];
    const Big& n = lev.inner_length;
    const Big two_n = 2 * n;
    const Big i = k / two_n;
    const Big j = k % two_n;
    v[lev.dim - 2] = max_or_zero(j - i);
    const Big k2 = (k + n) % lev.length;
    const Big i2 = k2 / two_n;
    const Big j2 = k2 % two_n;
    v[lev.dim - 1] = max_or_zero(j2 - i2);
    k %= n;
  }
  const VecSeq base = base_sequence();
  const Vec& b = base[static_cast<std::size_t>(k)];
  v[0] = b[0];
  v[1] = b[1];
  return v;
}

void stream_levels(const std::vector<Level>& levels, std::size_t nlevels,
                   const Big& from, const Big& count,
                   const std::function<void(const Vec&)>& sink) {
  if (count == 0) return;
  if (nlevels == 1) {
    const VecSeq base = base_sequence();
    for (Big k = from; k < from + count; ++k)
      sink(base[static_cast<std::size_t>(k)]);
    return;
  }

  const Level& lev = levels[nlevels - 1];
  const Big& n = lev.inner_length;
  const Big two_n = 2 * n;
  const Big& m = lev.length;
  const int dim = lev.dim;
  const int inner_dim = levels[nlevels - 2].dim;

  std::vector<Vec> cache;
  const bool cached = n * inner_dim <= kInnerCacheCells;
  if (cached) {
    cache.reserve(static_cast<std::size_t>(n));
    stream_levels(levels, nlevels - 1, 0, n,
                  [&](const Vec& v) { cache.push_back(v); });
  }

  Big k = from;
  Big r = k % n;
  Big i = k / two_n;
  Big j = k % two_n;
  Big k2 = (k + n) % m;
  Big i2 = k2 / two_n;
  Big j2 = k2 % two_n;

  Vec v(dim);
  for (Big c = 0; c < count; ++c) {
    const Vec& inner =
        cached ? cache[static_cast<std::size_t>(r)]
               : index_at_levels(levels, nlevels - 1, r);
    std::copy(inner.begin(), inner.end(), v.begin());
    v[dim - 2] = max_or_zero(j - i);
    v[dim - 1] = max_or_zero(j2 - i2);
    sink(v);

    if (++r == n) r = 0;
    if (++j == two_n) {
      j = 0;
      ++i;
    }
    if (++j2 == two_n) {
      j2 = 0;
      ++i2;
    }
    if (i2 == n && j2 == n) {  // k2 wrapped past m
      i2 = 0;
      j2 = 0;
    }
  }
}

}  // namespace

VecSeq base_sequence() {
  VecSeq s(2);
  s.push({Big(1), Big(1)});
  s.push({Big(0), Big(2)});
  s.push({Big(1), Big(0)});
  s.push({Big(0), Big(0)});
  return s;
}

VecSeq extend(const VecSeq& u, bool verify_input, std::uint64_t cell_budget) {
  const Big n = u.length();
  if (n < 1) throw std::invalid_argument("extend: input must be nonempty");
  if (verify_input) {
    if (auto v = check_cyclic(u))
      throw std::invalid_argument("extend: input not cyclic: " + v->str());
    if (auto v = check_non_dominating_full(u))
      throw std::invalid_argument("extend: input dominating: " + v->str());
  }

  const Big m = n * (2 * n + 1);
  const int dim = u.dim + 2;
  if (m * dim > cell_budget)
    throw MaterializeRefused("extend: result exceeds cell budget");

  const Big two_n = 2 * n;
  auto x_at = [&](const Big& k) {
    return max_or_zero(k % two_n - k / two_n);
  };

  VecSeq out(dim);
  for (Big k = 0; k < m; ++k) {
    Vec v(dim);
    const Vec& inner = u[static_cast<std::size_t>(k % n)];
    std::copy(inner.begin(), inner.end(), v.begin());
    v[dim - 2] = x_at(k);
    v[dim - 1] = x_at((k + n) % m);
    out.push(std::move(v));
  }
  return out;
}

ConstructionSpec make_spec(int d) {
  if (d < 2) throw std::invalid_argument("make_spec: dimension must be >= 2");
  ConstructionSpec spec;
  spec.target_dim = d;
  spec.padded = (d % 2 != 0);
  const int eff = spec.effective_dim();
  spec.levels.push_back({2, Big(0), Big(4)});
  for (int dim = 4; dim <= eff; dim += 2) {
    const Big n = spec.levels.back().length;
    spec.levels.push_back({dim, n, n * (2 * n + 1)});
  }
  return spec;
}

Big length_of(int d) { return make_spec(d).length(); }

Big closed_form_bound(int d) {
  if (d < 2)
    throw std::invalid_argument("closed_form_bound: dimension must be >= 2");
  const Big exponent = 3 * (Big(1) << (d / 2 - 1)) - 1;
  if (exponent > 1'000'000'000)
    throw std::invalid_argument("closed_form_bound: dimension too large");
  return Big(1) << static_cast<unsigned>(exponent);
}

Vec index_at(const ConstructionSpec& spec, const Big& k) {
  if (k < 0 || k >= spec.length())
    throw std::out_of_range("index_at: index out of range");
  Vec v = index_at_levels(spec.levels, spec.levels.size(), k);
  if (spec.padded) v.push_back(Big(0));
  return v;
}

void stream(const ConstructionSpec& spec, const Big& from, const Big& count,
            const std::function<void(const Vec&)>& sink) {
  if (from < 0 || count < 0 || from + count > spec.length())
    throw std::out_of_range("stream: range out of bounds");
  if (!spec.padded) {
    stream_levels(spec.levels, spec.levels.size(), from, count, sink);
    return;
  }
  Vec padded(spec.target_dim, Big(0));
  stream_levels(spec.levels, spec.levels.size(), from, count, [&](const Vec& v) {
    std::copy(v.begin(), v.end(), padded.begin());
    sink(padded);
  });
}

VecSeq materialize(const ConstructionSpec& spec, std::uint64_t cell_budget) {
  if (spec.length() * spec.target_dim > cell_budget)
    throw MaterializeRefused(
        "materialize: length * dim exceeds cell budget; use stream/index_at");
  VecSeq out(spec.target_dim);
  out.vectors.reserve(static_cast<std::size_t>(spec.length()));
  stream(spec, 0, spec.length(), [&](const Vec& v) { out.vectors.push_back(v); });
  return out;
}

int domination_witness(const ConstructionSpec& spec, const Big& a,
                       const Big& b) {
  if (a < 0 || b >= spec.length() || a >= b)
    throw std::out_of_range("domination_witness: need 0 <= a < b < length");
  Big aa = a;
  Big bb = b;
  for (std::size_t t = spec.levels.size() - 1; t >= 1; --t) {
    const Level& lev = spec.levels[t];
    const Big& n = lev.inner_length;
    const Big ra = aa % n;
    const Big rb = bb % n;
    if (ra < rb) {  // the inner sequence already refutes domination
      aa = ra;
      bb = rb;
      continue;
    }
    const Big two_n = 2 * n;
    const Big ja = aa % two_n;
    const Big jb = bb % two_n;
    // Proof cases: both offsets in the same half of their block use the
    // coordinate named by that half's monotone run.
    if (ja < n && jb < n) return lev.dim - 1;   // Y
    if (ja >= n && jb >= n) return lev.dim - 2;  // X
    if (ja >= n && jb < n) return lev.dim - 2;   // X
    return lev.dim - 1;                          // Y
  }
  const VecSeq base = base_sequence();
  const Vec& va = base[static_cast<std::size_t>(aa)];
  const Vec& vb = base[static_cast<std::size_t>(bb)];
  for (int l = 0; l < 2; ++l)
    if (va[l] > vb[l]) return l;
  throw std::logic_error("domination_witness: base sequence has no witness");
}

VecSeq binary_counter(int bits) {
  if (bits < 1) throw std::invalid_argument("binary_counter: bits must be >= 1");
  if (bits > 25)
    throw MaterializeRefused("binary_counter: result exceeds cell budget");
  const std::uint64_t len = std::uint64_t{1} << bits;
  VecSeq out(bits);
  out.vectors.reserve(len);
  for (std::uint64_t t = 0; t < len; ++t) {
    Vec v(bits);
    for (int l = 0; l < bits; ++l) {
      const std::uint64_t period = std::uint64_t{1} << l;
      v[l] = (t % (2 * period) < period) ? Big(t % period + 1) : Big(0);
    }
    out.vectors.push_back(std::move(v));
  }
  return out;
}

}  // namespace vecseq
