#include "vecseq/core.hpp"

namespace vecseq {

bool vec_step_ok(const Vec& v, const Vec& w) {
  if (v.size() != w.size())
    throw std::invalid_argument("vec_step_ok: dimension mismatch");
  for (std::size_t l = 0; l < v.size(); ++l)
    if (!step_ok(v[l], w[l])) return false;
  return true;
}

bool leq(const Vec& v, const Vec& w) {
  if (v.size() != w.size()) throw std::invalid_argument("leq: dimension mismatch");
  for (std::size_t l = 0; l < v.size(); ++l)
    if (v[l] > w[l]) return false;
  return true;
}

}  // namespace vecseq
