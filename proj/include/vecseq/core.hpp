#ifndef VECSEQ_CORE_HPP
#define VECSEQ_CORE_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <vector>

namespace vecseq {

// Coordinate values are nonnegative and can exceed any machine word once the
// construction is stacked a few levels deep, so everything is cpp_int.
using Big = boost::multiprecision::cpp_int;

using Vec = std::vector<Big>;

// An ordered list of same-dimension vectors. The empty sequence is legal and
// vacuously valid/cyclic/non-dominating.
struct VecSeq {
  int dim = 0;
  std::vector<Vec> vectors;

  VecSeq() = default;
  explicit VecSeq(int d) : dim(d) {
    if (d < 1) throw std::invalid_argument("VecSeq: dim must be >= 1");
  }

  std::size_t length() const { return vectors.size(); }

  void push(Vec v) {
    if (static_cast<int>(v.size()) != dim)
      throw std::invalid_argument("VecSeq::push: dimension mismatch");
    vectors.push_back(std::move(v));
  }

  const Vec& operator[](std::size_t i) const { return vectors[i]; }
};

// Step relation on a single coordinate: either increment by one or reset to 0.
// Staying unchanged is not a legal step.
inline bool step_ok(const Big& a, const Big& b) { return b == 0 || b == a + 1; }

// Coordinatewise step relation.
bool vec_step_ok(const Vec& v, const Vec& w);

// Domination order: true iff w dominates v in every coordinate.
bool leq(const Vec& v, const Vec& w);

}  // namespace vecseq

#endif
