#include "shc/liecore/maurer_cartan.hpp"

namespace shc {

MaurerCartan<Rational> maurer_cartan(const MatrixGroup& g, const Matrix<Rational>& point,
                                     const Matrix<Rational>& v) {
  if (!g.contains(point)) throw NotOnSpace("point is not in " + g.name());
  if (!g.is_tangent(point, v)) throw TangencyError("vector is not tangent to " + g.name() + " at the point");
  return maurer_cartan_with_inverse(inverse(point), v);
}

}  // namespace shc
