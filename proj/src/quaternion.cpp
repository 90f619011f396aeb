#include "hyperfourier/quaternion.hpp"

#include <cmath>
#include <string>

#include "hyperfourier/errors.hpp"

namespace hyperfourier {

Quaternion axis_exp(const Quaternion& axis, double angle) {
  constexpr double tol = 1e-12;
  if (std::fabs(axis.r) > tol || std::fabs(norm(axis) - 1.0) > tol) {
    throw PreconditionError("axis_exp: axis must be a pure unit quaternion (got |axis| = " +
                            std::to_string(norm(axis)) + ", scalar part " + std::to_string(axis.r) + ")");
  }
  return Quaternion(std::cos(angle)) + axis * std::sin(angle);
}

}  // namespace hyperfourier
