#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

#include <stdexcept>
#include <string>

namespace fluxcomm {

template <typename Scalar>
using Vec3T = Eigen::Matrix<Scalar, 3, 1>;

using Vec3 = Vec3T<double>;

/// Length tolerance for coincidence and degeneracy tests.
inline constexpr double kTolGeom = 1e-9;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kFourPi = 4.0 * kPi;

template <typename Derived>
bool all_finite(const Eigen::MatrixBase<Derived>& v) {
  return v.allFinite();
}

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad parameters, invalid mesh or loop data.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

class NoBoundary : public Error {
 public:
  using Error::Error;
};

class MultipleBoundaryComponents : public Error {
 public:
  using Error::Error;
};

class InconsistentOrientation : public Error {
 public:
  using Error::Error;
};

/// A segment touches a triangle edge/vertex, lies in its plane, or ends on it.
class DegenerateIncidence : public Error {
 public:
  using Error::Error;
};

class PointOnSurface : public Error {
 public:
  using Error::Error;
};

class LoopsTouch : public Error {
 public:
  using Error::Error;
};

class DeformationFailed : public Error {
 public:
  using Error::Error;
};

class EpsTooLarge : public Error {
 public:
  using Error::Error;
};

class NonpositiveInput : public Error {
 public:
  using Error::Error;
};

}  // namespace fluxcomm
