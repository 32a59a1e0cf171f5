#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mulab {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// Error taxonomy. Everything user-facing derives from Error so the CLI can
// map failures onto exit codes.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ShapeError : Error {
  using Error::Error;
};

struct NumericError : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

struct DegenerateSplitError : Error {
  using Error::Error;
};

// Carries the step index at which training blew up.
struct TrainingDivergedError : Error {
  int step;
  explicit TrainingDivergedError(int step_)
      : Error("training diverged at step " + std::to_string(step_)), step(step_) {}
};

// Iterative solver failed to reach its tolerance; keeps the last estimate so
// callers can still inspect it.
struct ToleranceError : Error {
  double last_estimate;
  double residual;
  ToleranceError(const std::string& what, double estimate, double resid)
      : Error(what), last_estimate(estimate), residual(resid) {}
};

struct SingularHessianError : Error {
  using Error::Error;
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw Error(msg);
}

inline void require_shape(bool cond, const std::string& msg) {
  if (!cond) throw ShapeError(msg);
}

// FNV-1a, used to fingerprint model specs in serialized artifacts.
inline std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace mulab
