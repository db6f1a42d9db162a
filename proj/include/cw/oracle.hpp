#pragma once

#include <cstddef>
#include <memory>

#include "cw/support3d.hpp"

namespace cw {

struct OracleConfig {
  std::size_t arc_samples = 2048;  // per arc (endpoints included) or full circle
  int max_iter = 500;
  double tol_primal = 1e-10;  // allowed excess distance of the returned point

  /// Throws ParamError when arc_samples < 64 or a value is not positive.
  void validate() const;
};

struct NumericResult {
  double value;
  Vec3 point;
  int iterations;
};

/// Discretized generator set, reusable across directions.
class NumericOracle {
 public:
  NumericOracle(const GeneratorSet& g, const OracleConfig& cfg = {});
  ~NumericOracle();
  NumericOracle(NumericOracle&&) noexcept;
  NumericResult evaluate(const Vec3& u) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
  OracleConfig cfg_;
};

/// max { x . u : |x - s| <= 1 for every sample s of G } by cutting planes over
/// the samples. Throws NonConvergence at the iteration cap.
NumericResult support_numeric_detail(const GeneratorSet& g, const Vec3& u, const OracleConfig& cfg = {});
double support_numeric(const GeneratorSet& g, const Vec3& u, const OracleConfig& cfg = {});

SupportField numeric_field(const GeneratorSet& g, const OracleConfig& cfg = {});

}  // namespace cw
