#pragma once

#include <stdexcept>
#include <string>

namespace cw {

// Base of every error raised by the library. kind() is the stable,
// machine-readable name that the CLI reports.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "Error"; }
};

#define CW_DEFINE_ERROR(Name)                                         \
  class Name : public Error {                                         \
   public:                                                            \
    using Error::Error;                                               \
    const char* kind() const noexcept override { return #Name; }      \
  }

// core
CW_DEFINE_ERROR(PoleError);
CW_DEFINE_ERROR(CapacityError);
CW_DEFINE_ERROR(ToleranceError);
CW_DEFINE_ERROR(UnitError);
// reuleaux2d
CW_DEFINE_ERROR(ParityError);
CW_DEFINE_ERROR(DiameterError);
CW_DEFINE_ERROR(ArcConditionError);
CW_DEFINE_ERROR(SymmetryError);
CW_DEFINE_ERROR(BoundaryBandError);
CW_DEFINE_ERROR(GridError);
// ballpoly3d
CW_DEFINE_ERROR(PointSetError);
CW_DEFINE_ERROR(BoundViolation);
CW_DEFINE_ERROR(DegenerateError);
CW_DEFINE_ERROR(NotExtremalError);
CW_DEFINE_ERROR(CombinatoricsError);
// meissner3d
CW_DEFINE_ERROR(ChoiceLengthError);
CW_DEFINE_ERROR(NotSymmetricError);
CW_DEFINE_ERROR(RadiusError);
CW_DEFINE_ERROR(GeneratorError);
// support3d
CW_DEFINE_ERROR(NonConvergence);
CW_DEFINE_ERROR(ClassificationError);
CW_DEFINE_ERROR(ParamError);
CW_DEFINE_ERROR(RangeError);
// extremality
CW_DEFINE_ERROR(RegionError);
// toolkit
CW_DEFINE_ERROR(OpenMeshError);
CW_DEFINE_ERROR(SpecError);

#undef CW_DEFINE_ERROR

}  // namespace cw
