#pragma once

#include <stdexcept>
#include <string>

namespace posetsys {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define POSETSYS_ERROR(Name)          \
  class Name : public Error {         \
   public:                            \
    using Error::Error;               \
  }

POSETSYS_ERROR(CycleError);
POSETSYS_ERROR(PartitionMismatch);
POSETSYS_ERROR(IncompatibleShapes);
POSETSYS_ERROR(StructureViolation);
POSETSYS_ERROR(SingularMatrix);
POSETSYS_ERROR(DownSetNotContained);
POSETSYS_ERROR(AmbientMismatch);
POSETSYS_ERROR(ShapeMismatch);
POSETSYS_ERROR(IndexOutOfRange);
POSETSYS_ERROR(SingularResolvent);
POSETSYS_ERROR(InclusionViolation);
POSETSYS_ERROR(DimensionMismatch);
POSETSYS_ERROR(NonFinite);
POSETSYS_ERROR(ParseError);
POSETSYS_ERROR(ValidationError);
POSETSYS_ERROR(IoError);
// An internal cross-check between two routes to the same quantity failed.
POSETSYS_ERROR(CrossCheckFailure);

#undef POSETSYS_ERROR

// Raised by pole placement; `block` is the node whose local pair is
// uncontrollable.
class NotWeaklyLocallyControllable : public Error {
 public:
  NotWeaklyLocallyControllable(int block, const std::string& what)
      : Error(what), block_(block) {}
  int block() const { return block_; }

 private:
  int block_;
};

}  // namespace posetsys
