#pragma once

#include <stdexcept>
#include <string>

namespace romdom {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define ROMDOM_ERROR(Name)               \
  class Name : public Error {            \
   public:                               \
    using Error::Error;                  \
  }

ROMDOM_ERROR(ParseError);
ROMDOM_ERROR(RangeError);          // vertex ID out of range
ROMDOM_ERROR(DuplicateEdgeError);
ROMDOM_ERROR(SelfLoopError);
ROMDOM_ERROR(ParameterError);      // generator / config parameter out of range
ROMDOM_ERROR(ResampleCapError);
ROMDOM_ERROR(LengthMismatchError); // profile length != vertex count
ROMDOM_ERROR(IsolatedVertexError);
ROMDOM_ERROR(SizeCapError);        // brute-force scan refused
ROMDOM_ERROR(NotATreeError);
ROMDOM_ERROR(CapExceededError);    // solver hit its round cap
ROMDOM_ERROR(PreconditionError);
ROMDOM_ERROR(SegmentBoundaryError);
ROMDOM_ERROR(InternalError);
ROMDOM_ERROR(ExperimentError);   // wraps a failure with (n, sample, seed) context

#undef ROMDOM_ERROR

}  // namespace romdom
