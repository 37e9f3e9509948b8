#pragma once

#include <stdexcept>
#include <string>

namespace rtex {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

#define RTEX_DEFINE_ERROR(Name)                                                \
    class Name : public Error {                                                \
      public:                                                                  \
        explicit Name(const std::string& what) : Error(#Name ": " + what) {}  \
    }

RTEX_DEFINE_ERROR(MalformedInput);
RTEX_DEFINE_ERROR(CapacityExceeded);
RTEX_DEFINE_ERROR(NotTriangleFree);
RTEX_DEFINE_ERROR(NegativeWeight);
RTEX_DEFINE_ERROR(NotRegular);
RTEX_DEFINE_ERROR(AsymmetricConnectionSet);
RTEX_DEFINE_ERROR(NotIndependent);
RTEX_DEFINE_ERROR(EmptySet);
RTEX_DEFINE_ERROR(BadParams);
RTEX_DEFINE_ERROR(OutOfRange);
RTEX_DEFINE_ERROR(Infeasible);
RTEX_DEFINE_ERROR(ResourceLimit);

#undef RTEX_DEFINE_ERROR

} // namespace rtex
