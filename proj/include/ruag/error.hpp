#pragma once

#include <stdexcept>
#include <string>

namespace ruag {

// Base class for every error raised by the library. Callers that only need a
// message can catch this; the subclasses carry structured context.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ruag
