#pragma once

#include <stdexcept>
#include <string>

namespace mstep {

// Raised for malformed input: out-of-range vertices, unparsable files,
// invalid step counts or unknown claim ids.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mstep
