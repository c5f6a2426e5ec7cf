#pragma once

#include <stdexcept>
#include <string>

namespace symdist {

// Raised when a computed object breaks a structural guarantee of the model
// (route disagreement, a Fourier multiplicity outside {0,1}, a non-integral
// decomposition). `object` carries the offending value serialized as text.
class ModelViolation : public std::runtime_error {
 public:
  ModelViolation(const std::string& what, std::string object)
      : std::runtime_error(what), object_(std::move(object)) {}

  const std::string& object() const noexcept { return object_; }

 private:
  std::string object_;
};

}  // namespace symdist
