#pragma once

#include <stdexcept>

namespace fock2 {

// Requested crystal image does not exist (an intermediate shift was invalid).
struct NotInCrystalImage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A postcondition the library guarantees failed; indicates a bug, never a
// bad input.
struct InternalConsistencyError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace fock2
