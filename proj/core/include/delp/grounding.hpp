#pragma once

#include <stdexcept>
#include <string>

#include "delp/program.hpp"

namespace delp {

class GroundingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Herbrand instantiation over `p.constants`.
///
/// Every rule is replaced by all of its instances; ground rules pass through
/// unchanged, so grounding is idempotent. A rule is unsafe, and rejected, when
/// a head variable does not occur in its body.
Program ground_program(const Program& p);

}  // namespace delp
