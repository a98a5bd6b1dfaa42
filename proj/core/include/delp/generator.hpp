#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>

#include "delp/program.hpp"

namespace delp {

struct GeneratorParams {
  std::size_t num_atoms = 8;
  std::size_t num_strict = 4;
  std::size_t num_defeasible = 12;
  std::size_t max_body = 2;
  double negation_prob = 0.3;
  std::uint64_t seed = 1;
  std::size_t max_retries = 200;
};

class GeneratorError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Random propositional program over atoms a0..a{n-1}; deterministic in the
/// seed. Each defeasible head is, with probability negation_prob, the
/// complement of an earlier defeasible head, which keeps conflicts frequent.
/// Π is redrawn until non-contradictory.
Program generate_program(const GeneratorParams& params);

}  // namespace delp
