#pragma once

#include <cstddef>
#include <vector>

#include "delp/argumentation_line.hpp"
#include "delp/reasoner.hpp"

namespace delp {

/// Every argument for every literal of the program. Throws
/// ResourceLimitExceeded past `cap` arguments.
std::vector<ArgumentId> all_arguments(Reasoner& r, std::size_t cap = 5000);

struct OracleAttack {
  ArgumentId attacker = 0;
  LiteralSet points;         // counterargument points
  LiteralSet defeat_points;  // points where it is a proper or blocking defeater
  bool acceptable = false;   // defeater that may extend the line
};

/// Brute-force view of how the last argument of `line` can be attacked,
/// ignoring every bound. The three sets hold attacker conclusions, each
/// contained in the previous one.
struct AttackPointsReport {
  LiteralSet counterarg;
  LiteralSet defeat;
  LiteralSet attack;
  std::vector<OracleAttack> attacks;
};

AttackPointsReport attack_points_oracle(Reasoner& r, const ArgumentationLine& line, std::size_t cap = 5000);

}  // namespace delp
