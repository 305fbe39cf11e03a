// The two example pairs of the smallest zeta-equivalent digraphs and the
// 9-vertex zeta-equivalent graphs with zeta-equivalent complements.
#pragma once

#include <string>
#include <vector>

#include "zetaeq/digraph.hpp"
#include "zetaeq/switching.hpp"

namespace zetaeq {

Digraph fig1a_left();
Digraph fig1a_right();
Digraph fig1b_left();
Digraph fig1b_right();
/// V1 = {1,2}, V1' = {3,4}, V2 = {5,6}, V2' = {7,8}, X = {9}, phi(v) = v + 2 (1-based).
SwitchingPartition fig1b_partition();

struct FigureCheck {
  std::string name;
  bool passed;
  double seconds;
};

/// Every exact check on the example pairs, in a fixed order.
std::vector<FigureCheck> reproduce_figures();

}  // namespace zetaeq
