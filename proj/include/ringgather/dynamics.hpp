#pragma once

// Robot moves and the successor operator on configurations.

#include <cstdint>
#include <string>
#include <vector>

#include "ringgather/ring.hpp"

namespace ringgather {

enum class Move : std::uint8_t { Idle, CW, CCW };

using MoveTuple = std::vector<Move>;

const char* to_string(Move m);
Move parse_move(const std::string& s);

inline Move flip(Move m) {
  switch (m) {
    case Move::CW: return Move::CCW;
    case Move::CCW: return Move::CW;
    default: return m;
  }
}

// Effect of robot i's move on the gap tuple: CCW adds 1 to d_i and removes 1
// from d_{i-1}; CW the opposite; Idle is all zeros.
std::vector<int> move_vector(int i, Move m, int k);

// Reassigns moves so that summing move vectors never produces a gap below -1:
// inside a tower the CCW movers take the bottom (lowest) indices and the CW
// movers the top ones; across a zero gap, opposing movers cancel pairwise.
// Only the per-node counts of movers matter to the outcome, robots being
// anonymous.
MoveTuple reorganize(const Configuration& c, const MoveTuple& moves);

// c plus the move vectors of the reorganized tuple. Throws ContractError if
// the result is not a configuration (which would be a defect here).
Configuration successor(const Configuration& c, const MoveTuple& moves);

// The same tuple seen from mirror(c): robot i becomes robot (k - i) mod k and
// directions swap.
MoveTuple mirror_moves(const MoveTuple& moves);

int count_movers(const MoveTuple& moves);

}  // namespace ringgather
