#include "ringgather/dynamics.hpp"

#include <algorithm>

#include "ringgather/errors.hpp"

namespace ringgather {

const char* to_string(Move m) {
  switch (m) {
    case Move::Idle: return "IDLE";
    case Move::CW: return "CW";
    case Move::CCW: return "CCW";
  }
  return "?";
}

Move parse_move(const std::string& s) {
  if (s == "IDLE") return Move::Idle;
  if (s == "CW") return Move::CW;
  if (s == "CCW") return Move::CCW;
  throw ParamError("unknown move '" + s + "'");
}

std::vector<int> move_vector(int i, Move m, int k) {
  if (k < 1 || i < 0 || i >= k) {
    throw ContractError("robot index " + std::to_string(i) + " out of range for k = " + std::to_string(k));
  }
  std::vector<int> v(k, 0);
  const int prev = (i + k - 1) % k;
  switch (m) {
    case Move::CCW:
      v[i] += 1;
      v[prev] -= 1;
      break;
    case Move::CW:
      v[i] -= 1;
      v[prev] += 1;
      break;
    case Move::Idle:
      break;
  }
  return v;
}

namespace {

// Robots sharing a node, in cyclic index order first..first+size-1.
struct Block {
  int first = 0;
  int size = 1;
  int cw = 0;
  int ccw = 0;
};

// Maximal runs of -1 gaps plus their terminating robot, and isolated robots.
// Ordered by the block containing robot 0 first.
std::vector<Block> blocks_of(const Configuration& c) {
  const int k = c.k();
  // A block starts at robot i when the gap behind it is not -1. Some gap is
  // always != -1 since sum d_i = n - k > -k.
  int start = 0;
  while (c[start - 1] == -1) {
    --start;
  }
  std::vector<Block> blocks;
  int i = start;
  for (int seen = 0; seen < k;) {
    Block b;
    b.first = c.wrap(i);
    while (c[i] == -1) {
      ++b.size;
      ++i;
    }
    ++i;
    seen += b.size;
    blocks.push_back(b);
  }
  return blocks;
}

}  // namespace

MoveTuple reorganize(const Configuration& c, const MoveTuple& moves) {
  const int k = c.k();
  if (static_cast<int>(moves.size()) != k) {
    throw ContractError("move tuple length does not match " + c.str());
  }
  std::vector<Block> blocks = blocks_of(c);
  for (Block& b : blocks) {
    for (int j = 0; j < b.size; ++j) {
      const Move m = moves[c.wrap(b.first + j)];
      b.cw += m == Move::CW;
      b.ccw += m == Move::CCW;
    }
  }
  // Opposing movers across a zero gap swap nodes, which for anonymous robots
  // is the same as neither moving. Each block's CW run only meets the next
  // block's CCW run, so the cancellations are independent.
  const int nb = static_cast<int>(blocks.size());
  std::vector<int> cw_left(nb), ccw_left(nb);
  for (int b = 0; b < nb; ++b) {
    cw_left[b] = blocks[b].cw;
    ccw_left[b] = blocks[b].ccw;
  }
  if (nb > 1) {
    for (int b = 0; b < nb; ++b) {
      const Block& here = blocks[b];
      const int nx = (b + 1) % nb;
      if (c[here.first + here.size - 1] != 0) {
        continue;
      }
      const int cancelled = std::min(here.cw, blocks[nx].ccw);
      cw_left[b] -= cancelled;
      ccw_left[nx] -= cancelled;
    }
  }
  MoveTuple out(k, Move::Idle);
  for (int b = 0; b < nb; ++b) {
    const Block& blk = blocks[b];
    for (int j = 0; j < ccw_left[b]; ++j) {
      out[c.wrap(blk.first + j)] = Move::CCW;
    }
    for (int j = 0; j < cw_left[b]; ++j) {
      out[c.wrap(blk.first + blk.size - 1 - j)] = Move::CW;
    }
  }
  return out;
}

Configuration successor(const Configuration& c, const MoveTuple& moves) {
  const MoveTuple fin = reorganize(c, moves);
  const int k = c.k();
  Gaps g = c.gaps();
  for (int i = 0; i < k; ++i) {
    const int prev = (i + k - 1) % k;
    if (fin[i] == Move::CW) {
      g[i] -= 1;
      g[prev] += 1;
    } else if (fin[i] == Move::CCW) {
      g[i] += 1;
      g[prev] -= 1;
    }
  }
  const int n = c.n();
  for (int d : g) {
    if (d < -1 || d > n - 1) {
      throw ContractError("successor of " + c.str() + " produced an invalid gap");
    }
  }
  return Configuration(std::move(g));
}

MoveTuple mirror_moves(const MoveTuple& moves) {
  const int k = static_cast<int>(moves.size());
  MoveTuple out(k);
  for (int i = 0; i < k; ++i) {
    out[(k - i) % k] = flip(moves[i]);
  }
  return out;
}

int count_movers(const MoveTuple& moves) {
  return static_cast<int>(std::count_if(moves.begin(), moves.end(), [](Move m) { return m != Move::Idle; }));
}

}  // namespace ringgather
