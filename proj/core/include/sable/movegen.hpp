#pragma once

#include <vector>

#include "sable/position.hpp"

namespace sable {

enum class GenMode {
    All,     // every legal move
    Forcing, // the quiescence set: captures plus non-capture queen promotions
};

// Fully legal move generation. A terminal position yields an empty list.
std::vector<Move> generate_moves(const Position& p, GenMode mode = GenMode::All);

GameState game_state(const Position& p);

uint64_t perft(const Position& p, int depth);

} // namespace sable
