#pragma once

#include <optional>
#include <string>

#include "sable/movegen.hpp"
#include "sable/position.hpp"

namespace sable {

// Long algebraic ("e2e4", "e7e8q") used by UCI and the game-record format.
std::string move_to_uci(Move m);
std::optional<Move> move_from_uci(const Position& p, const std::string& text);

// Standard algebraic with disambiguation ("Nbd2", "exd5", "O-O", "e8=Q+").
std::string move_to_san(const Position& p, Move m);

// Accepts SAN or long algebraic; decoration (+, #, !, ?) is ignored.
std::optional<Move> parse_move(const Position& p, const std::string& text);

} // namespace sable
