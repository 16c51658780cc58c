#pragma once

#include <array>
#include <vector>

#include "sable/feature_layout.hpp"
#include "sable/position.hpp"

namespace sable {

using FeatureVector = std::vector<float>;

// 16 slots per side: K, Q, R1, R2, B1, B2, N1, N2, P1..P8. White slots
// 0..15, black 16..31. Promotion surplus beyond a kind's slot count is
// left unslotted (it still shows up in the material counts).
struct SlotAssignment {
    std::array<Square, 32> squares; // NO_SQUARE when the slot is empty
};

// Lowest-valued attacker of every square, for each attacking side.
// Ordinals: 0 none, 1 pawn, 2 knight, 3 bishop, 4 rook, 5 queen, 6 king.
// Attack reach is pseudo-legal: pins are ignored, en passant and castling
// do not count as attacks.
struct AttackDefendMaps {
    std::array<uint8_t, 64> by[2]; // indexed by attacking Color
};

SlotAssignment assign_slots(const Position& p);
AttackDefendMaps attack_defend_maps(const Position& p);
int lowest_attacker(const Position& p, Square s, Color by);

// Free-square counts along each ray before the board edge or any piece
// (the blocker square itself is not counted). Queens report all 8
// directions in N,NE,E,SE,S,SW,W,NW order; rooks N,E,S,W; bishops
// NE,SE,SW,NW. Unused trailing entries are zero.
std::array<int, 8> slide_mobility(const Position& p, Square s, PieceType pt);

FeatureVector extract(const Position& p);

} // namespace sable
