#pragma once

#include <bit>
#include <cstdint>

#include "sable/types.hpp"

namespace sable {

using Bitboard = uint64_t;

constexpr Bitboard square_bb(Square s) { return 1ULL << s; }

constexpr Bitboard FILE_A_BB = 0x0101010101010101ULL;
constexpr Bitboard RANK_1_BB = 0xFFULL;

constexpr Bitboard file_bb(int f) { return FILE_A_BB << f; }
constexpr Bitboard rank_bb(int r) { return RANK_1_BB << (8 * r); }

inline int popcount(Bitboard b) { return std::popcount(b); }
inline Square lsb(Bitboard b) { return Square(std::countr_zero(b)); }

inline Square pop_lsb(Bitboard& b) {
    Square s = lsb(b);
    b &= b - 1;
    return s;
}

// Ray directions, clockwise from north. Knights and kings use lookup tables.
enum Direction : int { DIR_N = 0, DIR_NE, DIR_E, DIR_SE, DIR_S, DIR_SW, DIR_W, DIR_NW };

namespace bb {

// Precomputed attack tables, filled once at startup.
extern Bitboard knight_attacks[64];
extern Bitboard king_attacks[64];
extern Bitboard pawn_attacks[2][64];   // squares a pawn of color c on s attacks
extern Bitboard ray[8][64];            // open-board ray from s in direction d (exclusive of s)
extern Bitboard between[64][64];       // squares strictly between two aligned squares, else 0
extern Bitboard line[64][64];          // full line through two aligned squares, else 0

void init();

// Sliding attacks with blockers; the first blocker square is included.
Bitboard sliding_attacks(Square s, Bitboard occupied, const Direction* dirs, int n_dirs);
Bitboard bishop_attacks(Square s, Bitboard occupied);
Bitboard rook_attacks(Square s, Bitboard occupied);
Bitboard queen_attacks(Square s, Bitboard occupied);

} // namespace bb

} // namespace sable
