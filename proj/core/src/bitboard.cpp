#include "sable/bitboard.hpp"

namespace sable::bb {

Bitboard knight_attacks[64];
Bitboard king_attacks[64];
Bitboard pawn_attacks[2][64];
Bitboard ray[8][64];
Bitboard between[64][64];
Bitboard line[64][64];

namespace {

constexpr int dir_df[8] = { 0, 1, 1, 1, 0, -1, -1, -1 };
constexpr int dir_dr[8] = { 1, 1, 0, -1, -1, -1, 0, 1 };

bool on_board(int f, int r) { return f >= 0 && f < 8 && r >= 0 && r < 8; }

Bitboard step_targets(Square s, const int (*deltas)[2], int n) {
    Bitboard b = 0;
    int f = file_of(s), r = rank_of(s);
    for (int i = 0; i < n; i++) {
        int nf = f + deltas[i][0], nr = r + deltas[i][1];
        if (on_board(nf, nr)) b |= square_bb(make_square(nf, nr));
    }
    return b;
}

struct Init {
    Init() {
        constexpr int knight_d[8][2] = { {1,2},{2,1},{2,-1},{1,-2},{-1,-2},{-2,-1},{-2,1},{-1,2} };
        constexpr int king_d[8][2]   = { {0,1},{1,1},{1,0},{1,-1},{0,-1},{-1,-1},{-1,0},{-1,1} };
        for (Square s = 0; s < 64; s++) {
            knight_attacks[s] = step_targets(s, knight_d, 8);
            king_attacks[s] = step_targets(s, king_d, 8);
            int f = file_of(s), r = rank_of(s);
            pawn_attacks[WHITE][s] = 0;
            pawn_attacks[BLACK][s] = 0;
            if (on_board(f - 1, r + 1)) pawn_attacks[WHITE][s] |= square_bb(make_square(f - 1, r + 1));
            if (on_board(f + 1, r + 1)) pawn_attacks[WHITE][s] |= square_bb(make_square(f + 1, r + 1));
            if (on_board(f - 1, r - 1)) pawn_attacks[BLACK][s] |= square_bb(make_square(f - 1, r - 1));
            if (on_board(f + 1, r - 1)) pawn_attacks[BLACK][s] |= square_bb(make_square(f + 1, r - 1));
            for (int d = 0; d < 8; d++) {
                Bitboard b = 0;
                int cf = f + dir_df[d], cr = r + dir_dr[d];
                while (on_board(cf, cr)) {
                    b |= square_bb(make_square(cf, cr));
                    cf += dir_df[d];
                    cr += dir_dr[d];
                }
                ray[d][s] = b;
            }
        }
        for (Square a = 0; a < 64; a++)
            for (int d = 0; d < 8; d++) {
                Bitboard targets = ray[d][a];
                Bitboard walked = 0;
                int f = file_of(a) + dir_df[d], r = rank_of(a) + dir_dr[d];
                while (on_board(f, r)) {
                    Square b = make_square(f, r);
                    between[a][b] = walked;
                    line[a][b] = square_bb(a) | targets | ray[d ^ 4][a];
                    walked |= square_bb(b);
                    f += dir_df[d];
                    r += dir_dr[d];
                }
            }
    }
} init_tables;

} // namespace

void init() {} // tables are built by static initialization; kept for explicit-call sites

Bitboard sliding_attacks(Square s, Bitboard occupied, const Direction* dirs, int n_dirs) {
    Bitboard attacks = 0;
    for (int i = 0; i < n_dirs; i++) {
        Direction d = dirs[i];
        Bitboard r = ray[d][s];
        Bitboard blockers = r & occupied;
        if (blockers) {
            // The nearest blocker cuts the ray; keep it, drop everything past it.
            Square first = (d == DIR_N || d == DIR_NE || d == DIR_E || d == DIR_NW)
                               ? lsb(blockers)
                               : Square(63 - std::countl_zero(blockers));
            r &= ~ray[d][first];
        }
        attacks |= r;
    }
    return attacks;
}

Bitboard bishop_attacks(Square s, Bitboard occupied) {
    static constexpr Direction dirs[4] = { DIR_NE, DIR_SE, DIR_SW, DIR_NW };
    return sliding_attacks(s, occupied, dirs, 4);
}

Bitboard rook_attacks(Square s, Bitboard occupied) {
    static constexpr Direction dirs[4] = { DIR_N, DIR_E, DIR_S, DIR_W };
    return sliding_attacks(s, occupied, dirs, 4);
}

Bitboard queen_attacks(Square s, Bitboard occupied) {
    return bishop_attacks(s, occupied) | rook_attacks(s, occupied);
}

} // namespace sable::bb
