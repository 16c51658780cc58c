#include "sable/features.hpp"

namespace sable {

namespace {

// slot index of the first slot for a piece kind, per side; -1 marks kinds
// without slots beyond the fixed ones
struct SlotPlan {
    PieceType kind;
    int first_slot;
    int count;
};
constexpr SlotPlan PLAN[] = {
    { KING, 0, 1 }, { QUEEN, 1, 1 }, { ROOK, 2, 2 }, { BISHOP, 4, 2 }, { KNIGHT, 6, 2 },
};

} // namespace

SlotAssignment assign_slots(const Position& p) {
    SlotAssignment a;
    a.squares.fill(NO_SQUARE);
    for (Color c : { WHITE, BLACK }) {
        const int base = c == WHITE ? 0 : 16;
        for (const auto& plan : PLAN) {
            Bitboard pieces = p.pieces(c, plan.kind); // ascending square order
            for (int i = 0; i < plan.count && pieces; i++)
                a.squares[base + plan.first_slot + i] = pop_lsb(pieces);
        }
        // Pawns prefer the slot matching their file; collisions spill to the
        // nearest free slot to the right, then to the left.
        bool taken[8] = {};
        std::array<Square, 8> by_file_rank;
        int n = 0;
        for (int file = 0; file < 8; file++) {
            Bitboard pawns = p.pieces(c, PAWN) & file_bb(file);
            while (pawns) by_file_rank[size_t(n++)] = pop_lsb(pawns);
        }
        for (int i = 0; i < n; i++) {
            int pref = file_of(by_file_rank[size_t(i)]);
            int chosen = -1;
            for (int s = pref; s < 8; s++)
                if (!taken[s]) { chosen = s; break; }
            if (chosen < 0)
                for (int s = pref - 1; s >= 0; s--)
                    if (!taken[s]) { chosen = s; break; }
            if (chosen < 0) continue; // more than 8 pawns is impossible, but stay safe
            taken[chosen] = true;
            a.squares[base + 8 + chosen] = by_file_rank[size_t(i)];
        }
    }
    return a;
}

int lowest_attacker(const Position& p, Square s, Color by) {
    const Bitboard occ = p.occupied();
    if (bb::pawn_attacks[~by][s] & p.pieces(by, PAWN)) return 1;
    if (bb::knight_attacks[s] & p.pieces(by, KNIGHT)) return 2;
    const Bitboard diag = bb::bishop_attacks(s, occ);
    if (diag & p.pieces(by, BISHOP)) return 3;
    const Bitboard orth = bb::rook_attacks(s, occ);
    if (orth & p.pieces(by, ROOK)) return 4;
    if ((diag | orth) & p.pieces(by, QUEEN)) return 5;
    if (bb::king_attacks[s] & p.pieces(by, KING)) return 6;
    return 0;
}

AttackDefendMaps attack_defend_maps(const Position& p) {
    AttackDefendMaps maps;
    for (Square s = 0; s < 64; s++) {
        maps.by[WHITE][s] = uint8_t(lowest_attacker(p, s, WHITE));
        maps.by[BLACK][s] = uint8_t(lowest_attacker(p, s, BLACK));
    }
    return maps;
}

std::array<int, 8> slide_mobility(const Position& p, Square s, PieceType pt) {
    static constexpr Direction queen_dirs[8] = { DIR_N, DIR_NE, DIR_E, DIR_SE, DIR_S, DIR_SW, DIR_W, DIR_NW };
    static constexpr Direction rook_dirs[4] = { DIR_N, DIR_E, DIR_S, DIR_W };
    static constexpr Direction bishop_dirs[4] = { DIR_NE, DIR_SE, DIR_SW, DIR_NW };
    const Direction* dirs = pt == QUEEN ? queen_dirs : pt == ROOK ? rook_dirs : bishop_dirs;
    const int n = pt == QUEEN ? 8 : 4;
    const Bitboard occ = p.occupied();
    std::array<int, 8> out = {};
    for (int i = 0; i < n; i++) {
        Bitboard r = bb::ray[dirs[i]][s];
        Bitboard blockers = r & occ;
        if (!blockers) {
            out[size_t(i)] = popcount(r);
        } else {
            Square first = (dirs[i] == DIR_N || dirs[i] == DIR_NE || dirs[i] == DIR_E || dirs[i] == DIR_NW)
                               ? lsb(blockers)
                               : Square(63 - std::countl_zero(blockers));
            out[size_t(i)] = popcount(bb::between[s][first]);
        }
    }
    return out;
}

FeatureVector extract(const Position& p) {
    const FeatureLayout& L = board_layout();
    FeatureVector f(size_t(L.total), 0.0f);
    int i = 0;

    f[size_t(i++)] = p.side_to_move() == WHITE ? 1.0f : 0.0f;
    f[size_t(i++)] = (p.castling_rights() & WHITE_OOO) ? 1.0f : 0.0f;
    f[size_t(i++)] = (p.castling_rights() & WHITE_OO) ? 1.0f : 0.0f;
    f[size_t(i++)] = (p.castling_rights() & BLACK_OOO) ? 1.0f : 0.0f;
    f[size_t(i++)] = (p.castling_rights() & BLACK_OO) ? 1.0f : 0.0f;
    for (Color c : { WHITE, BLACK })
        for (PieceType pt : { QUEEN, ROOK, BISHOP, KNIGHT, PAWN })
            f[size_t(i++)] = float(popcount(p.pieces(c, pt)));

    const SlotAssignment slots = assign_slots(p);
    const AttackDefendMaps maps = attack_defend_maps(p);

    for (int slot = 0; slot < 32; slot++) {
        Square s = slots.squares[size_t(slot)];
        if (s == NO_SQUARE) {
            i += 5;
            continue;
        }
        Color own = slot < 16 ? WHITE : BLACK;
        f[size_t(i + 0)] = 1.0f;
        f[size_t(i + 1)] = float(file_of(s)) / 7.0f;
        f[size_t(i + 2)] = float(rank_of(s)) / 7.0f;
        f[size_t(i + 3)] = float(maps.by[~own][s]) / 6.0f;
        f[size_t(i + 4)] = float(maps.by[own][s]) / 6.0f;
        i += 5;
    }

    for (int side = 0; side < 2; side++) {
        const int base = side == 0 ? 0 : 16;
        static constexpr struct { int slot; PieceType kind; int dirs; } SLIDERS[] = {
            { 1, QUEEN, 8 }, { 2, ROOK, 4 }, { 3, ROOK, 4 }, { 4, BISHOP, 4 }, { 5, BISHOP, 4 },
        };
        for (const auto& sl : SLIDERS) {
            Square s = slots.squares[size_t(base + sl.slot)];
            if (s == NO_SQUARE) {
                i += sl.dirs;
                continue;
            }
            auto mob = slide_mobility(p, s, sl.kind);
            for (int d = 0; d < sl.dirs; d++) f[size_t(i++)] = float(mob[size_t(d)]) / 7.0f;
        }
    }

    for (int side = 0; side < 2; side++)
        for (Square s = 0; s < 64; s++)
            f[size_t(i++)] = float(maps.by[side][s]) / 6.0f;

    SABLE_ASSERT(i == L.total);
    return f;
}

} // namespace sable
