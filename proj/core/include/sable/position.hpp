#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sable/bitboard.hpp"
#include "sable/types.hpp"

namespace sable {

// Immutable-by-convention game state. apply() is copy-make: the board, clocks
// and repetition history travel with the value, which keeps search code and
// multi-threaded self-play free of shared mutable state.
class Position {
public:
    Position();

    static Position startpos();

    Piece piece_on(Square s) const { return board_[s]; }
    Bitboard pieces(Color c) const { return by_color_[c]; }
    Bitboard pieces(Color c, PieceType pt) const { return by_type_[pt] & by_color_[c]; }
    Bitboard pieces(PieceType pt) const { return by_type_[pt]; }
    Bitboard occupied() const { return by_color_[WHITE] | by_color_[BLACK]; }

    Color side_to_move() const { return stm_; }
    int castling_rights() const { return castling_; }
    Square ep_square() const { return ep_square_; }
    int halfmove_clock() const { return halfmove_clock_; }
    int fullmove_number() const { return fullmove_number_; }
    uint64_t hash() const { return hash_; }

    Square king_square(Color c) const { return lsb(pieces(c, KING)); }

    Bitboard attackers_to(Square s, Bitboard occ, Color by) const;
    bool is_attacked(Square s, Color by) const { return attackers_to(s, occupied(), by) != 0; }
    bool in_check() const { return is_attacked(king_square(stm_), ~stm_); }

    Position apply(Move m) const;

    // Hashes of predecessor positions since the last irreversible move,
    // oldest first; the current position's own hash is not included.
    const std::vector<uint64_t>& history() const { return history_; }
    int repetition_count() const; // occurrences of the current position, self included

    bool insufficient_material() const;

    // Invariant check; returns empty string when the position is legal
    // enough to play from (used by the FEN parser and debug builds).
    std::string validate() const;

    uint64_t compute_hash_from_scratch() const;

    bool operator==(const Position& o) const;

    // Board construction, used by the FEN parser.
    struct Builder {
        Piece board[64] = {};
        Color stm = WHITE;
        int castling = 0;
        Square ep_square = NO_SQUARE;
        int halfmove_clock = 0;
        int fullmove_number = 1;
        Position build() const; // computes bitboards + hash, no validation
    };

private:
    Bitboard by_color_[2];
    Bitboard by_type_[7]; // indexed by PieceType, [0] unused
    Piece board_[64];
    Color stm_;
    int castling_;
    Square ep_square_;
    int halfmove_clock_;
    int fullmove_number_;
    uint64_t hash_;
    std::vector<uint64_t> history_;

    void put_piece(Piece p, Square s);
    void remove_piece(Square s);
    void move_piece(Square from, Square to);
};

} // namespace sable
