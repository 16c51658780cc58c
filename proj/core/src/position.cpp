#include "sable/position.hpp"

#include <algorithm>

#include "sable/zobrist.hpp"

namespace sable {

namespace {

// Castling rights that survive a move touching the given square.
int rights_mask(Square s) {
    switch (s) {
    case 0:  return ALL_CASTLING & ~WHITE_OOO; // a1
    case 4:  return ALL_CASTLING & ~(WHITE_OO | WHITE_OOO); // e1
    case 7:  return ALL_CASTLING & ~WHITE_OO; // h1
    case 56: return ALL_CASTLING & ~BLACK_OOO; // a8
    case 60: return ALL_CASTLING & ~(BLACK_OO | BLACK_OOO); // e8
    case 63: return ALL_CASTLING & ~BLACK_OO; // h8
    default: return ALL_CASTLING;
    }
}

} // namespace

Position::Position()
    : by_color_{ 0, 0 }, by_type_{}, board_{}, stm_(WHITE), castling_(0),
      ep_square_(NO_SQUARE), halfmove_clock_(0), fullmove_number_(1), hash_(0) {}

Position Position::startpos() {
    Builder b;
    constexpr PieceType back_rank[8] = { ROOK, KNIGHT, BISHOP, QUEEN, KING, BISHOP, KNIGHT, ROOK };
    for (int f = 0; f < 8; f++) {
        b.board[make_square(f, 0)] = make_piece(WHITE, back_rank[f]);
        b.board[make_square(f, 1)] = W_PAWN;
        b.board[make_square(f, 6)] = B_PAWN;
        b.board[make_square(f, 7)] = make_piece(BLACK, back_rank[f]);
    }
    b.castling = ALL_CASTLING;
    return b.build();
}

Position Position::Builder::build() const {
    Position p;
    for (Square s = 0; s < 64; s++)
        if (board[s] != NO_PIECE) p.put_piece(board[s], s);
    p.stm_ = stm;
    p.castling_ = castling;
    p.ep_square_ = ep_square;
    p.halfmove_clock_ = halfmove_clock;
    p.fullmove_number_ = fullmove_number;
    p.hash_ = p.compute_hash_from_scratch();
    return p;
}

void Position::put_piece(Piece p, Square s) {
    board_[s] = p;
    by_color_[color_of(p)] |= square_bb(s);
    by_type_[type_of(p)] |= square_bb(s);
}

void Position::remove_piece(Square s) {
    Piece p = board_[s];
    board_[s] = NO_PIECE;
    by_color_[color_of(p)] &= ~square_bb(s);
    by_type_[type_of(p)] &= ~square_bb(s);
}

void Position::move_piece(Square from, Square to) {
    Piece p = board_[from];
    remove_piece(from);
    put_piece(p, to);
}

Bitboard Position::attackers_to(Square s, Bitboard occ, Color by) const {
    Bitboard att = bb::pawn_attacks[~by][s] & pieces(by, PAWN);
    att |= bb::knight_attacks[s] & pieces(by, KNIGHT);
    att |= bb::king_attacks[s] & pieces(by, KING);
    Bitboard diag = bb::bishop_attacks(s, occ);
    Bitboard orth = bb::rook_attacks(s, occ);
    att |= diag & (pieces(by, BISHOP) | pieces(by, QUEEN));
    att |= orth & (pieces(by, ROOK) | pieces(by, QUEEN));
    return att;
}

uint64_t Position::compute_hash_from_scratch() const {
    uint64_t h = 0;
    for (Square s = 0; s < 64; s++)
        if (board_[s] != NO_PIECE) h ^= zobrist::piece_key[board_[s]][s];
    h ^= zobrist::castling_key[castling_];
    if (ep_square_ != NO_SQUARE) h ^= zobrist::ep_file_key[file_of(ep_square_)];
    if (stm_ == BLACK) h ^= zobrist::side_key;
    return h;
}

Position Position::apply(Move m) const {
    Position p = *this;
    const Color us = stm_, them = ~stm_;
    const Square from = m.from(), to = m.to();
    uint64_t& h = p.hash_;

    bool irreversible = m.piece() == PAWN || m.is_capture();

    if (!irreversible) {
        p.history_.push_back(hash_);
    } else {
        p.history_.clear();
    }

    if (p.ep_square_ != NO_SQUARE) {
        h ^= zobrist::ep_file_key[file_of(p.ep_square_)];
        p.ep_square_ = NO_SQUARE;
    }

    if (m.is_castle()) {
        // King takes its two-square step; the rook jumps over.
        const bool king_side = to > from;
        const Square rook_from = king_side ? make_square(7, rank_of(from)) : make_square(0, rank_of(from));
        const Square rook_to = king_side ? to - 1 : to + 1;
        p.move_piece(from, to);
        p.move_piece(rook_from, rook_to);
        h ^= zobrist::piece_key[make_piece(us, KING)][from] ^ zobrist::piece_key[make_piece(us, KING)][to];
        h ^= zobrist::piece_key[make_piece(us, ROOK)][rook_from] ^ zobrist::piece_key[make_piece(us, ROOK)][rook_to];
    } else if (m.is_en_passant()) {
        const Square cap_sq = make_square(file_of(to), rank_of(from));
        p.remove_piece(cap_sq);
        p.move_piece(from, to);
        h ^= zobrist::piece_key[make_piece(them, PAWN)][cap_sq];
        h ^= zobrist::piece_key[make_piece(us, PAWN)][from] ^ zobrist::piece_key[make_piece(us, PAWN)][to];
    } else {
        if (m.captured() != NO_PIECE_TYPE) {
            h ^= zobrist::piece_key[make_piece(them, m.captured())][to];
            p.remove_piece(to);
        }
        p.move_piece(from, to);
        h ^= zobrist::piece_key[make_piece(us, m.piece())][from] ^ zobrist::piece_key[make_piece(us, m.piece())][to];
        if (m.promotion() != NO_PIECE_TYPE) {
            p.remove_piece(to);
            p.put_piece(make_piece(us, m.promotion()), to);
            h ^= zobrist::piece_key[make_piece(us, PAWN)][to] ^ zobrist::piece_key[make_piece(us, m.promotion())][to];
        }
        if (m.piece() == PAWN && std::abs(to - from) == 16) {
            p.ep_square_ = Square((from + to) / 2);
            h ^= zobrist::ep_file_key[file_of(p.ep_square_)];
        }
    }

    int new_castling = p.castling_ & rights_mask(from) & rights_mask(to);
    if (new_castling != p.castling_) {
        h ^= zobrist::castling_key[p.castling_] ^ zobrist::castling_key[new_castling];
        p.castling_ = new_castling;
    }

    p.halfmove_clock_ = irreversible ? 0 : p.halfmove_clock_ + 1;
    if (us == BLACK) p.fullmove_number_++;
    p.stm_ = them;
    h ^= zobrist::side_key;

    SABLE_ASSERT(p.hash_ == p.compute_hash_from_scratch());
    return p;
}

int Position::repetition_count() const {
    return 1 + int(std::count(history_.begin(), history_.end(), hash_));
}

bool Position::insufficient_material() const {
    if (by_type_[PAWN] | by_type_[ROOK] | by_type_[QUEEN]) return false;
    Bitboard minors = by_type_[KNIGHT] | by_type_[BISHOP];
    if (popcount(minors) <= 1) return true; // K vs K, KN vs K, KB vs K
    if (by_type_[KNIGHT]) return false;
    // Only bishops: drawn when they all stand on one square color.
    constexpr Bitboard dark = 0xAA55AA55AA55AA55ULL;
    Bitboard bishops = by_type_[BISHOP];
    return (bishops & dark) == 0 || (bishops & ~dark) == 0;
}

std::string Position::validate() const {
    if (popcount(pieces(WHITE, KING)) != 1) return "white must have exactly one king";
    if (popcount(pieces(BLACK, KING)) != 1) return "black must have exactly one king";
    if (by_type_[PAWN] & (rank_bb(0) | rank_bb(7))) return "pawn on first or last rank";
    if (is_attacked(king_square(~stm_), stm_)) return "side not to move is in check";
    if ((castling_ & WHITE_OO) && (piece_on(4) != W_KING || piece_on(7) != W_ROOK))
        return "white short castling right without king/rook on home squares";
    if ((castling_ & WHITE_OOO) && (piece_on(4) != W_KING || piece_on(0) != W_ROOK))
        return "white long castling right without king/rook on home squares";
    if ((castling_ & BLACK_OO) && (piece_on(60) != B_KING || piece_on(63) != B_ROOK))
        return "black short castling right without king/rook on home squares";
    if ((castling_ & BLACK_OOO) && (piece_on(60) != B_KING || piece_on(56) != B_ROOK))
        return "black long castling right without king/rook on home squares";
    if (ep_square_ != NO_SQUARE) {
        int expected_rank = stm_ == WHITE ? 5 : 2;
        if (rank_of(ep_square_) != expected_rank) return "en passant square on impossible rank";
        Square pawn_sq = stm_ == WHITE ? ep_square_ - 8 : ep_square_ + 8;
        if (piece_on(pawn_sq) != make_piece(~stm_, PAWN)) return "en passant square without matching pawn";
    }
    return {};
}

bool Position::operator==(const Position& o) const {
    return std::equal(board_, board_ + 64, o.board_) && stm_ == o.stm_ &&
           castling_ == o.castling_ && ep_square_ == o.ep_square_ &&
           halfmove_clock_ == o.halfmove_clock_ && fullmove_number_ == o.fullmove_number_ &&
           history_ == o.history_;
}

} // namespace sable
