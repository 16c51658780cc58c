#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>

namespace sable {

enum Color : int { WHITE = 0, BLACK = 1 };

constexpr Color operator~(Color c) { return Color(c ^ 1); }

enum PieceType : int { NO_PIECE_TYPE = 0, PAWN = 1, KNIGHT = 2, BISHOP = 3, ROOK = 4, QUEEN = 5, KING = 6 };

// Piece = color * 8 + type, so piece_type() and color_of() are cheap masks.
enum Piece : int {
    NO_PIECE = 0,
    W_PAWN = 1, W_KNIGHT, W_BISHOP, W_ROOK, W_QUEEN, W_KING,
    B_PAWN = 9, B_KNIGHT, B_BISHOP, B_ROOK, B_QUEEN, B_KING,
};

constexpr Piece make_piece(Color c, PieceType pt) { return Piece((c << 3) | pt); }
constexpr PieceType type_of(Piece p) { return PieceType(p & 7); }
constexpr Color color_of(Piece p) { return Color(p >> 3); }

// Squares are 0..63, a1 = 0, h1 = 7, a8 = 56, h8 = 63.
using Square = int;
constexpr Square NO_SQUARE = 64;

constexpr Square make_square(int file, int rank) { return rank * 8 + file; }
constexpr int file_of(Square s) { return s & 7; }
constexpr int rank_of(Square s) { return s >> 3; }
constexpr Square mirror_rank(Square s) { return s ^ 56; }

inline std::string square_name(Square s) {
    if (s == NO_SQUARE) return "-";
    return { char('a' + file_of(s)), char('1' + rank_of(s)) };
}

enum Castling : int {
    WHITE_OO = 1,   // white short (king side)
    WHITE_OOO = 2,  // white long (queen side)
    BLACK_OO = 4,
    BLACK_OOO = 8,
    ALL_CASTLING = 15,
};

// Packed move. Layout:
//   bits  0-5  from square
//   bits  6-11 to square
//   bits 12-14 moving piece type
//   bits 15-17 promotion piece type (0 = none)
//   bits 18-20 captured piece type (0 = none)
//   bit  21    castle
//   bit  22    en passant
class Move {
public:
    Move() : data_(0) {}
    Move(Square from, Square to, PieceType piece, PieceType promo = NO_PIECE_TYPE,
         PieceType captured = NO_PIECE_TYPE, bool castle = false, bool ep = false)
        : data_(uint32_t(from) | uint32_t(to) << 6 | uint32_t(piece) << 12 |
                uint32_t(promo) << 15 | uint32_t(captured) << 18 |
                uint32_t(castle) << 21 | uint32_t(ep) << 22) {}

    Square from() const { return data_ & 63; }
    Square to() const { return (data_ >> 6) & 63; }
    PieceType piece() const { return PieceType((data_ >> 12) & 7); }
    PieceType promotion() const { return PieceType((data_ >> 15) & 7); }
    PieceType captured() const { return PieceType((data_ >> 18) & 7); }
    bool is_castle() const { return (data_ >> 21) & 1; }
    bool is_en_passant() const { return (data_ >> 22) & 1; }
    bool is_capture() const { return captured() != NO_PIECE_TYPE || is_en_passant(); }
    bool is_null() const { return data_ == 0; }

    bool operator==(const Move& o) const { return data_ == o.data_; }
    bool operator!=(const Move& o) const { return data_ != o.data_; }

    uint32_t raw() const { return data_; }

private:
    uint32_t data_;
};

enum class GameState { Ongoing, Checkmate, Stalemate, DrawRepetition, DrawFiftyMove, DrawMaterial };

inline bool is_draw(GameState s) {
    return s == GameState::DrawRepetition || s == GameState::DrawFiftyMove || s == GameState::DrawMaterial;
}
inline bool is_terminal(GameState s) { return s != GameState::Ongoing; }

#ifdef NDEBUG
#define SABLE_ASSERT(x) ((void)0)
#else
#define SABLE_ASSERT(x) \
    do { if (!(x)) { std::abort(); } } while (0)
#endif

} // namespace sable
