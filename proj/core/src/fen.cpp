#include "sable/fen.hpp"

#include <cctype>
#include <sstream>

namespace sable {

namespace {

Piece piece_from_char(char c) {
    switch (c) {
    case 'P': return W_PAWN;   case 'N': return W_KNIGHT; case 'B': return W_BISHOP;
    case 'R': return W_ROOK;   case 'Q': return W_QUEEN;  case 'K': return W_KING;
    case 'p': return B_PAWN;   case 'n': return B_KNIGHT; case 'b': return B_BISHOP;
    case 'r': return B_ROOK;   case 'q': return B_QUEEN;  case 'k': return B_KING;
    default: return NO_PIECE;
    }
}

char piece_to_char(Piece p) {
    constexpr const char* chars = " PNBRQK  pnbrqk";
    return chars[p];
}

} // namespace

Position parse_fen(const std::string& fen) {
    std::istringstream ss(fen);
    std::string placement, stm, castling, ep, halfmove = "0", fullmove = "1";
    if (!(ss >> placement >> stm >> castling >> ep))
        throw FenError("fields", "expected at least 4 space-separated fields");
    ss >> halfmove >> fullmove;

    Position::Builder b;

    int rank = 7, file = 0;
    for (char c : placement) {
        if (c == '/') {
            if (file != 8) throw FenError("placement", "rank with wrong square count");
            rank--;
            file = 0;
            if (rank < 0) throw FenError("placement", "too many ranks");
        } else if (c >= '1' && c <= '8') {
            file += c - '0';
            if (file > 8) throw FenError("placement", "rank overflows 8 files");
        } else {
            Piece p = piece_from_char(c);
            if (p == NO_PIECE) throw FenError("placement", std::string("illegal piece character '") + c + "'");
            if (file > 7) throw FenError("placement", "rank overflows 8 files");
            b.board[make_square(file, rank)] = p;
            file++;
        }
    }
    if (rank != 0 || file != 8) throw FenError("placement", "expected 8 ranks of 8 squares");

    if (stm == "w") b.stm = WHITE;
    else if (stm == "b") b.stm = BLACK;
    else throw FenError("side-to-move", "expected 'w' or 'b'");

    if (castling != "-") {
        for (char c : castling) {
            switch (c) {
            case 'K': b.castling |= WHITE_OO; break;
            case 'Q': b.castling |= WHITE_OOO; break;
            case 'k': b.castling |= BLACK_OO; break;
            case 'q': b.castling |= BLACK_OOO; break;
            default: throw FenError("castling", std::string("unknown flag '") + c + "'");
            }
        }
    }

    if (ep != "-") {
        if (ep.size() != 2 || ep[0] < 'a' || ep[0] > 'h' || ep[1] < '1' || ep[1] > '8')
            throw FenError("en-passant", "expected square like 'e3' or '-'");
        b.ep_square = make_square(ep[0] - 'a', ep[1] - '1');
    }

    try {
        if (!halfmove.empty()) b.halfmove_clock = std::stoi(halfmove);
        if (b.halfmove_clock < 0) throw std::invalid_argument("negative");
    } catch (const std::exception&) {
        throw FenError("halfmove-clock", "expected a nonnegative integer");
    }
    try {
        if (!fullmove.empty()) b.fullmove_number = std::stoi(fullmove);
        if (b.fullmove_number < 1) throw std::invalid_argument("nonpositive");
    } catch (const std::exception&) {
        throw FenError("fullmove-number", "expected a positive integer");
    }

    Position p = b.build();
    if (std::string err = p.validate(); !err.empty()) throw FenError("position", err);
    return p;
}

std::string emit_fen(const Position& p) {
    std::ostringstream out;
    for (int rank = 7; rank >= 0; rank--) {
        int empty = 0;
        for (int file = 0; file < 8; file++) {
            Piece pc = p.piece_on(make_square(file, rank));
            if (pc == NO_PIECE) {
                empty++;
            } else {
                if (empty) out << empty;
                empty = 0;
                out << piece_to_char(pc);
            }
        }
        if (empty) out << empty;
        if (rank) out << '/';
    }
    out << (p.side_to_move() == WHITE ? " w " : " b ");
    if (p.castling_rights()) {
        if (p.castling_rights() & WHITE_OO) out << 'K';
        if (p.castling_rights() & WHITE_OOO) out << 'Q';
        if (p.castling_rights() & BLACK_OO) out << 'k';
        if (p.castling_rights() & BLACK_OOO) out << 'q';
    } else {
        out << '-';
    }
    out << ' ' << square_name(p.ep_square());
    out << ' ' << p.halfmove_clock() << ' ' << p.fullmove_number();
    return out.str();
}

} // namespace sable
