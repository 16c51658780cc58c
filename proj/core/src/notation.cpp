#include "sable/notation.hpp"

#include <algorithm>

namespace sable {

namespace {

char promo_char(PieceType pt) {
    switch (pt) {
    case QUEEN: return 'q';
    case ROOK: return 'r';
    case BISHOP: return 'b';
    case KNIGHT: return 'n';
    default: return '?';
    }
}

char piece_letter(PieceType pt) {
    constexpr const char* letters = "  NBRQK";
    return letters[pt];
}

std::string strip_decoration(const std::string& s) {
    std::string t;
    for (char c : s)
        if (c != '+' && c != '#' && c != '!' && c != '?') t += c;
    return t;
}

} // namespace

std::string move_to_uci(Move m) {
    std::string s = square_name(m.from()) + square_name(m.to());
    if (m.promotion() != NO_PIECE_TYPE) s += promo_char(m.promotion());
    return s;
}

std::optional<Move> move_from_uci(const Position& p, const std::string& text) {
    for (Move m : generate_moves(p))
        if (move_to_uci(m) == text) return m;
    return std::nullopt;
}

std::string move_to_san(const Position& p, Move m) {
    if (m.is_castle()) return file_of(m.to()) == 6 ? "O-O" : "O-O-O";

    std::string san;
    if (m.piece() == PAWN) {
        if (m.is_capture()) san = std::string(1, char('a' + file_of(m.from()))) + "x";
        san += square_name(m.to());
        if (m.promotion() != NO_PIECE_TYPE)
            san += std::string("=") + char(std::toupper(promo_char(m.promotion())));
    } else {
        san = std::string(1, piece_letter(m.piece()));
        // Disambiguate against other same-type pieces that can reach the target.
        bool need_file = false, need_rank = false, ambiguous = false;
        for (Move other : generate_moves(p)) {
            if (other == m || other.piece() != m.piece() || other.to() != m.to()) continue;
            ambiguous = true;
            if (file_of(other.from()) == file_of(m.from())) need_rank = true;
            if (rank_of(other.from()) == rank_of(m.from())) need_file = true;
        }
        if (ambiguous && !need_file && !need_rank) need_file = true;
        if (need_file) san += char('a' + file_of(m.from()));
        if (need_rank) san += char('1' + rank_of(m.from()));
        if (m.is_capture()) san += 'x';
        san += square_name(m.to());
    }

    Position after = p.apply(m);
    GameState st = game_state(after);
    if (st == GameState::Checkmate) san += '#';
    else if (after.in_check()) san += '+';
    return san;
}

std::optional<Move> parse_move(const Position& p, const std::string& text) {
    std::string wanted = strip_decoration(text);
    if (wanted.empty()) return std::nullopt;
    for (Move m : generate_moves(p)) {
        if (move_to_uci(m) == wanted) return m;
        if (strip_decoration(move_to_san(p, m)) == wanted) return m;
    }
    // Common castling spelling with zeros
    if (wanted == "0-0") return parse_move(p, "O-O");
    if (wanted == "0-0-0") return parse_move(p, "O-O-O");
    return std::nullopt;
}

} // namespace sable
