#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "oracle_chess.hpp"
#include "sable/fen.hpp"
#include "sable/movegen.hpp"
#include "sable/notation.hpp"

using namespace sable;

namespace {

const char* START_FEN = "rnbqkbnr/pppppppp/8/8/8/8/PPPPPPPP/RNBQKBNR w KQkq - 0 1";

// Diverse positions used for perft/oracle cross-checks. Mix of openings,
// middlegames, endgames, castle/ep/promotion-rich positions.
const char* PERFT_FENS[] = {
    "rnbqkbnr/pppppppp/8/8/8/8/PPPPPPPP/RNBQKBNR w KQkq - 0 1",
    "r3k2r/p1ppqpb1/bn2pnp1/3PN3/1p2P3/2N2Q1p/PPPBBPPP/R3K2R w KQkq - 0 1",
    "8/2p5/3p4/KP5r/1R3p1k/8/4P1P1/8 w - - 0 1",
    "r3k2r/Pppp1ppp/1b3nbN/nP6/BBP1P3/q4N2/Pp1P2PP/R2Q1RK1 w kq - 0 1",
    "rnbq1k1r/pp1Pbppp/2p5/8/2B5/8/PPP1NnPP/RNBQK2R w KQ - 1 8",
    "r4rk1/1pp1qppp/p1np1n2/2b1p1B1/2B1P1b1/P1NP1N2/1PP1QPPP/R4RK1 w - - 0 10",
    "4k3/8/8/8/8/8/8/4K2R w K - 0 1",
    "8/8/8/8/k2Pp3/8/8/3K4 b - d3 0 1",
    "n1n5/PPPk4/8/8/8/8/4Kppp/5N1N b - - 0 1",
    "8/PPPk4/8/8/8/8/4Kppp/8 w - - 0 1",
    "K1k5/8/P7/8/8/8/8/8 w - - 0 1",
    "8/8/1P2K3/8/2n5/1q6/8/5k2 b - - 0 1",
};

std::vector<Move> random_game(Position& p, int plies, std::mt19937_64& rng) {
    std::vector<Move> played;
    for (int i = 0; i < plies; i++) {
        if (game_state(p) != GameState::Ongoing) break;
        auto moves = generate_moves(p);
        Move m = moves[rng() % moves.size()];
        played.push_back(m);
        p = p.apply(m);
    }
    return played;
}

} // namespace

TEST_CASE("fen: start position round trip") {
    Position p = parse_fen(START_FEN);
    CHECK(emit_fen(p) == START_FEN);
    CHECK(p.side_to_move() == WHITE);
    CHECK(p.castling_rights() == ALL_CASTLING);
    CHECK(p == Position::startpos());
}

TEST_CASE("fen: minimal two-king position") {
    Position p = parse_fen("8/8/8/8/8/8/8/K6k w - - 0 1");
    CHECK(p.castling_rights() == 0);
    CHECK(p.piece_on(0) == W_KING);
    CHECK(p.piece_on(7) == B_KING);
    CHECK(emit_fen(p) == "8/8/8/8/8/8/8/K6k w - - 0 1");
}

TEST_CASE("fen: malformed inputs rejected with field names") {
    CHECK_THROWS_AS(parse_fen("8/8/8/8/8/8/8/8/K6k w - - 0 1"), FenError); // 9 ranks
    CHECK_THROWS_AS(parse_fen("K6k w - -"), FenError);
    CHECK_THROWS_AS(parse_fen("8/8/8/8/8/8/8/X6k w - - 0 1"), FenError);
    CHECK_THROWS_AS(parse_fen("8/8/8/8/8/8/8/K6k x - - 0 1"), FenError);
    CHECK_THROWS_AS(parse_fen("8/8/8/8/8/8/8/K5kk w - - 0 1"), FenError); // two black kings
    CHECK_THROWS_AS(parse_fen("P7/8/8/8/8/8/k6K w - - 0 1"), FenError);   // bad rank count
    try {
        parse_fen("8/8/8/8/8/8/8/8/K6k w - - 0 1");
        CHECK(false);
    } catch (const FenError& e) {
        CHECK(e.field == "placement");
    }
}

TEST_CASE("fen: side not to move may not be in check") {
    // Black king attacked, white to move.
    CHECK_THROWS_AS(parse_fen("4k3/4R3/8/8/8/8/8/4K3 w - - 0 1"), FenError);
}

TEST_CASE("movegen: start position has 20 moves") {
    auto moves = generate_moves(Position::startpos());
    CHECK(moves.size() == 20);
    // 16 pawn moves + 4 knight moves, every one unique
    std::set<std::string> unique;
    for (Move m : moves) unique.insert(move_to_uci(m));
    CHECK(unique.size() == 20);
}

TEST_CASE("movegen: checkmated position yields no moves") {
    // Fool's mate final position
    Position p = parse_fen("rnb1kbnr/pppp1ppp/8/4p3/6Pq/5P2/PPPPP2P/RNBQKBNR w KQkq - 1 3");
    CHECK(generate_moves(p).empty());
    CHECK(game_state(p) == GameState::Checkmate);
}

TEST_CASE("movegen: in check generates only evasions") {
    Position p = parse_fen("rnbqkbnr/ppp1pppp/8/1B1p4/4P3/8/PPPP1PPP/RNBQK1NR b KQkq - 1 2");
    REQUIRE(p.in_check());
    auto moves = generate_moves(p);
    // Oracle: filter pseudo-legal through apply + check test.
    auto ostate = oracle::from_position(p);
    auto omoves = oracle::legal_moves(ostate);
    std::set<std::string> got, expected;
    for (Move m : moves) got.insert(move_to_uci(m));
    for (auto& m : omoves) expected.insert(oracle::move_uci(m));
    CHECK(got == expected);
    for (Move m : moves) {
        Position after = p.apply(m);
        CHECK(!after.is_attacked(after.king_square(BLACK), WHITE));
    }
}

TEST_CASE("apply: e2e4 sets en passant square and flips side") {
    Position p = Position::startpos();
    Move m = *move_from_uci(p, "e2e4");
    Position after = p.apply(m);
    CHECK(emit_fen(after) == "rnbqkbnr/pppppppp/8/8/4P3/8/PPPP1PPP/RNBQKBNR b KQkq e3 0 1");
    // parent unchanged (value semantics)
    CHECK(emit_fen(p) == START_FEN);
}

TEST_CASE("apply: captures reset the halfmove clock") {
    Position p = parse_fen("rnbqkbnr/ppp1pppp/8/3p4/4P3/8/PPPP1PPP/RNBQKBNR w KQkq - 5 4");
    Move m = *move_from_uci(p, "e4d5");
    CHECK(p.apply(m).halfmove_clock() == 0);
}

TEST_CASE("apply: castling clears both rights of the mover") {
    Position p = parse_fen("r3k2r/pppppppp/8/8/8/8/PPPPPPPP/R3K2R w KQkq - 0 1");
    Move m = *move_from_uci(p, "e1g1");
    REQUIRE(m.is_castle());
    Position after = p.apply(m);
    CHECK((after.castling_rights() & (WHITE_OO | WHITE_OOO)) == 0);
    CHECK((after.castling_rights() & (BLACK_OO | BLACK_OOO)) == (BLACK_OO | BLACK_OOO));
    CHECK(after.piece_on(5) == W_ROOK);
    CHECK(after.piece_on(6) == W_KING);
}

TEST_CASE("game_state: classification") {
    CHECK(game_state(Position::startpos()) == GameState::Ongoing);
    CHECK(game_state(parse_fen("8/8/8/8/8/8/8/K6k w - - 0 1")) == GameState::DrawMaterial);
    // Back-rank mate
    Position mate = parse_fen("6k1/5ppp/8/8/8/8/5PPP/R5K1 w - - 0 1").apply(
        *move_from_uci(parse_fen("6k1/5ppp/8/8/8/8/5PPP/R5K1 w - - 0 1"), "a1a8"));
    CHECK(game_state(mate) == GameState::Checkmate);
    CHECK(generate_moves(mate).empty());
    CHECK(mate.in_check());
    // Stalemate
    CHECK(game_state(parse_fen("7k/5Q2/6K1/8/8/8/8/8 b - - 0 1")) == GameState::Stalemate);
    // 50-move rule
    CHECK(game_state(parse_fen("8/8/4k3/8/4K3/8/8/4R3 w - - 100 80")) == GameState::DrawFiftyMove);
}

TEST_CASE("game_state: threefold repetition") {
    Position p = Position::startpos();
    const char* cycle[] = { "g1f3", "g8f6", "f3g1", "f6g8" };
    // Each knight cycle revisits the start position; third visit is a draw.
    for (int rep = 0; rep < 2; rep++)
        for (const char* mv : cycle) {
            CHECK(game_state(p) == GameState::Ongoing);
            p = p.apply(*move_from_uci(p, mv));
        }
    CHECK(p.repetition_count() == 3);
    CHECK(game_state(p) == GameState::DrawRepetition);
}

TEST_CASE("hash: determinism and tempo") {
    Position p = parse_fen("r4rk1/1pp1qppp/p1np1n2/2b1p1B1/2B1P1b1/P1NP1N2/1PP1QPPP/R4RK1 w - - 0 10");
    CHECK(p.hash() == parse_fen(emit_fen(p)).hash());
    std::string flipped = "r4rk1/1pp1qppp/p1np1n2/2b1p1B1/2B1P1b1/P1NP1N2/1PP1QPPP/R4RK1 b - - 0 10";
    CHECK(p.hash() != parse_fen(flipped).hash());
}

TEST_CASE("hash: incremental equals from-scratch across random games") {
    std::mt19937_64 rng(12345);
    for (int game = 0; game < 60; game++) {
        Position p = Position::startpos();
        for (int ply = 0; ply < 40; ply++) {
            if (game_state(p) != GameState::Ongoing) break;
            auto moves = generate_moves(p);
            p = p.apply(moves[rng() % moves.size()]);
            CHECK(p.hash() == p.compute_hash_from_scratch());
            CHECK(p.hash() == parse_fen(emit_fen(p)).hash());
        }
    }
}

TEST_CASE("perft: known node counts") {
    Position start = Position::startpos();
    CHECK(perft(start, 0) == 1);
    CHECK(perft(start, 1) == 20);
    CHECK(perft(start, 2) == 400);
    CHECK(perft(start, 3) == 8902);
    CHECK(perft(start, 4) == 197281);

    // Kiwipete
    Position kiwi = parse_fen("r3k2r/p1ppqpb1/bn2pnp1/3PN3/1p2P3/2N2Q1p/PPPBBPPP/R3K2R w KQkq - 0 1");
    CHECK(perft(kiwi, 1) == 48);
    CHECK(perft(kiwi, 2) == 2039);
    CHECK(perft(kiwi, 3) == 97862);
    CHECK(perft(kiwi, 4) == 4085603);

    Position pos3 = parse_fen("8/2p5/3p4/KP5r/1R3p1k/8/4P1P1/8 w - - 0 1");
    CHECK(perft(pos3, 1) == 14);
    CHECK(perft(pos3, 2) == 191);
    CHECK(perft(pos3, 3) == 2812);
    CHECK(perft(pos3, 4) == 43238);
    CHECK(perft(pos3, 5) == 674624);

    Position pos4 = parse_fen("r3k2r/Pppp1ppp/1b3nbN/nP6/BBP1P3/q4N2/Pp1P2PP/R2Q1RK1 w kq - 0 1");
    CHECK(perft(pos4, 1) == 6);
    CHECK(perft(pos4, 2) == 264);
    CHECK(perft(pos4, 3) == 9467);
    CHECK(perft(pos4, 4) == 422333);

    Position pos5 = parse_fen("rnbq1k1r/pp1Pbppp/2p5/8/2B5/8/PPP1NnPP/RNBQK2R w KQ - 1 8");
    CHECK(perft(pos5, 1) == 44);
    CHECK(perft(pos5, 2) == 1486);
    CHECK(perft(pos5, 3) == 62379);
    CHECK(perft(pos5, 4) == 2103487);

    Position pos6 = parse_fen("r4rk1/1pp1qppp/p1np1n2/2b1p1B1/2B1P1b1/P1NP1N2/1PP1QPPP/R4RK1 w - - 0 10");
    CHECK(perft(pos6, 1) == 46);
    CHECK(perft(pos6, 2) == 2079);
    CHECK(perft(pos6, 3) == 89890);
    CHECK(perft(pos6, 4) == 3894594);
}

TEST_CASE("perft: agrees with the naive oracle on diverse positions") {
    for (const char* fen : PERFT_FENS) {
        Position p = parse_fen(fen);
        auto ostate = oracle::from_position(p);
        int max_depth = 4;
        // keep the slow oracle affordable on the two huge trees
        if (oracle::perft(ostate, 2) > 2500) max_depth = 3;
        for (int d = 0; d <= max_depth; d++) {
            INFO("fen=", fen, " depth=", d);
            CHECK(perft(p, d) == oracle::perft(ostate, d));
        }
    }
}

TEST_CASE("movegen: exact move-set agreement with oracle along random games") {
    std::mt19937_64 rng(777);
    for (int game = 0; game < 200; game++) {
        Position p = Position::startpos();
        for (int ply = 0; ply < 60; ply++) {
            if (game_state(p) != GameState::Ongoing) break;
            auto moves = generate_moves(p);
            std::set<std::string> got, expected;
            for (Move m : moves) got.insert(move_to_uci(m));
            for (auto& m : oracle::legal_moves(oracle::from_position(p))) expected.insert(oracle::move_uci(m));
            REQUIRE_MESSAGE(got == expected, "divergence at: ", emit_fen(p));
            p = p.apply(moves[rng() % moves.size()]);
        }
    }
}

TEST_CASE("apply: legality closure - mover's king never attacked after any legal move") {
    std::mt19937_64 rng(42);
    for (int game = 0; game < 50; game++) {
        Position p = Position::startpos();
        for (int ply = 0; ply < 60; ply++) {
            if (game_state(p) != GameState::Ongoing) break;
            auto moves = generate_moves(p);
            for (Move m : moves) {
                Position after = p.apply(m);
                CHECK(!after.is_attacked(after.king_square(p.side_to_move()), after.side_to_move()));
            }
            p = p.apply(moves[rng() % moves.size()]);
        }
    }
}

TEST_CASE("notation: san round trips") {
    Position p = Position::startpos();
    CHECK(move_to_san(p, *move_from_uci(p, "g1f3")) == "Nf3");
    CHECK(parse_move(p, "Nf3").has_value());
    CHECK(move_to_uci(*parse_move(p, "Nf3")) == "g1f3");
    CHECK(parse_move(p, "e4").has_value());
    CHECK(move_to_uci(*parse_move(p, "e4")) == "e2e4");

    // promotion + check decoration
    Position promo = parse_fen("8/PPPk4/8/8/8/8/4Kppp/8 w - - 0 1");
    auto bq = parse_move(promo, "b8=Q");
    REQUIRE(bq.has_value());
    CHECK(bq->promotion() == QUEEN);

    // disambiguation
    Position two_rooks = parse_fen("R6R/4k3/8/8/8/8/8/4K3 w - - 0 1");
    auto moves = generate_moves(two_rooks);
    for (Move m : moves) {
        if (move_to_uci(m) == "a8d8") CHECK(move_to_san(two_rooks, m) == "Rad8");
        if (move_to_uci(m) == "h8d8") CHECK(move_to_san(two_rooks, m) == "Rhd8");
    }
}

TEST_CASE("movegen: underpromotions generated") {
    Position p = parse_fen("8/PPPk4/8/8/8/8/4Kppp/8 w - - 0 1");
    int promos = 0;
    for (Move m : generate_moves(p))
        if (m.promotion() != NO_PIECE_TYPE) promos++;
    CHECK(promos == 12); // three pawns x four pieces
}

TEST_CASE("movegen: random-game fen round trips") {
    std::mt19937_64 rng(99);
    for (int game = 0; game < 30; game++) {
        Position p = Position::startpos();
        random_game(p, 80, rng);
        Position reparsed = parse_fen(emit_fen(p));
        CHECK(emit_fen(reparsed) == emit_fen(p));
        CHECK(reparsed.hash() == p.hash());
    }
}
