#include "sable/zobrist.hpp"

namespace sable::zobrist {

uint64_t piece_key[16][64];
uint64_t castling_key[16];
uint64_t ep_file_key[8];
uint64_t side_key;

namespace {

// splitmix64, seeded with a fixed constant
struct Init {
    uint64_t state = 0x9050'53CA'B1E5'0001ULL;

    uint64_t next() {
        uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    Init() {
        for (int p = 0; p < 16; p++)
            for (int s = 0; s < 64; s++)
                piece_key[p][s] = (p == NO_PIECE || (p & 7) == 7 || (p & 7) == 0) ? 0 : next();
        for (int c = 0; c < 16; c++) castling_key[c] = 0;
        for (int c = 1; c < 16; c++) {
            // compose from single-right keys so incremental updates can xor per right
            for (int bit = 0; bit < 4; bit++)
                if (c == (1 << bit)) castling_key[c] = next();
        }
        for (int c = 1; c < 16; c++) {
            if (castling_key[c]) continue;
            for (int bit = 0; bit < 4; bit++)
                if (c & (1 << bit)) castling_key[c] ^= castling_key[1 << bit];
        }
        for (int f = 0; f < 8; f++) ep_file_key[f] = next();
        side_key = next();
    }
} init_keys;

} // namespace

} // namespace sable::zobrist
