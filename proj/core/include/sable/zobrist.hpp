#pragma once

#include <cstdint>

#include "sable/types.hpp"

namespace sable::zobrist {

// Keys are generated from a fixed seed so hashes are stable across runs
// and processes (weights files and logs may embed them).
extern uint64_t piece_key[16][64]; // [piece][square], unused piece codes are zero
extern uint64_t castling_key[16];
extern uint64_t ep_file_key[8];
extern uint64_t side_key;

} // namespace sable::zobrist
