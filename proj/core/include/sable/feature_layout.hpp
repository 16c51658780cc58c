#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sable {

// Canonical board-feature layout. Three modality groups, concatenated:
//
//   position-centric (15): side to move; 4 castling flags (white long,
//     white short, black long, black short); 10 material counts
//     (Q,R,B,N,P for white then black, raw counts)
//   piece-centric (208): 32 slots x {exists, x, y, lowest attacker,
//     lowest defender} with slot order K,Q,R1,R2,B1,B2,N1,N2,P1..P8 per
//     side (white first), then sliding mobility: per side Q 8 directions,
//     R1/R2 4 (N,E,S,W), B1/B2 4 (NE,SE,SW,NW), distances / 7
//   square-centric (128): lowest-valued white attacker of each square
//     (a1..h8, ordinal / 6), then the same for black
//
// The descriptor is serialized with every weights file so nets are bound
// to the exact encoding they were trained on.
struct FeatureLayout {
    // Entry i of color_swap tells how feature i of the color-flipped
    // mirror position derives from the original vector.
    struct SwapEntry {
        enum Kind : uint8_t {
            Copy,     // mirrored[i] = v[src]
            OneMinus, // mirrored[i] = 1 - v[src]
            RankFlip, // mirrored[i] = v[presence] > 0.5 ? 1 - v[src] : 0
        };
        int src;
        Kind kind;
        int presence;
    };

    int total = 0;
    int group_offset[3] = {};
    int group_size[3] = {};
    uint64_t layout_id = 0; // fingerprint of the layout description
    std::vector<SwapEntry> color_swap;
    std::vector<std::string> names;
};

// The layout used by the board feature extractor (F = 351).
const FeatureLayout& board_layout();

// Width of the per-move feature block appended by the move-probability
// estimator: piece one-hot (6), from x/y, to x/y, promotion one-hot
// (N,B,R,Q,none), rank.
constexpr int MOVE_BLOCK_WIDTH = 16;

std::vector<float> apply_color_swap(const FeatureLayout& layout, const std::vector<float>& v);

} // namespace sable
