#include "sable/feature_layout.hpp"

#include <stdexcept>

namespace sable {

namespace {

uint64_t fnv1a(const std::string& s) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

const char* SLOT_NAMES[16] = { "K", "Q", "R1", "R2", "B1", "B2", "N1", "N2",
                               "P1", "P2", "P3", "P4", "P5", "P6", "P7", "P8" };
const char* QUEEN_DIRS[8] = { "N", "NE", "E", "SE", "S", "SW", "W", "NW" };
const char* ROOK_DIRS[4] = { "N", "E", "S", "W" };
const char* BISHOP_DIRS[4] = { "NE", "SE", "SW", "NW" };

// Direction index of the rank-mirrored ray within the same direction list.
const int QUEEN_DIR_SWAP[8] = { 4, 3, 2, 1, 0, 7, 6, 5 };
const int ROOK_DIR_SWAP[4] = { 2, 1, 0, 3 };
const int BISHOP_DIR_SWAP[4] = { 1, 0, 3, 2 };

FeatureLayout build_layout() {
    FeatureLayout L;
    auto add = [&](const std::string& name) {
        L.names.push_back(name);
        return int(L.names.size()) - 1;
    };

    // --- position-centric ---
    L.group_offset[0] = 0;
    add("stm.white");
    for (const char* side : { "w", "b" }) {
        add(std::string(side) + ".castle.long");
        add(std::string(side) + ".castle.short");
    }
    for (const char* side : { "w", "b" })
        for (const char* pc : { "Q", "R", "B", "N", "P" })
            add(std::string(side) + ".count." + pc);
    L.group_size[0] = int(L.names.size());

    // --- piece-centric ---
    L.group_offset[1] = int(L.names.size());
    for (const char* side : { "w", "b" })
        for (int slot = 0; slot < 16; slot++)
            for (const char* f : { "exists", "x", "y", "att", "def" })
                add(std::string(side) + ".slot." + SLOT_NAMES[slot] + "." + f);
    for (const char* side : { "w", "b" }) {
        for (int d = 0; d < 8; d++) add(std::string(side) + ".mob.Q." + QUEEN_DIRS[d]);
        for (const char* rs : { "R1", "R2" })
            for (int d = 0; d < 4; d++) add(std::string(side) + ".mob." + rs + "." + ROOK_DIRS[d]);
        for (const char* bs : { "B1", "B2" })
            for (int d = 0; d < 4; d++) add(std::string(side) + ".mob." + bs + "." + BISHOP_DIRS[d]);
    }
    L.group_size[1] = int(L.names.size()) - L.group_offset[1];

    // --- square-centric ---
    L.group_offset[2] = int(L.names.size());
    for (const char* side : { "w", "b" })
        for (int sq = 0; sq < 64; sq++)
            add(std::string(side) + ".atkmap." + char('a' + sq % 8) + char('1' + sq / 8));
    L.group_size[2] = int(L.names.size()) - L.group_offset[2];

    L.total = int(L.names.size());

    std::string description;
    for (const auto& n : L.names) description += n + ";";
    L.layout_id = fnv1a(description);

    // --- color-swap map ---
    using E = FeatureLayout::SwapEntry;
    L.color_swap.assign(L.total, E{ 0, E::Copy, 0 });
    auto swap_pair = [&](int a, int b) {
        L.color_swap[a] = { b, E::Copy, 0 };
        L.color_swap[b] = { a, E::Copy, 0 };
    };
    L.color_swap[0] = { 0, E::OneMinus, 0 }; // side to move flips
    swap_pair(1, 3);                         // long castle rights swap sides
    swap_pair(2, 4);
    for (int i = 0; i < 5; i++) swap_pair(5 + i, 10 + i); // material counts
    const int slots = L.group_offset[1];
    for (int slot = 0; slot < 16; slot++) {
        int w = slots + slot * 5, b = slots + (16 + slot) * 5;
        swap_pair(w + 0, b + 0); // exists
        swap_pair(w + 1, b + 1); // x (file unchanged by rank mirror)
        L.color_swap[w + 2] = { b + 2, E::RankFlip, b + 0 };
        L.color_swap[b + 2] = { w + 2, E::RankFlip, w + 0 };
        swap_pair(w + 3, b + 3); // attacker
        swap_pair(w + 4, b + 4); // defender
    }
    const int mob = slots + 160;
    const int mob_side = 24;
    for (int d = 0; d < 8; d++) swap_pair(mob + d, mob + mob_side + QUEEN_DIR_SWAP[d]);
    for (int r = 0; r < 2; r++)
        for (int d = 0; d < 4; d++)
            swap_pair(mob + 8 + r * 4 + d, mob + mob_side + 8 + r * 4 + ROOK_DIR_SWAP[d]);
    for (int bi = 0; bi < 2; bi++)
        for (int d = 0; d < 4; d++)
            swap_pair(mob + 16 + bi * 4 + d, mob + mob_side + 16 + bi * 4 + BISHOP_DIR_SWAP[d]);
    const int maps = L.group_offset[2];
    for (int sq = 0; sq < 64; sq++) swap_pair(maps + sq, maps + 64 + (sq ^ 56));

    return L;
}

} // namespace

const FeatureLayout& board_layout() {
    static const FeatureLayout layout = build_layout();
    return layout;
}

std::vector<float> apply_color_swap(const FeatureLayout& layout, const std::vector<float>& v) {
    if (int(v.size()) != layout.total) throw std::invalid_argument("feature vector size mismatch");
    std::vector<float> out(v.size());
    for (int i = 0; i < layout.total; i++) {
        const auto& e = layout.color_swap[i];
        switch (e.kind) {
        case FeatureLayout::SwapEntry::Copy: out[i] = v[e.src]; break;
        case FeatureLayout::SwapEntry::OneMinus: out[i] = 1.0f - v[e.src]; break;
        case FeatureLayout::SwapEntry::RankFlip:
            // Coordinates are rank/7; mirror in the quantized domain so the
            // result is bit-identical to what the extractor produces.
            out[i] = v[e.presence] > 0.5f
                         ? float(7 - int(v[e.src] * 7.0f + 0.5f)) / 7.0f
                         : 0.0f;
            break;
        }
    }
    return out;
}

} // namespace sable
