#pragma once

#include <stdexcept>
#include <string>

#include "sable/position.hpp"

namespace sable {

// Parse failure; `field` names the FEN field that was rejected.
struct FenError : std::runtime_error {
    FenError(std::string field_, const std::string& what_)
        : std::runtime_error("FEN " + field_ + ": " + what_), field(std::move(field_)) {}
    std::string field;
};

Position parse_fen(const std::string& fen);
std::string emit_fen(const Position& p);

} // namespace sable
