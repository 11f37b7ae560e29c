#pragma once

#include <optional>
#include <string>
#include <variant>

#include "riddle/classics.hpp"
#include "riddle/pigeonhole.hpp"
#include "riddle/rate.hpp"
#include "riddle/weighing.hpp"

namespace riddle {

/// Alternatives are listed in PuzzleKind order.
using PuzzlePayload = std::variant<RateQuery, WeighingInstance, PigeonholeInstance, TransferInstance, StationInstance>;

enum class PuzzleKind { rate, weighing, pigeonhole, transfer, station };

std::string to_string(PuzzleKind kind);
std::optional<PuzzleKind> puzzle_kind_from_string(std::string_view name);

/// One puzzle of any kind. The kind is derived from the payload, so the two
/// cannot disagree.
struct PuzzleSpec {
    PuzzlePayload payload;
    std::optional<std::string> label;

    PuzzleKind kind() const { return static_cast<PuzzleKind>(payload.index()); }

    friend bool operator==(const PuzzleSpec&, const PuzzleSpec&) = default;
};

}  // namespace riddle
