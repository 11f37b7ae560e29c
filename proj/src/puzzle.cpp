#include "riddle/puzzle.hpp"

namespace riddle {

std::string to_string(PuzzleKind kind) {
    switch (kind) {
    case PuzzleKind::rate: return "rate";
    case PuzzleKind::weighing: return "weighing";
    case PuzzleKind::pigeonhole: return "pigeonhole";
    case PuzzleKind::transfer: return "transfer";
    case PuzzleKind::station: return "station";
    }
    return "?";
}

std::optional<PuzzleKind> puzzle_kind_from_string(std::string_view name) {
    for (auto k : {PuzzleKind::rate, PuzzleKind::weighing, PuzzleKind::pigeonhole, PuzzleKind::transfer,
                   PuzzleKind::station})
        if (to_string(k) == name)
            return k;
    return std::nullopt;
}

}  // namespace riddle
