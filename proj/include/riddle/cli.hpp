#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "riddle/puzzle.hpp"

namespace riddle::cli {

enum class OutputFormat { text, json };

struct SolveOptions {
    bool check = false;          ///< run the independent oracle next to the formula
    bool explain = false;        ///< add step-by-step explanation lines
    bool ceil_subjects = false;  ///< round "how many subjects" answers up
    OutputFormat format = OutputFormat::text;
    std::optional<std::string> out_path;
};

/// One solved puzzle. `oracle` and `agreement` are only filled in check
/// mode; `agreement` stays empty when the kind's formula has no value to
/// compare (a transfer instance the closed form cannot read).
struct SolveReport {
    std::optional<std::string> label;
    PuzzleKind kind = PuzzleKind::rate;
    std::string answer;
    std::optional<std::string> oracle;
    std::optional<bool> agreement;
    std::vector<std::string> explanation;
};

SolveReport solve_puzzle(const PuzzleSpec& spec, const SolveOptions& options);

std::string render_text(const std::vector<SolveReport>& reports);

/// Array of objects with keys in the fixed order
/// label, kind, answer, [oracle, agreement,] explanation.
std::string render_json(const std::vector<SolveReport>& reports);

/// Exit status: 0 solved, 1 unreadable file or parse errors, 2 when --check
/// finds a formula/oracle disagreement.
int cmd_solve(const std::vector<std::string>& paths, const SolveOptions& options, std::ostream& out,
              std::ostream& err);

std::string strategy_to_json(const StrategyNode& tree);

// ---------------------------------------------------------------------------
// Sweeps
// ---------------------------------------------------------------------------

inline constexpr std::int64_t kMaxWeighingObjects = 6561;  // 3^8
inline constexpr std::int64_t kMaxPigeonholeColors = 4;
inline constexpr std::int64_t kMaxPigeonholeCount = 6;
inline constexpr std::int64_t kMaxPigeonholeRequired = 4;
inline constexpr std::int64_t kMaxTransferSize = 8;

struct SweepSummary {
    std::int64_t comparisons = 0;
    std::int64_t matches = 0;
    std::int64_t mismatches = 0;
    std::optional<std::string> first_mismatch;
    std::vector<std::string> notes;
};

/// Formula vs minimax oracle for N in [2, max_objects].
SweepSummary sweep_weighing(std::int64_t max_objects, unsigned threads);

/// Every instance with 1..max_colors colors, counts in [0, max_count] and
/// required in [1, max_required]. Comparisons cover the instances where the
/// formula applies; the rest are tallied in `notes`.
SweepSummary sweep_pigeonhole(std::int64_t max_colors, std::int64_t max_count, std::int64_t max_required,
                              unsigned threads);

struct TransferSweep {
    SweepSummary summary;
    std::string csv;
};

TransferSweep sweep_transfer(std::int64_t max_n, std::int64_t max_d);

/// Reads RIDDLE_FORGE_THREADS; hardware concurrency when unset.
/// Throws InvalidBounds on anything but a positive integer.
unsigned sweep_threads();

enum class SweepKind { weighing, pigeonhole, transfer };

struct SweepRequest {
    SweepKind kind = SweepKind::weighing;
    std::int64_t max_objects = kMaxWeighingObjects;
    std::int64_t max_colors = kMaxPigeonholeColors;
    std::int64_t max_count = kMaxPigeonholeCount;
    std::int64_t max_required = kMaxPigeonholeRequired;
    std::int64_t max_n = 4;
    std::int64_t max_d = 4;
    std::optional<std::string> report_path;
};

/// Exit status: 0 when every comparison matched (transfer always 0 once its
/// report is written), 1 on invalid bounds or I/O failure, 2 on mismatches.
int cmd_sweep(const SweepRequest& request, std::ostream& out, std::ostream& err);

}  // namespace riddle::cli
