#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "riddle/puzzle.hpp"

namespace riddle {

/// 1-based position of a token; never spans a line break.
struct SourceSpan {
    int line = 1;
    int column = 1;
    int length = 0;

    friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

enum class ParseErrorKind { UnknownKind, MissingKey, DuplicateKey, TypeMismatch, BadUnit, NegativeCount, Syntax };

std::string to_string(ParseErrorKind kind);

struct ParseError {
    SourceSpan span;
    ParseErrorKind kind = ParseErrorKind::Syntax;
    std::string message;
};

/// Either every puzzle in the file (when `errors` is empty) or every error
/// found, in source order. Recovery happens at block boundaries.
struct ParseResult {
    std::vector<PuzzleSpec> puzzles;
    std::vector<ParseError> errors;

    bool ok() const { return errors.empty(); }
};

/// Puzzle file grammar:
///
///   file      := block*
///   block     := "puzzle" kind [string] "{" stmt (sep stmt)* [sep] "}"
///   sep       := ";" | newline
///   stmt      := ident "=" value | "find" ident "where" assign ("," assign)*
///   value     := number [ident] | colorlist | ident [ident]
///   colorlist := "(" [ident ":" number ("," ident ":" number)*] ")"
///   number    := integer | integer "/" integer
///
/// `#` starts a comment running to the end of the line.
ParseResult parse_puzzles(std::string_view source);

/// Canonical single-line form; parse_puzzles(serialize_puzzle(s)) yields [s].
std::string serialize_puzzle(const PuzzleSpec& spec);

}  // namespace riddle
