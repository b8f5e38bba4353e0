#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "boole/events.hpp"
#include "boole/rational.hpp"

namespace boole {

/// Parser for the line-oriented constraint format:
///
///     # comment
///     events 3
///     P(1) = 1/2
///     P(1,2) = 0.375
///
/// Indices are 1-based and strictly increasing inside P(...); values are
/// rationals ("a", "a/b", or exact decimals) in [0,1]. `events` must appear
/// exactly once, before any assignment.

struct Diagnostic {
    int line = 0;
    int column = 0;
    std::string code;     // "E001".."E009"
    std::string message;  // one line

    std::string to_string() const;
};

struct ConstraintEntry {
    Subset subset;
    Rational value;
    int line = 0;
};

struct ConstraintFile {
    int n = 0;
    std::vector<ConstraintEntry> entries;

    /// Canonical assignment over the declared subsets.
    ProbabilityAssignment to_assignment() const;
};

struct ParseResult {
    std::optional<ConstraintFile> file;  // set iff diagnostics is empty
    std::vector<Diagnostic> diagnostics;

    bool ok() const { return file.has_value(); }
};

/// Diagnostic codes:
///   E001 assignment before any `events` line
///   E002 `events` redeclared
///   E003 unrecognized line syntax
///   E004 subset index outside 1..n
///   E005 subset indices not strictly increasing
///   E006 duplicate subset
///   E007 value outside [0,1]
///   E008 malformed rational literal
///   E009 event count outside 1..20
ParseResult parse_constraints(std::string_view text);

}  // namespace boole
