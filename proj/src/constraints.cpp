#include "boole/constraints.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace boole {

std::string Diagnostic::to_string() const {
    std::ostringstream out;
    out << line << ":" << column << ": " << code << ": " << message;
    return out.str();
}

namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    void skip_spaces() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    }
    bool done() {
        skip_spaces();
        return pos >= text.size();
    }
    bool literal(char c) {
        skip_spaces();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    int column() const { return static_cast<int>(pos) + 1; }
};

std::optional<long> read_int(Cursor& cur) {
    cur.skip_spaces();
    const std::size_t start = cur.pos;
    while (cur.pos < cur.text.size() && std::isdigit(static_cast<unsigned char>(cur.text[cur.pos])))
        ++cur.pos;
    if (cur.pos == start) return std::nullopt;
    return std::stol(std::string(cur.text.substr(start, cur.pos - start)));
}

// token up to end of line (the value after '='), trimmed
std::string_view rest_token(Cursor& cur) {
    cur.skip_spaces();
    std::string_view rest = cur.text.substr(cur.pos);
    while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest.back())))
        rest.remove_suffix(1);
    return rest;
}

}  // namespace

ParseResult parse_constraints(std::string_view text) {
    ParseResult result;
    std::vector<Diagnostic>& diags = result.diagnostics;

    std::optional<int> declared_n;
    std::vector<ConstraintEntry> entries;
    std::map<Subset, int> seen;  // subset -> first line

    int line_no = 0;
    std::size_t offset = 0;
    while (offset <= text.size()) {
        const std::size_t eol = text.find('\n', offset);
        std::string_view line = text.substr(
            offset, eol == std::string_view::npos ? std::string_view::npos : eol - offset);
        offset = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

        Cursor cur{line};
        if (cur.done()) continue;
        if (line[cur.pos] == '#') continue;

        auto fail = [&](const std::string& code, const std::string& message) {
            diags.push_back(Diagnostic{line_no, cur.column(), code, message});
        };

        if (line.substr(cur.pos, 6) == "events") {
            cur.pos += 6;
            const auto n = read_int(cur);
            if (!n || !cur.done()) {
                fail("E003", "expected: events <count>");
                continue;
            }
            if (declared_n) {
                fail("E002", "events already declared as " + std::to_string(*declared_n));
                continue;
            }
            if (*n < 1 || *n > 20) {
                fail("E009", "event count must be in 1..20, got " + std::to_string(*n));
                continue;
            }
            declared_n = static_cast<int>(*n);
            continue;
        }

        if (line[cur.pos] == 'P') {
            ++cur.pos;
            if (!cur.literal('(')) {
                fail("E003", "expected '(' after P");
                continue;
            }
            Subset subset;
            bool bad = false;
            for (;;) {
                const auto idx = read_int(cur);
                if (!idx) {
                    fail("E003", "expected event index");
                    bad = true;
                    break;
                }
                subset.push_back(static_cast<int>(*idx));
                if (cur.literal(',')) continue;
                if (cur.literal(')')) break;
                fail("E003", "expected ',' or ')' in subset");
                bad = true;
                break;
            }
            if (bad) continue;
            if (!cur.literal('=')) {
                fail("E003", "expected '=' after subset");
                continue;
            }
            const std::string_view value_text = rest_token(cur);
            if (!declared_n) {
                fail("E001", "events not declared before first assignment");
                continue;
            }
            bool increasing = true;
            for (std::size_t i = 0; i + 1 < subset.size(); ++i)
                if (subset[i] >= subset[i + 1]) increasing = false;
            if (!increasing) {
                fail("E005", "subset indices must be strictly increasing");
                continue;
            }
            if (subset.front() < 1 || subset.back() > *declared_n) {
                fail("E004", "subset index outside 1.." + std::to_string(*declared_n));
                continue;
            }
            if (auto it = seen.find(subset); it != seen.end()) {
                fail("E006",
                     "subset already assigned on line " + std::to_string(it->second));
                continue;
            }
            const auto value = parse_rational(value_text);
            if (!value) {
                fail("E008", "malformed rational '" + std::string(value_text) + "'");
                continue;
            }
            if (!in_unit_interval(*value)) {
                fail("E007", "value outside [0,1]: " + boole::to_string(*value));
                continue;
            }
            seen.emplace(subset, line_no);
            entries.push_back(ConstraintEntry{std::move(subset), *value, line_no});
            continue;
        }

        fail("E003", "unrecognized line");
    }

    if (!declared_n && diags.empty())
        diags.push_back(Diagnostic{line_no, 1, "E001", "events not declared"});

    if (diags.empty()) {
        ConstraintFile file;
        file.n = *declared_n;
        file.entries = std::move(entries);
        result.file = std::move(file);
    }
    return result;
}

ProbabilityAssignment ConstraintFile::to_assignment() const {
    std::vector<ConstraintEntry> sorted = entries;
    std::sort(sorted.begin(), sorted.end(),
              [](const ConstraintEntry& a, const ConstraintEntry& b) {
                  return subset_less(a.subset, b.subset);
              });
    std::vector<Subset> family;
    std::vector<Rational> values;
    family.reserve(sorted.size());
    values.reserve(sorted.size());
    for (const ConstraintEntry& e : sorted) {
        family.push_back(e.subset);
        values.push_back(e.value);
    }
    return ProbabilityAssignment(EventScenario(n, std::move(family)), std::move(values));
}

}  // namespace boole
