#pragma once

#include <string>
#include <vector>

#include "mir/ideal.hpp"

namespace mir {

inline constexpr int kMaxVariableCount = 1'000'000;

// A parsed but not yet canonicalized ideal description.
struct IdealDocument {
    int variable_count = 0;
    std::vector<Monomial> generators;  // input order, duplicates kept
    std::string format;                // "text" or "json"

    // Canonicalizes into a checked MonomialIdeal.
    MonomialIdeal to_ideal() const;
};

// Text format:  a header line `n = <count>` (a bare integer is also
// accepted), then one monomial per line, e.g. `x1^2*x2`.  `#` starts a
// comment; blank lines are skipped; whitespace is free within a line.
IdealDocument parse_ideal_text(const std::string& content);

// JSON format: {"n": <count>, "generators": [[e1,...,en], ...]} with
// non-negative integer exponents.
IdealDocument parse_ideal_json(const std::string& content);

// Dispatches on format ("text" or "json").
IdealDocument parse_ideal(const std::string& content, const std::string& format);

}  // namespace mir
