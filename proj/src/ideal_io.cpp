#include "mir/ideal_io.hpp"

#include <cctype>
#include <utility>

#include "mir/errors.hpp"
#include "json.hpp"

namespace mir {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Reads a decimal number at line[pos]; values are capped well above every
// legal input so overflow cannot occur silently.
std::uint64_t read_number(const std::string& line, std::size_t& pos, int line_no) {
    if (pos >= line.size() || !is_digit(line[pos])) {
        throw ParseError("expected a number", line_no, static_cast<int>(pos) + 1);
    }
    std::uint64_t value = 0;
    while (pos < line.size() && is_digit(line[pos])) {
        value = value * 10 + static_cast<std::uint64_t>(line[pos] - '0');
        if (value > 100'000'000'000ull) {
            throw ParseError("number is too large", line_no, static_cast<int>(pos) + 1);
        }
        ++pos;
    }
    return value;
}

void skip_spaces(const std::string& line, std::size_t& pos) {
    while (pos < line.size() && is_space(line[pos])) ++pos;
}

int parse_header(const std::string& line, int line_no) {
    std::size_t pos = 0;
    skip_spaces(line, pos);
    if (pos < line.size() && (line[pos] == 'n' || line[pos] == 'N')) {
        ++pos;
        skip_spaces(line, pos);
        if (pos >= line.size() || line[pos] != '=') {
            throw ParseError("expected '=' after 'n'", line_no, static_cast<int>(pos) + 1);
        }
        ++pos;
        skip_spaces(line, pos);
    }
    const std::uint64_t n = read_number(line, pos, line_no);
    skip_spaces(line, pos);
    if (pos != line.size()) {
        throw ParseError("unexpected text after the variable count", line_no,
                         static_cast<int>(pos) + 1);
    }
    if (n < 1 || n > static_cast<std::uint64_t>(kMaxVariableCount)) {
        throw ParseError("variable count must be between 1 and " +
                             std::to_string(kMaxVariableCount),
                         line_no, 1);
    }
    return static_cast<int>(n);
}

Monomial parse_monomial_line(const std::string& line, int line_no, int n) {
    std::vector<std::uint32_t> exps(static_cast<std::size_t>(n), 0);
    std::size_t pos = 0;
    skip_spaces(line, pos);
    while (true) {
        const int term_col = static_cast<int>(pos) + 1;
        if (pos >= line.size() || line[pos] != 'x') {
            throw ParseError("expected a term of the form x<index>[^<exponent>]", line_no,
                             term_col);
        }
        ++pos;
        const std::uint64_t index = read_number(line, pos, line_no);
        if (index < 1 || index > static_cast<std::uint64_t>(n)) {
            throw ParseError("variable index " + std::to_string(index) + " out of range 1.." +
                                 std::to_string(n),
                             line_no, term_col);
        }
        std::uint64_t exponent = 1;
        skip_spaces(line, pos);
        if (pos < line.size() && line[pos] == '^') {
            ++pos;
            skip_spaces(line, pos);
            const int exp_col = static_cast<int>(pos) + 1;
            exponent = read_number(line, pos, line_no);
            if (exponent == 0) {
                throw ParseError("exponent must be positive", line_no, exp_col);
            }
            if (exponent > kMaxInputExponent) {
                throw ParseError("exponent exceeds the input limit of " +
                                     std::to_string(kMaxInputExponent),
                                 line_no, exp_col);
            }
            skip_spaces(line, pos);
        }
        if (exps[static_cast<std::size_t>(index - 1)] != 0) {
            throw ParseError("variable x" + std::to_string(index) +
                                 " appears twice in one monomial",
                             line_no, term_col);
        }
        exps[static_cast<std::size_t>(index - 1)] = static_cast<std::uint32_t>(exponent);
        if (pos >= line.size()) break;
        if (line[pos] != '*') {
            throw ParseError("expected '*' between terms", line_no, static_cast<int>(pos) + 1);
        }
        ++pos;
        skip_spaces(line, pos);
    }
    return Monomial(std::move(exps));
}

std::pair<int, int> position_at_byte(const std::string& content, std::size_t byte) {
    int line = 1, column = 1;
    const std::size_t stop = byte > 0 ? std::min(byte - 1, content.size()) : 0;
    for (std::size_t i = 0; i < stop; ++i) {
        if (content[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

}  // namespace

MonomialIdeal IdealDocument::to_ideal() const {
    return MonomialIdeal::minimalize(variable_count, generators);
}

IdealDocument parse_ideal_text(const std::string& content) {
    IdealDocument doc;
    doc.format = "text";
    bool have_header = false;
    int line_no = 0;
    std::size_t start = 0;
    while (start <= content.size()) {
        const std::size_t end = content.find('\n', start);
        std::string line = content.substr(
            start, end == std::string::npos ? std::string::npos : end - start);
        ++line_no;
        start = end == std::string::npos ? content.size() + 1 : end + 1;

        if (const std::size_t hash = line.find('#'); hash != std::string::npos) {
            line.resize(hash);
        }
        std::size_t probe = 0;
        skip_spaces(line, probe);
        if (probe == line.size()) continue;  // blank or comment-only

        if (!have_header) {
            doc.variable_count = parse_header(line, line_no);
            have_header = true;
        } else {
            doc.generators.push_back(parse_monomial_line(line, line_no, doc.variable_count));
        }
    }
    if (!have_header) throw ParseError("missing variable count line", 1, 1);
    if (doc.generators.empty()) {
        throw ValidationError("document contains no generators");
    }
    return doc;
}

IdealDocument parse_ideal_json(const std::string& content) {
    nlohmann::json parsed;
    try {
        parsed = nlohmann::json::parse(content);
    } catch (const nlohmann::json::parse_error& e) {
        const auto [line, column] = position_at_byte(content, e.byte);
        throw ParseError("invalid JSON document", line, column);
    }
    if (!parsed.is_object()) throw ValidationError("top-level JSON value must be an object");
    if (!parsed.contains("n") || !parsed["n"].is_number_integer()) {
        throw ValidationError("missing integer field \"n\"");
    }
    const std::int64_t n = parsed["n"].get<std::int64_t>();
    if (n < 1 || n > kMaxVariableCount) {
        throw ValidationError("variable count must be between 1 and " +
                              std::to_string(kMaxVariableCount));
    }
    if (!parsed.contains("generators") || !parsed["generators"].is_array()) {
        throw ValidationError("missing array field \"generators\"");
    }
    IdealDocument doc;
    doc.format = "json";
    doc.variable_count = static_cast<int>(n);
    for (const auto& entry : parsed["generators"]) {
        if (!entry.is_array() || entry.size() != static_cast<std::size_t>(n)) {
            throw ValidationError("each generator must be an array of " + std::to_string(n) +
                                  " exponents");
        }
        std::vector<std::uint32_t> exps;
        exps.reserve(static_cast<std::size_t>(n));
        for (const auto& value : entry) {
            if (!value.is_number_integer()) {
                throw ValidationError("exponents must be integers");
            }
            const std::int64_t e = value.get<std::int64_t>();
            if (e < 0) throw ValidationError("exponents must be non-negative");
            if (e > static_cast<std::int64_t>(kMaxInputExponent)) {
                throw ValidationError("exponent exceeds the input limit of " +
                                      std::to_string(kMaxInputExponent));
            }
            exps.push_back(static_cast<std::uint32_t>(e));
        }
        doc.generators.emplace_back(std::move(exps));
    }
    if (doc.generators.empty()) throw ValidationError("document contains no generators");
    return doc;
}

IdealDocument parse_ideal(const std::string& content, const std::string& format) {
    if (format == "text") return parse_ideal_text(content);
    if (format == "json") return parse_ideal_json(content);
    throw ValidationError("unknown format \"" + format + "\" (expected text or json)");
}

}  // namespace mir
