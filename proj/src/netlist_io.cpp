#include "revarith/netlist_io.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <vector>

namespace revarith {

namespace {

std::vector<std::string> split_tokens(std::string_view text) {
    std::vector<std::string> tokens;
    std::size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) {
            ++pos;
        }
        std::size_t end = pos;
        while (end < text.size() && text[end] != ' ' && text[end] != '\t') {
            ++end;
        }
        if (end > pos) {
            tokens.emplace_back(text.substr(pos, end - pos));
        }
        pos = end;
    }
    return tokens;
}

/// One logical line of input: comments stripped, blanks skipped.
struct Cursor {
    std::vector<std::pair<int, std::vector<std::string>>> rows;
    std::size_t next = 0;

    explicit Cursor(std::string_view text) {
        int line_number = 0;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            const std::size_t eol = text.find('\n', pos);
            const std::size_t end = (eol == std::string_view::npos) ? text.size() : eol;
            ++line_number;
            std::string_view row = text.substr(pos, end - pos);
            if (const auto hash = row.find('#'); hash != std::string_view::npos) {
                row = row.substr(0, hash);
            }
            auto tokens = split_tokens(row);
            if (!tokens.empty()) {
                rows.emplace_back(line_number, std::move(tokens));
            }
            if (eol == std::string_view::npos) {
                break;
            }
            pos = eol + 1;
        }
    }

    bool done() const { return next >= rows.size(); }
    const std::pair<int, std::vector<std::string>>& peek() const { return rows[next]; }
    void advance() { ++next; }
    int last_line() const { return rows.empty() ? 1 : rows.back().first; }
};

int parse_count(const std::string& token, int line) {
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(token, &used);
    } catch (const std::exception&) {
        throw NetlistParseError(line, "expected a number, got '" + token + "'");
    }
    if (used != token.size() || value < 0) {
        throw NetlistParseError(line, "expected a non-negative number, got '" + token + "'");
    }
    return value;
}

const std::vector<std::string>& expect_section(Cursor& cursor, const std::string& directive,
                                               int& line_out) {
    if (cursor.done()) {
        throw NetlistParseError(cursor.last_line(), "missing " + directive + " section");
    }
    const auto& [line, tokens] = cursor.peek();
    if (tokens[0] != directive) {
        throw NetlistParseError(line, "expected " + directive + ", got '" + tokens[0] + "'");
    }
    line_out = line;
    return tokens;
}

}  // namespace

std::string serialize(const Circuit& circuit) {
    if (const auto violations = validate(circuit); !violations.empty()) {
        throw std::invalid_argument("cannot serialize invalid circuit: " + violations.front());
    }
    if (!valid_identifier(circuit.name)) {
        throw std::invalid_argument("cannot serialize circuit without a valid name");
    }
    std::ostringstream out;
    out << ".version 1\n";
    out << ".name " << circuit.name << "\n";
    out << ".lines " << circuit.lines.size() << "\n";
    out << ".inputs";
    for (const auto& line : circuit.lines) {
        if (line.input.is_constant) {
            out << ' ' << line.input.value;
        } else {
            out << ' ' << line.input.name;
        }
    }
    out << "\n.outputs";
    for (const auto& line : circuit.lines) {
        if (line.output.is_garbage) {
            out << " -";
        } else {
            out << ' ' << line.output.name;
        }
    }
    out << "\n";
    for (const auto& gate : circuit.gates) {
        out << ".gate " << gate_spec(gate.kind).mnemonic;
        for (const int idx : gate.lines) {
            out << ' ' << idx;
        }
        out << "\n";
    }
    out << ".end\n";
    return out.str();
}

Circuit parse_netlist(std::string_view text) {
    Cursor cursor(text);
    Circuit circuit;
    int line = 0;

    {
        const auto& tokens = expect_section(cursor, ".version", line);
        if (tokens.size() != 2 || tokens[1] != "1") {
            throw NetlistParseError(line, "unsupported version");
        }
        cursor.advance();
    }
    {
        const auto& tokens = expect_section(cursor, ".name", line);
        if (tokens.size() != 2 || !valid_identifier(tokens[1])) {
            throw NetlistParseError(line, "expected a single identifier after .name");
        }
        circuit.name = tokens[1];
        cursor.advance();
    }
    int line_count = 0;
    {
        const auto& tokens = expect_section(cursor, ".lines", line);
        if (tokens.size() != 2) {
            throw NetlistParseError(line, "expected a single count after .lines");
        }
        line_count = parse_count(tokens[1], line);
        if (line_count > 1000000) {
            throw NetlistParseError(line, "line count " + tokens[1] + " too large");
        }
        cursor.advance();
    }
    {
        const auto& tokens = expect_section(cursor, ".inputs", line);
        if (static_cast<int>(tokens.size()) - 1 != line_count) {
            throw NetlistParseError(line, ".inputs expects " + std::to_string(line_count) +
                                              " tokens, got " +
                                              std::to_string(tokens.size() - 1));
        }
        std::set<std::string> seen;
        for (int i = 0; i < line_count; ++i) {
            const auto& token = tokens[static_cast<std::size_t>(i) + 1];
            if (token == "0" || token == "1") {
                circuit.add_constant(token == "1" ? 1 : 0);
            } else if (!valid_identifier(token)) {
                throw NetlistParseError(line, "invalid input token '" + token + "'");
            } else if (!seen.insert(token).second) {
                throw NetlistParseError(line, "duplicate input name " + token);
            } else {
                circuit.add_input(token);
            }
        }
        cursor.advance();
    }
    {
        const auto& tokens = expect_section(cursor, ".outputs", line);
        if (static_cast<int>(tokens.size()) - 1 != line_count) {
            throw NetlistParseError(line, ".outputs expects " + std::to_string(line_count) +
                                              " tokens, got " +
                                              std::to_string(tokens.size() - 1));
        }
        std::set<std::string> seen;
        for (int i = 0; i < line_count; ++i) {
            const auto& token = tokens[static_cast<std::size_t>(i) + 1];
            if (token == "-") {
                continue;
            }
            if (!valid_identifier(token)) {
                throw NetlistParseError(line, "invalid output token '" + token + "'");
            }
            if (!seen.insert(token).second) {
                throw NetlistParseError(line, "duplicate output name " + token);
            }
            circuit.set_output(i, token);
        }
        cursor.advance();
    }

    bool ended = false;
    while (!cursor.done()) {
        const auto& [row_line, tokens] = cursor.peek();
        if (tokens[0] == ".end") {
            if (tokens.size() != 1) {
                throw NetlistParseError(row_line, "unexpected token after .end");
            }
            cursor.advance();
            ended = true;
            break;
        }
        if (tokens[0] != ".gate") {
            throw NetlistParseError(row_line, "expected .gate or .end, got '" + tokens[0] + "'");
        }
        if (tokens.size() < 2) {
            throw NetlistParseError(row_line, "missing gate mnemonic");
        }
        const auto kind = gate_from_name(tokens[1]);
        if (!kind) {
            throw NetlistParseError(row_line, "unknown gate " + tokens[1]);
        }
        const auto& spec = gate_spec(*kind);
        if (static_cast<int>(tokens.size()) - 2 != spec.arity) {
            throw NetlistParseError(row_line, std::string(spec.mnemonic) + " expects " +
                                                  std::to_string(spec.arity) +
                                                  " line indices, got " +
                                                  std::to_string(tokens.size() - 2));
        }
        std::vector<int> indices;
        for (int k = 0; k < spec.arity; ++k) {
            const int idx = parse_count(tokens[static_cast<std::size_t>(k) + 2], row_line);
            if (idx >= line_count) {
                throw NetlistParseError(row_line,
                                        "line index " + std::to_string(idx) + " out of range");
            }
            indices.push_back(idx);
        }
        std::set<int> distinct(indices.begin(), indices.end());
        if (distinct.size() != indices.size()) {
            throw NetlistParseError(row_line, "duplicate line index in gate");
        }
        circuit.add_gate(*kind, std::move(indices));
        cursor.advance();
    }
    if (!ended) {
        throw NetlistParseError(cursor.last_line(), "missing .end");
    }
    if (!cursor.done()) {
        throw NetlistParseError(cursor.peek().first,
                                "unexpected content after .end: '" + cursor.peek().second[0] + "'");
    }
    return circuit;
}

Circuit load_netlist(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_netlist(buffer.str());
}

void save_netlist(const std::string& path, const Circuit& circuit) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open " + path + " for writing");
    }
    out << serialize(circuit);
}

}  // namespace revarith
