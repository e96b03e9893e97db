#include "linrel/format.hpp"

#include <optional>
#include <sstream>
#include <vector>

namespace linrel {

namespace {

struct Line {
    std::size_t number;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string raw;
    std::size_t number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
        std::istringstream ls(raw);
        std::vector<std::string> tokens;
        std::string tok;
        while (ls >> tok) tokens.push_back(tok);
        if (!tokens.empty()) lines.push_back({number, std::move(tokens)});
    }
    return lines;
}

std::size_t parse_dim(const Line& line, const std::string& token) {
    for (char ch : token)
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            throw ParseError(line.number, "expected a non-negative integer, got '" + token + "'");
    try {
        return std::stoul(token);
    } catch (const std::out_of_range&) {
        throw ParseError(line.number, "dimension '" + token + "' out of range");
    }
}

} // namespace

LinearRelation parse_relation(const std::string& text) {
    std::vector<Line> lines = tokenize(text);
    if (lines.empty()) throw ParseError(1, "empty relation file");

    std::size_t at = 0;
    const Line& field_line = lines[at++];
    std::optional<FieldSpec> field;
    if (field_line.tokens[0] != "field")
        throw ParseError(field_line.number, "expected 'field gf <p>' or 'field q'");
    if (field_line.tokens.size() == 2 && field_line.tokens[1] == "q") {
        field = FieldSpec::rationals();
    } else if (field_line.tokens.size() == 3 && field_line.tokens[1] == "gf") {
        std::size_t p = parse_dim(field_line, field_line.tokens[2]);
        if (p >= (1u << 16)) throw NotAPrime("characteristic " + std::to_string(p) + " too large");
        field = FieldSpec::prime(static_cast<std::uint32_t>(p));
    } else {
        throw ParseError(field_line.number, "expected 'field gf <p>' or 'field q'");
    }

    if (at >= lines.size()) throw ParseError(field_line.number, "missing 'dims' line");
    const Line& dims_line = lines[at++];
    if (dims_line.tokens.size() != 3 || dims_line.tokens[0] != "dims")
        throw ParseError(dims_line.number, "expected 'dims <dom_dim> <cod_dim>'");
    std::size_t dom_dim = parse_dim(dims_line, dims_line.tokens[1]);
    std::size_t cod_dim = parse_dim(dims_line, dims_line.tokens[2]);

    std::vector<Vector> rows;
    for (; at < lines.size(); ++at) {
        const Line& line = lines[at];
        if (line.tokens[0] != "gen")
            throw ParseError(line.number, "expected 'gen <scalars...>', got '" + line.tokens[0] + "'");
        if (line.tokens.size() - 1 != dom_dim + cod_dim)
            throw ParseError(line.number,
                             "generator row " + std::to_string(rows.size() + 1) + " has " +
                                 std::to_string(line.tokens.size() - 1) + " entries, expected " +
                                 std::to_string(dom_dim + cod_dim));
        Vector row;
        row.reserve(dom_dim + cod_dim);
        for (std::size_t i = 1; i < line.tokens.size(); ++i) {
            try {
                row.push_back(parse_scalar(*field, line.tokens[i]));
            } catch (const BadScalar& e) {
                throw BadScalar("line " + std::to_string(line.number) + ", column " +
                                std::to_string(i) + ": " + e.what());
            }
        }
        rows.push_back(std::move(row));
    }
    return LinearRelation::from_generators(*field, dom_dim, cod_dim, std::move(rows));
}

std::string serialize_relation(const LinearRelation& r) {
    std::string out = "field " + r.field().name() + "\n";
    out += "dims " + std::to_string(r.dom_dim()) + " " + std::to_string(r.cod_dim()) + "\n";
    for (const Vector& row : r.graph().basis()) {
        out += "gen";
        for (const Scalar& s : row) out += " " + s.to_string();
        out += "\n";
    }
    return out;
}

} // namespace linrel
