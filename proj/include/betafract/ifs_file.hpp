#pragma once

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "betafract/contraction.hpp"
#include "betafract/parse.hpp"

namespace betafract {

struct IfsParseError : std::runtime_error {
    IfsParseError(size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
    size_t line;
};

// IFS spec format: one map per line, `map a=<laurent-literal> b=<laurent-literal>`;
// blank lines and lines starting with '#' are ignored. Every map must carry a
// valid strict-contraction certificate.
inline IFS parse_ifs_spec(std::string_view text) {
    std::vector<ContractionMap> maps;
    size_t lineno = 0;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        ++lineno;
        size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::string_view body(line);
        body = body.substr(start);
        if (body.rfind("map", 0) != 0)
            throw IfsParseError(lineno, "expected 'map a=... b=...'");
        size_t apos = body.find("a=");
        size_t bpos = body.find("b=");
        if (apos == std::string_view::npos || bpos == std::string_view::npos || bpos <= apos)
            throw IfsParseError(lineno, "expected 'map a=... b=...'");
        std::string_view a_lit = body.substr(apos + 2, bpos - (apos + 2));
        std::string_view b_lit = body.substr(bpos + 2);
        try {
            maps.emplace_back(parse_laurent(a_lit), parse_laurent(b_lit));
        } catch (const std::invalid_argument& e) {
            throw IfsParseError(lineno, e.what());
        }
    }
    if (maps.empty()) throw IfsParseError(lineno, "no maps in spec");
    return IFS(std::move(maps));
}

}  // namespace betafract
