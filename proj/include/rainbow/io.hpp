#pragma once

#include "rainbow/core.hpp"
#include "rainbow/nibble.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace rainbow {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& reason)
        : std::runtime_error("line " + std::to_string(line) + ": " + reason),
          line(line),
          reason(reason) {}
    std::size_t line;
    std::string reason;
};

// Instance format (bit-exact, LF endings, '#' starts a comment):
//   rainbow-instance v1
//   colors <n>
//   class <colour> clique <v1> <v2> [<v3> ...]
// Multiplicity is never declared; it is derived from cross-colour pair
// co-occurrence.
ColouredMultigraph parse_instance(const std::string& text);
std::string serialize_instance(const ColouredMultigraph& g);

// Matching format:
//   rainbow-matching v1
//   <colour> <u> <v>      (one line per entry, sorted by colour)
RainbowMatching parse_matching(const std::string& text);
std::string serialize_matching(const RainbowMatching& m);

// Trace CSV: header i,p_i,c_i,phi,killed,zapped,e_dev,d_dev and one row per
// processed chunk. with_colour_columns appends e_c<k> columns holding the
// surviving per-colour edge counts (-1 once a colour is processed).
std::string serialize_trace(const NibbleTrace& trace, bool with_colour_columns = false);

// Locale-independent shortest round-trip formatting for doubles.
std::string format_double(double value);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace rainbow
