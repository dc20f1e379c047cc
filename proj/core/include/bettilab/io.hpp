#pragma once

#include <string>
#include <vector>

#include "bettilab/diagram.hpp"
#include "bettilab/monomial.hpp"

namespace bettilab {

// Soft diagnostics collected while parsing. A non-increasing lower degree
// sequence is legal input (the diagram may not come from a module) but most
// downstream operations reject it, so it is surfaced here.
struct ParseWarnings {
  bool lower_sequence_non_increasing = false;
  std::vector<std::string> messages;
};

// {"integral": bool, "entries": [[i, j, "p/q"], ...]}. Values may also be
// plain JSON integers. Malformed input throws std::runtime_error; structural
// diagram violations (gap column, nonpositive entry) throw from validation.
BettiDiagram parse_diagram_json(const std::string& text, ParseWarnings* warn = nullptr);

// Header line `i<TAB>j<TAB>beta`, one entry per line, # comments allowed.
// With rows_are_offsets the middle column holds the display row j-i.
BettiDiagram parse_diagram_tsv(const std::string& text, bool rows_are_offsets,
                               ParseWarnings* warn = nullptr);

// Deterministic serialization; parse . emit is the identity.
std::string diagram_to_json(const BettiDiagram& D);

// Whitespace-separated integers; # starts a comment until end of line.
std::vector<int> parse_int_sequence(const std::string& text);

// Header `vars n`, then one monomial per line in `x1^2*x3` syntax
// (a leading scalar is tolerated and discarded); # comments allowed.
MonomialIdeal parse_ideal(const std::string& text);
std::string ideal_to_string(const MonomialIdeal& I);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace bettilab
