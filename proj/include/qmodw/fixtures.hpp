#pragma once

// Frozen reference data for the mod-3 circuit: the reference intermediate
// states psi1..psi4 for every 3-bit input, and the displayed Gram matrix.
// Transcribed by hand, independent of the circuit code.

#include <array>
#include <map>
#include <string>
#include <vector>

#include "qmodw/linalg.hpp"

namespace qmodw {

/// bit string ("000", "100", ...) -> psi1..psi4
using StateTable = std::map<std::string, std::array<StateVector, 4>>;

/// Column order of the reference table: 000, 100, 010, 001, 011, 101, 110, 111.
const std::vector<std::string>& table_column_order();

const StateTable& embedded_state_table();

/// Parses {"000": [[psi1 entries], [psi2], [psi3], [psi4]], ...}; entries are
/// either text ("1/4·i√3") or exact 8-pair encodings. Throws ParseError.
StateTable state_table_from_json(const Json& j);
Json to_json(const StateTable& table);

/// The displayed Gram matrix, lexicographic order 000..111.
const SquareMatrix& embedded_gram_matrix();

}  // namespace qmodw
