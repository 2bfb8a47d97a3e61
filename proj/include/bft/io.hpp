#pragma once

#include <string>

#include "bft/truth_table.hpp"

namespace bft {

/// Function file format: line 1 "n <n>", line 2 "tt <hex>" with
/// max(1, 2^n/4) hex characters; character p encodes indices 4p..4p+3,
/// index 4p in the nibble's most significant bit.  `msb_first` converts
/// between the on-disk MSB-first variable convention and the internal
/// LSB-first storage.
std::string to_function_text(const TruthTable& f, bool msb_first = false);
TruthTable function_from_text(const std::string& text, bool msb_first = false,
                              int max_vars = max_table_vars());

TruthTable read_function_file(const std::string& path, bool msb_first = false,
                              int max_vars = max_table_vars());
void write_function_file(const std::string& path, const TruthTable& f,
                         bool msb_first = false);

}  // namespace bft
