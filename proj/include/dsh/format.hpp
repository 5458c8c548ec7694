#pragma once

#include "group.hpp"
#include "series.hpp"

#include <string>
#include <string_view>

namespace dsh {

enum class Alphabet { X, Y, Z, V };

// Letters print as x0, x1 (the identity), x[1] or x[1,0]; y-letters as y2 or
// y2[1]; z-letters likewise with z. The empty word prints as "1".
std::string format_word(const Group& group, const Word& w, Alphabet alphabet);
std::string format_tensor_key(const Group& group, const std::string& key, Alphabet alphabet);

// Inverse of format_word. Y and Z words may also be written in X-letters, as
// long as they do not end in x0. Errors carry the column (1-based, offset by
// column_offset) and the given line.
Word parse_word(const Group& group, std::string_view text, Alphabet alphabet, int line = 1, int column_offset = 0);

char alphabet_tag(Alphabet a);
Alphabet parse_alphabet_tag(std::string_view tag);

} // namespace dsh
