#pragma once

#include <string>
#include <string_view>

namespace tagsim {

// Canonical text cleanup applied to every song, artist, album and tag name:
// lowercase, accents folded to their Latin base letter, digits spelled out
// ("2" -> "two", digit by digit), everything else collapsed to single spaces.
// Idempotent; the result matches ^[a-z]+( [a-z]+)*$ or is empty.
std::string normalize_text(std::string_view s);

// English word for a single decimal digit.
std::string_view digit_word(int digit);

}  // namespace tagsim
