#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sdgpipe {

// Shared low-level text helpers. Everything operates on UTF-8; invalid
// byte sequences are treated as non-letters and never make a function
// throw.

// Number of Unicode scalar values in `s`.
std::size_t utf8_length(std::string_view s);

// Lowercases ASCII and Latin-1 letters; other scalars pass through.
std::string utf8_lowercase(std::string_view s);

// Collapses runs of ASCII whitespace to single spaces and trims the ends.
std::string normalize_whitespace(std::string_view s);

// Maximal alphabetic runs (ASCII + Latin letters up to U+024F), lowercased.
// Runs shorter than `min_len` scalars are dropped.
std::vector<std::string> tokenize_words(std::string_view s,
                                        std::size_t min_len = 1);

// 64-bit FNV-1a.
std::uint64_t fnv1a64(std::string_view data);

std::string hex64(std::uint64_t v);

}  // namespace sdgpipe
