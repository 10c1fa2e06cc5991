#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace mqmchat::uni {

// All span offsets in this codebase count Unicode scalar values.
// These helpers convert between UTF-8 byte strings and scalar sequences
// and re-index offsets coming from tools that count code units instead.

enum class OffsetEncoding { Scalar, Utf16, Utf8 };

OffsetEncoding offset_encoding_from_string(std::string_view name);
std::string_view to_string(OffsetEncoding enc);

// Throws Error on malformed UTF-8 (overlong forms, surrogates, truncation).
std::u32string decode_utf8(std::string_view s);
std::string encode_utf8(std::u32string_view s);

std::size_t scalar_length(std::string_view s);

// Substring by scalar offsets, half-open. Throws Error on out-of-range.
std::string slice_scalars(std::string_view s, std::size_t start, std::size_t end);
std::u32string slice_scalars(const std::u32string& s, std::size_t start, std::size_t end);

// Re-index a code-unit offset into a scalar offset within `text`.
// Throws Error when the offset is past the end or splits a code unit pair.
std::size_t to_scalar_offset(const std::u32string& text, std::size_t offset, OffsetEncoding enc);

// Scalar offset -> code-unit offset (inverse of the above).
std::size_t from_scalar_offset(const std::u32string& text, std::size_t scalar, OffsetEncoding enc);

std::size_t utf16_units(char32_t c);
std::size_t utf8_units(char32_t c);

bool is_space(char32_t c);
bool is_punct(char32_t c);

// Whitespace-delimited token count (word counting on the target side).
std::size_t whitespace_token_count(std::string_view s);

}  // namespace mqmchat::uni
