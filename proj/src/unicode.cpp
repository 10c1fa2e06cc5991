#include "mqmchat/unicode.hpp"

#include <array>

#include "mqmchat/error.hpp"

namespace mqmchat::uni {

OffsetEncoding offset_encoding_from_string(std::string_view name) {
  if (name == "scalar") return OffsetEncoding::Scalar;
  if (name == "utf16") return OffsetEncoding::Utf16;
  if (name == "utf8") return OffsetEncoding::Utf8;
  throw Error("unknown offset encoding: " + std::string(name));
}

std::string_view to_string(OffsetEncoding enc) {
  switch (enc) {
    case OffsetEncoding::Scalar: return "scalar";
    case OffsetEncoding::Utf16: return "utf16";
    case OffsetEncoding::Utf8: return "utf8";
  }
  return "scalar";
}

std::u32string decode_utf8(std::string_view s) {
  std::u32string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    unsigned char b0 = static_cast<unsigned char>(s[i]);
    char32_t cp = 0;
    std::size_t len = 0;
    if (b0 < 0x80) {
      cp = b0;
      len = 1;
    } else if ((b0 & 0xE0) == 0xC0) {
      cp = b0 & 0x1F;
      len = 2;
    } else if ((b0 & 0xF0) == 0xE0) {
      cp = b0 & 0x0F;
      len = 3;
    } else if ((b0 & 0xF8) == 0xF0) {
      cp = b0 & 0x07;
      len = 4;
    } else {
      throw Error("invalid UTF-8 lead byte at offset " + std::to_string(i));
    }
    if (i + len > s.size()) throw Error("truncated UTF-8 sequence at offset " + std::to_string(i));
    for (std::size_t k = 1; k < len; ++k) {
      unsigned char b = static_cast<unsigned char>(s[i + k]);
      if ((b & 0xC0) != 0x80) throw Error("invalid UTF-8 continuation at offset " + std::to_string(i + k));
      cp = (cp << 6) | (b & 0x3F);
    }
    static constexpr std::array<char32_t, 5> kMin = {0, 0, 0x80, 0x800, 0x10000};
    if (cp < kMin[len]) throw Error("overlong UTF-8 sequence at offset " + std::to_string(i));
    if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF))
      throw Error("invalid scalar value in UTF-8 at offset " + std::to_string(i));
    out.push_back(cp);
    i += len;
  }
  return out;
}

std::string encode_utf8(std::u32string_view s) {
  std::string out;
  out.reserve(s.size() * 3);
  for (char32_t cp : s) {
    if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) throw Error("invalid scalar value");
    if (cp < 0x80) {
      out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
      out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
      out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
      out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
  }
  return out;
}

std::size_t scalar_length(std::string_view s) { return decode_utf8(s).size(); }

std::string slice_scalars(std::string_view s, std::size_t start, std::size_t end) {
  return encode_utf8(slice_scalars(decode_utf8(s), start, end));
}

std::u32string slice_scalars(const std::u32string& s, std::size_t start, std::size_t end) {
  if (start > end || end > s.size())
    throw Error("scalar slice [" + std::to_string(start) + ", " + std::to_string(end) +
                ") out of range for length " + std::to_string(s.size()));
  return s.substr(start, end - start);
}

std::size_t utf16_units(char32_t c) { return c >= 0x10000 ? 2 : 1; }

std::size_t utf8_units(char32_t c) {
  if (c < 0x80) return 1;
  if (c < 0x800) return 2;
  if (c < 0x10000) return 3;
  return 4;
}

std::size_t to_scalar_offset(const std::u32string& text, std::size_t offset, OffsetEncoding enc) {
  if (enc == OffsetEncoding::Scalar) {
    if (offset > text.size()) throw Error("offset " + std::to_string(offset) + " past end of text");
    return offset;
  }
  std::size_t units = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (units == offset) return i;
    units += enc == OffsetEncoding::Utf16 ? utf16_units(text[i]) : utf8_units(text[i]);
    if (units > offset) throw Error("offset " + std::to_string(offset) + " splits a code unit sequence");
  }
  if (units == offset) return text.size();
  throw Error("offset " + std::to_string(offset) + " past end of text");
}

std::size_t from_scalar_offset(const std::u32string& text, std::size_t scalar, OffsetEncoding enc) {
  if (scalar > text.size()) throw Error("scalar offset past end of text");
  if (enc == OffsetEncoding::Scalar) return scalar;
  std::size_t units = 0;
  for (std::size_t i = 0; i < scalar; ++i)
    units += enc == OffsetEncoding::Utf16 ? utf16_units(text[i]) : utf8_units(text[i]);
  return units;
}

bool is_space(char32_t c) {
  switch (c) {
    case U' ':
    case U'\t':
    case U'\n':
    case U'\r':
    case U'\f':
    case U'\v':
    case 0x00A0:
    case 0x3000:
      return true;
    default:
      return false;
  }
}

bool is_punct(char32_t c) {
  if (c < 0x80) {
    return (c >= U'!' && c <= U'/') || (c >= U':' && c <= U'@') || (c >= U'[' && c <= U'`') ||
           (c >= U'{' && c <= U'~');
  }
  switch (c) {
    case 0x3001:  // 、
    case 0x3002:  // 。
    case 0x300C:
    case 0x300D:
    case 0x300E:
    case 0x300F:
    case 0x3010:
    case 0x3011:
    case 0xFF01:  // ！
    case 0xFF08:
    case 0xFF09:
    case 0xFF0C:  // ，
    case 0xFF0E:
    case 0xFF1A:
    case 0xFF1B:
    case 0xFF1F:  // ？
    case 0x2018:
    case 0x2019:
    case 0x201C:
    case 0x201D:
    case 0x2026:  // …
    case 0x00B7:
    case 0x2014:
      return true;
    default:
      return false;
  }
}

std::size_t whitespace_token_count(std::string_view s) {
  std::u32string text = decode_utf8(s);
  std::size_t count = 0;
  bool in_token = false;
  for (char32_t c : text) {
    if (is_space(c)) {
      in_token = false;
    } else if (!in_token) {
      in_token = true;
      ++count;
    }
  }
  return count;
}

}  // namespace mqmchat::uni
