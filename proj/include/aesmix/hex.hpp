#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "aesmix/gf256.hpp"

namespace aesmix {

inline std::string to_hex(std::span<const byte> data) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(data.size() * 2);
  for (byte b : data) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0x0F]);
  }
  return out;
}

inline std::optional<int> hex_nibble(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return std::nullopt;
}

// Strict decode: even length, hex digits only.
inline std::optional<std::vector<byte>> from_hex(std::string_view text) {
  if (text.size() % 2 != 0) return std::nullopt;
  std::vector<byte> out;
  out.reserve(text.size() / 2);
  for (std::size_t i = 0; i < text.size(); i += 2) {
    const auto hi = hex_nibble(text[i]);
    const auto lo = hex_nibble(text[i + 1]);
    if (!hi || !lo) return std::nullopt;
    out.push_back(static_cast<byte>((*hi << 4) | *lo));
  }
  return out;
}

}  // namespace aesmix
