#pragma once

#include <array>
#include <stdexcept>

#include "aesmix/gf256.hpp"

// The byte-substitution, row-shift and round-key-addition transforms and
// their inverses. The S-box is derived at startup from field inversion plus
// the affine map rather than hard-coded, and is immutable afterwards.

namespace aesmix {

using Block = std::array<byte, 16>;
using RoundKey = std::array<byte, 16>;

// 4x4 byte matrix holding one 128-bit block; m[row][col]. Block bytes map
// column-major: byte k sits at row k % 4, column k / 4.
struct State {
  std::array<std::array<byte, 4>, 4> m{};

  friend bool operator==(const State&, const State&) = default;
};

constexpr State state_from_block(const Block& block) {
  State s;
  for (int col = 0; col < 4; ++col)
    for (int row = 0; row < 4; ++row)
      s.m[row][col] = block[4 * col + row];
  return s;
}

constexpr Block block_from_state(const State& s) {
  Block block{};
  for (int col = 0; col < 4; ++col)
    for (int row = 0; row < 4; ++row)
      block[4 * col + row] = s.m[row][col];
  return block;
}

// Forward/inverse byte-substitution permutations; a bijection pair.
struct SBox {
  std::array<byte, 256> forward{};
  std::array<byte, 256> inverse{};
};

// Multiplicative inverse in the field; 0 maps to 0. Exhaustive search
// against gmul, 255 trial products per byte, run once at startup.
inline byte field_inverse(byte b) {
  if (b == 0) return 0;
  for (int y = 1; y < 256; ++y)
    if (gmul(b, static_cast<byte>(y)) == 0x01) return static_cast<byte>(y);
  throw std::logic_error("field_inverse: no inverse found");
}

// Affine map over GF(2): output bit i = b_i ^ b_(i+4) ^ b_(i+5) ^ b_(i+6)
// ^ b_(i+7) (indices mod 8) ^ c_i, with c = 0x63.
constexpr byte sbox_affine(byte b) {
  constexpr byte c = 0x63;
  byte out = 0;
  for (int i = 0; i < 8; ++i) {
    const unsigned bit = ((b >> i) ^ (b >> ((i + 4) & 7)) ^ (b >> ((i + 5) & 7)) ^
                          (b >> ((i + 6) & 7)) ^ (b >> ((i + 7) & 7)) ^ (c >> i)) &
                         1u;
    out = static_cast<byte>(out | (bit << i));
  }
  return out;
}

inline SBox build_sbox() {
  SBox box;
  for (int b = 0; b < 256; ++b)
    box.forward[b] = sbox_affine(field_inverse(static_cast<byte>(b)));
  for (int b = 0; b < 256; ++b)
    box.inverse[box.forward[b]] = static_cast<byte>(b);
  return box;
}

// Process-wide S-box, built once and shared read-only.
inline const SBox& default_sbox() {
  static const SBox box = build_sbox();
  return box;
}

// Every byte replaced independently through the forward (or inverse) table.
inline State sub_bytes(const State& s, const SBox& box, bool inverse) {
  const auto& table = inverse ? box.inverse : box.forward;
  State out;
  for (int row = 0; row < 4; ++row)
    for (int col = 0; col < 4; ++col)
      out.m[row][col] = table[s.m[row][col]];
  return out;
}

// Row i rotated left by i positions (right when inverse). Row 0 is fixed.
inline State shift_rows(const State& s, bool inverse) {
  State out;
  for (int row = 0; row < 4; ++row)
    for (int col = 0; col < 4; ++col)
      out.m[row][col] = inverse ? s.m[row][(col - row + 4) & 3]
                                : s.m[row][(col + row) & 3];
  return out;
}

// Byte-wise XOR with a round key mapped column-major like the State.
// Self-inverse.
inline State add_round_key(const State& s, const RoundKey& rk) {
  State out;
  for (int row = 0; row < 4; ++row)
    for (int col = 0; col < 4; ++col)
      out.m[row][col] = static_cast<byte>(s.m[row][col] ^ rk[4 * col + row]);
  return out;
}

}  // namespace aesmix
