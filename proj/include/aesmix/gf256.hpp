#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>

// GF(2^8) arithmetic under the AES reduction polynomial
// x^8 + x^4 + x^3 + x + 1, plus the three interchangeable strategies for
// multiplying by the column-mix constants:
//
//   - bitwise:  each output bit as an XOR of input bits (fixed expansions)
//   - table:    256-entry lookup tables, generated and verified at startup
//   - xtime:    shift-and-reduce chains combined per constant
//
// gmul() is the general bit-serial multiplier; it shares no code with the
// three strategies and serves as the reference they are all checked against.
//
// Bit convention: m0 is the least significant bit of a byte.

namespace aesmix {

using byte = std::uint8_t;

// Feedback byte for the reduction polynomial: x^4 + x^3 + x + 1 = 0x1B.
inline constexpr byte kReductionByte = 0x1B;

// The seven constants appearing in the forward and inverse column-mix
// matrices. The specialized multipliers below are defined for these only.
enum class MulConstant : byte {
  by01 = 0x01,
  by02 = 0x02,
  by03 = 0x03,
  by09 = 0x09,
  by0B = 0x0B,
  by0D = 0x0D,
  by0E = 0x0E,
};

inline constexpr std::array<MulConstant, 7> kMulConstants = {
    MulConstant::by01, MulConstant::by02, MulConstant::by03,
    MulConstant::by09, MulConstant::by0B, MulConstant::by0D,
    MulConstant::by0E,
};

constexpr byte to_byte(MulConstant c) { return static_cast<byte>(c); }

constexpr std::optional<MulConstant> mul_constant_from_byte(byte b) {
  for (MulConstant c : kMulConstants)
    if (to_byte(c) == b) return c;
  return std::nullopt;
}

// Multiplication by x: left shift, then reduce when the shifted-out bit
// was set. Equal to gmul(0x02, b) for every b.
constexpr byte xtime(byte b) {
  const byte shifted = static_cast<byte>(b << 1);
  return (b & 0x80) ? static_cast<byte>(shifted ^ kReductionByte) : shifted;
}

// General product in GF(2^8): bit-serial shift-and-conditional-XOR over all
// eight multiplier bits. Reference route for verifying the constant
// multipliers; deliberately independent of xtime() and the tables.
constexpr byte gmul(byte a, byte b) {
  byte acc = 0;
  for (int i = 0; i < 8; ++i) {
    if (b & (1u << i)) acc ^= a;
    const bool overflow = (a & 0x80) != 0;
    a = static_cast<byte>(a << 1);
    if (overflow) a ^= kReductionByte;
  }
  return acc;
}

// Constant product evaluated directly as per-bit XOR expansions. Input bit
// i is m_i (LSB first); each case lists the eight output bits b0..b7.
constexpr byte mul_const_bitwise(MulConstant c, byte v) {
  const unsigned m0 = v & 1u;
  const unsigned m1 = (v >> 1) & 1u;
  const unsigned m2 = (v >> 2) & 1u;
  const unsigned m3 = (v >> 3) & 1u;
  const unsigned m4 = (v >> 4) & 1u;
  const unsigned m5 = (v >> 5) & 1u;
  const unsigned m6 = (v >> 6) & 1u;
  const unsigned m7 = (v >> 7) & 1u;
  unsigned b0 = 0, b1 = 0, b2 = 0, b3 = 0, b4 = 0, b5 = 0, b6 = 0, b7 = 0;
  switch (c) {
    case MulConstant::by01:
      return v;
    case MulConstant::by02:
      b0 = m7;
      b1 = m0 ^ m7;
      b2 = m1;
      b3 = m2 ^ m7;
      b4 = m3 ^ m7;
      b5 = m4;
      b6 = m5;
      b7 = m6;
      break;
    case MulConstant::by03:
      b0 = m0 ^ m7;
      b1 = m0 ^ m1 ^ m7;
      b2 = m1 ^ m2;
      b3 = m2 ^ m3 ^ m7;
      b4 = m3 ^ m4 ^ m7;
      b5 = m4 ^ m5;
      b6 = m5 ^ m6;
      b7 = m6 ^ m7;
      break;
    case MulConstant::by09:
      b0 = m0 ^ m5;
      b1 = m1 ^ m5 ^ m6;
      b2 = m2 ^ m6 ^ m7;
      b3 = m0 ^ m3 ^ m5 ^ m7;
      b4 = m1 ^ m4 ^ m5 ^ m6;
      b5 = m2 ^ m5 ^ m6 ^ m7;
      b6 = m3 ^ m6 ^ m7;
      b7 = m4 ^ m7;
      break;
    case MulConstant::by0B:
      b0 = m0 ^ m5 ^ m7;
      b1 = m0 ^ m1 ^ m5 ^ m6 ^ m7;
      b2 = m1 ^ m2 ^ m6 ^ m7;
      b3 = m0 ^ m2 ^ m3 ^ m5;
      b4 = m1 ^ m3 ^ m4 ^ m5 ^ m6 ^ m7;
      b5 = m2 ^ m4 ^ m5 ^ m6 ^ m7;
      b6 = m3 ^ m5 ^ m6 ^ m7;
      b7 = m4 ^ m6 ^ m7;
      break;
    case MulConstant::by0D:
      b0 = m0 ^ m5 ^ m6;
      b1 = m1 ^ m5 ^ m7;
      b2 = m0 ^ m2 ^ m6;
      b3 = m0 ^ m1 ^ m3 ^ m5 ^ m6 ^ m7;
      b4 = m1 ^ m2 ^ m4 ^ m5 ^ m7;
      b5 = m2 ^ m3 ^ m5 ^ m6;
      b6 = m3 ^ m4 ^ m6 ^ m7;
      b7 = m4 ^ m5 ^ m7;
      break;
    case MulConstant::by0E:
      b0 = m5 ^ m6 ^ m7;
      b1 = m0 ^ m5;
      b2 = m0 ^ m1 ^ m6;
      b3 = m0 ^ m1 ^ m2 ^ m5 ^ m6;
      b4 = m1 ^ m2 ^ m3 ^ m5;
      b5 = m2 ^ m3 ^ m4 ^ m6;
      b6 = m3 ^ m4 ^ m5 ^ m7;
      b7 = m4 ^ m5 ^ m6;
      break;
    default:
      throw std::domain_error("mul_const_bitwise: constant not in the column-mix matrices");
  }
  return static_cast<byte>(b0 | (b1 << 1) | (b2 << 2) | (b3 << 3) |
                           (b4 << 4) | (b5 << 5) | (b6 << 6) | (b7 << 7));
}

// Constant product from xtime chains: temp1 = 02*v, temp2 = 04*v,
// temp3 = 08*v, combined per constant. temp2/temp3 are computed
// unconditionally, mirroring a combinational datapath.
constexpr byte mul_const_xtime(MulConstant c, byte v) {
  const byte temp1 = xtime(v);
  const byte temp2 = xtime(temp1);
  const byte temp3 = xtime(temp2);
  switch (c) {
    case MulConstant::by01: return v;
    case MulConstant::by02: return temp1;
    case MulConstant::by03: return static_cast<byte>(temp1 ^ v);
    case MulConstant::by09: return static_cast<byte>(temp3 ^ v);
    case MulConstant::by0B: return static_cast<byte>(temp1 ^ temp3 ^ v);
    case MulConstant::by0D: return static_cast<byte>(temp2 ^ temp3 ^ v);
    case MulConstant::by0E: return static_cast<byte>(temp1 ^ temp2 ^ temp3);
  }
  throw std::domain_error("mul_const_xtime: constant not in the column-mix matrices");
}

// One 256-entry constant-multiplication table.
struct MulTable {
  MulConstant constant;
  std::array<byte, 256> entries;
};

// Builds the table for one constant from xtime chains, then verifies every
// entry against gmul before handing it out. Printed copies of these tables
// circulate with transcription errors; a generated table is consistent with
// the field arithmetic by construction.
inline MulTable generate_table(MulConstant c) {
  MulTable table{c, {}};
  for (int b = 0; b < 256; ++b)
    table.entries[b] = mul_const_xtime(c, static_cast<byte>(b));
  for (int b = 0; b < 256; ++b)
    if (table.entries[b] != gmul(to_byte(c), static_cast<byte>(b)))
      throw std::logic_error("generate_table: entry failed reference verification");
  return table;
}

constexpr std::size_t mul_constant_index(MulConstant c) {
  switch (c) {
    case MulConstant::by01: return 0;
    case MulConstant::by02: return 1;
    case MulConstant::by03: return 2;
    case MulConstant::by09: return 3;
    case MulConstant::by0B: return 4;
    case MulConstant::by0D: return 5;
    case MulConstant::by0E: return 6;
  }
  throw std::domain_error("constant not in the column-mix matrices");
}

// Shared immutable set of all seven tables, built and verified on first use.
inline const MulTable& mul_table(MulConstant c) {
  static const std::array<MulTable, 7> tables = [] {
    std::array<MulTable, 7> out{};
    for (std::size_t i = 0; i < kMulConstants.size(); ++i)
      out[i] = generate_table(kMulConstants[i]);
    return out;
  }();
  return tables[mul_constant_index(c)];
}

// Constant product by table lookup.
inline byte mul_const_table(MulConstant c, byte b) {
  return mul_table(c).entries[b];
}

}  // namespace aesmix
