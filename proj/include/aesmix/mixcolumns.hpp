#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string_view>

#include "aesmix/gf256.hpp"
#include "aesmix/transforms.hpp"

// Forward and inverse column mixing, parameterized by one of three backend
// architectures. The XOR accumulation over the fixed matrices is shared;
// the backends differ only in how each constant product is computed.

namespace aesmix {

enum class MixArch {
  bitwise,  // per-bit XOR expansions
  table,    // generated lookup tables
  xtime,    // shift-and-reduce chains
};

constexpr std::string_view to_string(MixArch arch) {
  switch (arch) {
    case MixArch::bitwise: return "bitwise";
    case MixArch::table: return "table";
    case MixArch::xtime: return "xtime";
  }
  throw std::domain_error("unknown architecture");
}

constexpr std::optional<MixArch> parse_arch(std::string_view name) {
  if (name == "bitwise") return MixArch::bitwise;
  if (name == "table") return MixArch::table;
  if (name == "xtime") return MixArch::xtime;
  return std::nullopt;
}

// Strategy handle for constant multiplication. Implementations are
// immutable after construction and safe to share across threads.
class MixBackend {
 public:
  virtual ~MixBackend() = default;

  virtual std::string_view name() const = 0;
  virtual byte mul(MulConstant c, byte b) const = 0;

  // Bytes of lookup storage owned by the backend; 0 for computed routes.
  virtual std::size_t table_bytes() const { return 0; }
};

class BitwiseBackend final : public MixBackend {
 public:
  std::string_view name() const override { return to_string(MixArch::bitwise); }
  byte mul(MulConstant c, byte b) const override { return mul_const_bitwise(c, b); }
};

class XtimeBackend final : public MixBackend {
 public:
  std::string_view name() const override { return to_string(MixArch::xtime); }
  byte mul(MulConstant c, byte b) const override { return mul_const_xtime(c, b); }
};

// Owns the six non-trivial tables, generated and reference-verified at
// construction. The 0x01 table would be the identity and is elided, so the
// footprint is 6 x 256 = 1536 bytes.
class TableBackend final : public MixBackend {
 public:
  TableBackend()
      : tables_{generate_table(MulConstant::by02), generate_table(MulConstant::by03),
                generate_table(MulConstant::by09), generate_table(MulConstant::by0B),
                generate_table(MulConstant::by0D), generate_table(MulConstant::by0E)} {}

  std::string_view name() const override { return to_string(MixArch::table); }

  byte mul(MulConstant c, byte b) const override {
    if (c == MulConstant::by01) return b;
    return tables_[mul_constant_index(c) - 1].entries[b];
  }

  std::size_t table_bytes() const override {
    std::size_t total = 0;
    for (const MulTable& t : tables_) total += t.entries.size();
    return total;
  }

 private:
  std::array<MulTable, 6> tables_;
};

// Shared immutable backend instances, one per architecture.
inline const MixBackend& backend_for(MixArch arch) {
  static const BitwiseBackend bitwise;
  static const TableBackend table;
  static const XtimeBackend xtime;
  switch (arch) {
    case MixArch::bitwise: return bitwise;
    case MixArch::table: return table;
    case MixArch::xtime: return xtime;
  }
  throw std::domain_error("unknown architecture");
}

// One column of the State, rows 0..3.
using Column = std::array<byte, 4>;

inline constexpr std::array<std::array<MulConstant, 4>, 4> kMixMatrix = {{
    {MulConstant::by02, MulConstant::by03, MulConstant::by01, MulConstant::by01},
    {MulConstant::by01, MulConstant::by02, MulConstant::by03, MulConstant::by01},
    {MulConstant::by01, MulConstant::by01, MulConstant::by02, MulConstant::by03},
    {MulConstant::by03, MulConstant::by01, MulConstant::by01, MulConstant::by02},
}};

inline constexpr std::array<std::array<MulConstant, 4>, 4> kInvMixMatrix = {{
    {MulConstant::by0E, MulConstant::by0B, MulConstant::by0D, MulConstant::by09},
    {MulConstant::by09, MulConstant::by0E, MulConstant::by0B, MulConstant::by0D},
    {MulConstant::by0D, MulConstant::by09, MulConstant::by0E, MulConstant::by0B},
    {MulConstant::by0B, MulConstant::by0D, MulConstant::by09, MulConstant::by0E},
}};

namespace detail {

// Matrix-vector product over the field. Every constant product, including
// the 0x01 terms, is routed through the backend. Evaluation order is fixed
// (row 0..3, term 0..3) so the work per column is identical across calls.
inline Column mul_matrix_column(const std::array<std::array<MulConstant, 4>, 4>& matrix,
                                const Column& col, const MixBackend& backend) {
  Column out{};
  for (int row = 0; row < 4; ++row) {
    byte acc = 0;
    for (int term = 0; term < 4; ++term)
      acc ^= backend.mul(matrix[row][term], col[term]);
    out[row] = acc;
  }
  return out;
}

}  // namespace detail

inline Column mix_column(const Column& col, const MixBackend& backend) {
  return detail::mul_matrix_column(kMixMatrix, col, backend);
}

inline Column inv_mix_column(const Column& col, const MixBackend& backend) {
  return detail::mul_matrix_column(kInvMixMatrix, col, backend);
}

// Applies mix_column (or inv_mix_column) independently to each State column.
inline State mix_columns(const State& s, const MixBackend& backend, bool inverse) {
  State out;
  for (int col = 0; col < 4; ++col) {
    const Column in = {s.m[0][col], s.m[1][col], s.m[2][col], s.m[3][col]};
    const Column mixed = inverse ? inv_mix_column(in, backend) : mix_column(in, backend);
    for (int row = 0; row < 4; ++row) out.m[row][col] = mixed[row];
  }
  return out;
}

}  // namespace aesmix
