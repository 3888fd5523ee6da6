#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "aesmix/keyschedule.hpp"
#include "aesmix/mixcolumns.hpp"
#include "aesmix/transforms.hpp"

// The full block pipeline: an initial round-key addition, nine rounds of
// SubBytes / ShiftRows / MixColumns / AddRoundKey, and a final round without
// MixColumns. Decryption applies the exact inverse sequence.

namespace aesmix {

enum class Direction { encrypt, decrypt };

enum class PaddingMode { pkcs7, none };

// Raised when PKCS#7 padding fails to verify on decryption.
class PaddingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Pipeline steps as seen by a StepObserver, in execution order with the
// round index (0 = initial key addition, 10 = final round; decryption runs
// 10 down to 0). Lets tests pin down the round structure.
enum class RoundStep { add_round_key, sub_bytes, shift_rows, mix_columns };

using StepObserver = std::function<void(int round, RoundStep step)>;

namespace detail {

template <typename Note>
Block encrypt_block_impl(const Block& pt, const KeySchedule& ks,
                         const MixBackend& backend, Note&& note) {
  const SBox& box = default_sbox();
  State s = state_from_block(pt);
  s = add_round_key(s, ks.round_keys[0]);
  note(0, RoundStep::add_round_key);
  for (int round = 1; round <= 9; ++round) {
    s = sub_bytes(s, box, false);
    note(round, RoundStep::sub_bytes);
    s = shift_rows(s, false);
    note(round, RoundStep::shift_rows);
    s = mix_columns(s, backend, false);
    note(round, RoundStep::mix_columns);
    s = add_round_key(s, ks.round_keys[round]);
    note(round, RoundStep::add_round_key);
  }
  s = sub_bytes(s, box, false);
  note(10, RoundStep::sub_bytes);
  s = shift_rows(s, false);
  note(10, RoundStep::shift_rows);
  s = add_round_key(s, ks.round_keys[10]);
  note(10, RoundStep::add_round_key);
  return block_from_state(s);
}

template <typename Note>
Block decrypt_block_impl(const Block& ct, const KeySchedule& ks,
                         const MixBackend& backend, Note&& note) {
  const SBox& box = default_sbox();
  State s = state_from_block(ct);
  s = add_round_key(s, ks.round_keys[10]);
  note(10, RoundStep::add_round_key);
  for (int round = 9; round >= 1; --round) {
    s = shift_rows(s, true);
    note(round, RoundStep::shift_rows);
    s = sub_bytes(s, box, true);
    note(round, RoundStep::sub_bytes);
    s = add_round_key(s, ks.round_keys[round]);
    note(round, RoundStep::add_round_key);
    s = mix_columns(s, backend, true);
    note(round, RoundStep::mix_columns);
  }
  s = shift_rows(s, true);
  note(0, RoundStep::shift_rows);
  s = sub_bytes(s, box, true);
  note(0, RoundStep::sub_bytes);
  s = add_round_key(s, ks.round_keys[0]);
  note(0, RoundStep::add_round_key);
  return block_from_state(s);
}

inline constexpr auto kNoObserver = [](int, RoundStep) {};

}  // namespace detail

inline Block encrypt_block(const Block& pt, const KeySchedule& ks,
                           const MixBackend& backend) {
  return detail::encrypt_block_impl(pt, ks, backend, detail::kNoObserver);
}

inline Block encrypt_block(const Block& pt, const KeySchedule& ks,
                           const MixBackend& backend, const StepObserver& observer) {
  return detail::encrypt_block_impl(pt, ks, backend, observer);
}

inline Block decrypt_block(const Block& ct, const KeySchedule& ks,
                           const MixBackend& backend) {
  return detail::decrypt_block_impl(ct, ks, backend, detail::kNoObserver);
}

inline Block decrypt_block(const Block& ct, const KeySchedule& ks,
                           const MixBackend& backend, const StepObserver& observer) {
  return detail::decrypt_block_impl(ct, ks, backend, observer);
}

// Multi-block ECB driver. PKCS#7 padding is always applied on encryption
// (a whole padding block when the input is already aligned) and verified
// and stripped on decryption; NONE requires exact multiples of 16 and, for
// decryption, a nonempty input.
inline std::vector<byte> process_blocks(std::span<const byte> data, const CipherKey& key,
                                        Direction dir, const MixBackend& backend,
                                        PaddingMode padding) {
  constexpr std::size_t kBlock = 16;
  const KeySchedule ks = expand_key(key, default_sbox());

  if (dir == Direction::encrypt) {
    std::vector<byte> buf(data.begin(), data.end());
    if (padding == PaddingMode::pkcs7) {
      const byte pad = static_cast<byte>(kBlock - buf.size() % kBlock);
      buf.insert(buf.end(), pad, pad);
    } else if (buf.size() % kBlock != 0) {
      throw std::invalid_argument("process_blocks: length must be a multiple of 16 without padding");
    }
    for (std::size_t off = 0; off < buf.size(); off += kBlock) {
      Block b;
      std::copy_n(buf.begin() + off, kBlock, b.begin());
      b = encrypt_block(b, ks, backend);
      std::copy_n(b.begin(), kBlock, buf.begin() + off);
    }
    return buf;
  }

  if (data.empty() || data.size() % kBlock != 0)
    throw std::invalid_argument("process_blocks: ciphertext length must be a positive multiple of 16");
  std::vector<byte> buf(data.begin(), data.end());
  for (std::size_t off = 0; off < buf.size(); off += kBlock) {
    Block b;
    std::copy_n(buf.begin() + off, kBlock, b.begin());
    b = decrypt_block(b, ks, backend);
    std::copy_n(b.begin(), kBlock, buf.begin() + off);
  }
  if (padding == PaddingMode::pkcs7) {
    const byte pad = buf.back();
    if (pad < 1 || pad > kBlock) throw PaddingError("invalid padding length");
    for (std::size_t i = buf.size() - pad; i < buf.size(); ++i)
      if (buf[i] != pad) throw PaddingError("inconsistent padding bytes");
    buf.resize(buf.size() - pad);
  }
  return buf;
}

}  // namespace aesmix
