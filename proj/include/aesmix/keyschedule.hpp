#pragma once

#include <array>
#include <stdexcept>

#include "aesmix/transforms.hpp"

// FIPS-197 key expansion for 128-bit keys: 44 words w[0..43] grouped into
// Nr + 1 = 11 round keys, with w[i] = w[i-4] ^ f(w[i-1]) and
// f = SubWord(RotWord(.)) ^ (rcon, 0, 0, 0) every fourth word.

namespace aesmix {

using CipherKey = std::array<byte, 16>;

struct KeySchedule {
  std::array<RoundKey, 11> round_keys{};

  friend bool operator==(const KeySchedule&, const KeySchedule&) = default;
};

// Round constants 0x01, 0x02, ..., 0x1B, 0x36: successive powers of x in
// the field. Valid round indices are 1..10.
inline byte rcon(int round) {
  if (round < 1 || round > 10)
    throw std::domain_error("rcon: round index out of range");
  byte v = 0x01;
  for (int i = 1; i < round; ++i) v = xtime(v);
  return v;
}

inline KeySchedule expand_key(const CipherKey& key, const SBox& box) {
  using Word = std::array<byte, 4>;
  std::array<Word, 44> w{};
  for (int i = 0; i < 4; ++i)
    w[i] = {key[4 * i], key[4 * i + 1], key[4 * i + 2], key[4 * i + 3]};
  for (int i = 4; i < 44; ++i) {
    Word t = w[i - 1];
    if (i % 4 == 0) {
      t = {t[1], t[2], t[3], t[0]};  // RotWord
      for (byte& b : t) b = box.forward[b];  // SubWord
      t[0] ^= rcon(i / 4);
    }
    for (int k = 0; k < 4; ++k) w[i][k] = static_cast<byte>(w[i - 4][k] ^ t[k]);
  }

  KeySchedule ks;
  for (int r = 0; r < 11; ++r)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        ks.round_keys[r][4 * j + k] = w[4 * r + j][k];
  return ks;
}

}  // namespace aesmix
