#include <catch2/catch_amalgamated.hpp>

#include "aesmix/hex.hpp"
#include "aesmix/keyschedule.hpp"
#include "fixtures.hpp"

using namespace aesmix;

namespace {

CipherKey key_from_hex(std::string_view hex) {
  const auto bytes = from_hex(hex);
  REQUIRE(bytes.has_value());
  REQUIRE(bytes->size() == 16);
  CipherKey key;
  std::copy_n(bytes->begin(), 16, key.begin());
  return key;
}

}  // namespace

TEST_CASE("rcon is the doubling sequence") {
  constexpr byte expected[] = {0x01, 0x02, 0x04, 0x08, 0x10, 0x20, 0x40, 0x80, 0x1b, 0x36};
  for (int round = 1; round <= 10; ++round) CHECK(rcon(round) == expected[round - 1]);
  CHECK_THROWS_AS(rcon(0), std::domain_error);
  CHECK_THROWS_AS(rcon(11), std::domain_error);
}

TEST_CASE("key expansion reproduces the FIPS-197 A.1 schedule") {
  const KeySchedule ks = expand_key(key_from_hex(fixtures::kFipsKeyHex), default_sbox());
  for (int round = 0; round <= 10; ++round)
    CHECK(to_hex(ks.round_keys[round]) == fixtures::kFipsRoundKeysHex[round]);
}

TEST_CASE("key expansion of the all-zero key") {
  const KeySchedule ks = expand_key(CipherKey{}, default_sbox());
  CHECK(to_hex(ks.round_keys[0]) == "00000000000000000000000000000000");
  CHECK(to_hex(ks.round_keys[1]) == fixtures::kZeroKeyRoundKey1Hex);
}

TEST_CASE("round key zero is the cipher key itself") {
  CipherKey key;
  for (int i = 0; i < 16; ++i) key[i] = static_cast<byte>(0x11 * i);
  const KeySchedule ks = expand_key(key, default_sbox());
  CHECK(std::equal(key.begin(), key.end(), ks.round_keys[0].begin()));
}
