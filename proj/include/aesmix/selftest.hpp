#pragma once

#include <random>
#include <span>
#include <sstream>
#include <string>

#include "aesmix/cipher.hpp"
#include "aesmix/hex.hpp"

// Cross-architecture self-verification: every backend is checked against
// the reference multiplier over all 7 x 256 constant/byte combinations,
// then random encrypt/decrypt roundtrips confirm the assembled pipelines
// agree bit-for-bit. Accepts an explicit backend set so a deliberately
// faulty backend can be injected under test.

namespace aesmix {

struct SelftestConfig {
  int cipher_roundtrips = 100;
  std::uint64_t seed = 0x6165736d6978ULL;
};

struct SelftestReport {
  int multiplication_cases = 0;
  int roundtrips = 0;
  bool passed = true;
  std::string first_failure;  // empty when passed
};

namespace detail {

inline void record_failure(SelftestReport& report, const std::string& what) {
  if (report.passed) report.first_failure = what;
  report.passed = false;
}

}  // namespace detail

inline SelftestReport run_selftest(const SelftestConfig& cfg,
                                   std::span<const MixBackend* const> backends) {
  SelftestReport report;

  // Exhaustive multiplication equivalence against the reference route.
  for (MulConstant c : kMulConstants) {
    for (int b = 0; b < 256; ++b) {
      ++report.multiplication_cases;
      const byte want = gmul(to_byte(c), static_cast<byte>(b));
      for (const MixBackend* backend : backends) {
        const byte got = backend->mul(c, static_cast<byte>(b));
        if (got != want) {
          std::ostringstream msg;
          msg << backend->name() << ": mul(" << std::hex << int(to_byte(c)) << ", "
              << b << ") = " << int(got) << ", reference says " << int(want);
          detail::record_failure(report, msg.str());
        }
      }
    }
  }

  // Random roundtrips with cross-backend ciphertext comparison.
  std::mt19937_64 rng(cfg.seed);
  auto random_block = [&rng] {
    Block b;
    for (byte& v : b) v = static_cast<byte>(rng());
    return b;
  };
  for (int i = 0; i < cfg.cipher_roundtrips; ++i) {
    ++report.roundtrips;
    const CipherKey key = random_block();
    const Block pt = random_block();
    const KeySchedule ks = expand_key(key, default_sbox());

    Block reference_ct{};
    for (std::size_t n = 0; n < backends.size(); ++n) {
      const Block ct = encrypt_block(pt, ks, *backends[n]);
      if (n == 0) {
        reference_ct = ct;
      } else if (ct != reference_ct) {
        detail::record_failure(report, std::string(backends[n]->name()) +
                                           ": ciphertext differs from " +
                                           std::string(backends[0]->name()) +
                                           " on roundtrip " + std::to_string(i));
      }
      if (decrypt_block(ct, ks, *backends[n]) != pt) {
        detail::record_failure(report, std::string(backends[n]->name()) +
                                           ": decrypt(encrypt(pt)) != pt on roundtrip " +
                                           std::to_string(i));
      }
    }
  }

  return report;
}

inline SelftestReport run_selftest(const SelftestConfig& cfg = {}) {
  static const MixBackend* const kDefaults[] = {
      &backend_for(MixArch::bitwise),
      &backend_for(MixArch::table),
      &backend_for(MixArch::xtime),
  };
  return run_selftest(cfg, kDefaults);
}

}  // namespace aesmix
