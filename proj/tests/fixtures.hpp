#pragma once

#include <array>
#include <cstdint>
#include <string_view>

// Frozen expected values for the test suite. Everything here was computed
// ahead of time with an independent reference implementation (plain Python,
// cross-checked against a mainstream crypto library) and is committed as
// data so the tests never depend on the code under test to generate its own
// expectations.

namespace fixtures {

using byte = std::uint8_t;

// Forward S-box (FIPS-197 Figure 7 equivalent), derived independently from
// field inversion plus the affine map.
inline constexpr std::array<byte, 256> kSboxForward = {
    0x63, 0x7c, 0x77, 0x7b, 0xf2, 0x6b, 0x6f, 0xc5, 0x30, 0x01, 0x67, 0x2b, 0xfe, 0xd7, 0xab, 0x76,
    0xca, 0x82, 0xc9, 0x7d, 0xfa, 0x59, 0x47, 0xf0, 0xad, 0xd4, 0xa2, 0xaf, 0x9c, 0xa4, 0x72, 0xc0,
    0xb7, 0xfd, 0x93, 0x26, 0x36, 0x3f, 0xf7, 0xcc, 0x34, 0xa5, 0xe5, 0xf1, 0x71, 0xd8, 0x31, 0x15,
    0x04, 0xc7, 0x23, 0xc3, 0x18, 0x96, 0x05, 0x9a, 0x07, 0x12, 0x80, 0xe2, 0xeb, 0x27, 0xb2, 0x75,
    0x09, 0x83, 0x2c, 0x1a, 0x1b, 0x6e, 0x5a, 0xa0, 0x52, 0x3b, 0xd6, 0xb3, 0x29, 0xe3, 0x2f, 0x84,
    0x53, 0xd1, 0x00, 0xed, 0x20, 0xfc, 0xb1, 0x5b, 0x6a, 0xcb, 0xbe, 0x39, 0x4a, 0x4c, 0x58, 0xcf,
    0xd0, 0xef, 0xaa, 0xfb, 0x43, 0x4d, 0x33, 0x85, 0x45, 0xf9, 0x02, 0x7f, 0x50, 0x3c, 0x9f, 0xa8,
    0x51, 0xa3, 0x40, 0x8f, 0x92, 0x9d, 0x38, 0xf5, 0xbc, 0xb6, 0xda, 0x21, 0x10, 0xff, 0xf3, 0xd2,
    0xcd, 0x0c, 0x13, 0xec, 0x5f, 0x97, 0x44, 0x17, 0xc4, 0xa7, 0x7e, 0x3d, 0x64, 0x5d, 0x19, 0x73,
    0x60, 0x81, 0x4f, 0xdc, 0x22, 0x2a, 0x90, 0x88, 0x46, 0xee, 0xb8, 0x14, 0xde, 0x5e, 0x0b, 0xdb,
    0xe0, 0x32, 0x3a, 0x0a, 0x49, 0x06, 0x24, 0x5c, 0xc2, 0xd3, 0xac, 0x62, 0x91, 0x95, 0xe4, 0x79,
    0xe7, 0xc8, 0x37, 0x6d, 0x8d, 0xd5, 0x4e, 0xa9, 0x6c, 0x56, 0xf4, 0xea, 0x65, 0x7a, 0xae, 0x08,
    0xba, 0x78, 0x25, 0x2e, 0x1c, 0xa6, 0xb4, 0xc6, 0xe8, 0xdd, 0x74, 0x1f, 0x4b, 0xbd, 0x8b, 0x8a,
    0x70, 0x3e, 0xb5, 0x66, 0x48, 0x03, 0xf6, 0x0e, 0x61, 0x35, 0x57, 0xb9, 0x86, 0xc1, 0x1d, 0x9e,
    0xe1, 0xf8, 0x98, 0x11, 0x69, 0xd9, 0x8e, 0x94, 0x9b, 0x1e, 0x87, 0xe9, 0xce, 0x55, 0x28, 0xdf,
    0x8c, 0xa1, 0x89, 0x0d, 0xbf, 0xe6, 0x42, 0x68, 0x41, 0x99, 0x2d, 0x0f, 0xb0, 0x54, 0xbb, 0x16,
};

// Hand-transcribed copy of a previously published multiply-by-0x02 lookup
// table, in input order 0x00..0xff. It is kept verbatim, including its
// single misprint: entry 0x88 reads 0x1b where the product is 0x0b. The
// tests prove that every disagreement with the generated table is a defect
// in this transcription, not in the generator.
inline constexpr std::array<byte, 256> kPublishedMulBy02 = {
    0x00, 0x02, 0x04, 0x06, 0x08, 0x0a, 0x0c, 0x0e, 0x10, 0x12, 0x14, 0x16, 0x18, 0x1a, 0x1c, 0x1e,
    0x20, 0x22, 0x24, 0x26, 0x28, 0x2a, 0x2c, 0x2e, 0x30, 0x32, 0x34, 0x36, 0x38, 0x3a, 0x3c, 0x3e,
    0x40, 0x42, 0x44, 0x46, 0x48, 0x4a, 0x4c, 0x4e, 0x50, 0x52, 0x54, 0x56, 0x58, 0x5a, 0x5c, 0x5e,
    0x60, 0x62, 0x64, 0x66, 0x68, 0x6a, 0x6c, 0x6e, 0x70, 0x72, 0x74, 0x76, 0x78, 0x7a, 0x7c, 0x7e,
    0x80, 0x82, 0x84, 0x86, 0x88, 0x8a, 0x8c, 0x8e, 0x90, 0x92, 0x94, 0x96, 0x98, 0x9a, 0x9c, 0x9e,
    0xa0, 0xa2, 0xa4, 0xa6, 0xa8, 0xaa, 0xac, 0xae, 0xb0, 0xb2, 0xb4, 0xb6, 0xb8, 0xba, 0xbc, 0xbe,
    0xc0, 0xc2, 0xc4, 0xc6, 0xc8, 0xca, 0xcc, 0xce, 0xd0, 0xd2, 0xd4, 0xd6, 0xd8, 0xda, 0xdc, 0xde,
    0xe0, 0xe2, 0xe4, 0xe6, 0xe8, 0xea, 0xec, 0xee, 0xf0, 0xf2, 0xf4, 0xf6, 0xf8, 0xfa, 0xfc, 0xfe,
    0x1b, 0x19, 0x1f, 0x1d, 0x13, 0x11, 0x17, 0x15, 0x1b, 0x09, 0x0f, 0x0d, 0x03, 0x01, 0x07, 0x05,
    0x3b, 0x39, 0x3f, 0x3d, 0x33, 0x31, 0x37, 0x35, 0x2b, 0x29, 0x2f, 0x2d, 0x23, 0x21, 0x27, 0x25,
    0x5b, 0x59, 0x5f, 0x5d, 0x53, 0x51, 0x57, 0x55, 0x4b, 0x49, 0x4f, 0x4d, 0x43, 0x41, 0x47, 0x45,
    0x7b, 0x79, 0x7f, 0x7d, 0x73, 0x71, 0x77, 0x75, 0x6b, 0x69, 0x6f, 0x6d, 0x63, 0x61, 0x67, 0x65,
    0x9b, 0x99, 0x9f, 0x9d, 0x93, 0x91, 0x97, 0x95, 0x8b, 0x89, 0x8f, 0x8d, 0x83, 0x81, 0x87, 0x85,
    0xbb, 0xb9, 0xbf, 0xbd, 0xb3, 0xb1, 0xb7, 0xb5, 0xab, 0xa9, 0xaf, 0xad, 0xa3, 0xa1, 0xa7, 0xa5,
    0xdb, 0xd9, 0xdf, 0xdd, 0xd3, 0xd1, 0xd7, 0xd5, 0xcb, 0xc9, 0xcf, 0xcd, 0xc3, 0xc1, 0xc7, 0xc5,
    0xfb, 0xf9, 0xff, 0xfd, 0xf3, 0xf1, 0xf7, 0xf5, 0xeb, 0xe9, 0xef, 0xed, 0xe3, 0xe1, 0xe7, 0xe5,
};

inline constexpr std::size_t kPublishedMulBy02MisprintIndex = 0x88;
inline constexpr byte kPublishedMulBy02MisprintValue = 0x1b;  // correct product is 0x0b

// Single products in the field, frozen from the reference implementation.
struct GmulCase {
  byte a;
  byte b;
  byte product;
};
inline constexpr std::array<GmulCase, 6> kGmulCases = {{
    {0x02, 0xd4, 0xb3},
    {0x03, 0xbf, 0xda},
    {0x0d, 0xff, 0x97},
    {0x0b, 0x53, 0x5b},
    {0x02, 0x80, 0x1b},
    {0x02, 0x88, 0x0b},
}};

// One column through the forward mix and back.
inline constexpr std::array<byte, 4> kMixColumnInput = {0xd4, 0xbf, 0x5d, 0x30};
inline constexpr std::array<byte, 4> kMixColumnOutput = {0x04, 0x66, 0x81, 0xe5};

// Key expansion for the FIPS-197 Appendix A.1 key, one hex string per round.
inline constexpr std::string_view kFipsKeyHex = "2b7e151628aed2a6abf7158809cf4f3c";
inline constexpr std::array<std::string_view, 11> kFipsRoundKeysHex = {
    "2b7e151628aed2a6abf7158809cf4f3c",
    "a0fafe1788542cb123a339392a6c7605",
    "f2c295f27a96b9435935807a7359f67f",
    "3d80477d4716fe3e1e237e446d7a883b",
    "ef44a541a8525b7fb671253bdb0bad00",
    "d4d1c6f87c839d87caf2b8bc11f915bc",
    "6d88a37a110b3efddbf98641ca0093fd",
    "4e54f70e5f5fc9f384a64fb24ea6dc4f",
    "ead27321b58dbad2312bf5607f8d292f",
    "ac7766f319fadc2128d12941575c006e",
    "d014f9a8c9ee2589e13f0cc8b6630ca6",
};

// First expanded round key for the all-zero cipher key.
inline constexpr std::string_view kZeroKeyRoundKey1Hex = "62636363626363636263636362636363";

// FIPS-197 known-answer vectors.
inline constexpr std::string_view kFipsC1KeyHex = "000102030405060708090a0b0c0d0e0f";
inline constexpr std::string_view kFipsC1PlainHex = "00112233445566778899aabbccddeeff";
inline constexpr std::string_view kFipsC1CipherHex = "69c4e0d86a7b0430d8cdb78070b4c55a";
inline constexpr std::string_view kFipsBKeyHex = "2b7e151628aed2a6abf7158809cf4f3c";
inline constexpr std::string_view kFipsBPlainHex = "3243f6a8885a308d313198a2e0370734";
inline constexpr std::string_view kFipsBCipherHex = "3925841d02dc09fbdc118597196a0b32";

// The ASCII key/plaintext pair. The ciphertext the pair actually produces
// was computed with the reference implementation; the previously published
// rendering of it is not decodable to an unambiguous byte string, so the
// closest plausible decoding is recorded here for reporting only and is
// never asserted against.
inline constexpr std::string_view kAsciiKey = "arragsliman_miti";
inline constexpr std::string_view kAsciiPlain = "hamdoun_&_tragha";
inline constexpr std::string_view kAsciiCipherHex = "2600c3d883377ec67aefd8ba9eb86ade";
inline constexpr std::string_view kAsciiPublishedDecodeHex = "388bc353bd3abe50cedd9984cd62492a";

}  // namespace fixtures
