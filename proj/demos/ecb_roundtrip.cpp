// Minimal library walkthrough: encrypt a short message with each
// multiplication backend, confirm the outputs agree, and round-trip it.

#include <cstdio>
#include <string>

#include "aesmix/aesmix.hpp"

int main() {
  using namespace aesmix;

  const CipherKey key = {'s', 'i', 'x', 't', 'e', 'e', 'n', ' ',
                         'k', 'e', 'y', ' ', 'c', 'h', 'a', 'r'};
  const std::string message = "MixColumns three ways";
  const std::span<const byte> data(reinterpret_cast<const byte*>(message.data()),
                                   message.size());

  std::string first_hex;
  for (MixArch arch : {MixArch::bitwise, MixArch::table, MixArch::xtime}) {
    const MixBackend& backend = backend_for(arch);
    const auto ct = process_blocks(data, key, Direction::encrypt, backend, PaddingMode::pkcs7);
    const auto pt = process_blocks(ct, key, Direction::decrypt, backend, PaddingMode::pkcs7);

    const std::string ct_hex = to_hex(ct);
    if (first_hex.empty()) first_hex = ct_hex;
    std::printf("%-8s ct=%s %s\n", std::string(backend.name()).c_str(), ct_hex.c_str(),
                ct_hex == first_hex ? "" : "(MISMATCH)");
    if (std::string(pt.begin(), pt.end()) != message) {
      std::printf("round trip failed for %s\n", std::string(backend.name()).c_str());
      return 1;
    }
  }
  std::printf("round trip ok: \"%s\"\n", message.c_str());
  return 0;
}
