// Command-line front end: AES-128 ECB encrypt/decrypt with a selectable
// MixColumns strategy, plus the known-answer, selftest, benchmark, and
// table-dump modes.
//
// Exit codes: 0 success, 1 data or verification failure (bad padding,
// failed known-answer check, backend disagreement, unreadable file),
// 2 usage error (malformed options, malformed key, malformed hex).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "aesmix/aesmix.hpp"

namespace {

using aesmix::byte;

void fail(const std::string& msg) { std::cerr << "aesmix: " << msg << '\n'; }

// Accepts either 32 hex digits or '@' followed by exactly 16 ASCII
// characters (the raw key bytes).
std::optional<aesmix::CipherKey> parse_key(const std::string& text) {
  aesmix::CipherKey key;
  if (!text.empty() && text.front() == '@') {
    if (text.size() != 17) return std::nullopt;
    std::copy_n(text.begin() + 1, 16, key.begin());
    return key;
  }
  const auto bytes = aesmix::from_hex(text);
  if (!bytes || bytes->size() != 16) return std::nullopt;
  std::copy_n(bytes->begin(), 16, key.begin());
  return key;
}

struct CryptoOptions {
  std::string key_text;
  std::string arch = "xtime";
  std::string in = "-";
  std::string out = "-";
  std::string padding = "pkcs7";
  bool hex = false;
};

void add_crypto_options(CLI::App* cmd, CryptoOptions& opt) {
  cmd->add_option("--key", opt.key_text,
                  "Cipher key: 32 hex digits, or @ followed by 16 ASCII characters")
      ->required();
  cmd->add_option("--arch", opt.arch, "Multiplication backend")
      ->check(CLI::IsMember({"bitwise", "table", "xtime"}))
      ->capture_default_str();
  cmd->add_option("--in", opt.in,
                  "Input file, or - for stdin; with --hex, the hex string itself")
      ->capture_default_str();
  cmd->add_option("--out", opt.out, "Output file, or - for stdout")->capture_default_str();
  cmd->add_option("--padding", opt.padding, "Block padding scheme")
      ->check(CLI::IsMember({"pkcs7", "none"}))
      ->capture_default_str();
  cmd->add_flag("--hex", opt.hex, "Treat --in as inline hex and write hex output");
}

int stream_encrypt(std::istream& in, std::ostream& out, const aesmix::KeySchedule& ks,
                   const aesmix::MixBackend& backend, aesmix::PaddingMode padding) {
  std::vector<byte> carry;
  char buf[16384];
  const auto flush_whole_blocks = [&] {
    const std::size_t whole = carry.size() / 16 * 16;
    for (std::size_t off = 0; off < whole; off += 16) {
      aesmix::Block b;
      std::copy_n(carry.begin() + off, 16, b.begin());
      b = aesmix::encrypt_block(b, ks, backend);
      out.write(reinterpret_cast<const char*>(b.data()), 16);
    }
    carry.erase(carry.begin(), carry.begin() + whole);
  };

  while (in.read(buf, sizeof buf), in.gcount() > 0) {
    carry.insert(carry.end(), buf, buf + in.gcount());
    flush_whole_blocks();
  }
  if (in.bad()) {
    fail("read error on input");
    return 1;
  }

  if (padding == aesmix::PaddingMode::pkcs7) {
    const byte pad = static_cast<byte>(16 - carry.size());
    carry.insert(carry.end(), pad, pad);
    flush_whole_blocks();
  } else if (!carry.empty()) {
    fail("input length must be a multiple of 16 when padding is none");
    return 1;
  }
  return 0;
}

int stream_decrypt(std::istream& in, std::ostream& out, const aesmix::KeySchedule& ks,
                   const aesmix::MixBackend& backend, aesmix::PaddingMode padding) {
  std::vector<byte> carry;
  aesmix::Block pending{};
  bool have_pending = false;
  char buf[16384];

  while (in.read(buf, sizeof buf), in.gcount() > 0) {
    carry.insert(carry.end(), buf, buf + in.gcount());
    std::size_t off = 0;
    // The most recent block is held back: until end of input we cannot
    // know whether it carries the padding.
    for (; off + 16 <= carry.size(); off += 16) {
      aesmix::Block b;
      std::copy_n(carry.begin() + off, 16, b.begin());
      b = aesmix::decrypt_block(b, ks, backend);
      if (have_pending) out.write(reinterpret_cast<const char*>(pending.data()), 16);
      pending = b;
      have_pending = true;
    }
    carry.erase(carry.begin(), carry.begin() + off);
  }
  if (in.bad()) {
    fail("read error on input");
    return 1;
  }
  if (!carry.empty()) {
    fail("ciphertext length must be a multiple of 16");
    return 1;
  }
  if (!have_pending) {
    fail("ciphertext is empty");
    return 1;
  }

  if (padding == aesmix::PaddingMode::pkcs7) {
    const byte pad = pending[15];
    if (pad < 1 || pad > 16) {
      fail("invalid padding length");
      return 1;
    }
    for (std::size_t i = 16 - pad; i < 16; ++i)
      if (pending[i] != pad) {
        fail("inconsistent padding bytes");
        return 1;
      }
    out.write(reinterpret_cast<const char*>(pending.data()), 16 - pad);
  } else {
    out.write(reinterpret_cast<const char*>(pending.data()), 16);
  }
  return 0;
}

int run_crypto(const CryptoOptions& opt, aesmix::Direction dir) {
  const auto key = parse_key(opt.key_text);
  if (!key) {
    fail("--key must be 32 hex digits or @ followed by 16 ASCII characters");
    return 2;
  }
  const aesmix::MixBackend& backend = aesmix::backend_for(*aesmix::parse_arch(opt.arch));
  const aesmix::PaddingMode padding =
      opt.padding == "none" ? aesmix::PaddingMode::none : aesmix::PaddingMode::pkcs7;

  std::ofstream file_out;
  std::ostream* out = &std::cout;
  if (opt.out != "-") {
    file_out.open(opt.out, std::ios::binary | std::ios::trunc);
    if (!file_out) {
      fail("cannot open output file: " + opt.out);
      return 1;
    }
    out = &file_out;
  }

  int rc = 0;
  if (opt.hex) {
    if (opt.in == "-") {
      fail("--hex requires the hex string in --in");
      return 2;
    }
    const auto data = aesmix::from_hex(opt.in);
    if (!data) {
      fail("--in is not a valid hex string");
      return 2;
    }
    try {
      const auto result = aesmix::process_blocks(*data, *key, dir, backend, padding);
      *out << aesmix::to_hex(result) << '\n';
    } catch (const aesmix::PaddingError& e) {
      fail(e.what());
      return 1;
    } catch (const std::invalid_argument& e) {
      fail(e.what());
      return 1;
    }
  } else {
    std::ifstream file_in;
    std::istream* in = &std::cin;
    if (opt.in != "-") {
      file_in.open(opt.in, std::ios::binary);
      if (!file_in) {
        fail("cannot open input file: " + opt.in);
        return 1;
      }
      in = &file_in;
    }
    const aesmix::KeySchedule ks = aesmix::expand_key(*key, aesmix::default_sbox());
    rc = dir == aesmix::Direction::encrypt ? stream_encrypt(*in, *out, ks, backend, padding)
                                           : stream_decrypt(*in, *out, ks, backend, padding);
  }

  out->flush();
  if (rc == 0 && !*out) {
    fail("write error on output");
    return 1;
  }
  return rc;
}

int run_kat_command() {
  const aesmix::KatReport report = aesmix::run_kat();
  for (const aesmix::KatCheck& check : report.checks) {
    const bool ok = check.encrypt_ok && check.decrypt_ok;
    std::printf("[%s] %-12s backend=%-8s ct=%s\n", ok ? "PASS" : "FAIL",
                std::string(check.vector).c_str(), std::string(check.backend).c_str(),
                aesmix::to_hex(check.computed_ct).c_str());
  }
  std::printf("kat: %zu checks, %s\n", report.checks.size(),
              report.passed ? "all passed" : "FAILURES PRESENT");
  return report.passed ? 0 : 1;
}

int run_selftest_command(const aesmix::SelftestConfig& cfg) {
  const aesmix::SelftestReport report = aesmix::run_selftest(cfg);
  std::printf("multiplication equivalence: %d cases\n", report.multiplication_cases);
  std::printf("cipher roundtrips: %d\n", report.roundtrips);
  if (!report.passed) {
    std::printf("selftest: FAIL (%s)\n", report.first_failure.c_str());
    return 1;
  }
  std::printf("selftest: PASS\n");
  return 0;
}

int run_bench_command(const aesmix::BenchConfig& cfg, const std::string& format) {
  const aesmix::ReportFormat fmt = format == "csv"    ? aesmix::ReportFormat::csv
                                   : format == "json" ? aesmix::ReportFormat::json
                                                      : aesmix::ReportFormat::table;
  try {
    const aesmix::BenchReport report = aesmix::run_bench(cfg);
    std::cout << aesmix::emit_report(report, fmt);
  } catch (const aesmix::CorrectnessError& e) {
    fail(e.what());
    return 1;
  }
  return 0;
}

// 16 x 16 layout, "0x.." entries, comma after every entry except the last.
void print_table(const std::array<byte, 256>& table) {
  for (std::size_t i = 0; i < table.size(); ++i) {
    std::printf("0x%02x", table[i]);
    if (i + 1 != table.size()) std::printf(",");
    std::printf(i % 16 == 15 ? "\n" : " ");
  }
}

int run_dump_command(const std::string& table_const, bool sbox, bool inv_sbox) {
  if (sbox) {
    print_table(aesmix::default_sbox().forward);
    return 0;
  }
  if (inv_sbox) {
    print_table(aesmix::default_sbox().inverse);
    return 0;
  }

  std::string digits = table_const;
  if (digits.rfind("0x", 0) == 0 || digits.rfind("0X", 0) == 0) digits.erase(0, 2);
  unsigned value = 0;
  bool valid = !digits.empty() && digits.size() <= 2;
  for (char c : digits) {
    const auto nibble = aesmix::hex_nibble(c);
    if (!nibble) {
      valid = false;
      break;
    }
    value = value * 16 + static_cast<unsigned>(*nibble);
  }
  const auto constant =
      valid ? aesmix::mul_constant_from_byte(static_cast<byte>(value)) : std::nullopt;
  if (!constant) {
    fail("--table expects one of: 01, 02, 03, 09, 0b, 0d, 0e");
    return 2;
  }
  print_table(aesmix::mul_table(*constant).entries);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"AES-128 ECB tool with selectable MixColumns multiplication backends"};
  app.require_subcommand(1);

  CryptoOptions enc_opt;
  CLI::App* enc = app.add_subcommand("encrypt", "Encrypt with AES-128 in ECB mode");
  add_crypto_options(enc, enc_opt);

  CryptoOptions dec_opt;
  CLI::App* dec = app.add_subcommand("decrypt", "Decrypt with AES-128 in ECB mode");
  add_crypto_options(dec, dec_opt);

  CLI::App* kat = app.add_subcommand("kat", "Run the known-answer vectors on every backend");

  aesmix::SelftestConfig selftest_cfg;
  CLI::App* selftest =
      app.add_subcommand("selftest", "Check backend agreement and cipher roundtrips");
  selftest->add_option("--roundtrips", selftest_cfg.cipher_roundtrips, "Random roundtrip count")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  selftest->add_option("--seed", selftest_cfg.seed, "Random seed")->capture_default_str();

  aesmix::BenchConfig bench_cfg;
  std::vector<std::string> bench_archs;
  std::string bench_format = "table";
  CLI::App* bench = app.add_subcommand("bench", "Measure per-block throughput per backend");
  bench->add_option("--blocks", bench_cfg.block_count, "Blocks per timed repetition")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench->add_option("--reps", bench_cfg.repetitions, "Timed repetitions (median is reported)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench->add_option("--warmup", bench_cfg.warmup_blocks, "Warmup blocks before timing")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  bench->add_option("--seed", bench_cfg.seed, "Corpus seed")->capture_default_str();
  bench->add_option("--arch", bench_archs, "Backend(s) to measure; repeatable")
      ->check(CLI::IsMember({"bitwise", "table", "xtime"}));
  bench->add_option("--format", bench_format, "Report format")
      ->check(CLI::IsMember({"csv", "table", "json"}))
      ->capture_default_str();

  std::string dump_table_const;
  bool dump_sbox = false;
  bool dump_inv_sbox = false;
  CLI::App* dump = app.add_subcommand("dump", "Print a generated lookup table");
  CLI::Option_group* dump_which = dump->add_option_group("source");
  dump_which->add_option("--table", dump_table_const,
                         "Multiplication table for a constant (01,02,03,09,0b,0d,0e)");
  dump_which->add_flag("--sbox", dump_sbox, "Forward S-box");
  dump_which->add_flag("--inv-sbox", dump_inv_sbox, "Inverse S-box");
  dump_which->require_option(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (app.got_subcommand(enc)) return run_crypto(enc_opt, aesmix::Direction::encrypt);
  if (app.got_subcommand(dec)) return run_crypto(dec_opt, aesmix::Direction::decrypt);
  if (app.got_subcommand(kat)) return run_kat_command();
  if (app.got_subcommand(selftest)) return run_selftest_command(selftest_cfg);
  if (app.got_subcommand(dump)) return run_dump_command(dump_table_const, dump_sbox, dump_inv_sbox);
  if (app.got_subcommand(bench)) {
    if (!bench_archs.empty()) {
      bench_cfg.archs.clear();
      for (const std::string& name : bench_archs)
        bench_cfg.archs.push_back(*aesmix::parse_arch(name));
    }
    return run_bench_command(bench_cfg, bench_format);
  }
  return 2;
}
