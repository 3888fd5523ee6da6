#pragma once

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <random>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "aesmix/cipher.hpp"

#ifdef __linux__
#include <sys/utsname.h>
#endif

// Throughput and footprint comparison across the backends. Timings are
// published only after every benchmarked backend produced byte-identical
// output on the identical input corpus; the static table footprint is read
// from the backends themselves, not estimated.

namespace aesmix {

constexpr std::string_view to_string(Direction dir) {
  return dir == Direction::encrypt ? "encrypt" : "decrypt";
}

struct BenchConfig {
  std::vector<MixArch> archs = {MixArch::bitwise, MixArch::table, MixArch::xtime};
  int block_count = 10000;
  int warmup_blocks = 1000;
  int repetitions = 5;
  std::uint64_t seed = 0xB10C5;
};

struct BenchRow {
  std::string backend;
  Direction direction = Direction::encrypt;
  int blocks = 0;
  double ns_per_block_median = 0;
  double blocks_per_sec_median = 0;
  double ns_min = 0;
  double ns_max = 0;
  std::uint64_t table_bytes = 0;

  friend bool operator==(const BenchRow&, const BenchRow&) = default;
};

struct BenchReport {
  std::string environment;
  std::uint64_t corpus_checksum = 0;
  std::uint64_t encrypt_output_checksum = 0;
  std::uint64_t decrypt_output_checksum = 0;
  std::vector<BenchRow> rows;

  friend bool operator==(const BenchReport&, const BenchReport&) = default;
};

// Raised when the benchmarked backends disagree on the corpus; no timings
// are reported in that case.
class CorrectnessError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ReportFormat { csv, table, json };

namespace detail {

constexpr std::uint64_t fnv1a(std::span<const byte> data,
                              std::uint64_t hash = 0xcbf29ce484222325ULL) {
  for (byte b : data) {
    hash ^= b;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

inline double median_of(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  return n % 2 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

inline Block corpus_block(const std::vector<byte>& corpus, std::size_t index) {
  Block b;
  std::copy_n(corpus.begin() + 16 * index, 16, b.begin());
  return b;
}

inline Block run_one(Direction dir, const Block& in, const KeySchedule& ks,
                     const MixBackend& backend) {
  return dir == Direction::encrypt ? encrypt_block(in, ks, backend)
                                   : decrypt_block(in, ks, backend);
}

inline std::string environment_descriptor() {
  std::string os = "unknown-os";
  std::string cpu = "unknown-cpu";
#ifdef __linux__
  utsname uts{};
  if (uname(&uts) == 0)
    os = std::string(uts.sysname) + " " + uts.release + " " + uts.machine;
  std::ifstream cpuinfo("/proc/cpuinfo");
  for (std::string line; std::getline(cpuinfo, line);) {
    if (line.rfind("model name", 0) == 0) {
      const auto colon = line.find(':');
      if (colon != std::string::npos) {
        cpu = line.substr(colon + 1);
        cpu.erase(0, cpu.find_first_not_of(' '));
      }
      break;
    }
  }
#endif
  return os + "; " + cpu;
}

inline std::string fixed2(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace detail

inline BenchReport run_bench(const BenchConfig& cfg,
                             std::span<const MixBackend* const> backends) {
  if (cfg.block_count < 1) throw std::invalid_argument("run_bench: block_count must be >= 1");
  if (cfg.repetitions < 1) throw std::invalid_argument("run_bench: repetitions must be >= 1");
  if (cfg.warmup_blocks < 0) throw std::invalid_argument("run_bench: warmup_blocks must be >= 0");

  const std::size_t blocks = static_cast<std::size_t>(cfg.block_count);
  std::mt19937_64 rng(cfg.seed);
  CipherKey key;
  for (byte& b : key) b = static_cast<byte>(rng());
  std::vector<byte> corpus(16 * blocks);
  for (byte& b : corpus) b = static_cast<byte>(rng());

  BenchReport report;
  report.environment = detail::environment_descriptor();
  report.corpus_checksum = detail::fnv1a(corpus);

  const KeySchedule ks = expand_key(key, default_sbox());
  constexpr Direction kDirections[] = {Direction::encrypt, Direction::decrypt};

  // Correctness gate: identical output bytes across backends, per direction.
  std::uint64_t gate_checksum[2] = {0, 0};
  for (Direction dir : kDirections) {
    std::vector<byte> reference;
    for (std::size_t n = 0; n < backends.size(); ++n) {
      std::vector<byte> out(corpus.size());
      for (std::size_t i = 0; i < blocks; ++i) {
        const Block b = detail::run_one(dir, detail::corpus_block(corpus, i), ks, *backends[n]);
        std::copy_n(b.begin(), 16, out.begin() + 16 * i);
      }
      if (n == 0) {
        reference = std::move(out);
      } else if (out != reference) {
        throw CorrectnessError("backends '" + std::string(backends[0]->name()) + "' and '" +
                               std::string(backends[n]->name()) + "' disagree on " +
                               std::string(to_string(dir)) + " output; timings withheld");
      }
    }
    gate_checksum[dir == Direction::decrypt] = detail::fnv1a(reference);
  }
  report.encrypt_output_checksum = gate_checksum[0];
  report.decrypt_output_checksum = gate_checksum[1];

  for (const MixBackend* backend : backends) {
    for (Direction dir : kDirections) {
      // Warmup, cycling over the corpus.
      for (int i = 0; i < cfg.warmup_blocks; ++i)
        (void)detail::run_one(dir, detail::corpus_block(corpus, i % blocks), ks, *backend);

      std::vector<double> ns_per_block;
      ns_per_block.reserve(cfg.repetitions);
      for (int rep = 0; rep < cfg.repetitions; ++rep) {
        std::uint64_t sink = 0xcbf29ce484222325ULL;
        const auto start = std::chrono::steady_clock::now();
        for (std::size_t i = 0; i < blocks; ++i) {
          const Block b = detail::run_one(dir, detail::corpus_block(corpus, i), ks, *backend);
          sink = detail::fnv1a(b, sink);
        }
        const auto stop = std::chrono::steady_clock::now();
        if (backends.size() > 0 && sink != gate_checksum[dir == Direction::decrypt])
          throw CorrectnessError(std::string(backend->name()) +
                                 ": output changed between verification and timing");
        const auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start);
        ns_per_block.push_back(static_cast<double>(ns.count()) / static_cast<double>(blocks));
      }

      BenchRow row;
      row.backend = std::string(backend->name());
      row.direction = dir;
      row.blocks = cfg.block_count;
      row.ns_per_block_median = detail::median_of(ns_per_block);
      row.blocks_per_sec_median = 1e9 / row.ns_per_block_median;
      row.ns_min = *std::min_element(ns_per_block.begin(), ns_per_block.end());
      row.ns_max = *std::max_element(ns_per_block.begin(), ns_per_block.end());
      row.table_bytes = backend->table_bytes();
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

inline BenchReport run_bench(const BenchConfig& cfg) {
  std::vector<const MixBackend*> backends;
  backends.reserve(cfg.archs.size());
  for (MixArch arch : cfg.archs) backends.push_back(&backend_for(arch));
  return run_bench(cfg, backends);
}

inline void to_json(nlohmann::json& j, const BenchRow& row) {
  j = nlohmann::json{{"backend", row.backend},
                     {"direction", to_string(row.direction)},
                     {"blocks", row.blocks},
                     {"ns_per_block_median", row.ns_per_block_median},
                     {"blocks_per_sec_median", row.blocks_per_sec_median},
                     {"ns_min", row.ns_min},
                     {"ns_max", row.ns_max},
                     {"table_bytes", row.table_bytes}};
}

inline void from_json(const nlohmann::json& j, BenchRow& row) {
  j.at("backend").get_to(row.backend);
  row.direction = j.at("direction").get<std::string>() == "decrypt" ? Direction::decrypt
                                                                    : Direction::encrypt;
  j.at("blocks").get_to(row.blocks);
  j.at("ns_per_block_median").get_to(row.ns_per_block_median);
  j.at("blocks_per_sec_median").get_to(row.blocks_per_sec_median);
  j.at("ns_min").get_to(row.ns_min);
  j.at("ns_max").get_to(row.ns_max);
  j.at("table_bytes").get_to(row.table_bytes);
}

inline void to_json(nlohmann::json& j, const BenchReport& report) {
  j = nlohmann::json{{"environment", report.environment},
                     {"corpus_checksum", report.corpus_checksum},
                     {"encrypt_output_checksum", report.encrypt_output_checksum},
                     {"decrypt_output_checksum", report.decrypt_output_checksum},
                     {"rows", report.rows}};
}

inline void from_json(const nlohmann::json& j, BenchReport& report) {
  j.at("environment").get_to(report.environment);
  j.at("corpus_checksum").get_to(report.corpus_checksum);
  j.at("encrypt_output_checksum").get_to(report.encrypt_output_checksum);
  j.at("decrypt_output_checksum").get_to(report.decrypt_output_checksum);
  j.at("rows").get_to(report.rows);
}

inline std::string emit_report(const BenchReport& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::csv: {
      std::ostringstream out;
      out << "backend,direction,blocks,ns_per_block_median,blocks_per_sec_median,"
             "ns_min,ns_max,table_bytes\n";
      for (const BenchRow& row : report.rows)
        out << row.backend << ',' << to_string(row.direction) << ',' << row.blocks << ','
            << detail::fixed2(row.ns_per_block_median) << ','
            << detail::fixed2(row.blocks_per_sec_median) << ',' << detail::fixed2(row.ns_min)
            << ',' << detail::fixed2(row.ns_max) << ',' << row.table_bytes << '\n';
      return out.str();
    }
    case ReportFormat::table: {
      std::ostringstream out;
      out << std::left << std::setw(9) << "backend" << std::setw(9) << "direction"
          << std::right << std::setw(9) << "blocks" << std::setw(15) << "ns/block" << std::setw(16)
          << "blocks/s" << std::setw(12) << "ns_min" << std::setw(12) << "ns_max" << std::setw(13)
          << "table_bytes" << '\n';
      for (const BenchRow& row : report.rows)
        out << std::left << std::setw(9) << row.backend << std::setw(9)
            << to_string(row.direction) << std::right << std::setw(9) << row.blocks
            << std::setw(15) << detail::fixed2(row.ns_per_block_median) << std::setw(16)
            << detail::fixed2(row.blocks_per_sec_median) << std::setw(12)
            << detail::fixed2(row.ns_min) << std::setw(12) << detail::fixed2(row.ns_max)
            << std::setw(13) << row.table_bytes << '\n';
      out << "environment: " << report.environment << '\n';
      return out.str();
    }
    case ReportFormat::json: {
      const nlohmann::json j = report;
      return j.dump(2) + "\n";
    }
  }
  throw std::domain_error("unknown report format");
}

inline BenchReport report_from_json(const std::string& text) {
  return nlohmann::json::parse(text).get<BenchReport>();
}

}  // namespace aesmix
