#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace skeinlab::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kConventionsVersion = "1";

/// Provenance block embedded in every emitted report: what ran, on which
/// inputs (by content hash), with which seed. Identical manifests must
/// produce byte-identical reports.
struct RunManifest {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;  // path, sha256
  std::uint64_t seed = 0;

  void add_input(const std::string& path, const std::string& content);
  Json json() const;
};

Json complex_json(std::complex<double> z);

std::string slurp_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

/// Serialize with a fixed layout (2-space indent, trailing newline) so byte
/// identity of reports is meaningful.
std::string dump_report(const Json& j);

}  // namespace skeinlab::cli
