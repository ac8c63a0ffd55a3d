#include "report.hpp"

#include <fstream>
#include <sstream>

#include "skeinlab/errors.hpp"
#include "skeinlab/sha256.hpp"

namespace skeinlab::cli {

void RunManifest::add_input(const std::string& path, const std::string& content) {
  inputs.emplace_back(path, sha256_hex(content));
}

Json RunManifest::json() const {
  Json in = Json::array();
  for (const auto& [path, hash] : inputs)
    in.push_back({{"path", path}, {"sha256", hash}});
  return Json{{"command", command},
              {"inputs", in},
              {"seed", seed},
              {"tool_version", kToolVersion},
              {"conventions_version", kConventionsVersion}};
}

Json complex_json(std::complex<double> z) {
  return Json::array({z.real(), z.imag()});
}

std::string slurp_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ValidationError("cannot open file: " + path);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw ValidationError("cannot write file: " + path);
  f << content;
}

std::string dump_report(const Json& j) {
  return j.dump(2) + "\n";
}

}  // namespace skeinlab::cli
