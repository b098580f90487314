#include "manifest.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <iterator>
#include <memory>
#include <stdexcept>

#include "json.hpp"

namespace shadowlab::cli {

std::string sha256_hex(std::string_view data) {
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), &EVP_MD_CTX_free);
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), data.data(), data.size()) != 1 ||
      EVP_DigestFinal_ex(ctx.get(), digest, &len) != 1)
    throw std::runtime_error("sha256 failed");
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  for (unsigned i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 15];
  }
  return out;
}

std::string file_sha256(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  const std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return sha256_hex(data);
}

void RunManifest::add_file(const std::filesystem::path& p) { outputs.push_back({p.generic_string(), file_sha256(p)}); }

void RunManifest::add_stdout(std::string_view text) { outputs.push_back({"<stdout>", sha256_hex(text)}); }

std::string RunManifest::to_json(bool pretty) const {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["seed"] = seed;
  j["version"] = version;
  auto outs = nlohmann::ordered_json::array();
  for (const auto& o : outputs) outs.push_back({{"path", o.path}, {"sha256", o.sha256}});
  j["outputs"] = std::move(outs);
  return (pretty ? j.dump(2) : j.dump()) + "\n";
}

RunManifest RunManifest::parse(std::string_view text) {
  try {
    const auto j = nlohmann::json::parse(text);
    RunManifest m;
    m.command = j.at("command").get<std::vector<std::string>>();
    m.seed = j.at("seed").get<unsigned long long>();
    m.version = j.at("version").get<std::string>();
    for (const auto& o : j.at("outputs")) m.outputs.push_back({o.at("path").get<std::string>(), o.at("sha256").get<std::string>()});
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad manifest: ") + e.what());
  }
}

}  // namespace shadowlab::cli
