#ifndef FRACPOW_CACHE_HPP
#define FRACPOW_CACHE_HPP

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <map>

#include <unistd.h>

#include <json.hpp>

#include "fracpow/bigreal.hpp"
#include "fracpow/partial_fraction.hpp"
#include "fracpow/remez.hpp"

namespace fracpow {

struct CacheCorruptError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr const char* kCacheEnvVar = "FRACPOW_CACHE_DIR";
inline constexpr int kCacheFormatVersion = 1;

inline std::filesystem::path cache_directory() {
  if (const char* env = std::getenv(kCacheEnvVar)) return env;
  return "fracpow-cache";
}

inline std::string cache_key(double beta, int k, int m, unsigned bits) {
  char buf[96];
  std::snprintf(buf, sizeof(buf), "bura_%g_%d_%d_%u.json", beta, k, m, bits);
  return buf;
}

/// Persist an approximant; all numeric fields are decimal strings. The
/// write goes through a temp file and an atomic rename.
inline void cache_store(const RationalMinimax& r) {
  PrecisionGuard guard(r.precision_bits);
  nlohmann::json j;
  j["format_version"] = kCacheFormatVersion;
  char beta_buf[32];
  std::snprintf(beta_buf, sizeof(beta_buf), "%.17g", r.beta);
  j["beta"] = beta_buf;
  j["k"] = r.k;
  j["m"] = r.m;
  j["precision_bits"] = r.precision_bits;
  j["E"] = to_decimal(r.E);
  auto dump = [](const std::vector<BigReal>& v) {
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(to_decimal(x));
    return out;
  };
  j["numerator_cheb"] = dump(r.num);
  j["denominator_cheb"] = dump(r.den);
  j["extreme_points"] = dump(r.extreme_points);
  j["signs"] = r.signs;

  // solver-facing data, stored for inspection alongside the coefficients
  try {
    if (r.k == r.m) {
      auto pf = bura_partial_fractions(r);
      j["bura_poles"] = dump(pf.poles);
      j["bura_residues"] = dump(pf.coefficients);
    }
    auto rec = reciprocal_partial_fractions(r);
    j["reciprocal_poles"] = dump(rec.poles);
    j["reciprocal_coefficients"] = dump(rec.coefficients);
    if (rec.has_constant) j["reciprocal_constant"] = to_decimal(rec.constant);
  } catch (const std::exception&) {
    // partial fractions are derivable; the approximant itself still caches
  }

  const auto dir = cache_directory();
  std::filesystem::create_directories(dir);
  const auto path = dir / cache_key(r.beta, r.k, r.m, r.precision_bits);
  const auto tmp = path.string() + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream os(tmp);
    os << j.dump(1) << "\n";
  }
  std::filesystem::rename(tmp, path);
}

/// Load a cached approximant; nullopt on miss, CacheCorruptError when the
/// stored data fails re-verification of the alternation invariants.
inline std::optional<RationalMinimax> cache_load(double beta, int k, int m, unsigned bits) {
  const auto path = cache_directory() / cache_key(beta, k, m, bits);
  std::ifstream is(path);
  if (!is) return std::nullopt;
  nlohmann::json j;
  try {
    is >> j;
  } catch (const std::exception& e) {
    throw CacheCorruptError("cache parse failure: " + std::string(e.what()));
  }
  if (j.value("format_version", -1) != kCacheFormatVersion)
    throw CacheCorruptError("cache format version mismatch");

  RationalMinimax r;
  r.beta = std::strtod(j.at("beta").get<std::string>().c_str(), nullptr);
  r.k = j.at("k").get<int>();
  r.m = j.at("m").get<int>();
  r.precision_bits = j.at("precision_bits").get<unsigned>();
  if (r.beta != beta || r.k != k || r.m != m || r.precision_bits != bits)
    throw CacheCorruptError("cache key fields disagree with file contents");
  PrecisionGuard guard(r.precision_bits);
  auto load_vec = [&](const char* key) {
    std::vector<BigReal> out;
    for (const auto& s : j.at(key)) out.emplace_back(s.get<std::string>());
    return out;
  };
  r.E = BigReal(j.at("E").get<std::string>());
  r.num = load_vec("numerator_cheb");
  r.den = load_vec("denominator_cheb");
  r.extreme_points = load_vec("extreme_points");
  r.signs = j.at("signs").get<std::vector<int>>();
  if (!verify_minimax(r))
    throw CacheCorruptError("cached approximant failed invariant re-verification");
  return r;
}

/// Load-or-compute with an in-process memo on top of the file cache.
inline const RationalMinimax& get_bura(double beta, int k, int m, unsigned bits = 512) {
  using Key = std::tuple<double, int, int, unsigned>;
  static std::map<Key, RationalMinimax> memo;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  const Key key{beta, k, m, bits};
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  if (auto cached = cache_load(beta, k, m, bits))
    return memo.emplace(key, std::move(*cached)).first->second;
  RationalMinimax r = compute_bura(beta, k, m, bits);
  cache_store(r);
  return memo.emplace(key, std::move(r)).first->second;
}

}  // namespace fracpow

#endif  // FRACPOW_CACHE_HPP
