#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "iwasawa/hypotheses.hpp"

namespace iwasawa {

inline constexpr std::string_view kDefaultLmfdbUrl = "https://www.lmfdb.org/api";
inline constexpr const char* kLmfdbUrlEnv = "IWASAWA_LMFDB_URL";
inline constexpr const char* kFixtureDirEnv = "IWASAWA_FIXTURE_DIR";

struct ClientConfig {
  std::string base_url = std::string(kDefaultLmfdbUrl);
  double timeout_seconds = 10.0;
  unsigned retries = 3;
  /// Delay before retry k (k = 0, 1, ...) is backoff_ms * 2^k.
  unsigned backoff_ms = 250;
  std::filesystem::path cache_dir;    // empty: no cache
  std::filesystem::path fixture_dir;  // empty: no fixtures
  bool offline = false;

  /// Defaults, with the base URL and fixture directory taken from the
  /// environment when set. The fixture directory falls back to the bundled one.
  static ClientConfig from_environment();
};

enum class Provenance { Fixture, Cache, Network };
std::string_view to_string(Provenance p);

struct FetchResult {
  CurveData curve;
  Provenance provenance = Provenance::Fixture;
};

/// Cremona ("11a1") or LMFDB ("11.a2") elliptic-curve label.
bool valid_curve_label(std::string_view label);

std::string percent_encode(std::string_view s);

/// Canonical cache/fixture document: keys in fixed order, a_p by ascending prime.
std::string serialize_curve(const CurveData& c);

/// Parses the cache/fixture format; throws Protocol for malformed documents
/// or a_p outside the Hasse bound.
CurveData parse_curve_record(const std::string& document);

/// Resolution order: cache, fixtures, network (skipped when offline).
/// Network results are written to the cache by temp file and rename.
/// Errors: NotFound, Network (after retries), Protocol, OfflineMiss.
FetchResult fetch_curve(const ClientConfig& cfg, const std::string& label);

/// Writes a record into cfg.cache_dir (temp file, then rename). Used by
/// fetch_curve after a network hit; exposed for seeding caches.
void cache_store(const ClientConfig& cfg, const CurveData& c);

struct Classification {
  Reduction reduction = Reduction::Ordinary;
  long ap = 0;
  Provenance provenance = Provenance::Fixture;
};

/// Throws MissingAp if a_p is absent, BadReduction if p divides the conductor.
Classification classify_curve(const FetchResult& c, std::uint64_t p);

}  // namespace iwasawa
