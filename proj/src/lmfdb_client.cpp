#include <httplib.h>
#include <json.hpp>
#include <unistd.h>

#include "iwasawa/lmfdb_client.hpp"

#include <atomic>
#include <cctype>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <regex>
#include <sstream>
#include <thread>

#include "iwasawa/arith.hpp"
#include "iwasawa/error.hpp"

namespace iwasawa {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

[[noreturn]] void protocol(const std::string& msg) {
  throw Error(ErrorCode::Protocol, "protocol error: " + msg);
}

struct Endpoint {
  std::string origin;  // scheme://host[:port]
  std::string prefix;  // path without trailing slash
};

Endpoint split_url(const std::string& url) {
  const auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos) {
    throw Error(ErrorCode::InvalidArgument, "base URL \"" + url + "\" has no scheme");
  }
  const auto path_start = url.find('/', scheme_end + 3);
  Endpoint e;
  e.origin = url.substr(0, path_start);
  e.prefix = path_start == std::string::npos ? "" : url.substr(path_start);
  while (!e.prefix.empty() && e.prefix.back() == '/') e.prefix.pop_back();
  return e;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_atomic(const fs::path& target, const std::string& content) {
  static std::atomic<unsigned> counter{0};
  fs::create_directories(target.parent_path());
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++);
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << content;
    out.flush();
    if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write cache file " + tmp.string());
  }
  fs::rename(tmp, target);
}

fs::path record_path(const fs::path& dir, const std::string& label) {
  return dir / (percent_encode(label) + ".json");
}

class Http {
 public:
  explicit Http(const ClientConfig& cfg) : cfg_(cfg), endpoint_(split_url(cfg.base_url)) {}

  json get(const std::string& path_and_query) {
    const std::string target = endpoint_.prefix + path_and_query;
    std::string last_error;
    for (unsigned attempt = 0; attempt <= cfg_.retries; ++attempt) {
      if (attempt > 0) {
        std::this_thread::sleep_for(std::chrono::milliseconds(
            static_cast<long long>(cfg_.backoff_ms) << (attempt - 1)));
      }
      httplib::Client client(endpoint_.origin);
      const auto secs = static_cast<time_t>(cfg_.timeout_seconds);
      const auto usecs = static_cast<time_t>((cfg_.timeout_seconds - static_cast<double>(secs)) * 1e6);
      client.set_connection_timeout(secs, usecs);
      client.set_read_timeout(secs, usecs);
      client.set_follow_location(true);
      if (!client.is_valid()) {
        throw Error(ErrorCode::Network, "cannot use " + endpoint_.origin + " (https needs OpenSSL support)");
      }
      auto res = client.Get(target);
      if (!res) {
        last_error = httplib::to_string(res.error());
        continue;
      }
      if (res->status >= 500) {
        last_error = "HTTP " + std::to_string(res->status);
        continue;
      }
      if (res->status == 404) throw Error(ErrorCode::NotFound, "not found: " + target);
      if (res->status != 200) protocol("HTTP " + std::to_string(res->status) + " for " + target);
      try {
        return json::parse(res->body);
      } catch (const json::parse_error&) {
        protocol("response for " + target + " is not JSON");
      }
    }
    throw Error(ErrorCode::Network, "network error after " + std::to_string(cfg_.retries + 1) +
                                        " attempts to " + endpoint_.origin + target + ": " + last_error);
  }

 private:
  const ClientConfig& cfg_;
  Endpoint endpoint_;
};

const json& first_record(const json& doc, const std::string& what, const std::string& label) {
  if (!doc.is_object() || !doc.contains("data") || !doc["data"].is_array()) {
    protocol(what + " response has no data array");
  }
  if (doc["data"].empty()) throw Error(ErrorCode::NotFound, "not found: no curve with label " + label);
  if (!doc["data"][0].is_object()) protocol(what + " record is not an object");
  return doc["data"][0];
}

CurveData fetch_network(const ClientConfig& cfg, const std::string& label) {
  Http http(cfg);
  const std::string key = label.find('.') != std::string::npos ? "lmfdb_label" : "Clabel";
  const json curve_doc = http.get("/ec_curvedata/?" + key + "=" + percent_encode(label) +
                                  "&_format=json&_fields=lmfdb_label,lmfdb_iso,conductor,rank");
  const json& rec = first_record(curve_doc, "curve", label);
  if (!rec.contains("lmfdb_iso") || !rec["lmfdb_iso"].is_string()) protocol("curve record lacks lmfdb_iso");
  if (!rec.contains("conductor") || !rec["conductor"].is_number_unsigned()) {
    protocol("curve record lacks a conductor");
  }
  CurveData c;
  c.label = label;
  c.conductor = rec["conductor"].get<std::uint64_t>();
  if (rec.contains("rank") && rec["rank"].is_number_unsigned()) c.rank = rec["rank"].get<std::uint64_t>();

  const std::string iso = rec["lmfdb_iso"].get<std::string>();
  const json class_doc =
      http.get("/ec_classdata/?lmfdb_iso=" + percent_encode(iso) + "&_format=json&_fields=aplist");
  const json& cls = first_record(class_doc, "class", label);
  if (!cls.contains("aplist") || !cls["aplist"].is_array()) protocol("class record lacks aplist");
  std::uint64_t ell = 2;
  for (const auto& a : cls["aplist"]) {
    if (!a.is_number_integer()) protocol("aplist entry is not an integer");
    c.ap[ell] = a.get<long>();
    do {
      ++ell;
    } while (!arith::is_prime(ell));
  }
  try {
    check_hasse(c);
  } catch (const Error& e) {
    protocol(e.what());
  }
  return c;
}

}  // namespace

ClientConfig ClientConfig::from_environment() {
  ClientConfig cfg;
  if (const char* url = std::getenv(kLmfdbUrlEnv); url != nullptr && *url != '\0') cfg.base_url = url;
  if (const char* dir = std::getenv(kFixtureDirEnv); dir != nullptr && *dir != '\0') {
    cfg.fixture_dir = dir;
  } else {
#ifdef IWASAWA_FIXTURE_DIR
    cfg.fixture_dir = IWASAWA_FIXTURE_DIR;
#endif
  }
  return cfg;
}

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::Fixture: return "fixture";
    case Provenance::Cache: return "cache";
    case Provenance::Network: return "network";
  }
  return "?";
}

bool valid_curve_label(std::string_view label) {
  static const std::regex cremona(R"(^[1-9][0-9]*[a-z]+[1-9][0-9]*$)");
  static const std::regex lmfdb(R"(^[1-9][0-9]*\.[a-z]+[1-9][0-9]*$)");
  const std::string s(label);
  return std::regex_match(s, cremona) || std::regex_match(s, lmfdb);
}

std::string percent_encode(std::string_view s) {
  static const char* hex = "0123456789ABCDEF";
  std::string out;
  for (unsigned char c : s) {
    if (std::isalnum(c) || c == '-' || c == '_' || c == '.' || c == '~') {
      out += static_cast<char>(c);
    } else {
      out += '%';
      out += hex[c >> 4];
      out += hex[c & 15];
    }
  }
  return out;
}

std::string serialize_curve(const CurveData& c) {
  // Emitted by hand: json objects would order the primes lexically.
  std::ostringstream out;
  out << "{\n  \"label\": " << json(c.label).dump();
  if (c.conductor) out << ",\n  \"conductor\": " << *c.conductor;
  if (c.rank) out << ",\n  \"rank\": " << *c.rank;
  out << ",\n  \"ap\": {";
  bool first = true;
  for (auto [ell, a] : c.ap) {
    out << (first ? "" : ",") << "\n    \"" << ell << "\": " << a;
    first = false;
  }
  out << (first ? "}" : "\n  }") << "\n}\n";
  return out.str();
}

CurveData parse_curve_record(const std::string& document) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error&) {
    protocol("curve record is not JSON");
  }
  if (!doc.is_object()) protocol("curve record is not an object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "label" && key != "conductor" && key != "rank" && key != "ap" && key != "source") {
      protocol("unknown field \"" + key + "\" in curve record");
    }
  }
  if (!doc.contains("label") || !doc["label"].is_string()) protocol("curve record lacks a label");
  CurveData c;
  c.label = doc["label"].get<std::string>();
  if (doc.contains("conductor")) {
    if (!doc["conductor"].is_number_unsigned()) protocol("conductor is not a nonnegative integer");
    c.conductor = doc["conductor"].get<std::uint64_t>();
  }
  if (doc.contains("rank")) {
    if (!doc["rank"].is_number_unsigned()) protocol("rank is not a nonnegative integer");
    c.rank = doc["rank"].get<std::uint64_t>();
  }
  if (!doc.contains("ap") || !doc["ap"].is_object()) protocol("curve record lacks an ap object");
  for (const auto& [key, value] : doc["ap"].items()) {
    if (key.empty() || key.size() > 18 || key.find_first_not_of("0123456789") != std::string::npos) {
      protocol("ap key \"" + key + "\" is not a prime");
    }
    const std::uint64_t ell = std::stoull(key);
    if (!arith::is_prime(ell)) protocol("ap key \"" + key + "\" is not a prime");
    if (!value.is_number_integer()) protocol("a_" + key + " is not an integer");
    c.ap[ell] = value.get<long>();
  }
  try {
    check_hasse(c);
  } catch (const Error& e) {
    protocol(e.what());
  }
  return c;
}

FetchResult fetch_curve(const ClientConfig& cfg, const std::string& label) {
  if (!valid_curve_label(label)) {
    throw Error(ErrorCode::NotFound, "not found: \"" + label + "\" is not a Cremona or LMFDB curve label");
  }
  if (!cfg.cache_dir.empty()) {
    const fs::path path = record_path(cfg.cache_dir, label);
    if (fs::exists(path)) return {parse_curve_record(read_file(path)), Provenance::Cache};
  }
  if (!cfg.fixture_dir.empty()) {
    const fs::path path = record_path(cfg.fixture_dir, label);
    if (fs::exists(path)) return {parse_curve_record(read_file(path)), Provenance::Fixture};
  }
  if (cfg.offline) {
    throw Error(ErrorCode::OfflineMiss, "offline: no cached or fixture record for " + label);
  }
  CurveData c = fetch_network(cfg, label);
  if (!cfg.cache_dir.empty()) cache_store(cfg, c);
  return {std::move(c), Provenance::Network};
}

void cache_store(const ClientConfig& cfg, const CurveData& c) {
  if (cfg.cache_dir.empty()) throw Error(ErrorCode::InvalidArgument, "no cache directory configured");
  write_atomic(record_path(cfg.cache_dir, c.label), serialize_curve(c));
}

Classification classify_curve(const FetchResult& r, std::uint64_t p) {
  const CurveData& c = r.curve;
  if (c.conductor && *c.conductor % p == 0) {
    throw Error(ErrorCode::BadReduction, "curve " + c.label + " has bad reduction at p = " +
                                             std::to_string(p) + " (conductor " +
                                             std::to_string(*c.conductor) + ")");
  }
  auto it = c.ap.find(p);
  if (it == c.ap.end()) {
    throw Error(ErrorCode::MissingAp, "curve " + c.label + " has no a_p recorded for p = " + std::to_string(p));
  }
  return {reduction_type(it->second, p), it->second, r.provenance};
}

}  // namespace iwasawa
