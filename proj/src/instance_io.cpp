#include <json.hpp>

#include <set>

#include "iwasawa/arith.hpp"
#include "iwasawa/error.hpp"
#include "iwasawa/rank_data.hpp"

namespace iwasawa {

namespace {

using nlohmann::json;

[[noreturn]] void schema(const std::string& path, const std::string& msg) {
  throw Error(ErrorCode::Schema, "schema violation at " + path + ": " + msg);
}

void only_fields(const json& obj, const std::string& path, std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) schema(path, "expected an object");
  for (const auto& [key, value] : obj.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) schema(path, "unknown field \"" + key + "\"");
  }
}

std::uint64_t get_uint(const json& v, const std::string& path) {
  if (!v.is_number_unsigned()) schema(path, "expected a nonnegative integer");
  return v.get<std::uint64_t>();
}

long get_int(const json& v, const std::string& path) {
  if (!v.is_number_integer()) schema(path, "expected an integer");
  return v.get<long>();
}

bool get_bool(const json& v, const std::string& path) {
  if (!v.is_boolean()) schema(path, "expected true or false");
  return v.get<bool>();
}

std::string get_string(const json& v, const std::string& path) {
  if (!v.is_string()) schema(path, "expected a string");
  return v.get<std::string>();
}

const json& get_array(const json& v, const std::string& path) {
  if (!v.is_array()) schema(path, "expected an array");
  return v;
}

FiniteAbelianGroup parse_group(const json& v, RepeatedPrimes policy) {
  std::vector<PrimePowerFactor> factors;
  const json& arr = get_array(v, "$.group");
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string path = "$.group[" + std::to_string(i) + "]";
    if (!arr[i].is_array() || arr[i].size() != 2) schema(path, "expected a pair [p, n]");
    const std::uint64_t n = get_uint(arr[i][1], path + "[1]");
    if (n > 64) schema(path + "[1]", "exponent too large");
    factors.push_back({get_uint(arr[i][0], path + "[0]"), static_cast<unsigned>(n)});
  }
  return FiniteAbelianGroup::make(std::move(factors), policy);
}

CurveInput parse_curve(const json& v, std::uint64_t p) {
  only_fields(v, "$.curve", {"label", "ap", "rank"});
  CurveInput c;
  if (!v.contains("label")) schema("$.curve", "missing field \"label\"");
  c.label = get_string(v["label"], "$.curve.label");
  if (v.contains("ap")) {
    const json& ap = v["ap"];
    if (ap.is_object()) {
      for (const auto& [key, value] : ap.items()) {
        const std::string path = "$.curve.ap.\"" + key + "\"";
        if (key.empty() || key.find_first_not_of("0123456789") != std::string::npos || key.size() > 18) {
          schema(path, "keys must be decimal primes");
        }
        const std::uint64_t ell = std::stoull(key);
        if (!arith::is_prime(ell)) schema(path, "key is not prime");
        c.ap[ell] = get_int(value, path);
      }
    } else {
      c.ap[p] = get_int(ap, "$.curve.ap");
    }
  }
  if (v.contains("rank")) c.rank = get_uint(v["rank"], "$.curve.rank");
  return c;
}

RankTable parse_ranks(const json& v, const FiniteAbelianGroup& g, std::optional<std::uint64_t> max_level) {
  if (!v.is_object()) schema("$.ranks", "expected an object keyed by tuples");
  RankTable t;
  std::optional<std::size_t> length;
  if (max_level) length = *max_level + 1;
  for (const auto& [key, value] : v.items()) {
    const std::string path = "$.ranks.\"" + key + "\"";
    IndexTuple alpha;
    try {
      alpha = IndexTuple::parse_key(key);
      validate_tuple(g, alpha);
    } catch (const Error& e) {
      throw Error(e.code(), path + ": " + e.what());
    }
    const json& arr = get_array(value, path);
    if (arr.empty()) schema(path, "row is empty");
    if (!length) length = arr.size();
    if (arr.size() != *length) {
      schema(path, "row has " + std::to_string(arr.size()) + " entries, expected " +
                       std::to_string(*length) + " (max_level + 1)");
    }
    std::vector<std::uint64_t> row;
    for (std::size_t n = 0; n < arr.size(); ++n) {
      row.push_back(get_uint(arr[n], path + "[" + std::to_string(n) + "]"));
    }
    t.ranks[alpha] = std::move(row);
  }
  if (!length) schema("$.ranks", "no rows");
  t.max_level = static_cast<unsigned>(*length - 1);
  validate_rank_table(g, t);
  return t;
}

SelmerShape parse_shape(const json& v) {
  only_fields(v, "$.selmer_shape", {"reduction", "generic", "cyclo_multi", "cyclo_simple"});
  SelmerShape s;
  if (!v.contains("reduction")) schema("$.selmer_shape", "missing field \"reduction\"");
  s.reduction = parse_shape_reduction(get_string(v["reduction"], "$.selmer_shape.reduction"));
  if (v.contains("generic")) {
    const json& arr = get_array(v["generic"], "$.selmer_shape.generic");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string path = "$.selmer_shape.generic[" + std::to_string(i) + "]";
      only_fields(arr[i], path, {"label", "degree", "exponent"});
      for (const char* f : {"label", "degree", "exponent"}) {
        if (!arr[i].contains(f)) schema(path, std::string("missing field \"") + f + "\"");
      }
      s.generic.push_back({get_string(arr[i]["label"], path + ".label"),
                           get_uint(arr[i]["degree"], path + ".degree"),
                           get_uint(arr[i]["exponent"], path + ".exponent")});
    }
  }
  if (v.contains("cyclo_multi")) {
    const json& arr = get_array(v["cyclo_multi"], "$.selmer_shape.cyclo_multi");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string path = "$.selmer_shape.cyclo_multi[" + std::to_string(i) + "]";
      if (!arr[i].is_array() || arr[i].size() != 2) schema(path, "expected a pair [a, f]");
      s.cyclo_multi.emplace_back(static_cast<unsigned>(get_uint(arr[i][0], path + "[0]")),
                                 get_uint(arr[i][1], path + "[1]"));
    }
  }
  if (v.contains("cyclo_simple")) {
    const json& arr = get_array(v["cyclo_simple"], "$.selmer_shape.cyclo_simple");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      s.cyclo_simple.push_back(
          static_cast<unsigned>(get_uint(arr[i], "$.selmer_shape.cyclo_simple[" + std::to_string(i) + "]")));
    }
  }
  s.check_well_formed();
  return s;
}

RankTable truncate(RankTable t, unsigned level) {
  if (level >= t.max_level) return t;
  for (auto& [alpha, row] : t.ranks) row.resize(level + 1);
  t.max_level = level;
  return t;
}

}  // namespace

ProblemInstance parse_input(const std::string& document, const ParseOptions& options) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Schema, std::string("schema violation: not valid JSON: ") + e.what());
  }
  only_fields(doc, "$", {"p", "group", "conductor", "curve", "max_level", "ranks",
                         "assume_fine_sha_finite", "assume_pm_sha_finite", "selmer_shape", "selmer_t"});
  for (const char* f : {"p", "group", "conductor"}) {
    if (!doc.contains(f)) schema("$", std::string("missing field \"") + f + "\"");
  }

  ProblemInstance inst;
  inst.p = get_uint(doc["p"], "$.p");
  if (inst.p == 2) throw Error(ErrorCode::EvenPrime, "p = 2 is not supported; p must be an odd prime");
  if (!arith::is_prime(inst.p)) schema("$.p", std::to_string(inst.p) + " is not prime");

  FiniteAbelianGroup g = parse_group(doc["group"], options.repeated_primes);
  const std::uint64_t conductor = get_uint(doc["conductor"], "$.conductor");
  try {
    inst.field = FieldDescriptor::make(std::move(g), conductor);
  } catch (const Error& e) {
    throw Error(e.code(), std::string("hypothesis-field inconsistency at $.conductor: ") + e.what());
  }

  if (doc.contains("curve")) inst.curve = parse_curve(doc["curve"], inst.p);

  std::optional<std::uint64_t> max_level;
  if (doc.contains("max_level")) max_level = get_uint(doc["max_level"], "$.max_level");
  if (doc.contains("ranks")) {
    inst.ranks = parse_ranks(doc["ranks"], inst.field.group, max_level);
    if (options.max_level) inst.ranks = truncate(std::move(*inst.ranks), *options.max_level);
  } else if (max_level) {
    schema("$.max_level", "given without a ranks table");
  }

  if (doc.contains("assume_fine_sha_finite")) {
    inst.assume_fine_sha_finite = get_bool(doc["assume_fine_sha_finite"], "$.assume_fine_sha_finite");
  }
  if (doc.contains("assume_pm_sha_finite")) {
    inst.assume_pm_sha_finite = get_bool(doc["assume_pm_sha_finite"], "$.assume_pm_sha_finite");
  }
  if (doc.contains("selmer_shape")) inst.selmer_shape = parse_shape(doc["selmer_shape"]);
  if (doc.contains("selmer_t")) inst.selmer_t = get_uint(doc["selmer_t"], "$.selmer_t");
  return inst;
}

}  // namespace iwasawa
