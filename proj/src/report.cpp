#include "sigmalat/report.hpp"

#include <chrono>

namespace sigmalat {

const char* const kEngineVersion = "1.0.0";

std::string ReportRecord::to_line() const {
  ordered_json j;
  j["group"] = group;
  j["order"] = order;
  j["sigma"] = sigma;
  j["property"] = property;
  if (verdict == Verdict::kUndefined)
    j["verdict"] = nullptr;
  else
    j["verdict"] = verdict == Verdict::kTrue;
  if (witness)
    j["witness"] = *witness;
  else
    j["witness"] = nullptr;
  j["details"] = details.is_null() || details.empty() ? ordered_json() : details;
  j["elapsed_ms"] = elapsed_ms;
  return j.dump();
}

ReportRecord ReportRecord::from_line(const std::string& line) {
  ordered_json j;
  try {
    j = ordered_json::parse(line);
  } catch (const std::exception& e) {
    throw ParseError(std::string("bad report line: ") + e.what());
  }
  ReportRecord r;
  r.group = j.at("group").get<std::string>();
  r.order = j.at("order").get<std::uint64_t>();
  r.sigma = j.at("sigma").get<std::string>();
  r.property = j.at("property").get<std::string>();
  const auto& v = j.at("verdict");
  r.verdict = v.is_null() ? Verdict::kUndefined
                          : (v.get<bool>() ? Verdict::kTrue : Verdict::kFalse);
  if (!j.at("witness").is_null())
    r.witness = j.at("witness").get<std::vector<std::string>>();
  r.details = j.at("details");
  r.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
  return r;
}

ReportRecord evaluate_record(GroupCtx& ctx, const SigmaPartition& sigma, TransProperty p,
                             const EngineOptions& opt) {
  auto start = std::chrono::steady_clock::now();
  PropertyResult res = classify_property(ctx, sigma, p, opt);
  auto stop = std::chrono::steady_clock::now();
  ReportRecord r;
  r.group = ctx.name();
  r.order = ctx.group().order();
  r.sigma = sigma.canonical();
  r.property = property_name(p);
  r.verdict = res.verdict;
  if (res.witness) r.witness = witness_generator_strings(*res.witness);
  r.details = res.details.empty() ? ordered_json() : res.details;
  r.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
  return r;
}

namespace {

std::uint64_t fnv1a(std::uint64_t h, const void* data, std::size_t len) {
  const unsigned char* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 1099511628211ull;
  }
  return h;
}

constexpr std::uint64_t kFnvInit = 14695981039346656037ull;

std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[static_cast<std::size_t>(i)] = digits[v & 0xf];
    v >>= 4;
  }
  return s;
}

}  // namespace

std::string group_content_hash(const Group& g) {
  std::uint64_t h = kFnvInit;
  std::uint32_t deg = g.degree();
  h = fnv1a(h, &deg, sizeof(deg));
  for (const auto& e : g.elements())
    h = fnv1a(h, e.images().data(), e.images().size() * sizeof(std::uint16_t));
  return hex64(h);
}

std::string cache_key(const Group& g, const std::string& sigma_canonical,
                      const std::string& property) {
  std::uint64_t h = kFnvInit;
  std::string gh = group_content_hash(g);
  h = fnv1a(h, kEngineVersion, std::string(kEngineVersion).size());
  h = fnv1a(h, gh.data(), gh.size());
  h = fnv1a(h, sigma_canonical.data(), sigma_canonical.size());
  h = fnv1a(h, property.data(), property.size());
  return hex64(h);
}

}  // namespace sigmalat
