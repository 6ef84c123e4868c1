#include "io.hpp"

#include <cstdio>
#include <cstdlib>
#include <stdexcept>

#include <json.hpp>

namespace bidisk::io {

namespace {

double parse_double_exact(const char* s) {
  char* end = nullptr;
  const double v = std::strtod(s, &end);
  return end != s ? v : 0.0;
}

[[noreturn]] void bad(const std::string& what) {
  throw std::invalid_argument("domain spec: " + what);
}

nlohmann::json parse_or_throw(const std::string& text, const char* label) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) {
    throw std::invalid_argument(std::string(label) + ": not valid JSON");
  }
  return j;
}

double number_field(const nlohmann::json& j, const char* label) {
  if (!j.is_number()) {
    throw std::invalid_argument(std::string(label) + ": expected a number");
  }
  return j.get<double>();
}

std::pair<double, double> pair_field(const nlohmann::json& j,
                                     const char* label) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() ||
      !j[1].is_number()) {
    throw std::invalid_argument(std::string(label) +
                                ": expected an array of two numbers");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

geom::ConcaveRegion region_from_parsed(const nlohmann::json& j,
                                       const char* label);

caps::DomainSpec domain_from_parsed(const nlohmann::json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "bidisk") {
      return caps::DomainSpec::concave(
          geom::ConcaveRegion::omega0(kBidiskSegments));
    }
    bad("unknown domain name \"" + j.get<std::string>() + "\"");
  }
  if (!j.is_object() || j.size() != 1) {
    bad("expected a one-key object or the name \"bidisk\"");
  }
  const auto it = j.begin();
  const std::string& key = it.key();
  const nlohmann::json& value = it.value();
  if (key == "ball") {
    return caps::DomainSpec::ball(number_field(value, "ball"));
  }
  if (key == "ellipsoid") {
    const auto [a, b] = pair_field(value, "ellipsoid");
    return caps::DomainSpec::ellipsoid(a, b);
  }
  if (key == "polydisk") {
    const auto [a, b] = pair_field(value, "polydisk");
    return caps::DomainSpec::polydisk(a, b);
  }
  if (key == "concave") {
    if (value.is_string()) {
      return caps::DomainSpec::concave(parse_region(value.get<std::string>()));
    }
    return caps::DomainSpec::concave(region_from_parsed(value, "concave"));
  }
  if (key == "union") {
    if (!value.is_array() || value.empty()) {
      bad("union: expected a non-empty array of domain specs");
    }
    std::vector<caps::DomainSpec> parts;
    parts.reserve(value.size());
    for (const auto& part : value) parts.push_back(domain_from_parsed(part));
    return caps::DomainSpec::disjoint_union(std::move(parts));
  }
  bad("unknown key \"" + key + "\"");
}

geom::ConcaveRegion region_from_parsed(const nlohmann::json& j,
                                       const char* label) {
  if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array()) {
    throw std::invalid_argument(std::string(label) +
                                ": expected {\"vertices\": [[x, y], ...]}");
  }
  std::vector<geom::Vec2> chain;
  chain.reserve(j["vertices"].size());
  for (const auto& entry : j["vertices"]) {
    const auto [x, y] = pair_field(entry, label);
    chain.push_back({x, y});
  }
  try {
    return geom::ConcaveRegion::from_vertices(std::move(chain));
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string(label) + ": " + e.what());
  }
}

}  // namespace

std::string format_double(double v, int max_digits) {
  if (max_digits < 1 || max_digits > 17) {
    throw std::invalid_argument("format_double: digit cap out of range");
  }
  char buf[64];
  for (int p = 1; p <= max_digits; ++p) {
    std::snprintf(buf, sizeof buf, "%.*g", p, v);
    if (parse_double_exact(buf) == v) break;
  }
  return buf;
}

std::string region_to_json(const geom::ConcaveRegion& r) {
  std::string out = "{\"vertices\": [";
  bool first = true;
  for (const geom::Vec2& v : r.chain()) {
    if (!first) out += ", ";
    first = false;
    out += "[" + format_double(v.x) + ", " + format_double(v.y) + "]";
  }
  out += "]}";
  return out;
}

geom::ConcaveRegion region_from_json(const std::string& text) {
  return region_from_parsed(parse_or_throw(text, "region"), "region");
}

geom::ConcaveRegion parse_region(const std::string& text) {
  if (text.rfind("omega0:", 0) == 0) {
    const std::string count = text.substr(7);
    char* end = nullptr;
    const long n = std::strtol(count.c_str(), &end, 10);
    if (count.empty() || *end != '\0' || n < 1 || n > 100000000) {
      throw std::invalid_argument("region literal: bad segment count \"" +
                                  count + "\"");
    }
    return geom::ConcaveRegion::omega0(static_cast<int>(n));
  }
  return region_from_json(text);
}

caps::DomainSpec domain_from_json(const std::string& text) {
  return domain_from_parsed(parse_or_throw(text, "domain spec"));
}

std::string curve_to_csv(const std::vector<geom::Vec2>& points) {
  std::string out = "x,y\n";
  for (const geom::Vec2& p : points) {
    out += format_double(p.x) + "," + format_double(p.y) + "\n";
  }
  return out;
}

std::string capacities_to_csv(const std::vector<double>& caps) {
  std::string out = "k,c_k\n";
  for (std::size_t k = 0; k < caps.size(); ++k) {
    out += std::to_string(k) + "," + format_double(caps[k]) + "\n";
  }
  return out;
}

}  // namespace bidisk::io
