#include "bidisk/bidisk.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "billiard.hpp"
#include "capacities.hpp"
#include "embedding.hpp"
#include "geometry.hpp"
#include "io.hpp"
#include "packing.hpp"
#include "scenario.hpp"
#include "svg.hpp"
#include "weights.hpp"

struct bd_region {
  bidisk::geom::ConcaveRegion value;
};

struct bd_domain {
  bidisk::caps::DomainSpec value;
};

struct bd_billiard {
  bidisk::billiard::BilliardModel value;
};

namespace {

thread_local std::string g_last_error = "no error";

bd_status fail(bd_status code, const std::string& what) {
  g_last_error = what;
  return code;
}

// Runs the body, translating exceptions into status codes. `on_invalid`
// distinguishes parameter errors from parse errors for text inputs.
template <typename F>
bd_status guarded(bd_status on_invalid, F&& body) {
  try {
    return body();
  } catch (const std::invalid_argument& e) {
    return fail(on_invalid, e.what());
  } catch (const std::exception& e) {
    return fail(BD_ERR_NUMERIC, e.what());
  }
}

template <typename F>
bd_status guarded(F&& body) {
  return guarded(BD_ERR_INVALID_ARGUMENT, std::forward<F>(body));
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

bd_status require(bool ok, const char* what) {
  return ok ? BD_OK : fail(BD_ERR_INVALID_ARGUMENT, what);
}

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out += c;
  }
  return out;
}

int verdict_code(bidisk::embed::Embeds e) {
  switch (e) {
    case bidisk::embed::Embeds::No: return -1;
    case bidisk::embed::Embeds::Yes: return 1;
    case bidisk::embed::Embeds::Unknown: break;
  }
  return 0;
}

}  // namespace

extern "C" {

const char* bd_version(void) { return "1.0.0"; }

const char* bd_last_error(void) { return g_last_error.c_str(); }

void bd_string_free(char* s) { std::free(s); }

/* ---------- regions ---------- */

bd_status bd_region_omega0(int segments, bd_region** out) {
  if (bd_status s = require(out != nullptr, "out is null"); s != BD_OK)
    return s;
  return guarded([&] {
    *out = new bd_region{bidisk::geom::ConcaveRegion::omega0(segments)};
    return BD_OK;
  });
}

bd_status bd_region_triangle(double a, double b, bd_region** out) {
  if (bd_status s = require(out != nullptr, "out is null"); s != BD_OK)
    return s;
  return guarded([&] {
    *out = new bd_region{bidisk::geom::ConcaveRegion::triangle(a, b)};
    return BD_OK;
  });
}

bd_status bd_region_parse(const char* text, bd_region** out) {
  if (bd_status s = require(text != nullptr && out != nullptr,
                            "text or out is null");
      s != BD_OK)
    return s;
  return guarded(BD_ERR_PARSE, [&] {
    *out = new bd_region{bidisk::io::parse_region(text)};
    return BD_OK;
  });
}

bd_status bd_region_vertex_count(const bd_region* r, size_t* out) {
  if (bd_status s = require(r != nullptr && out != nullptr,
                            "region or out is null");
      s != BD_OK)
    return s;
  *out = r->value.chain().size();
  return BD_OK;
}

bd_status bd_region_vertices(const bd_region* r, double* xy, size_t capacity) {
  if (bd_status s = require(r != nullptr && xy != nullptr,
                            "region or buffer is null");
      s != BD_OK)
    return s;
  const auto& chain = r->value.chain();
  if (capacity < 2 * chain.size()) {
    return fail(BD_ERR_BUFFER, "vertex buffer too small");
  }
  for (std::size_t i = 0; i < chain.size(); ++i) {
    xy[2 * i] = chain[i].x;
    xy[2 * i + 1] = chain[i].y;
  }
  return BD_OK;
}

bd_status bd_region_area(const bd_region* r, double* out) {
  if (bd_status s = require(r != nullptr && out != nullptr,
                            "region or out is null");
      s != BD_OK)
    return s;
  *out = r->value.area();
  return BD_OK;
}

bd_status bd_region_to_json(const bd_region* r, char** out) {
  if (bd_status s = require(r != nullptr && out != nullptr,
                            "region or out is null");
      s != BD_OK)
    return s;
  return guarded([&] {
    *out = dup_string(bidisk::io::region_to_json(r->value));
    return *out != nullptr ? BD_OK : fail(BD_ERR_NUMERIC, "out of memory");
  });
}

void bd_region_free(bd_region* r) { delete r; }

/* ---------- weights ---------- */

bd_status bd_weight_sequence(const bd_region* r, int count, double min_weight,
                             double* out, size_t capacity, size_t* written) {
  if (bd_status s = require(r != nullptr && out != nullptr && written != nullptr,
                            "region, buffer, or written is null");
      s != BD_OK)
    return s;
  return guarded([&] {
    const auto w = bidisk::weights::weight_sequence(r->value, count, min_weight);
    if (capacity < w.size()) {
      return fail(BD_ERR_BUFFER, "weight buffer too small");
    }
    std::memcpy(out, w.data(), w.size() * sizeof(double));
    *written = w.size();
    return BD_OK;
  });
}

/* ---------- domains ---------- */

bd_status bd_domain_parse(const char* text, bd_domain** out) {
  if (bd_status s = require(text != nullptr && out != nullptr,
                            "text or out is null");
      s != BD_OK)
    return s;
  return guarded(BD_ERR_PARSE, [&] {
    *out = new bd_domain{bidisk::io::domain_from_json(text)};
    return BD_OK;
  });
}

void bd_domain_free(bd_domain* d) { delete d; }

bd_status bd_domain_capacities(const bd_domain* d, int kmax, double* out,
                               size_t capacity) {
  if (bd_status s = require(d != nullptr && out != nullptr,
                            "domain or buffer is null");
      s != BD_OK)
    return s;
  return guarded([&] {
    const auto caps = bidisk::caps::domain_capacities(d->value, kmax);
    if (capacity < caps.size()) {
      return fail(BD_ERR_BUFFER, "capacity buffer too small");
    }
    std::memcpy(out, caps.data(), caps.size() * sizeof(double));
    return BD_OK;
  });
}

/* ---------- embedding ---------- */

bd_status bd_obstruct(const bd_domain* source, const bd_domain* target,
                      int kmax, double slack, int* embeds, int* witness_k,
                      char** criterion) {
  if (bd_status s = require(source != nullptr && target != nullptr &&
                                embeds != nullptr && witness_k != nullptr,
                            "source, target, embeds, or witness_k is null");
      s != BD_OK)
    return s;
  return guarded([&] {
    const auto v =
        bidisk::embed::obstruct(source->value, target->value, kmax, slack);
    *embeds = verdict_code(v.embeds);
    *witness_k = v.witness_k;
    if (criterion != nullptr) *criterion = dup_string(v.criterion);
    return BD_OK;
  });
}

bd_status bd_bidisk_into(const char* target_kind, double a, double b,
                         int* embeds, char** criterion) {
  if (bd_status s = require(target_kind != nullptr && embeds != nullptr,
                            "target_kind or embeds is null");
      s != BD_OK)
    return s;
  return guarded([&] {
    bidisk::embed::TargetKind kind;
    const std::string name = target_kind;
    if (name == "ball") {
      kind = bidisk::embed::TargetKind::Ball;
    } else if (name == "ellipsoid") {
      kind = bidisk::embed::TargetKind::Ellipsoid;
    } else if (name == "polydisk") {
      kind = bidisk::embed::TargetKind::Polydisk;
    } else {
      throw std::invalid_argument("target kind must be ball, ellipsoid, or polydisk");
    }
    const auto v = bidisk::embed::bidisk_into(kind, a, b);
    *embeds = verdict_code(v.embeds);
    if (criterion != nullptr) *criterion = dup_string(v.criterion);
    return BD_OK;
  });
}

bd_status bd_ellipsoid_into_bidisk(int ratio, double b, int* embeds,
                                   char** criterion) {
  if (bd_status s = require(embeds != nullptr, "embeds is null"); s != BD_OK)
    return s;
  return guarded([&] {
    const auto v = bidisk::embed::ellipsoid_into_bidisk(ratio, b);
    *embeds = verdict_code(v.embeds);
    if (criterion != nullptr) *criterion = dup_string(v.criterion);
    return BD_OK;
  });
}

bd_status bd_region_contains_ellipsoid(const bd_region* r, double a, double b,
                                       int* contained, double* min_value) {
  if (bd_status s = require(r != nullptr && contained != nullptr,
                            "region or contained is null");
      s != BD_OK)
    return s;
  return guarded([&] {
    const auto c = bidisk::embed::contains_ellipsoid(r->value, a, b);
    *contained = c.contained ? 1 : 0;
    if (min_value != nullptr) *min_value = c.min_value;
    return BD_OK;
  });
}

/* ---------- billiard ---------- */

bd_status bd_billiard_create(double epsilon, bd_billiard** out) {
  if (bd_status s = require(out != nullptr, "out is null"); s != BD_OK)
    return s;
  return guarded([&] {
    *out = new bd_billiard{bidisk::billiard::make_model(epsilon)};
    return BD_OK;
  });
}

void bd_billiard_free(bd_billiard* m) { delete m; }

bd_status bd_billiard_max_momentum(const bd_billiard* m, double* out) {
  if (bd_status s = require(m != nullptr && out != nullptr,
                            "model or out is null");
      s != BD_OK)
    return s;
  *out = m->value.max_momentum;
  return BD_OK;
}

bd_status bd_billiard_g_alpha(const bd_billiard* m, double v, double* g,
                              double* alpha) {
  if (bd_status s = require(m != nullptr && g != nullptr && alpha != nullptr,
                            "model, g, or alpha is null");
      s != BD_OK)
    return s;
  return guarded([&] {
    const auto ga = bidisk::billiard::g_alpha(m->value, v);
    *g = ga.g;
    *alpha = ga.alpha;
    return BD_OK;
  });
}

bd_status bd_billiard_ode_oracle(const bd_billiard* m, double v, double dt,
                                 double* g, double* alpha) {
  if (bd_status s = require(m != nullptr && g != nullptr && alpha != nullptr,
                            "model, g, or alpha is null");
      s != BD_OK)
    return s;
  return guarded([&] {
    const auto ga = bidisk::billiard::ode_oracle(m->value, v, dt);
    *g = ga.g;
    *alpha = ga.alpha;
    return BD_OK;
  });
}

bd_status bd_billiard_profile(const bd_billiard* m, int n, double* rows,
                              size_t capacity) {
  if (bd_status s = require(m != nullptr && rows != nullptr,
                            "model or buffer is null");
      s != BD_OK)
    return s;
  return guarded([&] {
    const auto profile = bidisk::billiard::moment_profile(m->value, n);
    if (capacity < 5 * profile.samples.size()) {
      return fail(BD_ERR_BUFFER, "profile buffer too small");
    }
    for (std::size_t i = 0; i < profile.samples.size(); ++i) {
      const auto& s = profile.samples[i];
      rows[5 * i] = s.v;
      rows[5 * i + 1] = s.g;
      rows[5 * i + 2] = s.alpha;
      rows[5 * i + 3] = s.rho1;
      rows[5 * i + 4] = s.rho2;
    }
    return BD_OK;
  });
}

bd_status bd_billiard_limit_error(const bd_billiard* m, int n, double* out) {
  if (bd_status s = require(m != nullptr && out != nullptr,
                            "model or out is null");
      s != BD_OK)
    return s;
  return guarded([&] {
    *out = bidisk::billiard::limit_curve_error(m->value, n);
    return BD_OK;
  });
}

/* ---------- packing ---------- */

bd_status bd_verify_packing(const char* placement_json, double margin_override,
                            int* ok, char** report) {
  if (bd_status s = require(placement_json != nullptr && ok != nullptr,
                            "placement_json or ok is null");
      s != BD_OK)
    return s;
  return guarded(BD_ERR_PARSE, [&] {
    auto placement = bidisk::packing::placement_from_json(placement_json);
    if (margin_override >= 0.0) placement.target.margin = margin_override;
    const auto result = bidisk::packing::verify_placement(placement);
    *ok = result.ok ? 1 : 0;
    if (report != nullptr) {
      std::string doc = "[";
      bool first = true;
      for (const auto& f : result.failures) {
        if (!first) doc += ", ";
        first = false;
        const char* kind = "requirement";
        if (f.kind == bidisk::packing::Failure::Kind::kContainment)
          kind = "containment";
        if (f.kind == bidisk::packing::Failure::Kind::kOverlap)
          kind = "overlap";
        doc += std::string("{\"kind\": \"") + kind + "\", \"piece_a\": " +
               std::to_string(f.piece_a) +
               ", \"piece_b\": " + std::to_string(f.piece_b) +
               ", \"detail\": \"" + json_escape(f.detail) + "\"}";
      }
      doc += "]";
      *report = dup_string(doc);
    }
    return BD_OK;
  });
}

bd_status bd_pack_greedy(const double* legs, size_t n, double c, double d,
                         int attempts, uint64_t seed, double margin,
                         int* found, char** placement) {
  if (bd_status s = require(legs != nullptr && n > 0 && found != nullptr,
                            "legs is null or empty, or found is null");
      s != BD_OK)
    return s;
  return guarded([&] {
    std::vector<bidisk::packing::LegRequirement> required(n);
    for (std::size_t i = 0; i < n; ++i) {
      required[i] = {legs[2 * i], legs[2 * i + 1]};
    }
    const auto result =
        bidisk::packing::greedy_search(required, c, d, attempts, seed, margin);
    *found = result.found ? 1 : 0;
    if (placement != nullptr) {
      *placement = result.found
                       ? dup_string(
                             bidisk::packing::placement_to_json(result.placement))
                       : nullptr;
    }
    return BD_OK;
  });
}

/* ---------- scenarios and plots ---------- */

bd_status bd_run_scenario(const char* name, char** report, int* overall_pass) {
  if (bd_status s = require(name != nullptr && overall_pass != nullptr,
                            "name or overall_pass is null");
      s != BD_OK)
    return s;
  return guarded([&] {
    const auto r = bidisk::scenario::run_scenario(name);
    *overall_pass = r.overall ? 1 : 0;
    if (report != nullptr) {
      *report = dup_string(bidisk::scenario::report_to_json(r));
    }
    return BD_OK;
  });
}

bd_status bd_render_svg(const char* curves_json, char** svg) {
  if (bd_status s = require(curves_json != nullptr && svg != nullptr,
                            "curves_json or svg is null");
      s != BD_OK)
    return s;
  return guarded(BD_ERR_PARSE, [&] {
    nlohmann::json doc = nlohmann::json::parse(curves_json, nullptr, false);
    if (doc.is_discarded() || !doc.is_array()) {
      throw std::invalid_argument("curves: expected a JSON array");
    }
    std::vector<bidisk::svg::Curve> curves;
    curves.reserve(doc.size());
    for (const auto& entry : doc) {
      if (!entry.is_object() || !entry.contains("label") ||
          !entry.contains("points") || !entry["label"].is_string() ||
          !entry["points"].is_array()) {
        throw std::invalid_argument(
            "curves: each entry needs a label and a points array");
      }
      bidisk::svg::Curve curve;
      curve.label = entry["label"].get<std::string>();
      for (const auto& p : entry["points"]) {
        if (!p.is_array() || p.size() != 2 || !p[0].is_number() ||
            !p[1].is_number()) {
          throw std::invalid_argument("curves: points must be [x, y] pairs");
        }
        curve.points.push_back({p[0].get<double>(), p[1].get<double>()});
      }
      curves.push_back(std::move(curve));
    }
    *svg = dup_string(bidisk::svg::render(curves));
    return BD_OK;
  });
}

}  // extern "C"
