// Command-line frontend. Links against the shared C API only; all domain
// logic lives behind bidisk/bidisk.h. Machine-readable results go to stdout
// (or --output), diagnostics to stderr. Exit codes: 0 success/pass, 1 check
// failure, 2 usage or input error.

#include <CLI11.hpp>
#include <bidisk/bidisk.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

// Shortest representation within 12 significant digits that parses back to
// the same double; matches the library's own emitters byte for byte.
std::string fmt(double v) {
  char buf[64];
  for (int p = 1; p <= 12; ++p) {
    std::snprintf(buf, sizeof buf, "%.*g", p, v);
    char* end = nullptr;
    if (std::strtod(buf, &end) == v && end != buf) break;
  }
  return buf;
}

std::string take(char* s) {
  std::string out = s != nullptr ? s : "";
  bd_string_free(s);
  return out;
}

[[noreturn]] void die(int code, const std::string& message) {
  std::cerr << "error: " << message << "\n";
  std::exit(code);
}

// Maps a C API failure to an exit code: bad input is a usage problem,
// anything else is a failed computation.
[[noreturn]] void die_status(bd_status status) {
  const int code = (status == BD_ERR_PARSE || status == BD_ERR_INVALID_ARGUMENT)
                       ? kExitUsage
                       : kExitCheckFailed;
  die(code, bd_last_error());
}

void check(bd_status status) {
  if (status != BD_OK) die_status(status);
}

void write_output(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out.good()) die(kExitUsage, "cannot open output file " + path);
  out << text;
  if (!out.good()) die(kExitCheckFailed, "failed writing " + path);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in.good()) die(kExitUsage, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// The "bidisk" shorthand is accepted wherever a domain spec is expected.
std::string normalize_domain(const std::string& text) {
  return text == "bidisk" ? "\"bidisk\"" : text;
}

bd_region* parse_region_or_die(const std::string& text) {
  bd_region* r = nullptr;
  check(bd_region_parse(text.c_str(), &r));
  return r;
}

bd_domain* parse_domain_or_die(const std::string& text) {
  bd_domain* d = nullptr;
  check(bd_domain_parse(normalize_domain(text).c_str(), &d));
  return d;
}

std::vector<double> region_points(bd_region* r) {
  size_t n = 0;
  check(bd_region_vertex_count(r, &n));
  std::vector<double> xy(2 * n);
  check(bd_region_vertices(r, xy.data(), xy.size()));
  return xy;
}

std::string points_json(const std::vector<double>& xy) {
  std::string out = "[";
  for (size_t i = 0; 2 * i + 1 < xy.size(); ++i) {
    if (i > 0) out += ", ";
    out += "[" + fmt(xy[2 * i]) + ", " + fmt(xy[2 * i + 1]) + "]";
  }
  out += "]";
  return out;
}

// ---- subcommand bodies ----

int run_curve(const std::string& region_text, const std::string& format,
              const std::string& output) {
  bd_region* r = parse_region_or_die(region_text);
  std::string text;
  if (format == "csv") {
    const auto xy = region_points(r);
    text = "x,y\n";
    for (size_t i = 0; 2 * i + 1 < xy.size(); ++i) {
      text += fmt(xy[2 * i]) + "," + fmt(xy[2 * i + 1]) + "\n";
    }
  } else if (format == "json") {
    char* json = nullptr;
    check(bd_region_to_json(r, &json));
    text = take(json) + "\n";
  } else if (format == "svg") {
    const std::string curves =
        "[{\"label\": \"boundary\", \"points\": " +
        points_json(region_points(r)) + "}]";
    char* svg = nullptr;
    check(bd_render_svg(curves.c_str(), &svg));
    text = take(svg);
  } else {
    die(kExitUsage, "curve supports --format csv, json, or svg");
  }
  bd_region_free(r);
  write_output(output, text);
  return kExitPass;
}

int run_weights(const std::string& region_text, int count, double min_weight,
                const std::string& format, const std::string& output) {
  if (count < 1 || count > 2000000) {
    die(kExitUsage, "--count must be between 1 and 2000000");
  }
  bd_region* r = parse_region_or_die(region_text);
  std::vector<double> w(static_cast<size_t>(count));
  size_t written = 0;
  check(bd_weight_sequence(r, count, min_weight, w.data(), w.size(), &written));
  w.resize(written);
  double area = 0.0;
  check(bd_region_area(r, &area));
  bd_region_free(r);

  double covered = 0.0;
  for (double x : w) covered += 0.5 * x * x;

  std::string text;
  if (format == "json") {
    text = "{\"weights\": [";
    for (size_t i = 0; i < w.size(); ++i) {
      if (i > 0) text += ", ";
      text += fmt(w[i]);
    }
    text += "], \"area_covered\": " + fmt(covered) +
            ", \"region_area\": " + fmt(area) + "}\n";
  } else if (format == "csv") {
    text = "i,w\n";
    for (size_t i = 0; i < w.size(); ++i) {
      text += std::to_string(i + 1) + "," + fmt(w[i]) + "\n";
    }
  } else {
    die(kExitUsage, "weights supports --format json or csv");
  }
  write_output(output, text);
  return kExitPass;
}

int run_capacities(const std::string& domain_text, int kmax,
                   const std::string& format, const std::string& output) {
  if (kmax < 0 || kmax > 2000000) {
    die(kExitUsage, "--kmax must be between 0 and 2000000");
  }
  bd_domain* d = parse_domain_or_die(domain_text);
  std::vector<double> caps(static_cast<size_t>(kmax) + 1);
  check(bd_domain_capacities(d, kmax, caps.data(), caps.size()));
  bd_domain_free(d);

  std::string text;
  if (format == "csv") {
    text = "k,c_k\n";
    for (size_t k = 0; k < caps.size(); ++k) {
      text += std::to_string(k) + "," + fmt(caps[k]) + "\n";
    }
  } else if (format == "json") {
    text = "{\"capacities\": [";
    for (size_t k = 0; k < caps.size(); ++k) {
      if (k > 0) text += ", ";
      text += fmt(caps[k]);
    }
    text += "]}\n";
  } else {
    die(kExitUsage, "capacities supports --format csv or json");
  }
  write_output(output, text);
  return kExitPass;
}

// Recognizes shapes with a closed-form bidisk criterion. Returns true and
// fills the verdict when one applies.
bool closed_form_verdict(const std::string& source, const std::string& target,
                         int* embeds, std::string* criterion) {
  const auto parse_pair = [](const std::string& text, const char* key,
                             double* a, double* b) {
    // Minimal shape probe: {"key": [a, b]} with nothing else.
    std::string want = "\"" + std::string(key) + "\"";
    if (text.find(want) == std::string::npos) return false;
    bd_domain* d = nullptr;
    if (bd_domain_parse(text.c_str(), &d) != BD_OK) return false;
    bd_domain_free(d);
    const size_t open = text.find('[');
    const size_t comma = text.find(',', open);
    const size_t close = text.find(']', open);
    if (open == std::string::npos || comma == std::string::npos ||
        close == std::string::npos) {
      return false;
    }
    *a = std::strtod(text.substr(open + 1, comma - open - 1).c_str(), nullptr);
    *b = std::strtod(text.substr(comma + 1, close - comma - 1).c_str(), nullptr);
    return true;
  };

  double a = 0.0, b = 0.0;
  char* why = nullptr;
  if (source == "bidisk") {
    if (parse_pair(target, "polydisk", &a, &b)) {
      check(bd_bidisk_into("polydisk", a, b, embeds, &why));
      *criterion = take(why);
      return true;
    }
    if (parse_pair(target, "ellipsoid", &a, &b)) {
      check(bd_bidisk_into("ellipsoid", a, b, embeds, &why));
      *criterion = take(why);
      return true;
    }
    const size_t at = target.find("\"ball\"");
    if (at != std::string::npos) {
      const size_t colon = target.find(':', at);
      if (colon != std::string::npos) {
        a = std::strtod(target.substr(colon + 1).c_str(), nullptr);
        check(bd_bidisk_into("ball", a, 0.0, embeds, &why));
        *criterion = take(why);
        return true;
      }
    }
    return false;
  }
  if (target == "bidisk" && parse_pair(source, "ellipsoid", &a, &b)) {
    const double lo = std::min(a, b);
    const double hi = std::max(a, b);
    if (lo > 0.0 && hi == lo) {
      check(bd_ellipsoid_into_bidisk(1, lo, embeds, &why));
      *criterion = take(why);
      return true;
    }
    if (lo > 0.0 && hi == 2.0 * lo) {
      check(bd_ellipsoid_into_bidisk(2, lo, embeds, &why));
      *criterion = take(why);
      return true;
    }
  }
  return false;
}

int run_check_embedding(const std::string& source, const std::string& target,
                        int kmax, double slack, const std::string& format,
                        const std::string& output) {
  if (format != "json") {
    die(kExitUsage, "check-embedding supports --format json only");
  }
  int embeds = 0;
  int witness = -1;
  std::string criterion;
  bool decided = closed_form_verdict(source, target, &embeds, &criterion);

  if (!decided || embeds <= 0) {
    // Run the capacity test: it decides "no", or upgrades the report with a
    // witness index when the closed form already said "no".
    bd_domain* s = parse_domain_or_die(source);
    bd_domain* t = parse_domain_or_die(target);
    int cap_embeds = 0;
    char* cap_criterion = nullptr;
    check(bd_obstruct(s, t, kmax, slack, &cap_embeds, &witness,
                      &cap_criterion));
    bd_domain_free(t);
    bd_domain_free(s);
    const std::string cap_why = take(cap_criterion);
    if (!decided) {
      embeds = cap_embeds;
      criterion = cap_why;
    }
  }

  std::string text = "{\"embeds\": ";
  text += embeds > 0 ? "true" : (embeds < 0 ? "false" : "null");
  text += ", \"witness_k\": " + std::to_string(witness) +
          ", \"criterion\": \"" + criterion + "\"}\n";
  write_output(output, text);
  return kExitPass;
}

int run_billiard(const std::vector<double>& epsilons, int samples, bool oracle,
                 const std::string& format, const std::string& output) {
  if (epsilons.empty()) die(kExitUsage, "--epsilon is required");
  if (samples < 3 || samples > 1000000) {
    die(kExitUsage, "--samples must be between 3 and 1000000");
  }
  if (format != "svg" && epsilons.size() > 1) {
    die(kExitUsage, "multiple --epsilon values need --format svg");
  }

  std::vector<std::vector<double>> profiles;
  for (double eps : epsilons) {
    bd_billiard* m = nullptr;
    check(bd_billiard_create(eps, &m));
    std::vector<double> rows(5 * static_cast<size_t>(samples));
    check(bd_billiard_profile(m, samples, rows.data(), rows.size()));

    if (oracle) {
      // Independent flow integration at a spread of interior momenta.
      double momentum = 0.0;
      check(bd_billiard_max_momentum(m, &momentum));
      double worst = 0.0;
      for (double frac : {0.2, 0.4, 0.6, 0.8}) {
        const double v = frac * momentum;
        double g = 0.0, alpha = 0.0, g2 = 0.0, alpha2 = 0.0;
        check(bd_billiard_g_alpha(m, v, &g, &alpha));
        check(bd_billiard_ode_oracle(m, v, 1e-3, &g2, &alpha2));
        worst = std::max(worst, std::abs(g - g2) / std::abs(g2));
        worst = std::max(worst, std::abs(alpha - alpha2) / std::abs(alpha2));
      }
      std::cerr << "oracle: max relative deviation " << fmt(worst)
                << " over momenta {0.2, 0.4, 0.6, 0.8} M (eps=" << fmt(eps)
                << ")\n";
      if (!(worst <= 1e-3)) {
        bd_billiard_free(m);
        die(kExitCheckFailed, "quadrature and flow integration disagree");
      }
    }
    bd_billiard_free(m);
    profiles.push_back(std::move(rows));
  }

  std::string text;
  if (format == "csv") {
    text = "v,G,alpha,rho1,rho2\n";
    const auto& rows = profiles[0];
    for (size_t i = 0; 5 * i + 4 < rows.size(); ++i) {
      text += fmt(rows[5 * i]) + "," + fmt(rows[5 * i + 1]) + "," +
              fmt(rows[5 * i + 2]) + "," + fmt(rows[5 * i + 3]) + "," +
              fmt(rows[5 * i + 4]) + "\n";
    }
  } else if (format == "json") {
    const auto& rows = profiles[0];
    text = "{\"epsilon\": " + fmt(epsilons[0]) + ", \"samples\": [";
    for (size_t i = 0; 5 * i + 4 < rows.size(); ++i) {
      if (i > 0) text += ", ";
      text += "{\"v\": " + fmt(rows[5 * i]) +
              ", \"G\": " + fmt(rows[5 * i + 1]) +
              ", \"alpha\": " + fmt(rows[5 * i + 2]) +
              ", \"rho1\": " + fmt(rows[5 * i + 3]) +
              ", \"rho2\": " + fmt(rows[5 * i + 4]) + "}";
    }
    text += "]}\n";
  } else if (format == "svg") {
    // The action images (rho1, rho2) for each strength, against the limiting
    // boundary curve they converge to.
    std::string curves = "[";
    bd_region* limit = nullptr;
    check(bd_region_omega0(512, &limit));
    curves += "{\"label\": \"limit curve\", \"points\": " +
              points_json(region_points(limit)) + "}";
    bd_region_free(limit);
    for (size_t e = 0; e < epsilons.size(); ++e) {
      const auto& rows = profiles[e];
      curves += ", {\"label\": \"eps=" + fmt(epsilons[e]) +
                "\", \"points\": [";
      for (size_t i = 0; 5 * i + 4 < rows.size(); ++i) {
        if (i > 0) curves += ", ";
        curves += "[" + fmt(rows[5 * i + 3]) + ", " + fmt(rows[5 * i + 4]) +
                  "]";
      }
      curves += "]}";
    }
    curves += "]";
    char* svg = nullptr;
    check(bd_render_svg(curves.c_str(), &svg));
    text = take(svg);
  } else {
    die(kExitUsage, "billiard supports --format csv, json, or svg");
  }
  write_output(output, text);
  return kExitPass;
}

int run_verify_packing(const std::string& placement_path, double margin,
                       const std::string& format, const std::string& output) {
  if (format != "json") {
    die(kExitUsage, "verify-packing supports --format json only");
  }
  const std::string doc = read_file(placement_path);
  int ok = 0;
  char* report = nullptr;
  check(bd_verify_packing(doc.c_str(), margin, &ok, &report));
  const std::string failures = take(report);
  write_output(output, std::string("{\"ok\": ") + (ok != 0 ? "true" : "false") +
                           ", \"failures\": " + failures + "}\n");
  return ok != 0 ? kExitPass : kExitCheckFailed;
}

int run_scenario(const std::string& name, const std::string& format,
                 const std::string& output) {
  if (format != "json") {
    die(kExitUsage, "scenario supports --format json only");
  }
  int pass = 0;
  char* report = nullptr;
  check(bd_run_scenario(name.c_str(), &report, &pass));
  write_output(output, take(report));
  return pass != 0 ? kExitPass : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Toric-domain capacities, bidisk embedding verdicts, billiard "
               "action profiles, and triangle-packing checks"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string output = "-";
  app.add_option("--output", output, "Output path, or - for stdout")
      ->capture_default_str();

  auto* curve = app.add_subcommand("curve", "Emit a region's boundary chain");
  std::string curve_region = "omega0:512";
  std::string curve_format = "csv";
  curve->add_option("--region", curve_region,
                    "Region JSON or builtin literal omega0:N")
      ->capture_default_str();
  curve->add_option("--format", curve_format, "csv, json, or svg")
      ->capture_default_str();

  auto* weights =
      app.add_subcommand("weights", "Greedy triangle-weight expansion");
  std::string weights_region = "omega0:8192";
  int weights_count = 5;
  double weights_min = 0.0;
  std::string weights_format = "json";
  weights->add_option("--region", weights_region,
                      "Region JSON or builtin literal omega0:N")
      ->capture_default_str();
  weights->add_option("--count", weights_count, "Number of weights")
      ->capture_default_str();
  weights->add_option("--min-weight", weights_min,
                      "Stop once weights drop below this")
      ->capture_default_str();
  weights->add_option("--format", weights_format, "json or csv")
      ->capture_default_str();

  auto* capacities =
      app.add_subcommand("capacities", "Capacity sequence of a domain");
  std::string cap_domain;
  int cap_kmax = 20;
  std::string cap_format = "csv";
  capacities
      ->add_option("--domain", cap_domain,
                   "Domain spec JSON, or the name bidisk")
      ->required();
  capacities->add_option("--kmax", cap_kmax, "Largest index k")
      ->capture_default_str();
  capacities->add_option("--format", cap_format, "csv or json")
      ->capture_default_str();

  auto* embedding = app.add_subcommand(
      "check-embedding", "Embedding verdict from capacities and closed forms");
  std::string emb_source;
  std::string emb_target;
  int emb_kmax = 100;
  double emb_slack = 1e-9;
  std::string emb_format = "json";
  embedding
      ->add_option("--source", emb_source,
                   "Source domain spec JSON, or the name bidisk")
      ->required();
  embedding
      ->add_option("--target", emb_target,
                   "Target domain spec JSON, or the name bidisk")
      ->required();
  embedding->add_option("--kmax", emb_kmax, "Capacity indices to test")
      ->capture_default_str();
  embedding->add_option("--slack", emb_slack, "Comparison slack")
      ->capture_default_str();
  embedding->add_option("--format", emb_format, "json")->capture_default_str();

  auto* billiard = app.add_subcommand(
      "billiard", "Action profile of the smoothed circular billiard");
  std::vector<double> bil_eps;
  int bil_samples = 65;
  bool bil_oracle = false;
  std::string bil_format = "csv";
  billiard
      ->add_option("--epsilon", bil_eps,
                   "Smoothing strength in (0,1); repeat for svg overlays")
      ->required();
  billiard->add_option("--samples", bil_samples, "Momentum samples")
      ->capture_default_str();
  billiard->add_flag("--oracle", bil_oracle,
                     "Cross-check the quadrature against flow integration");
  billiard->add_option("--format", bil_format, "csv, json, or svg")
      ->capture_default_str();
  billiard->add_option("--emit", bil_format, "Alias for --format");

  auto* verify = app.add_subcommand(
      "verify-packing", "Check a triangle placement document");
  std::string ver_placement;
  double ver_margin = -1.0;
  std::string ver_format = "json";
  verify->add_option("--placement", ver_placement, "Placement JSON file")
      ->required();
  verify->add_option("--margin", ver_margin,
                     "Override the document's containment margin");
  verify->add_option("--format", ver_format, "json")->capture_default_str();

  auto* scenario = app.add_subcommand(
      "scenario", "Run a named reproduction scenario");
  std::string sc_name;
  std::string sc_format = "json";
  scenario
      ->add_option("name", sc_name,
                   "weights | capacities | theorem-1.1 | prop-1.4 | "
                   "billiard-convergence | packing")
      ->required();
  scenario->add_option("--format", sc_format, "json")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (curve->parsed()) return run_curve(curve_region, curve_format, output);
  if (weights->parsed()) {
    return run_weights(weights_region, weights_count, weights_min,
                       weights_format, output);
  }
  if (capacities->parsed()) {
    return run_capacities(cap_domain, cap_kmax, cap_format, output);
  }
  if (embedding->parsed()) {
    return run_check_embedding(emb_source, emb_target, emb_kmax, emb_slack,
                               emb_format, output);
  }
  if (billiard->parsed()) {
    return run_billiard(bil_eps, bil_samples, bil_oracle, bil_format, output);
  }
  if (verify->parsed()) {
    return run_verify_packing(ver_placement, ver_margin, ver_format, output);
  }
  if (scenario->parsed()) return run_scenario(sc_name, sc_format, output);
  return kExitUsage;
}
