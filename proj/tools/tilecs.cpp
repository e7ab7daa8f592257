#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tilecs/bfs.hpp"
#include "tilecs/catalog.hpp"
#include "tilecs/cayley.hpp"
#include "tilecs/embedded.hpp"
#include "tilecs/error.hpp"
#include "tilecs/formula_oracle.hpp"
#include "tilecs/gf_fit.hpp"
#include "tilecs/spec_io.hpp"
#include "tilecs/structure_checker.hpp"
#include "tilecs/svg_render.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace tilecs;

namespace {

constexpr int kVerifyMax = 120;

struct Outcome {
  int code = 0;
  std::string text;
  json doc = json::object();
};

std::optional<fs::path> data_dir() {
  const char* env = std::getenv("TILECS_DATA_DIR");
  if (!env || !*env)
    return std::nullopt;
  return fs::path(env);
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in)
    throw InvalidArgument("cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Catalog entry, taken from $TILECS_DATA_DIR/tilings/<key>.json when present.
CatalogEntry resolve_tiling(const std::string& key) {
  const CatalogEntry& builtin = catalog::get(key);
  if (auto dir = data_dir()) {
    fs::path p = *dir / "tilings" / (key + ".json");
    if (fs::exists(p))
      return catalog::from_spec(key, load_spec_file(p.string()));
  }
  return builtin;
}

const BaseChoice& resolve_base(const CatalogEntry& e, const std::string& label) {
  return label.empty() ? e.bases.front() : e.base(label);
}

GroupFile resolve_group(const std::string& key) {
  if (auto dir = data_dir()) {
    fs::path p = *dir / "groups" / (key + ".txt");
    if (fs::exists(p))
      return parse_group_file(read_file(p), key);
  }
  return load_group(key);
}

HAnnotation resolve_annotation(const std::string& arg) {
  if (fs::exists(arg) && fs::is_regular_file(arg))
    return load_annotation_file(arg);
  std::string name = fs::path(arg).stem().string();
  if (auto dir = data_dir()) {
    fs::path p = *dir / "h" / (name + ".json");
    if (fs::exists(p))
      return load_annotation_file(p.string());
  }
  if (auto text = find_embedded(embedded_annotations(), name))
    return parse_annotation_json(*text);
  throw UnknownKeyError("no annotation file or shipped annotation named '" + arg + "'");
}

std::string join(const std::vector<std::int64_t>& v, const std::string& sep) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k)
    out += (k ? sep : "") + std::to_string(v[k]);
  return out;
}

// ---- list

Outcome cmd_list() {
  Outcome o;
  o.doc = json::array();
  std::string text;
  for (const auto& e : catalog::list_entries()) {
    json row{{"key", e.key}, {"title", e.title}, {"bases", json::array()}};
    text += e.key + "  (" + e.title + ")\n";
    for (std::size_t k = 0; k < e.labels.size(); ++k) {
      row["bases"].push_back(json{{"label", e.labels[k]}, {"oeis", e.oeis_refs[k]}});
      text += "    " + e.labels[k] + "  " + e.oeis_refs[k] + "\n";
    }
    o.doc.push_back(row);
  }
  o.text = text;
  return o;
}

// ---- cs

Outcome cmd_cs(const std::string& tiling, const std::string& base, int n, const std::string& format) {
  if (n < 0)
    throw InvalidArgument("-n must be >= 0");
  CatalogEntry e = resolve_tiling(tiling);
  const BaseChoice& b = resolve_base(e, base);
  CoordSeq cs = coordination_sequence(e.graph(), b.base, n);
  cs.tiling_key = e.key;
  cs.base_label = b.label;
  Outcome o;
  if (format == "csv")
    o.text = to_csv(cs);
  else if (format == "json")
    o.text = to_json(cs);
  else
    o.text = join(cs.terms, " ") + "\n";
  return o;
}

// ---- verify

struct VerifyRow {
  std::string tiling;
  std::string base;
  std::string form;
  VerifyReport report;
};

Outcome cmd_verify(const std::string& tiling, bool all) {
  if (!all && tiling.empty())
    throw InvalidArgument("verify needs --tiling or --all");
  std::vector<std::string> keys = all ? catalog::keys() : std::vector<std::string>{tiling};
  std::vector<VerifyRow> rows;
  for (const auto& key : keys) {
    CatalogEntry e = resolve_tiling(key);
    PeriodicGraph g = e.graph();
    for (const auto& b : e.bases) {
      const FormBinding* fb = find_forms(e.key, b.label);
      if (!fb)
        continue;
      CoordSeq cs = coordination_sequence(g, b.base, kVerifyMax);
      for (const auto& f : fb->forms)
        rows.push_back({e.key, b.label, f.name, verify_against(cs, f)});
      if (e.key == "t31212") {
        VerifyRow r{e.key, b.label, "sector tally total", {}};
        r.report.from = 3;
        r.report.to = kVerifyMax;
        for (int n = 3; n <= kVerifyMax; ++n) {
          std::int64_t want = sector_tally_total(n);
          if (want != cs.terms[static_cast<std::size_t>(n)]) {
            r.report.pass = false;
            r.report.first_mismatch = VerifyReport::Mismatch{n, want, cs.terms[static_cast<std::size_t>(n)]};
            break;
          }
        }
        rows.push_back(r);
      }
    }
  }
  Outcome o;
  o.doc = json{{"checks", json::array()}, {"pass", true}};
  int failed = 0;
  for (const auto& r : rows) {
    if (!r.report.pass)
      ++failed;
    o.text += r.tiling + " / " + r.base + " / " + r.form + ": " + r.report.to_text() + "\n";
    json row{{"tiling", r.tiling}, {"base", r.base}, {"form", r.form}};
    row["report"] = json::parse(r.report.to_json());
    o.doc["checks"].push_back(row);
  }
  if (rows.empty())
    o.text += "no closed forms registered for " + tiling + "\n";
  o.text += std::to_string(rows.size() - static_cast<std::size_t>(failed)) + " of " + std::to_string(rows.size()) +
            " checks pass\n";
  o.doc["pass"] = failed == 0;
  o.code = failed ? 1 : 0;
  return o;
}

// ---- fit

std::vector<std::int64_t> parse_terms(const std::string& text) {
  std::vector<std::int64_t> out;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, ',')) {
    auto first = cur.find_first_not_of(" \t");
    auto last = cur.find_last_not_of(" \t");
    if (first == std::string::npos)
      fail_parse("empty term in --terms");
    cur = cur.substr(first, last - first + 1);
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(cur, &used);
    } catch (const std::exception&) {
      fail_parse("invalid term '" + cur + "'");
    }
    if (used != cur.size())
      fail_parse("invalid term '" + cur + "'");
    out.push_back(v);
  }
  return out;
}

CoordSeq read_sequence_file(const std::string& path) {
  std::string text = read_file(path);
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{')
    return coordseq_from_json(text);
  return coordseq_from_csv(text);
}

Outcome cmd_fit(const std::string& tiling, const std::string& base, int n_fit, int n_check,
                const std::string& terms_text, const std::string& input) {
  std::vector<std::int64_t> fit_terms;
  std::vector<std::int64_t> check_terms;
  std::string source;
  if (!terms_text.empty() || !input.empty()) {
    fit_terms = !terms_text.empty() ? parse_terms(terms_text) : read_sequence_file(input).terms;
    source = !terms_text.empty() ? "--terms" : input;
  } else {
    if (tiling.empty())
      throw InvalidArgument("fit needs --tiling, --terms or --input");
    if (n_fit < 0 || n_check <= n_fit)
      throw InvalidArgument("--n-check must exceed --n-fit");
    CatalogEntry e = resolve_tiling(tiling);
    const BaseChoice& b = resolve_base(e, base);
    check_terms = cs_terms(e.graph(), b.base, n_check);
    fit_terms.assign(check_terms.begin(), check_terms.begin() + n_fit + 1);
    source = e.key + " / " + b.label;
  }

  Outcome o;
  o.doc["source"] = source;
  o.doc["terms_used"] = fit_terms.size();
  std::optional<RecurrenceSpec> rec;
  try {
    rec = find_recurrence(fit_terms);
  } catch (const InsufficientTerms& ex) {
    o.code = 1;
    o.text = std::string("insufficient terms: ") + ex.what() + "\n";
    o.doc["error"] = "insufficient terms";
    o.doc["detail"] = ex.what();
    return o;
  }
  if (!rec) {
    o.code = 1;
    o.text = "no recurrence within bounds for " + std::to_string(fit_terms.size()) + " terms\n";
    o.doc["error"] = "no fit";
    return o;
  }
  RationalGF gf = to_rational_gf(fit_terms, *rec);
  o.text = "source: " + source + " (" + std::to_string(fit_terms.size()) + " terms)\n";
  o.text += "recurrence: " + to_string(*rec) + "\n";
  o.text += "generating function: " + to_string(gf) + "\n";
  o.doc["recurrence"] = json::parse(to_json(*rec));
  o.doc["gf"] = json::parse(to_json(gf));
  if (auto period = unit_circle_period(gf)) {
    o.text += "denominator divides (1 - x" + (*period > 1 ? "^" + std::to_string(*period) : std::string()) + ")^2\n";
    o.doc["period"] = *period;
  }
  if (!check_terms.empty()) {
    auto predicted = series(gf, n_check);
    int bad = -1;
    for (int n = n_fit + 1; n <= n_check && bad < 0; ++n)
      if (predicted[static_cast<std::size_t>(n)] != check_terms[static_cast<std::size_t>(n)])
        bad = n;
    json check{{"from", n_fit + 1}, {"to", n_check}, {"pass", bad < 0}};
    if (bad < 0) {
      o.text += "predictions " + std::to_string(n_fit + 1) + ".." + std::to_string(n_check) + ": pass\n";
    } else {
      o.code = 1;
      o.text += "predictions fail at n = " + std::to_string(bad) + ": predicted " +
                std::to_string(predicted[static_cast<std::size_t>(bad)]) + ", BFS " +
                std::to_string(check_terms[static_cast<std::size_t>(bad)]) + "\n";
      check["first_mismatch"] = bad;
    }
    o.doc["check"] = check;
  }
  return o;
}

// ---- cayley

Outcome cmd_cayley(const std::string& key, int n) {
  if (n < 0 || n > kMaxGrowthLength)
    throw InvalidArgument("-n must lie in 0.." + std::to_string(kMaxGrowthLength));
  GroupFile gf = resolve_group(key);
  if (gf.realization.empty())
    throw UnknownKeyError("no realization shipped for group '" + key + "'");
  Outcome o;
  o.doc["group"] = gf.key;
  o.doc["tiling"] = gf.tiling;
  RelationReport rel = check_relations(gf.presentation, gf.realization);
  o.doc["relations"] = json::array();
  for (const auto& c : rel.checks) {
    o.text += "relator " + c.relator + ": " + (c.pass ? "holds" : "FAILS") + "\n";
    o.doc["relations"].push_back(json{{"relator", c.relator}, {"pass", c.pass}});
  }
  if (!rel.all_pass) {
    o.code = 1;
    o.doc["pass"] = false;
    return o;
  }
  auto growth = growth_sequence(gf.presentation, gf.realization, n);
  o.text += "growth: " + join(growth, ", ") + "\n";
  o.doc["growth"] = growth;
  bool match = true;
  if (!gf.tiling.empty()) {
    CatalogEntry e = resolve_tiling(gf.tiling);
    auto cs = cs_terms(e.graph(), e.bases.front().base, n);
    match = cs == growth;
    o.text += "catalog " + e.key + ": " + join(cs, ", ") + (match ? " (equal)\n" : " (DIFFERENT)\n");
    o.doc["catalog"] = cs;
    o.doc["matches_catalog"] = match;
  }
  o.code = match ? 0 : 1;
  o.doc["pass"] = match;
  return o;
}

// ---- check-h

std::string sprout_summary(const std::vector<SproutRow>& rows) {
  // Longest tail of agreeing rows with one constant sprout count.
  if (rows.empty() || !rows.back().agree())
    return "";
  std::size_t k = rows.size() - 1;
  while (k > 0 && rows[k - 1].agree() && rows[k - 1].unmatched == rows.back().unmatched)
    --k;
  return std::to_string(rows.back().unmatched) + " per level for " + std::to_string(rows[k].n) +
         " <= n <= " + std::to_string(rows.back().n);
}

Outcome cmd_check_h(const std::string& arg) {
  HAnnotation ann = resolve_annotation(arg);
  CatalogEntry e = resolve_tiling(ann.tiling);
  HReport r = check_annotation(e.graph(), ann);
  Outcome o;
  o.text = "annotation: " + ann.tiling + " base " + to_string(ann.base) + " radius " + std::to_string(ann.radius) +
           "\n" + report_to_text(r);
  if (!o.text.empty() && o.text.back() != '\n')
    o.text += "\n";
  o.doc = json::parse(report_to_json(r));
  std::string summary = sprout_summary(r.sprouts);
  if (!summary.empty()) {
    o.text += "sprouts: " + summary + "\n";
    o.doc["sprout_summary"] = summary;
  }
  o.code = (r.spanning_ok && r.geodesic_ok && r.twig_ok) ? 0 : 1;
  return o;
}

// ---- svg

Outcome cmd_svg(const std::string& tiling, std::string base, int radius, int modulus, const std::string& overlay,
                const std::string& out_path) {
  RenderConfig cfg;
  cfg.radius = radius;
  cfg.modulus = modulus;
  std::string key = tiling;
  std::optional<VertexId> base_vertex;
  if (!overlay.empty()) {
    cfg.overlay = resolve_annotation(overlay);
    if (key.empty())
      key = cfg.overlay->tiling;
    if (key != cfg.overlay->tiling)
      throw InvalidArgument("overlay belongs to tiling '" + cfg.overlay->tiling + "'");
    if (base.empty())
      base_vertex = cfg.overlay->base;
  }
  if (key.empty())
    throw InvalidArgument("svg needs --tiling or --overlay");
  CatalogEntry e = resolve_tiling(key);
  if (!base_vertex)
    base_vertex = resolve_base(e, base).base;
  std::string svg = render_svg(e.graph(), *base_vertex, cfg);
  Outcome o;
  if (out_path.empty() || out_path == "-") {
    o.text = svg;
    o.doc["svg"] = svg;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!(f << svg))
      throw Error("cannot write " + out_path);
    o.text = "wrote " + out_path + " (" + std::to_string(svg.size()) + " bytes)\n";
    o.doc["path"] = out_path;
  }
  o.doc["bytes"] = svg.size();
  return o;
}

// ---- export

Outcome cmd_export(const std::string& tiling, const std::string& out_path) {
  CatalogEntry e = resolve_tiling(tiling);
  std::string text = spec_to_json(e.spec);
  Outcome o;
  if (out_path.empty() || out_path == "-") {
    o.text = text;
    o.doc = json::parse(text);
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!(f << text))
      throw Error("cannot write " + out_path);
    o.text = "wrote " + out_path + "\n";
    o.doc["path"] = out_path;
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coordination sequences of planar tilings"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "tilecs 1.0.0");

  std::string format = "plain";
  auto add_format = [&](CLI::App* sub, std::vector<std::string> choices) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember(choices))->capture_default_str();
  };

  auto* list = app.add_subcommand("list", "List catalog tilings and their vertex orbits");
  add_format(list, {"plain", "text", "json"});

  std::string tiling, base;
  int n = 50;
  auto* cs = app.add_subcommand("cs", "Print a coordination sequence");
  cs->add_option("--tiling", tiling, "Catalog key")->required();
  cs->add_option("--base", base, "Vertex orbit label (default: first orbit)");
  cs->add_option("-n", n, "Largest distance")->capture_default_str();
  add_format(cs, {"plain", "text", "csv", "json"});

  bool all = false;
  auto* verify = app.add_subcommand("verify", "Check closed forms against BFS terms 0..120");
  verify->add_option("--tiling", tiling, "Catalog key");
  verify->add_flag("--all", all, "Every tiling");
  add_format(verify, {"plain", "text", "json"});

  int n_fit = 60, n_check = 120;
  std::string terms, input;
  auto* fit = app.add_subcommand("fit", "Fit a linear recurrence and rational generating function");
  fit->add_option("--tiling", tiling, "Catalog key");
  fit->add_option("--base", base, "Vertex orbit label (default: first orbit)");
  fit->add_option("--n-fit", n_fit, "Fit on a(0..n-fit)")->capture_default_str();
  fit->add_option("--n-check", n_check, "Check predictions up to this n")->capture_default_str();
  fit->add_option("--terms", terms, "Comma-separated terms to fit instead of a tiling");
  fit->add_option("--input", input, "CSV or JSON sequence file to fit instead of a tiling");
  add_format(fit, {"plain", "text", "json"});

  std::string group;
  int n_group = 12;
  auto* cayley = app.add_subcommand("cayley", "Check a group realization and compute its growth");
  cayley->add_option("--group", group, "Group key")->required();
  cayley->add_option("-n", n_group, "Largest word length")->capture_default_str();
  add_format(cayley, {"plain", "text", "json"});

  std::string annotation;
  auto* check_h = app.add_subcommand("check-h", "Check a trunks-and-branches annotation");
  check_h->add_option("annotation", annotation, "Annotation file or shipped annotation name")->required();
  add_format(check_h, {"plain", "text", "json"});

  int radius = 6, modulus = 3;
  std::string overlay, out_path;
  auto* svg = app.add_subcommand("svg", "Render distance shells as SVG");
  svg->add_option("--tiling", tiling, "Catalog key (default: the overlay's tiling)");
  svg->add_option("--base", base, "Vertex orbit label (default: first orbit, or the overlay base)");
  svg->add_option("--radius", radius, "Largest distance drawn")->capture_default_str();
  svg->add_option("--modulus", modulus, "Color vertices by distance modulo this")->capture_default_str();
  svg->add_option("--overlay", overlay, "Annotation drawn on top");
  svg->add_option("-o,--output", out_path, "Output file (default: stdout)");
  add_format(svg, {"plain", "text", "json"});

  auto* exp = app.add_subcommand("export", "Print the canonical spec of a tiling");
  exp->add_option("--tiling", tiling, "Catalog key")->required();
  exp->add_option("-o,--output", out_path, "Output file (default: stdout)");
  add_format(exp, {"plain", "text", "json"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  bool as_json = format == "json";
  Outcome o;
  try {
    if (*list)
      o = cmd_list();
    else if (*cs) {
      o = cmd_cs(tiling, base, n, format);
      as_json = false;
    } else if (*verify)
      o = cmd_verify(tiling, all);
    else if (*fit)
      o = cmd_fit(tiling, base, n_fit, n_check, terms, input);
    else if (*cayley)
      o = cmd_cayley(group, n_group);
    else if (*check_h)
      o = cmd_check_h(annotation);
    else if (*svg)
      o = cmd_svg(tiling, base, radius, modulus, overlay, out_path);
    else if (*exp)
      o = cmd_export(tiling, out_path);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }

  if (as_json) {
    json out = o.doc;
    if (out.is_object())
      out["exit_code"] = o.code;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << o.text;
  }
  return o.code;
}
