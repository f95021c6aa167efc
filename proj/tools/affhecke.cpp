// Command-line front-end: element arithmetic, orders, blocks, quivers, verification.
#include <cstdio>
#include <cstring>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "affhecke/error.hpp"
#include "affhecke/extquiver.hpp"
#include "affhecke/serialize.hpp"
#include "affhecke/suite.hpp"

using namespace affhecke;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconclusive = 3;

struct RunConfig {
  std::string type = "A1";
  Int d = 3;
  Int band = 4;
  Int box = 0;  // 0: same as band
  Int n_cap = 256;
  std::string J = "auto";
  std::string weight;
  std::string format = "json";
  std::string fault = "none";
  bool strict = false;
  std::string suite = "all";
  std::string side = "hecke";
  std::string word;
  std::string elt;
  std::string x = "e";
  std::string y = "e";
};

// Values from --config become defaults; explicit flags still win because CLI11 only
// writes options that appear on the command line.
void load_config(const std::string& path, RunConfig& c) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ParseError, "cannot read config " + path);
  Json j = Json::parse(in, nullptr, false);
  if (j.is_discarded() || !j.is_object()) fail(ErrorCode::ParseError, "config must be a JSON object");
  try {
    auto get = [&](const char* key, auto& field) {
      if (j.contains(key)) field = j.at(key).get<std::decay_t<decltype(field)>>();
    };
    get("type", c.type);
    get("d", c.d);
    get("band", c.band);
    get("box", c.box);
    get("n_cap", c.n_cap);
    get("format", c.format);
    get("fault", c.fault);
    get("strict", c.strict);
    get("suite", c.suite);
    get("side", c.side);
    get("x", c.x);
    get("y", c.y);
    get("word", c.word);
    if (j.contains("J")) c.J = j.at("J").is_string() ? j.at("J").get<std::string>() : j.at("J").dump();
    if (j.contains("weight"))
      c.weight = j.at("weight").is_string() ? j.at("weight").get<std::string>() : j.at("weight").dump();
    if (j.contains("elt")) c.elt = j.at("elt").is_string() ? j.at("elt").get<std::string>() : j.at("elt").dump();
  } catch (const Json::exception& e) {
    fail(ErrorCode::ParseError, std::string("config: ") + e.what());
  }
}

void validate(const RunConfig& c) {
  if (c.d < 1) fail(ErrorCode::InvalidArgument, "-d must be positive");
  if (c.band < 0 || c.box < 0) fail(ErrorCode::InvalidArgument, "window bounds must be non-negative");
  if (c.n_cap < 1) fail(ErrorCode::InvalidArgument, "--n-cap must be positive");
  if (c.format != "json" && c.format != "pretty" && c.format != "csv")
    fail(ErrorCode::InvalidArgument, "--format must be json, pretty or csv");
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::StabilizationInconclusive:
    case ErrorCode::NonTermination: return kExitInconclusive;
    case ErrorCode::InternalInconsistency:
    case ErrorCode::RootSystemMismatch: return kExitFail;
    default: return kExitUsage;
  }
}

Weight weight_or_zero(const AffineWeylGroup& g, const std::string& s) {
  return s.empty() ? g.roots().zero() : parse_weight(g.roots(), s);
}

std::string join_generators(GeneratorSet J) {
  std::string s = "[";
  for (int i : J.list()) s += (s.size() > 1 ? ", s" : "s") + std::to_string(i);
  return s + "]";
}

std::string cmd_reduce(const RunConfig& c) {
  auto g = AffineWeylGroup::create(c.type);
  AffineElement x = !c.elt.empty() ? parse_element_any(*g, c.elt) : g->from_word(parse_word(*g, c.word));
  Json out{{"type", g->roots().type_label()},
           {"element", to_json(*g, x)},
           {"normal_form", g->format(x)},
           {"length", g->length(x)},
           {"stab_length", g->stab_length(x)},
           {"left_descents", to_json(g->left_descents(x))},
           {"right_descents", to_json(g->right_descents(x))},
           {"reduced_word", g->reduced_word(x)}};
  if (c.format != "pretty") return out.dump(2) + "\n";
  std::ostringstream os;
  os << "element      " << g->format(x) << "\nlength       " << g->length(x) << "\nstab_length  " << g->stab_length(x)
     << "\nleft desc.   " << join_generators(g->left_descents(x)) << "\nright desc.  "
     << join_generators(g->right_descents(x)) << "\nreduced word " << out["reduced_word"].dump() << "\n";
  return os.str();
}

std::string cmd_block(const RunConfig& c) {
  auto g = AffineWeylGroup::create(c.type);
  const Weight lambda = weight_or_zero(*g, c.weight);
  BlockLocation b = locate_block(*g, c.d, lambda);
  Json out{{"type", g->roots().type_label()}, {"d", c.d},          {"weight", to_json(lambda)},
           {"lambda0", to_json(b.fundamental)}, {"x", to_json(*g, b.x)}, {"x_str", g->format(b.x)},
           {"J", to_json(b.J)}};
  if (c.format != "pretty") return out.dump(2) + "\n";
  return "lambda0 " + b.fundamental.str() + "\nx       " + g->format(b.x) + "\nJ       " + join_generators(b.J) + "\n";
}

std::string cmd_orders(const RunConfig& c) {
  auto g = AffineWeylGroup::create(c.type);
  const AffineElement x = parse_element_any(*g, c.x), y = parse_element_any(*g, c.y);
  StabOrderOptions opts;
  opts.max_n = c.n_cap;
  const bool bruhat = g->bruhat_leq(x, y);
  const StabVerdict st = stab_compare(*g, x, y, opts);
  Json out{{"type", g->roots().type_label()}, {"x", to_json(*g, x)}, {"y", to_json(*g, y)},
           {"bruhat", bruhat},                  {"stab", st.leq},       {"stab_n", st.n}};
  if (c.format != "pretty") return out.dump(2) + "\n";
  return g->format(x) + " <= " + g->format(y) + "\n  bruhat: " + (bruhat ? "true" : "false") +
         "\n  stab:   " + (st.leq ? "true" : "false") + "\n";
}

QuiverWindow window_of(const RunConfig& c) { return {c.band, c.box == 0 ? c.band : c.box}; }

BlockLocation block_with_J(const AffineWeylGroup& g, const RunConfig& c) {
  BlockLocation b = locate_block(g, c.d, weight_or_zero(g, c.weight));
  if (c.J != "auto") {
    GeneratorSet J = parse_generator_set(g, c.J);
    if (J != b.J)
      fail(ErrorCode::StabilizerMismatch, "requested J " + join_generators(J) + " but the stabilizer of " +
                                              b.fundamental.str() + " is " + join_generators(b.J));
  }
  return b;
}

std::string cmd_quiver(const RunConfig& c) {
  auto g = AffineWeylGroup::create(c.type);
  BlockLocation b = block_with_J(*g, c);
  const QuiverWindow w = window_of(c);
  if (c.side == "hecke") {
    HeckeQuiver q = hecke_quiver(*g, b.J, w);
    if (c.format == "csv") return to_csv(*g, q);
    if (c.format == "json") return to_json(*g, q).dump(2) + "\n";
    std::ostringstream os;
    os << "hecke quiver " << g->roots().type_label() << " J = " << join_generators(b.J) << ": " << q.vertices.size()
       << " vertices, " << q.edges.size() << " edges\n";
    for (const auto& e : q.edges) {
      os << "  " << g->format(q.vertices[e.src]) << " -> " << g->format(q.vertices[e.dst]) << " :";
      for (const auto& f : e.walls) os << ' ' << f.str();
      os << '\n';
    }
    return os.str();
  }
  if (c.side != "quantum") fail(ErrorCode::InvalidArgument, "--side must be hecke or quantum");
  QuantumQuiver q = quantum_quiver(*g, c.d, b.fundamental, w);
  if (c.format == "csv") return to_csv(q);
  if (c.format == "json") return to_json(q).dump(2) + "\n";
  std::ostringstream os;
  os << "quantum quiver " << g->roots().type_label() << " d = " << c.d << " lambda0 = " << b.fundamental.str() << ": "
     << q.vertices.size() << " vertices, " << q.edges.size() << " edges\n";
  for (const auto& e : q.edges)
    os << "  " << q.vertices[e.src].str() << " -> " << q.vertices[e.dst].str() << " : " << e.walls.begin()->str()
       << '\n';
  return os.str();
}

std::string summary(const AffineWeylGroup& g, const RunConfig& c, const EquivalenceResult& r) {
  std::ostringstream os;
  const CompareReport& rep = r.report;
  os << "equivalence check " << g.roots().type_label() << ", d = " << c.d << "\n"
     << "  block     lambda0 = " << r.block.fundamental.str() << ", J = " << join_generators(r.block.J) << "\n"
     << "  window    band " << r.hecke.window.band << ", box " << r.hecke.window.box << "; quantum box "
     << r.quantum.window.box << "\n"
     << "  vertices  hecke " << rep.hecke_vertices << ", quantum " << rep.quantum_vertices << ", common "
     << rep.common_vertices << "\n"
     << "  edges     hecke " << rep.hecke_edges << ", quantum " << rep.quantum_edges << ", matched " << rep.matched_edges
     << "\n";
  if (!r.fault_note.empty()) os << "  fault     " << r.fault_note << "\n";
  os << "  verdict   " << to_string(rep.verdict) << "\n";
  const std::size_t shown = 10;
  for (std::size_t i = 0; i < rep.witnesses.size() && i < shown; ++i) os << "  witness   " << rep.witnesses[i] << "\n";
  if (rep.witnesses.size() > shown) os << "  ... " << rep.witnesses.size() - shown << " more witnesses\n";
  for (std::size_t i = 0; i < rep.warnings.size() && i < shown; ++i) os << "  warning   " << rep.warnings[i] << "\n";
  return os.str();
}

Json suites_json(const std::vector<SuiteResult>& rs) {
  Json a = Json::array();
  for (const auto& r : rs)
    a.push_back(Json{{"name", r.name}, {"passed", r.passed}, {"checks", r.checks}, {"detail", r.detail}});
  return a;
}

std::string suites_pretty(const std::vector<SuiteResult>& rs) {
  std::ostringstream os;
  for (const auto& r : rs) {
    os << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.checks << " checks)";
    if (!r.passed) os << ": " << r.detail;
    os << "\n";
  }
  return os.str();
}

bool all_passed(const std::vector<SuiteResult>& rs) {
  for (const auto& r : rs)
    if (!r.passed) return false;
  return true;
}

int cmd_verify_equivalence(const RunConfig& c, std::string& report, bool with_suites) {
  auto g = AffineWeylGroup::create(c.type);
  block_with_J(*g, c);  // rejects an explicit --J that is not the stabilizer
  EquivalenceRun run;
  run.d = c.d;
  run.weight = weight_or_zero(*g, c.weight);
  run.window = window_of(c);
  run.fault = parse_fault(c.fault);
  EquivalenceResult r = verify_equivalence(*g, run);
  Json out = to_json(r.report);
  out["type"] = g->roots().type_label();
  out["d"] = c.d;
  out["block"] = Json{{"lambda0", to_json(r.block.fundamental)}, {"J", to_json(r.block.J)}};
  out["window"] = Json{{"band", r.hecke.window.band}, {"box", r.hecke.window.box}, {"quantum_box", r.quantum.window.box}};
  out["fault"] = std::string(to_string(run.fault));
  if (!r.fault_note.empty()) out["fault_note"] = r.fault_note;
  int code = r.report.verdict == Verdict::Fail ? kExitFail : kExitOk;
  if (c.strict && r.report.verdict == Verdict::PassWithWarnings) code = kExitFail;
  std::string text = summary(*g, c, r);
  if (with_suites) {
    auto rs = run_suites(c.suite);
    out["suites"] = suites_json(rs);
    text += suites_pretty(rs);
    if (!all_passed(rs)) code = kExitFail;
  }
  if (c.format == "pretty") {
    report = text;
  } else {
    report = out.dump(2) + "\n";
    std::cerr << text;
  }
  return code;
}

int cmd_verify_suite(const RunConfig& c, std::string& report) {
  auto rs = run_suites(c.suite);
  report = c.format == "pretty" ? suites_pretty(rs) : Json{{"suites", suites_json(rs)}}.dump(2) + "\n";
  return all_passed(rs) ? kExitOk : kExitFail;
}

std::string find_config_path(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--config") == 0 && i + 1 < argc) return argv[i + 1];
    if (std::strncmp(argv[i], "--config=", 9) == 0) return argv[i] + 9;
  }
  return "";
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  std::string config_path, out_path;
  try {
    config_path = find_config_path(argc, argv);
    if (!config_path.empty()) load_config(config_path, cfg);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  CLI::App app{"Affine Weyl group, affine Hecke algebra and Ext-quiver toolkit"};
  app.require_subcommand(1);
  app.add_option("--config", config_path, "JSON file with default option values");
  app.add_option("--out", out_path, "write the report to this file instead of standard output");

  auto add_type = [&](CLI::App* sub) {
    sub->add_option("--type", cfg.type, "root system, e.g. A1, A2, B2, G2");
    sub->add_option("--format", cfg.format, "json, pretty or csv");
  };
  auto add_block = [&](CLI::App* sub) {
    sub->add_option("-d", cfg.d, "dilation of the dot action");
    sub->add_option("--weight", cfg.weight, "weight in root coordinates, e.g. \"0,0\"");
  };
  auto add_window = [&](CLI::App* sub) {
    sub->add_option("--band", cfg.band, "bound on |stabilized length| of coset representatives");
    sub->add_option("--box", cfg.box, "bound on translation coordinates (default: band)");
    sub->add_option("--J", cfg.J, "auto, or generator indices that must equal the stabilizer");
  };

  auto* reduce = app.add_subcommand("reduce", "normal form, lengths, descents and a reduced word");
  add_type(reduce);
  auto* word_opt = reduce->add_option("--word", cfg.word, "word over I^a, s0 = 0, e.g. \"0 1 0\"");
  reduce->add_option("--elt", cfg.elt, "element as JSON or factors like s1*t(1,0)")->excludes(word_opt);

  auto* block = app.add_subcommand("block", "fundamental-domain representative and stabilizer");
  add_type(block);
  add_block(block);

  auto* orders = app.add_subcommand("orders", "Bruhat and stabilized comparison of two elements");
  add_type(orders);
  orders->add_option("--x", cfg.x, "element, e.g. t(1) or s0*s1");
  orders->add_option("--y", cfg.y, "element");
  orders->add_option("--n-cap", cfg.n_cap, "largest translation depth tried by the stabilized test");

  auto* quiver = app.add_subcommand("quiver", "Ext quiver of one side");
  add_type(quiver);
  add_block(quiver);
  add_window(quiver);
  quiver->add_option("--side", cfg.side, "hecke or quantum");

  auto* verify = app.add_subcommand("verify", "verification runs");
  verify->require_subcommand(1);
  auto* equiv = verify->add_subcommand("equivalence", "compare the Hecke and quantum Ext quivers of a block");
  add_type(equiv);
  add_block(equiv);
  add_window(equiv);
  equiv->add_option("--fault-inject", cfg.fault, "none, wall-shift, drop-edge or dict-twist");
  equiv->add_flag("--strict", cfg.strict, "treat warnings as failure");
  auto* equiv_suite = equiv->add_option("--suite", cfg.suite, "also run invariant suites (all or a module name)");
  auto* suite = verify->add_subcommand("suite", "run the invariant suites");
  suite->add_option("--suite", cfg.suite, "all or a module name");
  suite->add_option("--format", cfg.format, "json or pretty");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  std::string report;
  int code = kExitOk;
  try {
    validate(cfg);
    if (*reduce) {
      report = cmd_reduce(cfg);
    } else if (*block) {
      report = cmd_block(cfg);
    } else if (*orders) {
      report = cmd_orders(cfg);
    } else if (*quiver) {
      report = cmd_quiver(cfg);
    } else if (*equiv) {
      code = cmd_verify_equivalence(cfg, report, equiv_suite->count() > 0);
    } else if (*suite) {
      code = cmd_verify_suite(cfg, report);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (out_path.empty()) {
    std::cout << report;
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return kExitUsage;
    }
    out << report;
  }
  return code;
}
