#include "affhecke/serialize.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "affhecke/error.hpp"

namespace affhecke {

namespace {

Json int_list(std::span<const Int> v) {
  Json a = Json::array();
  for (Int c : v) a.push_back(c);
  return a;
}

template <class F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    fail(ErrorCode::ParseError, e.what());
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Json to_json(const AffineWeylGroup& g, const AffineElement& x) {
  Json word = Json::array();
  for (int i : g.finite().word(x.w)) word.push_back(i + 1);
  return Json{{"finite_word", word}, {"translation", int_list(x.t.coords())}};
}

AffineElement element_from_json(const AffineWeylGroup& g, const Json& j) {
  return guarded([&] {
    if (!j.is_object() || !j.contains("finite_word") || !j.contains("translation"))
      fail(ErrorCode::ParseError, "element needs finite_word and translation");
    std::vector<int> word;
    for (const auto& v : j.at("finite_word")) {
      int i = v.get<int>();
      if (i < 1 || i > g.rank()) fail(ErrorCode::ParseError, "finite_word index out of range: " + std::to_string(i));
      word.push_back(i - 1);
    }
    const auto t = j.at("translation").get<std::vector<Int>>();
    if (static_cast<int>(t.size()) != g.rank())
      fail(ErrorCode::DimensionMismatch, "translation has " + std::to_string(t.size()) + " coordinates, rank is " +
                                             std::to_string(g.rank()));
    return AffineElement{g.finite().from_word(word), Weight::from_span(t)};
  });
}

Json to_json(const HyperplaneForm& f) { return Json{{"coroot", int_list(f.coroot().coords())}, {"k", f.k()}}; }

HyperplaneForm hyperplane_from_json(const Json& j) {
  return guarded([&] {
    const auto c = j.at("coroot").get<std::vector<Int>>();
    return HyperplaneForm::make(Weight::from_span(c), j.at("k").get<Int>());
  });
}

Json to_json(const ExtDatum& e) {
  switch (e.kind) {
    case ExtKind::Zero: return Json{{"kind", "zero"}};
    case ExtKind::SelfExt: return Json{{"kind", "self"}, {"rank", e.rank}};
    case ExtKind::Wall: return Json{{"kind", "wall"}, {"form", to_json(*e.form)}};
    case ExtKind::HigherCodim: return Json{{"kind", "higher"}, {"codim", e.codim}};
  }
  return Json();
}

Json to_json(const LaurentPoly& p) {
  Json a = Json::array();
  for (auto [e, c] : p.terms()) a.push_back(Json::array({e, c}));
  return a;
}

LaurentPoly laurent_from_json(const Json& j) {
  return guarded([&] {
    std::vector<std::pair<Int, Int>> t;
    for (const auto& ec : j) t.emplace_back(ec.at(0).get<Int>(), ec.at(1).get<Int>());
    return LaurentPoly::from_terms(t);
  });
}

Json to_json(const HeckeElement& h) {
  Json a = Json::array();
  for (const auto& [x, c] : h.terms()) a.push_back(Json{{"element", to_json(h.group(), x)}, {"coeffs", to_json(c)}});
  return a;
}

HeckeElement hecke_from_json(AffineWeylGroupPtr g, const Json& j) {
  HeckeElement h(g);
  guarded([&] {
    for (const auto& t : j) h.add_term(element_from_json(*g, t.at("element")), laurent_from_json(t.at("coeffs")));
    return 0;
  });
  return h;
}

Json to_json(const RootSystem& rs) {
  Json cartan = Json::array();
  for (int i = 0; i < rs.rank(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < rs.rank(); ++j) row.push_back(rs.cartan(i, j));
    cartan.push_back(row);
  }
  Json roots = Json::array();
  for (const auto& r : rs.positive_roots()) roots.push_back(int_list(r.coords()));
  return Json{{"type", rs.type_label()}, {"cartan", cartan}, {"positive_roots", roots}, {"d", rs.form_norms()}};
}

Json to_json(const Weight& w) { return int_list(w.coords()); }

Json to_json(GeneratorSet J) { return J.list(); }

namespace {

Json edges_json(const std::vector<QuiverEdge>& edges) {
  Json a = Json::array();
  for (const auto& e : edges) {
    Json walls = Json::array();
    for (const auto& f : e.walls) walls.push_back(to_json(f));
    a.push_back(Json{{"src", e.src}, {"dst", e.dst}, {"walls", walls}});
  }
  return a;
}

std::string walls_cell(const std::set<HyperplaneForm>& walls) {
  std::string s;
  for (const auto& f : walls) s += (s.empty() ? "" : ";") + f.str();
  return s;
}

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

}  // namespace

Json to_json(const AffineWeylGroup& g, const HeckeQuiver& q) {
  Json v = Json::array();
  for (const auto& x : q.vertices) v.push_back(to_json(g, x));
  return Json{{"side", "hecke"},
              {"J", to_json(q.J)},
              {"vertices", v},
              {"edges", edges_json(q.edges)},
              {"window", {{"band", q.window.band}, {"box", q.window.box}}}};
}

Json to_json(const QuantumQuiver& q) {
  Json v = Json::array();
  for (const auto& w : q.vertices) v.push_back(to_json(w));
  return Json{{"side", "quantum"},
              {"d", q.d},
              {"lambda0", to_json(q.lambda0)},
              {"vertices", v},
              {"edges", edges_json(q.edges)},
              {"window", {{"box", q.window.box}}}};
}

Json to_json(const CompareReport& r) {
  return Json{{"verdict", std::string(to_string(r.verdict))},
              {"vertices", {{"hecke", r.hecke_vertices}, {"quantum", r.quantum_vertices}, {"common", r.common_vertices}}},
              {"edges", {{"hecke", r.hecke_edges}, {"quantum", r.quantum_edges}, {"matched", r.matched_edges}}},
              {"witnesses", r.witnesses},
              {"warnings", r.warnings}};
}

std::string to_csv(const AffineWeylGroup& g, const HeckeQuiver& q) {
  std::ostringstream os;
  os << "src,dst,walls\n";
  for (const auto& e : q.edges)
    os << csv_quote(g.format(q.vertices[e.src])) << ',' << csv_quote(g.format(q.vertices[e.dst])) << ','
       << csv_quote(walls_cell(e.walls)) << '\n';
  return os.str();
}

std::string to_csv(const QuantumQuiver& q) {
  std::ostringstream os;
  os << "src,dst,walls\n";
  for (const auto& e : q.edges)
    os << csv_quote(q.vertices[e.src].str()) << ',' << csv_quote(q.vertices[e.dst].str()) << ','
       << csv_quote(walls_cell(e.walls)) << '\n';
  return os.str();
}

std::vector<Int> parse_int_list(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  std::vector<Int> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      ++i;
      continue;
    }
    Int v = 0;
    const char* begin = s.data() + i;
    auto [ptr, ec] = std::from_chars(begin, s.data() + s.size(), v);
    if (ec != std::errc() || ptr == begin) fail(ErrorCode::ParseError, "expected an integer in '" + std::string(s) + "'");
    i = static_cast<std::size_t>(ptr - s.data());
    if (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i])) && s[i] != ',')
      fail(ErrorCode::ParseError, "unexpected character in '" + std::string(s) + "'");
    out.push_back(v);
  }
  return out;
}

Weight parse_weight(const RootSystem& rs, std::string_view s) {
  const auto v = parse_int_list(s);
  if (static_cast<int>(v.size()) != rs.rank())
    fail(ErrorCode::DimensionMismatch, "weight '" + std::string(s) + "' needs " + std::to_string(rs.rank()) +
                                           " coordinates");
  return Weight::from_span(v);
}

std::vector<int> parse_word(const AffineWeylGroup& g, std::string_view s) {
  std::vector<int> word;
  for (Int v : parse_int_list(s)) {
    if (v < 0 || v > g.rank()) fail(ErrorCode::ParseError, "generator index out of range: " + std::to_string(v));
    word.push_back(static_cast<int>(v));
  }
  return word;
}

AffineElement parse_element(const AffineWeylGroup& g, std::string_view s) {
  AffineElement x = g.identity();
  const std::string text(s);
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  skip_space();
  while (i < s.size()) {
    const char c = s[i];
    if (c == 'e') {
      ++i;
    } else if (c == 's') {
      std::size_t j = ++i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j == i) fail(ErrorCode::ParseError, "expected a generator index after 's' in '" + text + "'");
      const int idx = std::stoi(std::string(s.substr(i, j - i)));
      if (idx > g.rank()) fail(ErrorCode::ParseError, "generator index out of range: " + std::to_string(idx));
      x = g.right_multiply(x, idx);
      i = j;
    } else if (c == 't') {
      const std::size_t open = s.find('(', i), close = s.find(')', i);
      if (open != i + 1 || close == std::string_view::npos)
        fail(ErrorCode::ParseError, "expected t(...) in '" + text + "'");
      x = g.multiply(x, g.translation(parse_weight(g.roots(), s.substr(open + 1, close - open - 1))));
      i = close + 1;
    } else {
      fail(ErrorCode::ParseError, "unexpected '" + std::string(1, c) + "' in element '" + text + "'");
    }
    const std::size_t after = i;
    skip_space();
    if (i < s.size() && s[i] == '*') {
      ++i;
      skip_space();
      if (i == s.size()) fail(ErrorCode::ParseError, "dangling '*' in '" + text + "'");
    } else if (i < s.size() && i == after) {
      fail(ErrorCode::ParseError, "factors must be separated by '*' or spaces in '" + text + "'");
    }
  }
  return x;
}

AffineElement parse_element_any(const AffineWeylGroup& g, std::string_view s) {
  const std::string_view t = trim(s);
  if (!t.empty() && t.front() == '{') {
    Json j = Json::parse(t, nullptr, false);
    if (j.is_discarded()) fail(ErrorCode::ParseError, "malformed JSON element");
    return element_from_json(g, j);
  }
  return parse_element(g, t);
}

GeneratorSet parse_generator_set(const AffineWeylGroup& g, std::string_view s) {
  GeneratorSet J;
  std::string cleaned;
  for (char c : s) cleaned += (c == 's' || c == '[' || c == ']' || c == '{' || c == '}') ? ' ' : c;
  for (Int v : parse_int_list(cleaned)) {
    if (v < 0 || v > g.rank()) fail(ErrorCode::ParseError, "generator index out of range: " + std::to_string(v));
    J.insert(static_cast<int>(v));
  }
  return J;
}

}  // namespace affhecke
