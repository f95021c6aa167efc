#include "affhecke/suite.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <set>

#include "affhecke/error.hpp"
#include "affhecke/extquiver.hpp"
#include "affhecke/graphbimod.hpp"
#include "affhecke/hecke.hpp"

namespace affhecke {

namespace {

struct Checker {
  SuiteResult& r;
  void operator()(bool ok, const std::string& what) {
    ++r.checks;
    if (!ok && r.passed) {
      r.passed = false;
      r.detail = what;
    }
  }
};

std::vector<AffineElement> ball(const AffineWeylGroup& g, int radius) {
  std::vector<AffineElement> out{g.identity()};
  std::set<AffineElement> seen{g.identity()};
  std::size_t begin = 0;
  for (int r = 0; r < radius; ++r) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i)
      for (int s = 0; s < g.num_generators(); ++s) {
        AffineElement y = g.right_multiply(out[i], s);
        if (seen.insert(y).second) out.push_back(y);
      }
    begin = end;
  }
  return out;
}

void rootdata_suite(Checker& check) {
  const std::map<std::string, std::pair<int, std::size_t>> known = {
      {"A1", {1, 2}}, {"A2", {3, 6}}, {"A3", {6, 24}}, {"B2", {4, 8}}, {"B3", {9, 48}},
      {"C3", {9, 48}}, {"D4", {12, 192}}, {"G2", {6, 12}}, {"F4", {24, 1152}}};
  for (const auto& [label, counts] : known) {
    RootSystem rs = build_root_system(label);
    check(rs.num_positive_roots() == counts.first, label + ": positive root count");
    FiniteWeylGroup w(rs);
    check(w.order() == counts.second, label + ": Weyl group order");
    check(w.length(w.longest()) == rs.num_positive_roots(), label + ": longest element length");
    RationalWeight rho = rs.rho(WeightBasis::Fundamental);
    for (const auto& c : rho.coords) check(c == Rational(1), label + ": rho has fundamental coordinates 1");
    for (int i = 0; i < rs.rank(); ++i) check(rs.simple_root(i).height() == 1, label + ": <rho^vee, alpha_i> = 1");
  }
}

void affweyl_suite(Checker& check) {
  for (const char* label : {"A1", "A2", "B2", "G2"}) {
    auto g = AffineWeylGroup::create(label);
    const std::string l = label;
    auto elems = ball(*g, 4);
    std::map<AffineElement, int> dist;
    {
      dist[g->identity()] = 0;
      std::vector<AffineElement> frontier{g->identity()};
      for (int r = 1; r <= 4; ++r) {
        std::vector<AffineElement> next;
        for (const auto& x : frontier)
          for (int s = 0; s < g->num_generators(); ++s) {
            AffineElement y = g->right_multiply(x, s);
            if (dist.emplace(y, r).second) next.push_back(y);
          }
        frontier = std::move(next);
      }
    }
    for (const auto& x : elems) {
      check(g->length(x) == dist.at(x), l + ": length formula vs breadth-first distance at " + g->format(x));
      for (int s = 0; s < g->num_generators(); ++s) {
        check(std::abs(g->length(g->left_multiply(s, x)) - g->length(x)) == 1, l + ": left length step");
        check(std::abs(g->length(g->right_multiply(x, s)) - g->length(x)) == 1, l + ": right length step");
      }
      check(g->from_word(g->reduced_word(x)) == x, l + ": reduced word round trip at " + g->format(x));
      const Weight mu = g->roots().simple_root(0);
      check(g->stab_length(g->multiply(x, g->translation(mu))) == g->stab_length(x) - 2,
            l + ": l^st(x t_mu) = l^st(x) - 2 ht(mu)");
    }
    auto small = ball(*g, 2);
    for (const auto& x : small)
      for (const auto& y : small) {
        if (x == y) continue;
        const bool xy = stab_leq(*g, x, y), yx = stab_leq(*g, y, x);
        check(!(xy && yx), l + ": stabilized order antisymmetry");
      }
  }
}

void blocks_suite(Checker& check) {
  for (auto [label, d] : {std::pair{"A1", Int{3}}, std::pair{"A2", Int{5}}}) {
    auto g = AffineWeylGroup::create(label);
    const std::string l = label;
    const int r = g->rank();
    std::vector<Int> c(static_cast<std::size_t>(r), -4);
    for (;;) {
      Weight lambda(r);
      for (int i = 0; i < r; ++i) lambda[i] = c[static_cast<std::size_t>(i)];
      BlockLocation b = locate_block(*g, d, lambda);
      check(in_fundamental_domain(*g, d, b.fundamental), l + ": located weight is fundamental");
      check(dot_act(*g, d, g->inverse(b.x), b.fundamental) == lambda, l + ": x^{-1} . lambda0 = lambda");
      for (int s : b.J.list())
        check(dot_act(*g, d, g->generator(s), b.fundamental) == b.fundamental, l + ": J fixes lambda0");
      int i = 0;
      while (i < r && c[static_cast<std::size_t>(i)] == 4) c[static_cast<std::size_t>(i++)] = -4;
      if (i == r) break;
      ++c[static_cast<std::size_t>(i)];
    }
  }
}

void hecke_suite(Checker& check) {
  for (const char* label : {"A1", "A2", "B2", "G2"}) {
    auto g = AffineWeylGroup::create(label);
    const std::string l = label;
    HeckeElement one = h_std(g, g->identity());
    for (int s = 0; s < g->num_generators(); ++s) {
      HeckeElement hs = h_std(g, g->generator(s));
      HeckeElement quad = hecke_mul(hs, hs) - one - HeckeElement(hs).scale(LaurentPoly::v_minus_vinv());
      check(quad.is_zero(), l + ": quadratic relation");
      check(hecke_mul(braid_neg(g, g->generator(s)), hs) == one, l + ": D_s H_s = 1");
      for (int t = s + 1; t < g->num_generators(); ++t) {
        // Order of s t from the length of alternating words.
        AffineElement st = g->multiply(g->generator(s), g->generator(t));
        AffineElement p = g->identity();
        int m = 0;
        do {
          p = g->multiply(p, st);
          ++m;
        } while (p != g->identity() && m < 7);
        if (p != g->identity()) continue;
        HeckeElement a = one, b = one;
        for (int i = 0; i < m; ++i) {
          a = right_mul_gen(a, i % 2 ? t : s);
          b = right_mul_gen(b, i % 2 ? s : t);
        }
        check(a == b, l + ": braid relation");
      }
    }
    const RootSystem& rs = g->roots();
    for (int i = 0; i < rs.rank(); ++i)
      for (int j = 0; j < rs.rank(); ++j) {
        Weight a = rs.simple_root(i), b = -rs.simple_root(j);
        check(hecke_mul(bernstein(g, a), bernstein(g, b)) == bernstein(g, a + b), l + ": C_a C_b = C_{a+b}");
      }
  }
}

void graphbimod_suite(Checker& check) {
  auto g = AffineWeylGroup::create("A1");
  auto elems = ball(*g, 2);
  for (const auto& x : elems)
    for (const auto& y : elems) {
      ExtDatum e = graph_ext(*g, x, y);
      auto h1 = koszul_ext_dims(*g, x, y, 2, 1);
      if (e.kind == ExtKind::SelfExt) check(h1[0] == 2, "A1: self-Ext rank");
      if (e.kind == ExtKind::Wall) check(h1 == std::vector<long long>{1, 1, 1}, "A1: wall Ext = R/(f)");
      if (e.kind == ExtKind::HigherCodim) check(h1 == std::vector<long long>{0, 0, 0}, "A1: higher codim Ext vanishes");
      check(e.kind != ExtKind::Wall || graph_ext(*g, y, x).form == e.form, "A1: wall form symmetric");
    }
}

void extquiver_suite(Checker& check) {
  auto g = AffineWeylGroup::create("A1");
  EquivalenceRun run;
  run.d = 3;
  run.weight = Weight{0};
  run.window = {6, 6};
  check(verify_equivalence(*g, run).report.verdict == Verdict::Pass, "A1 d=3: compare passes");
  for (Fault f : {Fault::WallShift, Fault::DropEdge, Fault::DictTwist}) {
    run.fault = f;
    check(verify_equivalence(*g, run).report.verdict == Verdict::Fail,
          "A1 d=3: fault " + std::string(to_string(f)) + " detected");
  }
}

const std::vector<std::pair<std::string, std::function<void(Checker&)>>>& registry() {
  static const std::vector<std::pair<std::string, std::function<void(Checker&)>>> r = {
      {"rootdata", rootdata_suite}, {"affweyl", affweyl_suite},       {"blocks", blocks_suite},
      {"heckealg", hecke_suite},    {"graphbimod", graphbimod_suite}, {"extquiver", extquiver_suite}};
  return r;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, f] : registry()) out.push_back(name);
  return out;
}

std::vector<SuiteResult> run_suites(const std::string& which) {
  std::vector<SuiteResult> out;
  for (const auto& [name, f] : registry()) {
    if (which != "all" && which != name) continue;
    SuiteResult r;
    r.name = name;
    Checker check{r};
    const auto t0 = std::chrono::steady_clock::now();
    try {
      f(check);
    } catch (const Error& e) {
      r.passed = false;
      r.detail = e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.push_back(std::move(r));
  }
  if (out.empty()) fail(ErrorCode::InvalidArgument, "unknown suite '" + which + "'");
  return out;
}

}  // namespace affhecke
