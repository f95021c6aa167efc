// Acceptance run: one PASS/FAIL line per criterion, each with its time limit.
// Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "affhecke/blocks.hpp"
#include "affhecke/extquiver.hpp"
#include "affhecke/graphbimod.hpp"
#include "affhecke/hecke.hpp"
#include "affhecke/orders.hpp"
#include "oracles.hpp"

using namespace affhecke;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Records the first failure; later ones only bump the count.
class Checker {
 public:
  void expect(bool cond, const std::string& what) {
    ++checks_;
    if (cond) return;
    if (failures_++ == 0) first_ = what;
  }
  Outcome outcome(const std::string& summary) const {
    std::ostringstream os;
    os << summary << ", " << checks_ << " checks";
    if (failures_) os << ", " << failures_ << " failures, first: " << first_;
    return {failures_ == 0, os.str()};
  }

 private:
  long checks_ = 0;
  long failures_ = 0;
  std::string first_;
};

Outcome lengths() {
  Checker c;
  std::size_t n = 0;
  for (auto [label, depth] : {std::pair{"A1", 8}, {"A2", 6}, {"B2", 6}}) {
    auto g = AffineWeylGroup::create(label);
    for (const auto& [x, l] : oracle::bfs_lengths(*g, depth)) {
      c.expect(g->length(x) == l, std::string(label) + " " + g->format(x));
      ++n;
    }
  }
  return c.outcome(std::to_string(n) + " elements");
}

Outcome antidominant_anchor() {
  Checker c;
  std::size_t n = 0;
  for (auto [label, depth] : {std::pair{"A1", 8}, {"A2", 6}, {"B2", 6}}) {
    auto g = AffineWeylGroup::create(label);
    for (const auto& [x, l] : oracle::bfs_lengths(*g, depth))
      if (g->roots().is_antidominant(x.t)) {
        c.expect(g->stab_length(x) == l, std::string(label) + " " + g->format(x));
        ++n;
      }
  }
  return c.outcome(std::to_string(n) + " anti-dominant elements");
}

Outcome order_equivalence() {
  Checker c;
  std::size_t pairs = 0;
  StabOrderOptions opts;
  opts.length_shortcut = false;
  for (auto [label, box] : {std::pair{"A1", Int{3}}, {"A2", Int{2}}}) {
    auto g = AffineWeylGroup::create(label);
    auto win = oracle::stab_window(*g, 5, box);
    for (const auto& x : win)
      for (const auto& y : win) {
        c.expect(stab_leq(*g, x, y, opts) == oracle::chain_stab_leq(*g, x, y, 4, 4),
                 std::string(label) + " " + g->format(x) + " vs " + g->format(y));
        ++pairs;
      }
  }
  return c.outcome(std::to_string(pairs) + " pairs");
}

Outcome order_implication() {
  Checker c;
  std::size_t related = 0;
  for (auto [label, d] : {std::pair{"A2", Int{5}}, {"A2", Int{7}}, {"B2", Int{7}}}) {
    auto g = AffineWeylGroup::create(label);
    const Weight lambda = -g->roots().two_rho();
    auto win = oracle::stab_window(*g, 4, 2);
    std::vector<Weight> img;
    for (const auto& x : win) img.push_back(dot_act(*g, d, g->inverse(x), lambda));
    for (std::size_t i = 0; i < win.size(); ++i)
      for (std::size_t j = 0; j < win.size(); ++j)
        if (stab_leq(*g, win[i], win[j])) {
          ++related;
          c.expect(dominance_leq(img[i], img[j]), std::string(label) + " d=" + std::to_string(d) + " " +
                                                      g->format(win[i]) + " <= " + g->format(win[j]));
        }
  }
  return c.outcome(std::to_string(related) + " related pairs");
}

Outcome block_machinery() {
  Checker c;
  std::size_t n = 0;
  const Int box = 8;
  for (auto [label, d] : {std::pair{"A1", Int{3}}, {"A2", Int{5}}}) {
    auto g = AffineWeylGroup::create(label);
    std::map<Weight, std::set<AffineElement>> stabilizers;
    for (const Weight& l : oracle::box_weights(g->rank(), box)) {
      ++n;
      BlockLocation b = locate_block(*g, d, l);
      const std::string tag = std::string(label) + " " + l.str();
      c.expect(in_fundamental_domain(*g, d, b.fundamental), tag + " not fundamental");
      c.expect(dot_act(*g, d, g->inverse(b.x), b.fundamental) == l, tag + " x^-1 . lambda0 != lambda");
      auto orbit = oracle::orbit_in_box(*g, d, l, box);
      c.expect(orbit.count(l) == 1, tag + " orbit misses lambda");
      std::set<Weight> reps;
      for (const Weight& m : orbit)
        if (in_fundamental_domain(*g, d, m)) reps.insert(m);
      c.expect(reps == std::set<Weight>{b.fundamental}, tag + " fundamental representative not unique");
      auto it = stabilizers.find(b.fundamental);
      if (it == stabilizers.end()) {
        auto found = oracle::stabilizer_in_range(*g, d, b.fundamental, box);
        it = stabilizers.emplace(b.fundamental, std::set<AffineElement>(found.begin(), found.end())).first;
      }
      auto wj = parabolic_elements(*g, b.J);
      c.expect(std::set<AffineElement>(wj.begin(), wj.end()) == it->second, tag + " J does not generate stabilizer");
    }
  }
  return c.outcome(std::to_string(n) + " weights");
}

Outcome hecke() {
  Checker c;
  std::mt19937 rng(2024);
  for (const char* label : {"A1", "A2", "B2", "G2"}) {
    auto g = AffineWeylGroup::create(label);
    for (int s = 0; s < g->num_generators(); ++s)
      for (int t = s + 1; t < g->num_generators(); ++t) {
        AffineElement st = g->multiply(g->generator(s), g->generator(t)), p = st;
        int m = 1;
        while (p != g->identity() && m < 8) {
          p = g->multiply(p, st);
          ++m;
        }
        if (p != g->identity()) continue;
        HeckeElement a = h_std(g, g->identity()), b = a;
        for (int i = 0; i < m; ++i) {
          a = right_mul_gen(a, i % 2 ? t : s);
          b = right_mul_gen(b, i % 2 ? s : t);
        }
        c.expect(a == b, std::string(label) + " braid relation");
      }
  }
  for (const char* label : {"A1", "A2"}) {
    auto g = AffineWeylGroup::create(label);
    const int r = g->rank();
    const Weight two_rho = g->roots().two_rho();
    std::uniform_int_distribution<Int> coord(-3, 3);
    for (int trial = 0; trial < 10; ++trial) {
      Weight l(r);
      for (int i = 0; i < r; ++i) l[i] = coord(rng);
      Int n1 = 5 + static_cast<Int>(rng() % 3), n2 = n1 + 1 + static_cast<Int>(rng() % 3);
      c.expect(bernstein_split(g, l + n1 * two_rho, n1 * two_rho) == bernstein_split(g, l + n2 * two_rho, n2 * two_rho),
               std::string(label) + " Bernstein splitting " + l.str());
    }
    std::map<Weight, HeckeElement> cb;
    for (const Weight& l : oracle::box_weights(r, 4)) cb.emplace(l, bernstein(g, l));
    for (const Weight& l : oracle::box_weights(r, 2))
      for (const Weight& m : oracle::box_weights(r, 2))
        c.expect(hecke_mul(cb.at(l), cb.at(m)) == cb.at(l + m), std::string(label) + " C_l C_m " + l.str() + m.str());
    for (const auto& [x, len] : oracle::bfs_lengths(*g, 4)) {
      StabClass s = stab_class(g, x);
      c.expect(stab_class_at(g, x, s.threshold + 1) == s.value && stab_class_at(g, x, s.threshold + 2) == s.value,
               std::string(label) + " stab_class " + g->format(x));
    }
  }
  return c.outcome("braid, Bernstein, stab_class");
}

long long hilbert(long long n, long long D) {
  if (n == 0) return D == 0;
  long long r = 1;
  for (long long i = 1; i <= n - 1; ++i) r = r * (D + i) / i;
  return r;
}

Outcome bimodules() {
  Checker c;
  std::size_t pairs = 0;
  for (auto [label, depth] : {std::pair{"A1", 3}, {"A2", 2}}) {
    auto g = AffineWeylGroup::create(label);
    const int n = g->rank() + 1;
    std::vector<AffineElement> ball;
    for (const auto& [x, l] : oracle::bfs_lengths(*g, depth)) ball.push_back(x);
    for (const auto& x : ball)
      for (const auto& y : ball) {
        ++pairs;
        ExtDatum e = graph_ext(*g, x, y);
        auto h0 = koszul_ext_dims(*g, x, y, 3, 0);
        auto h1 = koszul_ext_dims(*g, x, y, 3, 1);
        const std::string tag = std::string(label) + " " + g->format(x) + ", " + g->format(y) + " " + e.str();
        bool ok = false;
        switch (e.kind) {
          case ExtKind::SelfExt:
            ok = e.rank == n && h1[0] == n && h0[0] == 1;
            break;
          case ExtKind::Wall:
            ok = h0 == std::vector<long long>(4, 0);
            for (int D = 0; D <= 3; ++D) ok = ok && h1[static_cast<std::size_t>(D)] == hilbert(n - 1, D);
            break;
          case ExtKind::HigherCodim:
            ok = h1 == std::vector<long long>(4, 0);
            break;
          case ExtKind::Zero:
            break;
        }
        c.expect(ok, tag);
      }
  }
  return c.outcome(std::to_string(pairs) + " pairs");
}

struct Block {
  const char* label;
  Int d;
  Weight weight;
  QuiverWindow window;
};

const std::vector<Block>& equivalence_blocks() {
  static const std::vector<Block> blocks = {
      {"A1", 3, Weight{0}, {10, 6}},        {"A1", 5, Weight{0}, {10, 6}},        {"A1", 3, Weight{-2}, {20, 11}},
      {"A2", 5, Weight{0, 0}, {6, 2}},      {"A2", 7, Weight{0, 0}, {6, 2}},      {"A2", 5, Weight{0, 1}, {6, 2}},
      {"B2", 7, Weight{0, 0}, {6, 2}}};
  return blocks;
}

Outcome equivalence() {
  Checker c;
  std::ostringstream sizes;
  for (const Block& b : equivalence_blocks()) {
    auto g = AffineWeylGroup::create(b.label);
    EquivalenceRun run;
    run.d = b.d;
    run.weight = b.weight;
    run.window = b.window;
    EquivalenceResult r = verify_equivalence(*g, run);
    const std::string tag = std::string(b.label) + " d=" + std::to_string(b.d) + " " + b.weight.str();
    c.expect(r.report.verdict == Verdict::Pass,
             tag + " " + std::string(to_string(r.report.verdict)) +
                 (r.report.witnesses.empty() ? "" : ": " + r.report.witnesses.front()));
    c.expect(r.report.common_vertices >= 20, tag + " window has " + std::to_string(r.report.common_vertices));
    bool singleton = true;
    for (const auto& e : r.hecke.edges) singleton = singleton && e.walls.size() == 1;
    for (const auto& e : r.quantum.edges) singleton = singleton && e.walls.size() == 1;
    c.expect(singleton, tag + " non-singleton wall set");
    sizes << (sizes.tellp() ? " " : "") << r.report.common_vertices << '/' << r.report.matched_edges;
  }
  return c.outcome("common vertices/matched edges " + sizes.str());
}

Outcome faults() {
  Checker c;
  const Block& b = equivalence_blocks()[3];
  auto g = AffineWeylGroup::create(b.label);
  for (Fault f : {Fault::WallShift, Fault::DropEdge, Fault::DictTwist}) {
    EquivalenceRun run;
    run.d = b.d;
    run.weight = b.weight;
    run.window = b.window;
    run.fault = f;
    EquivalenceResult r = verify_equivalence(*g, run);
    c.expect(r.report.verdict == Verdict::Fail && !r.report.witnesses.empty(),
             std::string(to_string(f)) + " not detected");
  }
  return c.outcome("A2 d=5 regular block");
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "length formula vs Cayley-graph BFS", 10, lengths},
      {2, "stabilized length on anti-dominant translations", 1, antidominant_anchor},
      {3, "chain order vs translated Bruhat test", 60, order_equivalence},
      {4, "stabilized order implies dominance of dot images", 60, order_implication},
      {5, "block location vs orbit enumeration", 30, block_machinery},
      {6, "Hecke algebra identities", 60, hecke},
      {7, "graph Ext vs Koszul dimensions", 60, bimodules},
      {8, "Hecke and quantum Ext quivers agree", 300, equivalence},
      {9, "injected faults are detected", 30, faults},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = o.ok && secs < c.limit;
    if (!pass) ++failed;
    std::printf("%s criterion %d: %s (%.2f s, limit %.0f s) %s\n", pass ? "PASS" : "FAIL", c.id, c.name, secs, c.limit,
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
