#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "affhecke/blocks.hpp"

namespace affhecke {

struct QuiverEdge {
  std::size_t src = 0;
  std::size_t dst = 0;
  std::set<HyperplaneForm> walls;
  friend bool operator==(const QuiverEdge&, const QuiverEdge&) = default;
};

/// Hecke window: cosets whose minimal representative m = w t_lambda has |l^st(m)| <= band
/// and every coordinate of lambda in [-box, box]. Quantum window: weights with every
/// root coordinate in [-box, box].
struct QuiverWindow {
  Int band = 0;
  Int box = 0;
};

/// Vertices are labelled by V (coset minimal representatives or weights); edges refer to
/// vertex indices and are sorted by (src, dst).
template <class V>
struct ExtQuiver {
  std::vector<V> vertices;
  std::vector<QuiverEdge> edges;
  QuiverWindow window;

  std::optional<std::size_t> index_of(const V& v) const;
  const QuiverEdge* find_edge(std::size_t s, std::size_t t) const;
};

struct HeckeQuiver : ExtQuiver<AffineElement> {
  GeneratorSet J;
};

struct QuantumQuiver : ExtQuiver<Weight> {
  Int d = 0;
  Weight lambda0;
  /// For each vertex mu, the minimal x with x . mu = lambda0 (so mu = x^{-1} . lambda0).
  std::vector<AffineElement> located;
};

/// Coset window enumeration (minimal representatives, sorted).
std::vector<AffineElement> coset_window(const AffineWeylGroup& g, GeneratorSet J, const QuiverWindow& w);

HeckeQuiver hecke_quiver(const AffineWeylGroup& g, GeneratorSet J, const QuiverWindow& w);

struct QuantumWall {
  enum class Case { None, A, B };
  Case kind = Case::None;
  int root = -1;  // positive root index (CaseB)
  Int k = 0;      // CaseB
  std::optional<HyperplaneForm> wall;
};

/// CaseB when mu - lambda = c alpha for a positive root alpha and
/// c = -(<lambda + rho, alpha^vee> + d k) has an integer solution k; else CaseA when
/// lambda - mu in d Q; else None. CaseB wins when both hold.
QuantumWall quantum_wall_classify(const AffineWeylGroup& g, const Weight& lambda, const Weight& mu, Int d);

QuantumQuiver quantum_quiver(const AffineWeylGroup& g, Int d, const Weight& lambda0, const QuiverWindow& w);

/// W_J x -> x^{-1} . lambda0, optionally twisted to (x u)^{-1} . lambda0 for a fixed u.
class Dictionary {
 public:
  Dictionary(const AffineWeylGroup& g, Int d, Weight lambda0, GeneratorSet J);
  Weight operator()(const AffineElement& x) const;
  void set_twist(const AffineElement& u) { twist_ = u; }
  const Weight& lambda0() const noexcept { return lambda0_; }
  GeneratorSet J() const noexcept { return J_; }

 private:
  const AffineWeylGroup* g_;
  Int d_;
  Weight lambda0_;
  GeneratorSet J_;
  std::optional<AffineElement> twist_;
};

enum class Verdict { Pass, PassWithWarnings, Fail };
std::string_view to_string(Verdict v);

struct CompareReport {
  Verdict verdict = Verdict::Pass;
  std::size_t hecke_vertices = 0;
  std::size_t quantum_vertices = 0;
  std::size_t common_vertices = 0;
  std::size_t hecke_edges = 0;    // inside the common window
  std::size_t quantum_edges = 0;  // inside the common window
  std::size_t matched_edges = 0;
  std::vector<std::string> witnesses;
  std::vector<std::string> warnings;
};

CompareReport compare(const AffineWeylGroup& g, const HeckeQuiver& hq, const QuantumQuiver& qq, const Dictionary& phi);

enum class Fault { None, WallShift, DropEdge, DictTwist };
std::string_view to_string(Fault f);
Fault parse_fault(std::string_view s);

/// Mutates the first Hecke edge whose endpoints land in the quantum quiver (WallShift,
/// DropEdge), or twists the dictionary by the first generator outside J (DictTwist).
/// Returns a description of what was changed.
std::string inject_fault(const AffineWeylGroup& g, Fault f, HeckeQuiver& hq, const QuantumQuiver& qq, Dictionary& phi);

struct EquivalenceRun {
  Int d = 3;
  Weight weight;  // located to its block; defaults to 0 when rank-0 sized
  QuiverWindow window{4, 2};
  Fault fault = Fault::None;
};

struct EquivalenceResult {
  BlockLocation block;
  HeckeQuiver hecke;
  QuantumQuiver quantum;
  CompareReport report;
  std::string fault_note;
};

/// locate_block, both quivers, the dictionary and compare, end to end. The quantum box
/// is the smallest coordinate box holding the dictionary images of the Hecke window.
EquivalenceResult verify_equivalence(const AffineWeylGroup& g, const EquivalenceRun& run);

}  // namespace affhecke
