#pragma once

#include <optional>
#include <string>

#include "mvkit/mvpolytope.hpp"

namespace mvkit {

// B(-infinity) on Lusztig data. Elements are held canonically as the
// multiplicity vector on the reference word (the lexicographically least
// reduced word of w0); equality is transition-equivalence by construction.
class Crystal {
 public:
  Crystal(const WeylGroup& group, const MoveGraph& mg);

  const WeylGroup& group() const { return *group_; }
  const MoveGraph& moves() const { return *mg_; }
  const Word& reference_word() const { return mg_->words()[0]; }
  const std::vector<int>& nakayama() const { return nakayama_; }

  IntVec canonicalize(const LusztigDatum& d) const;
  IntVec zero() const { return IntVec(reference_word().size(), 0); }

  IntVec wt(const IntVec& a) const;
  i64 height(const IntVec& a) const;  // coordinate sum of wt
  i64 pairing_wt_alpha(const IntVec& a, int i) const;  // (C*wt)_i

  i64 phi(const IntVec& a, int i) const;
  i64 eps(const IntVec& a, int i) const;
  i64 phi_star(const IntVec& a, int i) const;
  i64 eps_star(const IntVec& a, int i) const;

  IntVec e(const IntVec& a, int i) const;
  std::optional<IntVec> f(const IntVec& a, int i) const;
  IntVec f_max(const IntVec& a, int i) const;
  IntVec e_star(const IntVec& a, int i) const;
  std::optional<IntVec> f_star(const IntVec& a, int i) const;
  IntVec f_max_star(const IntVec& a, int i) const;

  // Kashiwara involution: reverse entries on the Nakayama-relabelled
  // reversed word, then canonicalize.
  IntVec star(const IntVec& a) const;

  // Saito reflection, defined on phi_i = 0 (error PhiNonzero otherwise).
  // Word-shift implementation; `saito_via_operators` is the
  // e_i^{eps*_i} (f*_i)^max composition, equal everywhere (asserted in tests).
  IntVec saito(const IntVec& a, int i) const;
  IntVec saito_via_operators(const IntVec& a, int i) const;
  IntVec saito_star(const IntVec& a, int i) const;

  // Records phi_{i_k}, applies f^max then S_{i_k} along `word`; the result
  // equals transition(a, word). Error NonTermination if the zero element is
  // not reached.
  IntVec pbw_unwind(const IntVec& a, const Word& word) const;

  MVPolytope polytope(const IntVec& a) const;

  // All elements with height(wt) <= bound, sorted; error SizeGuard past guard.
  std::vector<IntVec> elements_up_to(i64 height_bound, size_t guard = 0) const;

  i64 kostant_count(const IntVec& nu) const;

 private:
  const WeylGroup* group_;
  const MoveGraph* mg_;
  std::vector<int> nakayama_;
  std::vector<IntVec> ref_betas_;
  std::vector<i64> ref_heights_;

  LusztigDatum on_initial(const IntVec& a, int i) const;
};

struct CrystalGraph {
  struct Node {
    IntVec a;
    IntVec wt;
  };
  struct Arrow {
    int from, to;  // node indices
    int i;
  };
  std::vector<Node> nodes;    // sorted by (height, a)
  std::vector<Arrow> arrows;  // b -> e_i b within the height bound
};

CrystalGraph enumerate_crystal(const Crystal& crystal, i64 height_bound, size_t guard = 0);

std::string crystal_graph_to_json(const CrystalGraph& g);
std::string crystal_graph_to_dot(const CrystalGraph& g);

struct TWOptions {
  // Off-by-one fault injection for the verifier's f-operator: when set,
  // f_i refuses to decrement a leading entry equal to 1.
  bool fault_f = false;
};

struct TWReport {
  bool ok = true;
  size_t elements = 0;
  std::vector<std::string> violations;
};

// Checks the six lowest-weight-crystal criterion conditions plus the basic
// crystal laws on every element up to the height bound.
TWReport verify_tingley_webster(const Crystal& crystal, i64 height_bound,
                                const TWOptions& options = {});

}  // namespace mvkit
