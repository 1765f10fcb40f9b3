#pragma once

#include <string>
#include <unordered_map>

#include "mvkit/lusztig.hpp"

namespace mvkit {

// MV polytope represented by its W-indexed vertex map (mu_e = 0, mu_w0 = weight)
// together with Bernstein-Zelevinsky data. The BZ data is indexed by chamber
// weights of the transposed Cartan matrix -- the polytope lives in the rank
// lattice, i.e. the root datum of C^T -- paired by the standard dot product.
class MVPolytope {
 public:
  const WeylGroup& group() const { return *group_; }
  const IntVec& weight() const { return weight_; }
  const IntVec& vertex(int w) const { return vertices_[size_t(w)]; }
  const std::vector<IntVec>& vertices() const { return vertices_; }

  // Chamber weight w . varpi'_i of the dual root datum.
  IntVec dual_chamber_weight(int w, int i) const { return dual_[size_t(w)].column(i); }

  // Support value max_mu <gamma, mu> (any gamma; vertices are complete over W).
  i64 support(const IntVec& gamma) const;

  // A_gamma lookup, stored for gamma in -Gamma', computed on demand otherwise.
  i64 A(const IntVec& gamma) const;
  i64 A_minus(int w, int i) const;  // A_{-w varpi'_i}

  // Vertices attaining A_gamma.
  std::vector<int> face(const IntVec& gamma) const;

  MVPolytope star_involution() const;

  friend MVPolytope build_polytope(const MoveGraph& mg, const LusztigDatum& datum);

 private:
  const WeylGroup* group_ = nullptr;
  IntVec weight_;
  std::vector<IntVec> vertices_;  // by element id
  std::vector<Mat> dual_;         // sigma*_{C^T}(w) by element id
  std::unordered_map<IntVec, i64, VecHash> bz_;

  void fill_bz();
};

MVPolytope build_polytope(const MoveGraph& mg, const LusztigDatum& datum);

struct BZViolation {
  std::string rule;  // "BZ1", "BZ2", "BZ3-1", "BZ3-2a", "BZ3-2b", "BZ3-3a", "BZ3-3b"
  Word w;            // canonical word of the base element
  int i, j;          // 0-based; j = -1 for BZ1/BZ2
  i64 lhs, rhs;
};

struct BZReport {
  bool bz1 = true, bz2 = true, bz3 = true;
  std::vector<BZViolation> violations;
  bool ok() const { return bz1 && bz2 && bz3; }
};

// Checks BZ1 (A_{-varpi'_i} = 0), the BZ2 edge inequalities, and the tropical
// Pluecker relations on every 2-face (all J-reduced (w,i,j) with
// c'_ij c'_ji in {1,2}).
BZReport verify_bz(const MVPolytope& p);

// Same checks against an arbitrary A-table (for corruption experiments).
BZReport verify_bz_table(const WeylGroup& group,
                         const std::unordered_map<IntVec, i64, VecHash>& table,
                         const std::vector<Mat>& dual_mats);

std::string polytope_to_json(const MVPolytope& p);

}  // namespace mvkit
