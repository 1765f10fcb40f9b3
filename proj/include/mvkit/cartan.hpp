#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mvkit/linalg.hpp"

namespace mvkit {

// A symmetrizable generalized Cartan matrix together with a symmetrizer and
// optional acyclic orientation. Immutable after construction; all operations
// on it are pure.
class CartanPair {
 public:
  using Orientation = std::set<std::pair<int, int>>;  // 0-based ordered pairs

  int rank() const { return n_; }
  const Mat& cartan() const { return c_; }
  i64 c(int i, int j) const { return c_(i, j); }
  const IntVec& symmetrizer() const { return d_; }
  i64 d(int i) const { return d_[i]; }
  const std::optional<Orientation>& orientation() const { return omega_; }

  // Weight-side simple reflection on the fundamental-weight basis and the
  // matching rank-side reflection; they intertwine via C: C*R_i = S_i*C.
  Mat weight_reflection(int i) const;
  Mat rank_reflection(int i) const;

  // Derived valued-quiver data g_ij = |gcd(c_ij, c_ji)|, f_ij = |c_ij|/g_ij.
  i64 g_val(int i, int j) const;
  i64 f_val(int i, int j) const;

  // The pair (C^T, minimal symmetrizer of C^T); the ambient datum of the
  // rank-vector root system.
  CartanPair transposed() const;

  bool has_g2_edge() const;

  friend CartanPair validate_gcm(const Mat& c, const std::optional<IntVec>& symmetrizer,
                                 const std::optional<Orientation>& omega);

 private:
  CartanPair(int n, Mat c, IntVec d, std::optional<Orientation> omega)
      : n_(n), c_(std::move(c)), d_(std::move(d)), omega_(std::move(omega)) {}

  int n_;
  Mat c_;
  IntVec d_;
  std::optional<Orientation> omega_;
};

CartanPair validate_gcm(const Mat& c, const std::optional<IntVec>& symmetrizer = std::nullopt,
                        const std::optional<CartanPair::Orientation>& omega = std::nullopt);

// Unique minimal symmetrizer; every symmetrizer is a per-component multiple.
IntVec minimal_symmetrizer(const Mat& c);

// q_DC(x) = sum_i c_i x_i^2 + sum_{i<j} c_i c_ij x_i x_j.
i64 quadratic_form(const CartanPair& pair, const IntVec& x);

// <a,b>_H = sum_i c_i a_i b_i + sum_{(p,q) in Omega} c_p c_pq a_p b_q.
i64 euler_form(const CartanPair& pair, const IntVec& a, const IntVec& b);
// (a,b) = <a,b> + <b,a>; orientation-independent.
i64 symmetric_form(const CartanPair& pair, const IntVec& a, const IntVec& b);

enum class ComponentKind { finite, euclidean, other };

struct ComponentClass {
  std::vector<int> vertices;  // 0-based, ascending
  ComponentKind kind;
  std::string label;      // Dynkin family for finite components ("A3", "B2/C2", ...)
  i64 max_edge_product;   // max over edges of c_ij*c_ji
};

struct Classification {
  std::vector<ComponentClass> components;
  bool all_finite() const;
  bool has_g2_content() const;  // some edge with c_ij*c_ji = 3
};

Classification classify(const CartanPair& pair);

// Weight-lattice image of a rank vector: C*r.
IntVec root_to_weight(const CartanPair& pair, const IntVec& r);

// Parse {"cartan": [[...]], "symmetrizer": [...], "orientation": [[i,j],...]}
// (1-based indices in the file, normalized internally).
CartanPair cartan_from_json(const std::string& text);
std::string cartan_to_json(const CartanPair& pair, const Classification& cls);

}  // namespace mvkit
