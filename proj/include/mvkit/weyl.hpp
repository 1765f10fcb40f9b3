#pragma once

#include <cstddef>
#include <unordered_map>
#include <vector>

#include "mvkit/cartan.hpp"

namespace mvkit {

using Word = std::vector<int>;  // generator indices, 0-based internally

// The full Weyl group of a finite-type Cartan pair, realized faithfully by
// weight-side matrices. The closure is built once (BFS over generators) and
// is immutable afterwards; queries are read-only and safe to share.
class WeylGroup {
 public:
  // Throws NotFiniteType for non-finite pairs, SizeGuard past `size_guard`
  // elements (default from MVKIT_SIZE_GUARD, else 10^7).
  explicit WeylGroup(const CartanPair& pair, size_t size_guard = 0);

  const CartanPair& pair() const { return pair_; }
  int rank() const { return pair_.rank(); }
  size_t size() const { return mats_.size(); }

  int identity() const { return 0; }
  int longest() const { return w0_; }
  int simple(int i) const { return right_[0][size_t(i)]; }

  int mult_right(int w, int i) const { return right_[size_t(w)][size_t(i)]; }
  int mult_left(int i, int w) const { return left_[size_t(w)][size_t(i)]; }
  int multiply(int u, int v) const;
  int invert(int w) const;
  int length(int w) const { return len_[size_t(w)]; }

  const Mat& weight_matrix(int w) const { return mats_[size_t(w)]; }
  Mat rank_matrix(int w) const;
  int from_matrix(const Mat& m) const;  // -1 when not an element
  int from_word(const Word& word) const;

  // Lexicographically least reduced word (greedy smallest left descent).
  Word canonical_word(int w) const;
  // Every reduced word of w; error CapExceeded past `cap`.
  std::vector<Word> all_reduced_words(int w, size_t cap) const;

  bool is_reduced(const Word& word) const;
  std::vector<int> descents_right(int w) const;
  bool weak_order_leq(int u, int v) const;
  int parabolic_longest(const std::vector<int>& j_subset) const;

  // Inversion count: positive C^T-roots sent negative by rank_matrix(w^-1).
  // Independent length oracle; equals length() everywhere.
  int inversion_count(int w) const;

  // Positive roots of the rank-vector root system (C^T), sorted.
  std::vector<IntVec> positive_roots_dual() const;

  // Gamma = {w . varpi_i}: deduplicated, sorted.
  std::vector<IntVec> chamber_weights() const;

  // w . varpi_i as a vector (column i of the weight matrix).
  IntVec chamber_weight(int w, int i) const { return mats_[size_t(w)].column(i); }

 private:
  CartanPair pair_;
  std::vector<Mat> mats_;
  std::vector<int> len_;
  std::vector<std::vector<int>> right_, left_;
  std::unordered_map<Mat, int, MatHash> index_;
  int w0_ = 0;
};

size_t default_size_guard();

}  // namespace mvkit
