#pragma once

#include <string>

#include "mvkit/weyl.hpp"

namespace mvkit {

// Rank vectors of the layer filtration along a reduced word:
// beta_k = r_{i_1}...r_{i_{k-1}}(alpha_{i_k}), dims_k = D .* beta_k.
struct LayerSequence {
  Word word;
  std::vector<IntVec> betas;
  std::vector<IntVec> dims;
};

LayerSequence beta_sequence(const WeylGroup& group, const Word& word);

// Rank vector of the stable module attached to (w, i): C^{-1}(varpi_i - w varpi_i)
// for sign -, and the projective-cover rank C^{-1}(varpi_i - w0 varpi_i) for sign +.
IntVec stable_rank_vector(const WeylGroup& group, int w, int i, int sign);

// Rank of the module attached to the length-k prefix of a reduced word.
IntVec v_module_rank(const WeylGroup& group, const Word& word, int k);

IntVec hn_weight(const LayerSequence& seq, const IntVec& a);
std::vector<IntVec> hn_vertices(const LayerSequence& seq, const IntVec& a);

std::string layers_to_json(const LayerSequence& seq);

}  // namespace mvkit
