#include "mvkit/layers.hpp"

#include "json.hpp"

namespace mvkit {

LayerSequence beta_sequence(const WeylGroup& group, const Word& word) {
  if (!group.is_reduced(word)) fail(errc::not_reduced, "word is not reduced");
  const CartanPair& pair = group.pair();
  int n = pair.rank();
  LayerSequence seq;
  seq.word = word;
  Mat prefix = Mat::identity(n);
  for (int i : word) {
    IntVec beta = prefix.column(i);
    IntVec dim(n);
    for (int j = 0; j < n; ++j) dim[j] = chk_mul(pair.d(j), beta[j]);
    seq.betas.push_back(std::move(beta));
    seq.dims.push_back(std::move(dim));
    prefix = prefix * pair.rank_reflection(i);
  }
  return seq;
}

IntVec stable_rank_vector(const WeylGroup& group, int w, int i, int sign) {
  if (i < 0 || i >= group.rank()) fail(errc::bad_input, "vertex index out of range");
  int n = group.rank();
  int u = sign >= 0 ? group.longest() : w;
  IntVec wpi = group.weight_matrix(u).column(i);
  IntVec weight = vec_sub(unit_vec(n, i), wpi);
  // always integral for valid w; solve_integer raises NonIntegral otherwise
  return solve_integer(group.pair().cartan(), weight);
}

IntVec v_module_rank(const WeylGroup& group, const Word& word, int k) {
  if (!group.is_reduced(word)) fail(errc::not_reduced, "word is not reduced");
  if (k < 1 || k > int(word.size())) fail(errc::bad_input, "prefix length out of range");
  Word prefix(word.begin(), word.begin() + k);
  return stable_rank_vector(group, group.from_word(prefix), word[size_t(k - 1)], -1);
}

IntVec hn_weight(const LayerSequence& seq, const IntVec& a) {
  if (a.size() != seq.word.size()) fail(errc::bad_input, "multiplicity length mismatch");
  for (i64 v : a)
    if (v < 0) fail(errc::negative_multiplicity, "negative layer multiplicity");
  IntVec w(seq.betas.empty() ? 0 : seq.betas[0].size(), 0);
  for (size_t k = 0; k < a.size(); ++k) w = vec_add(w, vec_scale(a[k], seq.betas[k]));
  return w;
}

std::vector<IntVec> hn_vertices(const LayerSequence& seq, const IntVec& a) {
  if (a.size() != seq.word.size()) fail(errc::bad_input, "multiplicity length mismatch");
  for (i64 v : a)
    if (v < 0) fail(errc::negative_multiplicity, "negative layer multiplicity");
  size_t n = seq.betas.empty() ? 0 : seq.betas[0].size();
  std::vector<IntVec> out;
  IntVec cur(n, 0);
  out.push_back(cur);
  for (size_t k = 0; k < a.size(); ++k) {
    cur = vec_add(cur, vec_scale(a[k], seq.betas[k]));
    out.push_back(cur);
  }
  return out;
}

std::string layers_to_json(const LayerSequence& seq) {
  nlohmann::json j;
  j["word"] = nlohmann::json::array();
  for (int i : seq.word) j["word"].push_back(i + 1);
  j["betas"] = seq.betas;
  j["dims"] = seq.dims;
  return j.dump(2);
}

}  // namespace mvkit
