#include "mvkit/gmatrix.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace mvkit {

Mat g_matrix(const WeylGroup& group, int w) { return group.weight_matrix(w); }

Mat c_matrix(const WeylGroup& group, int w) {
  return integer_inverse(group.weight_matrix(w)).transposed();
}

int chamber_of(const WeylGroup& group, const std::vector<Rational>& theta) {
  if (int(theta.size()) != group.rank()) fail(errc::bad_input, "theta length mismatch");
  for (size_t w = 0; w < group.size(); ++w) {
    auto x = solve_rational(group.weight_matrix(int(w)), theta);
    if (!x) continue;  // cannot happen: g-matrices are unimodular
    bool all_pos = true, any_zero = false, all_nonneg = true;
    for (const Rational& v : *x) {
      if (v.sign() < 0) { all_pos = all_nonneg = false; break; }
      if (v.sign() == 0) { any_zero = true; all_pos = false; }
    }
    if (all_pos) return int(w);
    if (all_nonneg && any_zero) fail(errc::on_wall, "theta lies on a chamber wall");
  }
  fail(errc::on_wall, "theta lies on a chamber wall");
}

std::vector<int> nakayama_involution(const WeylGroup& group) {
  const Mat& m = group.weight_matrix(group.longest());
  int n = group.rank();
  std::vector<int> nu(n, -1);
  for (int i = 0; i < n; ++i) {
    for (int r = 0; r < n; ++r) {
      if (m(r, i) == -1) nu[i] = r;
    }
    if (nu[i] < 0) fail(errc::not_finite_type, "w0 does not act by a negated permutation");
  }
  return nu;
}

SttiltLattice sttilt_hasse(const WeylGroup& group) {
  SttiltLattice lat;
  std::vector<int> order(group.size());
  for (size_t w = 0; w < group.size(); ++w) order[w] = int(w);
  std::vector<Word> words(group.size());
  for (size_t w = 0; w < group.size(); ++w) words[w] = group.canonical_word(int(w));
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (group.length(a) != group.length(b)) return group.length(a) < group.length(b);
    return words[size_t(a)] < words[size_t(b)];
  });
  std::vector<int> node_of(group.size());
  for (size_t k = 0; k < order.size(); ++k) {
    int w = order[k];
    node_of[size_t(w)] = int(k);
    lat.nodes.push_back({w, words[size_t(w)], group.weight_matrix(w)});
  }
  for (const auto& node : lat.nodes)
    for (int i = 0; i < group.rank(); ++i) {
      int u = group.mult_right(node.w, i);
      if (group.length(u) == group.length(node.w) + 1)
        lat.edges.push_back({node_of[size_t(node.w)], node_of[size_t(u)], i});
    }
  return lat;
}

namespace {

std::string word_id(const Word& w) {
  if (w.empty()) return "e";
  std::string s;
  for (size_t k = 0; k < w.size(); ++k) {
    if (k) s += '.';
    s += std::to_string(w[k] + 1);
  }
  return s;
}

}  // namespace

std::string sttilt_to_json(const SttiltLattice& lat) {
  nlohmann::json j;
  auto& nodes = j["nodes"] = nlohmann::json::array();
  for (const auto& n : lat.nodes) {
    nlohmann::json jn;
    jn["word"] = nlohmann::json::array();
    for (int i : n.word) jn["word"].push_back(i + 1);
    auto& g = jn["g"] = nlohmann::json::array();
    for (int r = 0; r < n.g.rows(); ++r) {
      nlohmann::json row = nlohmann::json::array();
      for (int c = 0; c < n.g.cols(); ++c) row.push_back(n.g(r, c));
      g.push_back(row);
    }
    nodes.push_back(jn);
  }
  auto& edges = j["edges"] = nlohmann::json::array();
  for (const auto& e : lat.edges)
    edges.push_back({{"from", e.from}, {"to", e.to}, {"i", e.i + 1}});
  return j.dump(2);
}

std::string sttilt_to_dot(const SttiltLattice& lat) {
  std::ostringstream os;
  os << "digraph sttilt {\n  rankdir=TB;\n";
  for (const auto& n : lat.nodes) {
    os << "  \"" << word_id(n.word) << "\" [label=\"";
    for (int r = 0; r < n.g.rows(); ++r) {
      for (int c = 0; c < n.g.cols(); ++c) {
        os << n.g(r, c);
        if (c + 1 < n.g.cols()) os << ' ';
      }
      if (r + 1 < n.g.rows()) os << "\\n";
    }
    os << "\"];\n";
  }
  for (const auto& e : lat.edges)
    os << "  \"" << word_id(lat.nodes[size_t(e.from)].word) << "\" -> \""
       << word_id(lat.nodes[size_t(e.to)].word) << "\" [label=\"" << e.i + 1 << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace mvkit
