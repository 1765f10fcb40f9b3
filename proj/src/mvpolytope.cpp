#include "mvkit/mvpolytope.hpp"

#include <algorithm>

#include "json.hpp"

namespace mvkit {

namespace {

// sigma*_{C^T}(w) for every element, via the transposed pair's reflections.
std::vector<Mat> dual_weight_matrices(const WeylGroup& group) {
  const CartanPair dual = group.pair().transposed();
  int n = group.rank();
  std::vector<Mat> gens(n);
  for (int i = 0; i < n; ++i) gens[i] = dual.weight_reflection(i);
  std::vector<Mat> out(group.size());
  for (size_t w = 0; w < group.size(); ++w) {
    Mat m = Mat::identity(n);
    for (int i : group.canonical_word(int(w))) m = m * gens[size_t(i)];
    out[w] = std::move(m);
  }
  return out;
}

Word extend_to_longest(const WeylGroup& group, int w) {
  Word word = group.canonical_word(w);
  int cur = w;
  while (group.length(cur) < group.length(group.longest())) {
    for (int i = 0; i < group.rank(); ++i) {
      int u = group.mult_right(cur, i);
      if (group.length(u) > group.length(cur)) {
        word.push_back(i);
        cur = u;
        break;
      }
    }
  }
  return word;
}

}  // namespace

MVPolytope build_polytope(const MoveGraph& mg, const LusztigDatum& datum) {
  const WeylGroup& group = mg.group();
  int n = group.rank();
  MVPolytope p;
  p.group_ = &group;
  p.dual_ = dual_weight_matrices(group);
  p.vertices_.resize(group.size());
  for (size_t w = 0; w < group.size(); ++w) {
    Word full = extend_to_longest(group, int(w));
    LusztigDatum t = mg.transition(datum, full);
    Mat prefix = Mat::identity(n);
    IntVec mu(n, 0);
    int k = group.length(int(w));
    for (int pos = 0; pos < k; ++pos) {
      int letter = full[size_t(pos)];
      mu = vec_add(mu, vec_scale(t.a[size_t(pos)], prefix.column(letter)));
      prefix = prefix * group.pair().rank_reflection(letter);
    }
    p.vertices_[w] = std::move(mu);
  }
  p.weight_ = p.vertices_[size_t(group.longest())];
  p.fill_bz();
  return p;
}

void MVPolytope::fill_bz() {
  bz_.clear();
  for (size_t w = 0; w < group_->size(); ++w)
    for (int i = 0; i < group_->rank(); ++i) {
      IntVec gamma = vec_scale(-1, dual_[w].column(i));
      if (!bz_.count(gamma)) bz_.emplace(gamma, support(gamma));
    }
}

i64 MVPolytope::support(const IntVec& gamma) const {
  i64 best = dot(gamma, vertices_[0]);
  for (const IntVec& mu : vertices_) best = std::max(best, dot(gamma, mu));
  return best;
}

i64 MVPolytope::A(const IntVec& gamma) const {
  auto it = bz_.find(gamma);
  return it != bz_.end() ? it->second : support(gamma);
}

i64 MVPolytope::A_minus(int w, int i) const {
  return A(vec_scale(-1, dual_[size_t(w)].column(i)));
}

std::vector<int> MVPolytope::face(const IntVec& gamma) const {
  i64 val = A(gamma);
  std::vector<int> out;
  for (size_t w = 0; w < vertices_.size(); ++w)
    if (dot(gamma, vertices_[w]) == val) out.push_back(int(w));
  return out;
}

MVPolytope MVPolytope::star_involution() const {
  MVPolytope q;
  q.group_ = group_;
  q.dual_ = dual_;
  q.weight_ = weight_;
  q.vertices_.resize(vertices_.size());
  int w0 = group_->longest();
  for (size_t w = 0; w < vertices_.size(); ++w) {
    int ww0 = group_->multiply(int(w), w0);
    q.vertices_[w] = vec_sub(weight_, vertices_[size_t(ww0)]);
  }
  q.fill_bz();
  return q;
}

namespace {

struct AView {
  const WeylGroup& group;
  const std::vector<Mat>& dual;
  const std::unordered_map<IntVec, i64, VecHash>* table;
  const MVPolytope* poly;

  i64 operator()(int w, int i) const {
    IntVec gamma = vec_scale(-1, dual[size_t(w)].column(i));
    if (poly) return poly->A(gamma);
    auto it = table->find(gamma);
    if (it == table->end()) fail(errc::bad_input, "A-table is missing a chamber weight");
    return it->second;
  }
};

BZReport run_bz(const WeylGroup& group, const AView& A) {
  const Mat ct = group.pair().cartan().transposed();
  int n = group.rank();
  BZReport rep;
  auto record = [&](const char* rule, int w, int i, int j, i64 lhs, i64 rhs, bool& flag) {
    if (lhs == rhs) return;
    flag = false;
    rep.violations.push_back({rule, group.canonical_word(w), i, j, lhs, rhs});
  };
  // BZ1
  for (int i = 0; i < n; ++i)
    record("BZ1", group.identity(), i, -1, A(group.identity(), i), 0, rep.bz1);
  // BZ2: A_{-w pi'_i} + A_{-w s_i pi'_i} + sum_{j != i} c'_ji A_{-w pi'_j} >= 0
  for (size_t w = 0; w < group.size(); ++w)
    for (int i = 0; i < n; ++i) {
      i64 s = chk_add(A(int(w), i), A(group.mult_right(int(w), i), i));
      for (int j = 0; j < n; ++j)
        if (j != i) s = chk_add(s, chk_mul(ct(j, i), A(int(w), j)));
      if (s < 0) {
        rep.bz2 = false;
        rep.violations.push_back({"BZ2", group.canonical_word(int(w)), i, -1, s, 0});
      }
    }
  // BZ3 (tropical Pluecker, max form) at J-reduced (w,i,j)
  for (size_t wi = 0; wi < group.size(); ++wi) {
    int w = int(wi);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j || ct(i, j) == 0) continue;
        int wsi = group.mult_right(w, i), wsj = group.mult_right(w, j);
        if (group.length(wsi) <= group.length(w) || group.length(wsj) <= group.length(w))
          continue;
        int wsisj = group.mult_right(wsi, j), wsjsi = group.mult_right(wsj, i);
        i64 prod = chk_mul(ct(i, j), ct(j, i));
        if (prod == 1) {
          i64 lhs = chk_add(A(wsi, i), A(wsj, j));
          i64 rhs = std::max(chk_add(A(w, i), A(wsisj, j)), chk_add(A(wsjsi, i), A(w, j)));
          record("BZ3-1", w, i, j, lhs, rhs, rep.bz3);
        } else if (ct(i, j) == -1 && ct(j, i) == -2) {
          int wsisjsi = group.mult_right(wsisj, i), wsjsisj = group.mult_right(wsjsi, j);
          i64 lhs1 = chk_add(A(wsj, j), chk_add(A(wsisj, j), A(wsi, i)));
          i64 rhs1 = std::max({chk_add(chk_mul(2, A(wsisj, j)), A(w, i)),
                               chk_add(chk_mul(2, A(w, j)), A(wsisjsi, i)),
                               chk_add(A(w, j), chk_add(A(wsjsisj, j), A(wsi, i)))});
          record("BZ3-2a", w, i, j, lhs1, rhs1, rep.bz3);
          i64 lhs2 = chk_add(A(wsjsi, i), chk_add(chk_mul(2, A(wsisj, j)), A(wsi, i)));
          i64 rhs2 = std::max({chk_add(chk_mul(2, A(w, j)), chk_mul(2, A(wsisjsi, i))),
                               chk_add(chk_mul(2, A(wsjsisj, j)), chk_mul(2, A(wsi, i))),
                               chk_add(A(wsisjsi, i),
                                       chk_add(chk_mul(2, A(wsisj, j)), A(w, i)))});
          record("BZ3-2b", w, i, j, lhs2, rhs2, rep.bz3);
        } else if (ct(i, j) == -2 && ct(j, i) == -1) {
          int wsisjsi = group.mult_right(wsisj, i), wsjsisj = group.mult_right(wsjsi, j);
          i64 lhs1 = chk_add(A(wsjsi, i), chk_add(A(wsi, i), A(wsisj, j)));
          i64 rhs1 = std::max({chk_add(chk_mul(2, A(wsi, i)), A(wsjsisj, j)),
                               chk_add(chk_mul(2, A(wsisjsi, i)), A(w, j)),
                               chk_add(A(wsisjsi, i), chk_add(A(wsisj, j), A(w, i)))});
          record("BZ3-3a", w, i, j, lhs1, rhs1, rep.bz3);
          i64 lhs2 = chk_add(A(wsj, j), chk_add(chk_mul(2, A(wsi, i)), A(wsisj, j)));
          i64 rhs2 = std::max({chk_add(chk_mul(2, A(wsisjsi, i)), chk_mul(2, A(w, j))),
                               chk_add(chk_mul(2, A(w, i)), chk_mul(2, A(wsisj, j))),
                               chk_add(A(w, j),
                                       chk_add(chk_mul(2, A(wsi, i)), A(wsjsisj, j)))});
          record("BZ3-3b", w, i, j, lhs2, rhs2, rep.bz3);
        }
      }
  }
  return rep;
}

}  // namespace

BZReport verify_bz(const MVPolytope& p) {
  std::vector<Mat> dual = dual_weight_matrices(p.group());
  AView view{p.group(), dual, nullptr, &p};
  return run_bz(p.group(), view);
}

BZReport verify_bz_table(const WeylGroup& group,
                         const std::unordered_map<IntVec, i64, VecHash>& table,
                         const std::vector<Mat>& dual_mats) {
  AView view{group, dual_mats, &table, nullptr};
  return run_bz(group, view);
}

std::string polytope_to_json(const MVPolytope& p) {
  const WeylGroup& group = p.group();
  std::vector<int> order(group.size());
  for (size_t w = 0; w < group.size(); ++w) order[w] = int(w);
  std::vector<Word> words(group.size());
  for (size_t w = 0; w < group.size(); ++w) words[w] = group.canonical_word(int(w));
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (group.length(a) != group.length(b)) return group.length(a) < group.length(b);
    return words[size_t(a)] < words[size_t(b)];
  });
  nlohmann::json j;
  j["weight"] = p.weight();
  auto& vs = j["vertices"] = nlohmann::json::array();
  for (int w : order) {
    nlohmann::json v;
    v["word"] = nlohmann::json::array();
    for (int i : words[size_t(w)]) v["word"].push_back(i + 1);
    v["mu"] = p.vertex(w);
    vs.push_back(v);
  }
  auto& bz = j["bz"] = nlohmann::json::array();
  for (int w : order)
    for (int i = 0; i < group.rank(); ++i) {
      nlohmann::json e;
      e["w"] = nlohmann::json::array();
      for (int k : words[size_t(w)]) e["w"].push_back(k + 1);
      e["i"] = i + 1;
      e["A"] = p.A_minus(w, i);
      bz.push_back(e);
    }
  return j.dump(2);
}

}  // namespace mvkit
