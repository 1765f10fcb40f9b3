#include "mvkit/lusztig.hpp"

#include <algorithm>
#include <deque>

#include "json.hpp"

namespace mvkit {

const char* move_kind_name(MoveKind k) {
  switch (k) {
    case MoveKind::commutation: return "commutation";
    case MoveKind::braid3: return "braid3";
    case MoveKind::braid4_tp2: return "braid4-TP2";
    case MoveKind::braid4_tp3: return "braid4-TP3";
  }
  return "?";
}

namespace {

i64 min3(i64 a, i64 b, i64 c) { return std::min(a, std::min(b, c)); }

void require_window(bool ok) {
  if (!ok) fail(errc::bad_window, "move pattern does not match the window");
}

}  // namespace

LusztigDatum apply_move(const CartanPair& pair, const LusztigDatum& datum, const Move& move) {
  const Word& w = datum.word;
  const IntVec& a = datum.a;
  if (w.size() != a.size()) fail(errc::bad_input, "datum length mismatch");
  int p = move.pos;
  LusztigDatum out = datum;
  auto cij = [&](int x, int y) { return pair.c(x, y); };
  switch (move.kind) {
    case MoveKind::commutation: {
      require_window(p >= 0 && p + 1 < int(w.size()));
      int x = w[size_t(p)], y = w[size_t(p) + 1];
      require_window(x != y && cij(x, y) == 0);
      std::swap(out.word[size_t(p)], out.word[size_t(p) + 1]);
      std::swap(out.a[size_t(p)], out.a[size_t(p) + 1]);
      break;
    }
    case MoveKind::braid3: {
      require_window(p >= 0 && p + 2 < int(w.size()));
      int x = w[size_t(p)], y = w[size_t(p) + 1];
      require_window(x != y && cij(x, y) * cij(y, x) == 1 && w[size_t(p) + 2] == x);
      i64 a1 = a[size_t(p)], a2 = a[size_t(p) + 1], a3 = a[size_t(p) + 2];
      i64 q = std::min(a1, a3);
      out.a[size_t(p)] = chk_sub(chk_add(a2, a3), q);
      out.a[size_t(p) + 1] = q;
      out.a[size_t(p) + 2] = chk_sub(chk_add(a1, a2), q);
      out.word[size_t(p)] = y;
      out.word[size_t(p) + 1] = x;
      out.word[size_t(p) + 2] = y;
      break;
    }
    case MoveKind::braid4_tp2:
    case MoveKind::braid4_tp3: {
      require_window(p >= 0 && p + 3 < int(w.size()));
      int x = w[size_t(p)], y = w[size_t(p) + 1];
      require_window(x != y && w[size_t(p) + 2] == x && w[size_t(p) + 3] == y);
      i64 prod = chk_mul(cij(x, y), cij(y, x));
      if (prod == 3) fail(errc::g2_unsupported, "G2 braid moves are unsupported");
      require_window(prod == 2);
      bool want_tp2 = cij(x, y) == -2;
      require_window(want_tp2 == (move.kind == MoveKind::braid4_tp2));
      i64 a1 = a[size_t(p)], a2 = a[size_t(p) + 1], a3 = a[size_t(p) + 2], a4 = a[size_t(p) + 3];
      i64 p1 = min3(chk_add(a1, a2), chk_add(a1, a4), chk_add(a3, a4));
      if (want_tp2) {
        i64 p2 = min3(chk_add(a1, chk_mul(2, a2)), chk_add(a1, chk_mul(2, a4)),
                      chk_add(a3, chk_mul(2, a4)));
        out.a[size_t(p)] = chk_sub(chk_add(a2, chk_add(a3, a4)), p1);
        out.a[size_t(p) + 1] = chk_sub(chk_mul(2, p1), p2);
        out.a[size_t(p) + 2] = chk_sub(p2, p1);
        out.a[size_t(p) + 3] = chk_sub(chk_add(a1, chk_add(chk_mul(2, a2), a3)), p2);
      } else {
        i64 p2 = min3(chk_add(chk_mul(2, a1), a2), chk_add(chk_mul(2, a1), a4),
                      chk_add(chk_mul(2, a3), a4));
        out.a[size_t(p)] = chk_sub(chk_add(a2, chk_add(chk_mul(2, a3), a4)), p2);
        out.a[size_t(p) + 1] = chk_sub(p2, p1);
        out.a[size_t(p) + 2] = chk_sub(chk_mul(2, p1), p2);
        out.a[size_t(p) + 3] = chk_sub(chk_add(a1, chk_add(a2, a3)), p1);
      }
      out.word[size_t(p)] = y;
      out.word[size_t(p) + 1] = x;
      out.word[size_t(p) + 2] = y;
      out.word[size_t(p) + 3] = x;
      break;
    }
  }
  for (i64 v : out.a)
    if (v < 0)
      fail(errc::nonneg_violation, "move produced a negative multiplicity");
  return out;
}

std::vector<Move> find_moves(const CartanPair& pair, const Word& word) {
  std::vector<Move> out;
  int l = int(word.size());
  for (int p = 0; p + 1 < l; ++p) {
    int x = word[size_t(p)], y = word[size_t(p) + 1];
    if (x == y) continue;
    i64 prod = chk_mul(pair.c(x, y), pair.c(y, x));
    if (prod == 0) out.push_back({p, MoveKind::commutation});
    if (prod == 1 && p + 2 < l && word[size_t(p) + 2] == x) out.push_back({p, MoveKind::braid3});
    if (prod == 2 && p + 3 < l && word[size_t(p) + 2] == x && word[size_t(p) + 3] == y)
      out.push_back({p, pair.c(x, y) == -2 ? MoveKind::braid4_tp2 : MoveKind::braid4_tp3});
    if (prod == 3 && p + 2 < l && word[size_t(p) + 2] == x)
      fail(errc::g2_unsupported, "G2 braid moves are unsupported");
  }
  return out;
}

MoveGraph::MoveGraph(const WeylGroup& group, size_t cap) : group_(&group) {
  if (group.pair().has_g2_edge())
    fail(errc::g2_unsupported, "move graphs are unsupported for G2 content");
  if (cap == 0) cap = std::min<size_t>(default_size_guard(), 1'000'000);
  words_ = group.all_reduced_words(group.longest(), cap);
  const CartanPair& pair = group.pair();
  std::unordered_map<std::string, int> idx;
  auto key = [](const Word& w) {
    std::string s;
    for (int i : w) s += char('a' + i);
    return s;
  };
  for (size_t k = 0; k < words_.size(); ++k) idx.emplace(key(words_[k]), int(k));
  out_.assign(words_.size(), {});
  for (size_t k = 0; k < words_.size(); ++k) {
    for (const Move& m : find_moves(pair, words_[k])) {
      LusztigDatum d{words_[k], IntVec(words_[k].size(), 0)};
      Word target = apply_move(pair, d, m).word;
      edges_.push_back({int(k), idx.at(key(target)), m});
      out_[k].push_back(int(edges_.size()) - 1);
    }
  }
  // BFS tree rooted at the lexicographically least word
  parent_edge_.assign(words_.size(), -1);
  std::vector<bool> seen(words_.size(), false);
  std::deque<int> queue{0};
  seen[0] = true;
  size_t reached = 1;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int eid : out_[size_t(u)]) {
      int v = edges_[size_t(eid)].to;
      if (!seen[size_t(v)]) {
        seen[size_t(v)] = true;
        parent_edge_[size_t(v)] = eid;
        queue.push_back(v);
        ++reached;
      }
    }
  }
  if (reached != words_.size())
    fail(errc::non_termination, "move graph is disconnected");  // cannot happen (Matsumoto)
  initial_.assign(size_t(group.rank()), -1);
  for (size_t k = 0; k < words_.size(); ++k) {
    int first = words_[k][0];
    if (initial_[size_t(first)] < 0) initial_[size_t(first)] = int(k);
  }
}

int MoveGraph::word_index(const Word& w) const {
  auto it = std::lower_bound(words_.begin(), words_.end(), w);
  if (it == words_.end() || *it != w) return -1;
  return int(it - words_.begin());
}

namespace {

Move inverse_move(MoveKind k, int pos) {
  switch (k) {
    case MoveKind::commutation: return {pos, MoveKind::commutation};
    case MoveKind::braid3: return {pos, MoveKind::braid3};
    case MoveKind::braid4_tp2: return {pos, MoveKind::braid4_tp3};
    case MoveKind::braid4_tp3: return {pos, MoveKind::braid4_tp2};
  }
  return {pos, k};
}

}  // namespace

LusztigDatum MoveGraph::walk(const LusztigDatum& datum, int from, int to,
                             std::vector<Move>* trace) const {
  // route through the BFS tree root; correctness rests on path independence
  std::vector<Move> up;  // inverse moves from `from` up to the root
  for (int v = from; parent_edge_[size_t(v)] >= 0;) {
    const Edge& e = edges_[size_t(parent_edge_[size_t(v)])];
    up.push_back(inverse_move(e.move.kind, e.move.pos));
    v = e.from;
  }
  std::vector<Move> down;  // tree moves from the root down to `to`
  for (int v = to; parent_edge_[size_t(v)] >= 0;) {
    const Edge& e = edges_[size_t(parent_edge_[size_t(v)])];
    down.push_back(e.move);
    v = e.from;
  }
  std::reverse(down.begin(), down.end());
  LusztigDatum cur = datum;
  for (const Move& m : up) {
    cur = apply_move(group_->pair(), cur, m);
    if (trace) trace->push_back(m);
  }
  for (const Move& m : down) {
    cur = apply_move(group_->pair(), cur, m);
    if (trace) trace->push_back(m);
  }
  return cur;
}

LusztigDatum MoveGraph::transition(const LusztigDatum& datum, const Word& target,
                                   std::vector<Move>* trace) const {
  int from = word_index(datum.word);
  if (from < 0) fail(errc::not_reduced, "datum word is not a reduced word of w0");
  if (datum.a.size() != datum.word.size()) fail(errc::bad_input, "datum length mismatch");
  for (i64 v : datum.a)
    if (v < 0) fail(errc::negative_multiplicity, "negative multiplicity");
  int to = word_index(target);
  if (to < 0) fail(errc::not_reduced_target, "target is not a reduced word of w0");
  if (from == to) {
    if (trace) trace->clear();
    return datum;
  }
  return walk(datum, from, to, trace);
}

std::string datum_to_json(const LusztigDatum& d) {
  nlohmann::json j;
  j["word"] = nlohmann::json::array();
  for (int i : d.word) j["word"].push_back(i + 1);
  j["a"] = d.a;
  return j.dump(2);
}

LusztigDatum datum_from_json(const WeylGroup& group, const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    fail(errc::bad_input, std::string("invalid JSON: ") + e.what());
  }
  LusztigDatum d;
  for (auto& v : j.at("word")) d.word.push_back(v.get<int>() - 1);
  for (auto& v : j.at("a")) d.a.push_back(v.get<i64>());
  if (!group.is_reduced(d.word)) fail(errc::not_reduced, "word is not reduced");
  return d;
}

std::string trace_to_json(const std::vector<Move>& trace) {
  nlohmann::json j;
  auto& path = j["path"] = nlohmann::json::array();
  for (const Move& m : trace)
    path.push_back({{"pos", m.pos + 1}, {"kind", move_kind_name(m.kind)}});
  return j.dump(2);
}

}  // namespace mvkit
