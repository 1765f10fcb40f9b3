#pragma once

#include <string>

#include "mvkit/weyl.hpp"

namespace mvkit {

// A reduced word of w0 together with nonnegative layer multiplicities.
struct LusztigDatum {
  Word word;
  IntVec a;
};

enum class MoveKind { commutation, braid3, braid4_tp2, braid4_tp3 };

const char* move_kind_name(MoveKind k);

struct Move {
  int pos;  // 0-based window start
  MoveKind kind;
};

// Braid/commutation rewrite with the piecewise-linear transport of the
// multiplicities. Window conventions:
//   commutation: (x,y) with c_xy = 0, entries swap;
//   braid3:      (x,y,x) with c_xy*c_yx = 1, entries (a2+a3-p, p, a1+a2-p),
//                p = min(a1,a3);
//   braid4:      (x,y,x,y) with c_xy*c_yx = 2; the TP2 formulas apply when
//                c_xy = -2 and the TP3 formulas when c_xy = -1 (each is the
//                other's inverse at the rewritten window).
LusztigDatum apply_move(const CartanPair& pair, const LusztigDatum& datum, const Move& move);

// All applicable moves at every window of `word`.
std::vector<Move> find_moves(const CartanPair& pair, const Word& word);

// Word graph on the reduced words of w0 with typed move edges and a BFS
// spanning tree for transition routing.
class MoveGraph {
 public:
  // Error G2Unsupported on G2 content; CapExceeded past `cap` words
  // (default from MVKIT_SIZE_GUARD, else 10^6).
  explicit MoveGraph(const WeylGroup& group, size_t cap = 0);

  const WeylGroup& group() const { return *group_; }
  const std::vector<Word>& words() const { return words_; }  // sorted
  int word_index(const Word& w) const;

  struct Edge {
    int from, to;
    Move move;
  };
  const std::vector<Edge>& edges() const { return edges_; }

  // Word starting with letter i (lexicographically least such).
  const Word& initial_word(int i) const { return words_[size_t(initial_[size_t(i)])]; }

  LusztigDatum transition(const LusztigDatum& datum, const Word& target,
                          std::vector<Move>* trace = nullptr) const;

 private:
  const WeylGroup* group_;
  std::vector<Word> words_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> out_;           // edge ids by source
  std::vector<int> parent_edge_;                // BFS tree edge into node, -1 at root
  std::vector<int> initial_;                    // per generator

  LusztigDatum walk(const LusztigDatum& datum, int from, int to,
                    std::vector<Move>* trace) const;
};

std::string datum_to_json(const LusztigDatum& d);
LusztigDatum datum_from_json(const WeylGroup& group, const std::string& text);
std::string trace_to_json(const std::vector<Move>& trace);

}  // namespace mvkit
