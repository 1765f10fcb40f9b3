#include <random>

#include "doctest.h"
#include "mvkit/layers.hpp"
#include "mvkit/lusztig.hpp"
#include "mvkit/presets.hpp"

using namespace mvkit;

namespace {

IntVec datum_weight(const WeylGroup& g, const LusztigDatum& d) {
  LayerSequence seq = beta_sequence(g, d.word);
  return hn_weight(seq, d.a);
}

}  // namespace

TEST_CASE("braid3 move") {
  CartanPair p = preset_pair("A2");
  LusztigDatum d{{0, 1, 0}, {1, 0, 2}};
  LusztigDatum r = apply_move(p, d, {0, MoveKind::braid3});
  CHECK(r.word == Word{1, 0, 1});
  CHECK(r.a == IntVec{1, 1, 0});
  // involution
  LusztigDatum back = apply_move(p, r, {0, MoveKind::braid3});
  CHECK(back.word == d.word);
  CHECK(back.a == d.a);
}

TEST_CASE("commutation move") {
  CartanPair p = preset_pair("A3");
  LusztigDatum d{{0, 2, 0, 1, 2, 1}, {5, 7, 0, 1, 2, 3}};
  LusztigDatum r = apply_move(p, d, {0, MoveKind::commutation});
  CHECK(r.word == Word{2, 0, 0, 1, 2, 1});
  CHECK(r.a == IntVec{7, 5, 0, 1, 2, 3});
}

TEST_CASE("doubled braid move, table instance") {
  CartanPair p = preset_pair("B2");
  // window (2,1,2,1) carries the letter with c_xy = -2 first
  LusztigDatum d{{1, 0, 1, 0}, {1, 1, 2, 2}};
  LusztigDatum r = apply_move(p, d, {0, MoveKind::braid4_tp2});
  CHECK(r.word == Word{0, 1, 0, 1});
  CHECK(r.a == IntVec{3, 1, 1, 2});
  LusztigDatum back = apply_move(p, r, {0, MoveKind::braid4_tp3});
  CHECK(back.a == d.a);
}

TEST_CASE("window mismatches are rejected") {
  CartanPair p = preset_pair("B2");
  LusztigDatum d{{0, 1, 0, 1}, {0, 0, 0, 0}};
  CHECK_THROWS_AS(apply_move(p, d, {0, MoveKind::braid3}), domain_error);
  CHECK_THROWS_AS(apply_move(p, d, {0, MoveKind::commutation}), domain_error);
  CHECK_THROWS_AS(apply_move(p, d, {0, MoveKind::braid4_tp2}), domain_error);  // wrong side
  CHECK_THROWS_AS(apply_move(p, d, {3, MoveKind::braid4_tp3}), domain_error);  // out of range
}

TEST_CASE("moves are involutive and conserve the weight") {
  std::mt19937 rng(9);
  for (const char* name : {"A2", "B2", "C2"}) {
    CartanPair p = preset_pair(name);
    WeylGroup g(p);
    Word w0_word = g.all_reduced_words(g.longest(), 10)[0];
    int l = int(w0_word.size());
    // exhaustive in rank 2, entries <= 6
    std::vector<IntVec> data;
    IntVec cur(size_t(l), 0);
    auto rec = [&](auto&& self, int k) -> void {
      if (k == l) {
        data.push_back(cur);
        return;
      }
      for (i64 v = 0; v <= 6; ++v) {
        cur[size_t(k)] = v;
        self(self, k + 1);
      }
    };
    rec(rec, 0);
    for (const IntVec& a : data) {
      LusztigDatum d{w0_word, a};
      for (const Move& m : find_moves(p, w0_word)) {
        LusztigDatum r = apply_move(p, d, m);
        CHECK(datum_weight(g, r) == datum_weight(g, d));
        Move inv{m.pos, r.word == d.word ? m.kind
                 : m.kind == MoveKind::braid4_tp2 ? MoveKind::braid4_tp3
                 : m.kind == MoveKind::braid4_tp3 ? MoveKind::braid4_tp2
                                                  : m.kind};
        LusztigDatum back = apply_move(p, r, inv);
        CHECK(back.word == d.word);
        CHECK(back.a == d.a);
      }
    }
  }
  // randomized in rank 3
  for (const char* name : {"A3", "B3"}) {
    CartanPair p = preset_pair(name);
    WeylGroup g(p);
    MoveGraph mg(g);
    std::uniform_int_distribution<i64> dist(0, 9);
    std::uniform_int_distribution<size_t> pick(0, mg.words().size() - 1);
    for (int t = 0; t < 300; ++t) {
      Word w = mg.words()[pick(rng)];
      IntVec a(w.size());
      for (auto& v : a) v = dist(rng);
      LusztigDatum d{w, a};
      for (const Move& m : find_moves(p, w)) {
        LusztigDatum r = apply_move(p, d, m);
        CHECK(datum_weight(g, r) == datum_weight(g, d));
      }
    }
  }
}

TEST_CASE("move graph shapes") {
  {
    WeylGroup g(preset_pair("B2"));
    MoveGraph mg(g);
    CHECK(mg.words().size() == 2);
    REQUIRE(mg.edges().size() == 2);  // one move seen from both endpoints
    CHECK(mg.edges()[0].move.kind == MoveKind::braid4_tp3);
    CHECK(mg.edges()[1].move.kind == MoveKind::braid4_tp2);
  }
  {
    WeylGroup g(preset_pair("A2"));
    MoveGraph mg(g);
    CHECK(mg.words().size() == 2);
    CHECK(mg.edges()[0].move.kind == MoveKind::braid3);
  }
  {
    WeylGroup g(preset_pair("A3"));
    MoveGraph mg(g);
    CHECK(mg.words().size() == 16);
  }
  {
    WeylGroup g(preset_pair("B3"));
    MoveGraph mg(g);
    CHECK(mg.words().size() == 42);
  }
}

TEST_CASE("initial words start with each letter") {
  WeylGroup g(preset_pair("A3"));
  MoveGraph mg(g);
  for (int i = 0; i < 3; ++i) CHECK(mg.initial_word(i)[0] == i);
}

TEST_CASE("transition basics") {
  WeylGroup g(preset_pair("B2"));
  MoveGraph mg(g);
  LusztigDatum d{{0, 1, 0, 1}, {1, 2, 3, 4}};
  // identity transport
  LusztigDatum same = mg.transition(d, {0, 1, 0, 1});
  CHECK(same.a == d.a);
  // round trip
  LusztigDatum there = mg.transition(d, {1, 0, 1, 0});
  LusztigDatum back = mg.transition(there, {0, 1, 0, 1});
  CHECK(back.a == d.a);
  // a fixed point of the flip
  LusztigDatum ones{{0, 1, 0, 1}, {1, 1, 1, 1}};
  CHECK(mg.transition(ones, {1, 0, 1, 0}).a == IntVec{1, 1, 1, 1});
  // a tabulated instance
  LusztigDatum t{{1, 0, 1, 0}, {1, 1, 2, 2}};
  CHECK(mg.transition(t, {0, 1, 0, 1}).a == IntVec{3, 1, 1, 2});
}

TEST_CASE("transition records a trace") {
  WeylGroup g(preset_pair("A3"));
  MoveGraph mg(g);
  Word from = mg.words()[0];
  Word to = mg.words()[13];
  LusztigDatum d{from, IntVec(6, 1)};
  std::vector<Move> trace;
  LusztigDatum r = mg.transition(d, to, &trace);
  CHECK(!trace.empty());
  LusztigDatum replay = d;
  for (const Move& m : trace) replay = apply_move(g.pair(), replay, m);
  CHECK(replay.word == to);
  CHECK(replay.a == r.a);
  std::string j = trace_to_json(trace);
  CHECK(j.find("\"kind\"") != std::string::npos);
}

TEST_CASE("transition rejects bad words") {
  WeylGroup g(preset_pair("B2"));
  MoveGraph mg(g);
  LusztigDatum d{{0, 1, 0, 1}, {1, 0, 0, 0}};
  CHECK_THROWS_AS(mg.transition(d, {0, 1, 1, 0}), domain_error);
  LusztigDatum bad{{0, 1, 1, 0}, {1, 0, 0, 0}};
  CHECK_THROWS_AS(mg.transition(bad, {0, 1, 0, 1}), domain_error);
}

TEST_CASE("G2 content is rejected") {
  WeylGroup g(preset_pair("G2"));
  CHECK_THROWS_AS(MoveGraph{g}, domain_error);
  try {
    MoveGraph mg(g);
  } catch (const domain_error& e) {
    CHECK(e.code() == errc::g2_unsupported);
  }
}

TEST_CASE("path independence across every move graph edge") {
  // transporting along the spanning tree agrees with every direct move edge
  for (const char* name : {"A2", "B2", "A3"}) {
    WeylGroup g(preset_pair(name));
    MoveGraph mg(g);
    Word ref = mg.words()[0];
    int l = int(ref.size());
    i64 maxe = l <= 4 ? 4 : 2;
    IntVec cur(size_t(l), 0);
    auto rec = [&](auto&& self, int k) -> void {
      if (k == l) {
        std::vector<IntVec> at(mg.words().size());
        for (size_t v = 0; v < mg.words().size(); ++v)
          at[v] = mg.transition({ref, cur}, mg.words()[v]).a;
        for (const auto& e : mg.edges()) {
          LusztigDatum moved =
              apply_move(g.pair(), {mg.words()[size_t(e.from)], at[size_t(e.from)]}, e.move);
          CHECK(moved.a == at[size_t(e.to)]);
        }
        return;
      }
      for (i64 v = 0; v <= maxe; ++v) {
        cur[size_t(k)] = v;
        self(self, k + 1);
      }
    };
    rec(rec, 0);
  }
}

TEST_CASE("datum JSON round trip") {
  WeylGroup g(preset_pair("B2"));
  LusztigDatum d{{0, 1, 0, 1}, {3, 0, 1, 2}};
  LusztigDatum r = datum_from_json(g, datum_to_json(d));
  CHECK(r.word == d.word);
  CHECK(r.a == d.a);
}
