#include <map>
#include <random>

#include "doctest.h"
#include "mvkit/crystal.hpp"
#include "mvkit/presets.hpp"

using namespace mvkit;

namespace {

struct Setup {
  WeylGroup group;
  MoveGraph mg;
  Crystal crystal;
  explicit Setup(const char* name)
      : group(preset_pair(name)), mg(group), crystal(group, mg) {}
};

}  // namespace

TEST_CASE("the zero element") {
  Setup s("B2");
  const Crystal& c = s.crystal;
  IntVec z = c.zero();
  CHECK(c.wt(z) == IntVec{0, 0});
  for (int i = 0; i < 2; ++i) {
    CHECK(c.phi(z, i) == 0);
    CHECK(c.eps(z, i) == 0);
    CHECK(!c.f(z, i).has_value());
  }
  CHECK(c.star(z) == z);
}

TEST_CASE("phi via initial words") {
  Setup s("B2");
  const Crystal& c = s.crystal;
  IntVec a{1, 0, 0, 0};  // on the reference word (1,2,1,2)
  CHECK(c.phi(a, 0) == 1);
  CHECK(c.phi(a, 1) == 0);
  CHECK(c.wt(a) == IntVec{1, 0});
}

TEST_CASE("e and f walk the first entry") {
  Setup s("B2");
  const Crystal& c = s.crystal;
  for (int i = 0; i < 2; ++i) {
    IntVec up = c.e(c.zero(), i);
    CHECK(c.wt(up) == unit_vec(2, i));
    CHECK(c.phi(up, i) == 1);
    auto down = c.f(up, i);
    REQUIRE(down.has_value());
    CHECK(*down == c.zero());
    CHECK(c.f_max(up, i) == c.zero());
  }
}

TEST_CASE("cr1 pairing convention") {
  Setup s("B2");
  const Crystal& c = s.crystal;
  for (int i = 0; i < 2; ++i) {
    IntVec b = c.e(c.zero(), i);
    CHECK(c.eps(b, i) == c.phi(b, i) - c.pairing_wt_alpha(b, i));
    CHECK(c.pairing_wt_alpha(b, i) == 2);  // <alpha_i, alpha_i> = 2
  }
}

TEST_CASE("star on B2 data") {
  Setup s("B2");
  const Crystal& c = s.crystal;
  // (1,0,0,0) on (1,2,1,2) reverses to (0,0,0,1) on (2,1,2,1); canonically
  // equal to its own class under the flip
  IntVec a{1, 0, 0, 0};
  IntVec st = c.star(a);
  CHECK(c.wt(st) == c.wt(a));
  CHECK(c.star(st) == a);
  LusztigDatum reversed{{1, 0, 1, 0}, {0, 0, 0, 1}};
  CHECK(st == c.canonicalize(reversed));
}

TEST_CASE("star is a weight-preserving involution") {
  for (const char* name : {"A2", "A3", "B2", "C2"}) {
    Setup s(name);
    const Crystal& c = s.crystal;
    for (const IntVec& a : c.elements_up_to(5)) {
      CHECK(c.wt(c.star(a)) == c.wt(a));
      CHECK(c.star(c.star(a)) == a);
    }
  }
}

TEST_CASE("starred operators are star conjugates") {
  Setup s("B2");
  const Crystal& c = s.crystal;
  for (const IntVec& a : c.elements_up_to(5)) {
    for (int i = 0; i < 2; ++i) {
      CHECK(c.e_star(a, i) == c.star(c.e(c.star(a), i)));
      CHECK(c.phi_star(a, i) == c.phi(c.star(a), i));
      auto f1 = c.f_star(a, i);
      auto f2 = c.f(c.star(a), i);
      CHECK(f1.has_value() == f2.has_value());
      if (f1) CHECK(*f1 == c.star(*f2));
    }
  }
}

TEST_CASE("saito reflections") {
  Setup s("B2");
  const Crystal& c = s.crystal;
  for (int i = 0; i < 2; ++i) CHECK(c.saito(c.zero(), i) == c.zero());
  // B2 word shift: (0, a2, a3, a4) on (1,2,1,2) -> (a2, a3, a4, 0) on (2,1,2,1)
  IntVec a{0, 2, 1, 3};
  IntVec r = c.saito(a, 0);
  CHECK(r == c.canonicalize({{1, 0, 1, 0}, {2, 1, 3, 0}}));
  // weight law: wt(S_i b) = r_i wt(b)
  CHECK(c.wt(r) == s.group.pair().rank_reflection(0) * c.wt(a));
  // defined only on phi_i = 0
  CHECK_THROWS_AS(c.saito({1, 0, 0, 0}, 0), domain_error);
}

TEST_CASE("saito word-shift equals the operator composition") {
  for (const char* name : {"A2", "B2", "C2", "A3"}) {
    Setup s(name);
    const Crystal& c = s.crystal;
    for (const IntVec& a : c.elements_up_to(5)) {
      for (int i = 0; i < s.group.rank(); ++i) {
        if (c.phi(a, i) != 0) continue;
        IntVec r1 = c.saito(a, i);
        CHECK(r1 == c.saito_via_operators(a, i));
        CHECK(c.wt(r1) == s.group.pair().rank_reflection(i) * c.wt(a));
        // starred version on phi* = 0
        if (c.phi_star(a, i) == 0)
          CHECK(c.saito_star(a, i) == c.star(c.saito(c.star(a), i)));
      }
    }
  }
}

TEST_CASE("pbw unwinding") {
  Setup s("B2");
  const Crystal& c = s.crystal;
  Word ref = c.reference_word();
  Word other{1, 0, 1, 0};
  CHECK(c.pbw_unwind(c.zero(), ref) == IntVec{0, 0, 0, 0});
  for (const IntVec& a : c.elements_up_to(6)) {
    CHECK(c.pbw_unwind(a, ref) == a);  // definitional round trip
    CHECK(c.pbw_unwind(a, other) == s.mg.transition({ref, a}, other).a);
  }
  CHECK(c.pbw_unwind({1, 1, 1, 1}, other) == IntVec{1, 1, 1, 1});
  CHECK_THROWS_AS(c.pbw_unwind(c.zero(), {0, 1, 1, 0}), domain_error);
}

TEST_CASE("pbw matches transitions on random words in rank three") {
  std::mt19937 rng(53);
  for (const char* name : {"A3", "B3"}) {
    Setup s(name);
    const Crystal& c = s.crystal;
    Word ref = c.reference_word();
    std::uniform_int_distribution<size_t> pick(0, s.mg.words().size() - 1);
    std::uniform_int_distribution<i64> dist(0, 3);
    for (int t = 0; t < 60; ++t) {
      IntVec a(ref.size());
      for (auto& v : a) v = dist(rng);
      a = c.canonicalize({ref, a});
      Word word = s.mg.words()[pick(rng)];
      CHECK(c.pbw_unwind(a, word) == s.mg.transition({ref, a}, word).a);
    }
  }
}

TEST_CASE("kostant partition counts") {
  {
    Setup s("A2");
    CHECK(s.crystal.kostant_count({1, 1}) == 2);
    CHECK(s.crystal.kostant_count({0, 0}) == 1);
    CHECK(s.crystal.kostant_count({1, 0}) == 1);
  }
  {
    Setup s("B2");
    CHECK(s.crystal.kostant_count({1, 1}) == 2);   // alpha_1+alpha_2 or the T-layer
    CHECK(s.crystal.kostant_count({1, 2}) == 3);
    CHECK(s.crystal.kostant_count({2, 2}) == 4);
  }
}

TEST_CASE("element counts per weight equal the Kostant counts") {
  for (const char* name : {"A2", "B2"}) {
    Setup s(name);
    const Crystal& c = s.crystal;
    std::map<IntVec, i64> counts;
    for (const IntVec& a : c.elements_up_to(6)) counts[c.wt(a)] += 1;
    for (const auto& [nu, k] : counts) CHECK(k == c.kostant_count(nu));
  }
}

TEST_CASE("crystal enumeration and graph") {
  Setup s("B2");
  CrystalGraph g0 = enumerate_crystal(s.crystal, 0);
  CHECK(g0.nodes.size() == 1);
  CHECK(g0.arrows.empty());
  CrystalGraph g3 = enumerate_crystal(s.crystal, 3);
  CHECK(g3.nodes.size() > 1);
  for (const auto& arrow : g3.arrows) {
    CHECK(s.crystal.e(g3.nodes[size_t(arrow.from)].a, arrow.i) ==
          g3.nodes[size_t(arrow.to)].a);
  }
  std::string dot = crystal_graph_to_dot(g3);
  CHECK(dot.find("digraph") != std::string::npos);
  std::string json = crystal_graph_to_json(g3);
  CHECK(json.find("\"arrows\"") != std::string::npos);
}

TEST_CASE("crystal phi matches the polytope BZ value at the simple reflections") {
  for (const char* name : {"A2", "B2", "C2"}) {
    Setup s(name);
    const Crystal& c = s.crystal;
    for (const IntVec& a : c.elements_up_to(5)) {
      MVPolytope p = c.polytope(a);
      for (int i = 0; i < s.group.rank(); ++i)
        CHECK(c.phi(a, i) == p.A_minus(s.group.simple(i), i));
    }
  }
}

TEST_CASE("tingley-webster verification passes") {
  {
    Setup s("A1");
    TWReport rep = verify_tingley_webster(s.crystal, 5);
    CHECK(rep.ok);
    CHECK(rep.elements == 6);
  }
  {
    Setup s("B2");
    TWReport rep = verify_tingley_webster(s.crystal, 6);
    CHECK(rep.ok);
    if (!rep.ok)
      for (const auto& v : rep.violations) MESSAGE(v);
  }
}

TEST_CASE("fault injection is caught") {
  Setup s("B2");
  TWOptions opts;
  opts.fault_f = true;
  TWReport rep = verify_tingley_webster(s.crystal, 4, opts);
  CHECK(!rep.ok);
  CHECK(!rep.violations.empty());
}

TEST_CASE("G2 is rejected by the crystal layer") {
  WeylGroup g(preset_pair("G2"));
  CHECK_THROWS_AS(MoveGraph{g}, domain_error);
}
