#include <random>
#include <set>

#include "doctest.h"
#include "mvkit/gmatrix.hpp"
#include "mvkit/presets.hpp"

using namespace mvkit;

namespace {

Mat from_rows(std::initializer_list<std::initializer_list<i64>> rows) {
  int n = int(rows.size());
  Mat m(n, n);
  int r = 0;
  for (auto& row : rows) {
    int c = 0;
    for (i64 v : row) m(r, c++) = v;
    ++r;
  }
  return m;
}

std::vector<Rational> rational_vec(std::initializer_list<i64> v) {
  std::vector<Rational> out;
  for (i64 x : v) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("g-matrices of B2 elements") {
  WeylGroup g(preset_pair("B2"));
  CHECK(g_matrix(g, g.identity()) == Mat::identity(2));
  int s1 = g.simple(0), s2 = g.simple(1);
  CHECK(g_matrix(g, g.multiply(g.multiply(s2, s1), s2)) == from_rows({{1, 0}, {-2, -1}}));
  CHECK(g_matrix(g, g.multiply(g.multiply(s1, s2), s1)) == from_rows({{-1, -1}, {0, 1}}));
}

TEST_CASE("g-matrix of A3 simple reflection") {
  WeylGroup g(preset_pair("A3"));
  CHECK(g_matrix(g, g.simple(0)) == from_rows({{-1, 0, 0}, {1, 1, 0}, {0, 0, 1}}));
}

TEST_CASE("sigma* is a homomorphism") {
  for (const char* name : {"A2", "B2", "A3", "B3"}) {
    WeylGroup g(preset_pair(name));
    for (size_t u = 0; u < g.size(); ++u)
      for (size_t v = 0; v < g.size(); ++v)
        CHECK(g_matrix(g, g.multiply(int(u), int(v))) ==
              g_matrix(g, int(u)) * g_matrix(g, int(v)));
  }
}

TEST_CASE("c-matrices") {
  WeylGroup g(preset_pair("B2"));
  CHECK(c_matrix(g, g.identity()) == Mat::identity(2));
  CHECK(c_matrix(g, g.simple(0)) == from_rows({{-1, 2}, {0, 1}}));
}

TEST_CASE("c-matrix columns are roots of the transposed datum up to sign") {
  for (const char* name : {"B2", "A3", "B3"}) {
    WeylGroup g(preset_pair(name));
    WeylGroup gt(g.pair().transposed());
    std::set<IntVec> roots;
    for (const IntVec& r : gt.positive_roots_dual()) {
      roots.insert(r);
      roots.insert(vec_scale(-1, r));
    }
    for (size_t w = 0; w < g.size(); ++w) {
      Mat c = c_matrix(g, int(w));
      for (int i = 0; i < g.rank(); ++i) CHECK(roots.count(c.column(i)) == 1);
    }
  }
}

TEST_CASE("chamber membership") {
  WeylGroup g(preset_pair("B2"));
  CHECK(chamber_of(g, rational_vec({1, 1})) == g.identity());
  CHECK(chamber_of(g, rational_vec({-1, -1})) == g.longest());
  CHECK(chamber_of(g, rational_vec({-1, 3})) == g.simple(0));
  CHECK_THROWS_AS(chamber_of(g, rational_vec({1, 0})), domain_error);
}

TEST_CASE("chambers partition off-wall directions") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<i64> num(-40, 40);
  std::uniform_int_distribution<i64> den(1, 7);
  for (const char* name : {"B2", "A3"}) {
    WeylGroup g(preset_pair(name));
    int found = 0, tried = 0;
    while (tried < 1000) {
      std::vector<Rational> theta;
      for (int k = 0; k < g.rank(); ++k) theta.emplace_back(num(rng), den(rng));
      int hits = 0;
      bool wall = false;
      for (size_t w = 0; w < g.size(); ++w) {
        auto x = solve_rational(g.weight_matrix(int(w)), theta);
        REQUIRE(x.has_value());
        bool pos = true;
        for (const Rational& v : *x) {
          if (v.sign() == 0) wall = true;
          if (v.sign() <= 0) pos = false;
        }
        if (pos) ++hits;
      }
      if (wall) continue;  // walls excluded by the statement
      ++tried;
      CHECK(hits == 1);
      ++found;
    }
    CHECK(found == tried);
  }
}

TEST_CASE("nakayama involutions") {
  CHECK(nakayama_involution(WeylGroup(preset_pair("B2"))) == std::vector<int>{0, 1});
  CHECK(nakayama_involution(WeylGroup(preset_pair("A1"))) == std::vector<int>{0});
  CHECK(nakayama_involution(WeylGroup(preset_pair("A3"))) == std::vector<int>{2, 1, 0});
}

TEST_CASE("nakayama is an involution fixing the diagram") {
  for (const char* name : {"A2", "A3", "A4", "B3", "D4", "F4"}) {
    WeylGroup g(preset_pair(name));
    auto nu = nakayama_involution(g);
    for (int i = 0; i < g.rank(); ++i) {
      CHECK(nu[size_t(nu[size_t(i)])] == i);
      for (int j = 0; j < g.rank(); ++j)
        CHECK(g.pair().c(nu[size_t(i)], nu[size_t(j)]) == g.pair().c(i, j));
    }
  }
}

TEST_CASE("Hasse diagrams") {
  {
    SttiltLattice lat = sttilt_hasse(WeylGroup(preset_pair("B2")));
    CHECK(lat.nodes.size() == 8);
    CHECK(lat.edges.size() == 8);
  }
  {
    SttiltLattice lat = sttilt_hasse(WeylGroup(preset_pair("A3")));
    CHECK(lat.nodes.size() == 24);
  }
  {
    SttiltLattice lat = sttilt_hasse(WeylGroup(preset_pair("A1")));
    CHECK(lat.nodes.size() == 2);
    CHECK(lat.edges.size() == 1);
  }
}

TEST_CASE("Hasse edge count matches ascent counting") {
  for (const char* name : {"B2", "A3", "B3"}) {
    WeylGroup g(preset_pair(name));
    SttiltLattice lat = sttilt_hasse(g);
    size_t expected = 0;
    int sources = 0, sinks = 0;
    for (size_t w = 0; w < g.size(); ++w)
      expected += size_t(g.rank()) - g.descents_right(int(w)).size();
    CHECK(lat.edges.size() == expected);
    std::vector<int> indeg(lat.nodes.size(), 0), outdeg(lat.nodes.size(), 0);
    for (const auto& e : lat.edges) {
      ++outdeg[size_t(e.from)];
      ++indeg[size_t(e.to)];
    }
    for (size_t k = 0; k < lat.nodes.size(); ++k) {
      if (indeg[k] == 0) ++sources;
      if (outdeg[k] == 0) ++sinks;
    }
    CHECK(sources == 1);
    CHECK(sinks == 1);
  }
}

TEST_CASE("emitters are deterministic") {
  WeylGroup g(preset_pair("B2"));
  SttiltLattice lat = sttilt_hasse(g);
  CHECK(sttilt_to_json(lat) == sttilt_to_json(sttilt_hasse(g)));
  std::string dot = sttilt_to_dot(lat);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("\"e\"") != std::string::npos);
  CHECK(dot.find("\"1.2.1.2\"") != std::string::npos);
}
