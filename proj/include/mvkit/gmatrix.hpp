#pragma once

#include <string>

#include "mvkit/weyl.hpp"

namespace mvkit {

// g-matrix of the support tau-tilting pair attached to w: columns are the
// g-vectors, equal to the weight matrix of w.
Mat g_matrix(const WeylGroup& group, int w);

// c-matrix: inverse-transpose of the g-matrix; always integer valued.
Mat c_matrix(const WeylGroup& group, int w);

// The unique w whose chamber cone contains theta (exact rationals);
// error OnWall when theta lies on a wall.
int chamber_of(const WeylGroup& group, const std::vector<Rational>& theta);

// Permutation nu with w0(varpi_i) = -varpi_{nu(i)}.
std::vector<int> nakayama_involution(const WeylGroup& group);

struct SttiltLattice {
  struct Node {
    int w;
    Word word;  // canonical
    Mat g;
  };
  struct Edge {
    int from, to;  // node indices
    int i;         // mutated column
  };
  std::vector<Node> nodes;  // sorted by (length, canonical word)
  std::vector<Edge> edges;  // oriented toward longer element
};

// Full graded Hasse diagram of the right weak order with g-matrix labels.
SttiltLattice sttilt_hasse(const WeylGroup& group);

std::string sttilt_to_json(const SttiltLattice& lat);
std::string sttilt_to_dot(const SttiltLattice& lat);

}  // namespace mvkit
