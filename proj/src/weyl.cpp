#include "mvkit/weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace mvkit {

size_t default_size_guard() {
  if (const char* env = std::getenv("MVKIT_SIZE_GUARD")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return size_t(v);
  }
  return 10'000'000;
}

WeylGroup::WeylGroup(const CartanPair& pair, size_t size_guard) : pair_(pair) {
  if (!classify(pair).all_finite())
    fail(errc::not_finite_type, "Weyl group closure needs a finite-type Cartan pair");
  if (size_guard == 0) size_guard = default_size_guard();
  int n = pair_.rank();
  std::vector<Mat> gens(n);
  for (int i = 0; i < n; ++i) gens[i] = pair_.weight_reflection(i);

  mats_.push_back(Mat::identity(n));
  len_.push_back(0);
  index_.emplace(mats_[0], 0);
  std::vector<size_t> frontier{0};
  while (!frontier.empty()) {
    std::vector<size_t> next;
    for (size_t w : frontier) {
      for (int i = 0; i < n; ++i) {
        Mat m = mats_[w] * gens[i];
        if (index_.find(m) == index_.end()) {
          if (mats_.size() >= size_guard)
            fail(errc::size_guard, "Weyl group exceeds the size guard");
          index_.emplace(m, int(mats_.size()));
          mats_.push_back(std::move(m));
          len_.push_back(len_[w] + 1);
          next.push_back(mats_.size() - 1);
        }
      }
    }
    frontier = std::move(next);
  }
  size_t N = mats_.size();
  right_.assign(N, std::vector<int>(n));
  left_.assign(N, std::vector<int>(n));
  for (size_t w = 0; w < N; ++w)
    for (int i = 0; i < n; ++i) {
      right_[w][size_t(i)] = index_.at(mats_[w] * gens[i]);
      left_[w][size_t(i)] = index_.at(gens[i] * mats_[w]);
    }
  for (size_t w = 0; w < N; ++w)
    if (len_[w] > len_[size_t(w0_)]) w0_ = int(w);
}

int WeylGroup::multiply(int u, int v) const {
  int w = u;
  for (int i : canonical_word(v)) w = mult_right(w, i);
  return w;
}

int WeylGroup::invert(int w) const { return from_matrix(integer_inverse(mats_[size_t(w)])); }

Mat WeylGroup::rank_matrix(int w) const {
  Mat m = Mat::identity(rank());
  for (int i : canonical_word(w)) m = m * pair_.rank_reflection(i);
  return m;
}

int WeylGroup::from_matrix(const Mat& m) const {
  auto it = index_.find(m);
  return it == index_.end() ? -1 : it->second;
}

int WeylGroup::from_word(const Word& word) const {
  int w = 0;
  for (int i : word) {
    if (i < 0 || i >= rank()) fail(errc::bad_input, "generator index out of range");
    w = mult_right(w, i);
  }
  return w;
}

Word WeylGroup::canonical_word(int w) const {
  Word out;
  while (len_[size_t(w)] > 0) {
    for (int i = 0; i < rank(); ++i) {
      int u = mult_left(i, w);
      if (len_[size_t(u)] < len_[size_t(w)]) {
        out.push_back(i);
        w = u;
        break;
      }
    }
  }
  return out;
}

std::vector<Word> WeylGroup::all_reduced_words(int w, size_t cap) const {
  std::vector<Word> out;
  Word acc;
  // peel right descents; collected words come out in reverse
  auto rec = [&](auto&& self, int u) -> void {
    if (len_[size_t(u)] == 0) {
      if (out.size() >= cap) fail(errc::cap_exceeded, "too many reduced words");
      out.emplace_back(acc.rbegin(), acc.rend());
      return;
    }
    for (int i = 0; i < rank(); ++i) {
      int v = mult_right(u, i);
      if (len_[size_t(v)] < len_[size_t(u)]) {
        acc.push_back(i);
        self(self, v);
        acc.pop_back();
      }
    }
  };
  rec(rec, w);
  std::sort(out.begin(), out.end());
  return out;
}

bool WeylGroup::is_reduced(const Word& word) const {
  int w = 0, l = 0;
  for (int i : word) {
    if (i < 0 || i >= rank()) fail(errc::bad_input, "generator index out of range");
    int u = mult_right(w, i);
    if (len_[size_t(u)] != l + 1) return false;
    w = u;
    ++l;
  }
  return true;
}

std::vector<int> WeylGroup::descents_right(int w) const {
  std::vector<int> out;
  for (int i = 0; i < rank(); ++i)
    if (len_[size_t(mult_right(w, i))] < len_[size_t(w)]) out.push_back(i);
  return out;
}

bool WeylGroup::weak_order_leq(int u, int v) const {
  return length(u) + length(multiply(invert(u), v)) == length(v);
}

int WeylGroup::parabolic_longest(const std::vector<int>& j_subset) const {
  int best = 0;
  std::vector<int> stack{0};
  std::set<int> seen{0};
  while (!stack.empty()) {
    int w = stack.back();
    stack.pop_back();
    if (length(w) > length(best)) best = w;
    for (int i : j_subset) {
      int u = mult_right(w, i);
      if (seen.insert(u).second) stack.push_back(u);
    }
  }
  return best;
}

std::vector<IntVec> WeylGroup::positive_roots_dual() const {
  std::set<IntVec> pos;
  int n = rank();
  for (size_t w = 0; w < size(); ++w) {
    Mat rm = rank_matrix(int(w));
    for (int i = 0; i < n; ++i) {
      IntVec r = rm.column(i);
      bool nonneg = std::all_of(r.begin(), r.end(), [](i64 v) { return v >= 0; });
      if (nonneg) pos.insert(r);
    }
  }
  return {pos.begin(), pos.end()};
}

int WeylGroup::inversion_count(int w) const {
  Mat rm = rank_matrix(invert(w));
  int count = 0;
  for (const IntVec& beta : positive_roots_dual()) {
    IntVec img = rm * beta;
    bool nonpos = std::all_of(img.begin(), img.end(), [](i64 v) { return v <= 0; });
    if (nonpos && !is_zero(img)) ++count;
  }
  return count;
}

std::vector<IntVec> WeylGroup::chamber_weights() const {
  std::set<IntVec> out;
  for (size_t w = 0; w < size(); ++w)
    for (int i = 0; i < rank(); ++i) out.insert(mats_[w].column(i));
  return {out.begin(), out.end()};
}

}  // namespace mvkit
