#include "mvkit/cartan.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "json.hpp"

namespace mvkit {

Mat CartanPair::weight_reflection(int i) const {
  Mat s = Mat::identity(n_);
  for (int r = 0; r < n_; ++r) s(r, i) = chk_sub(s(r, i), c_(r, i));
  return s;
}

Mat CartanPair::rank_reflection(int i) const {
  Mat r = Mat::identity(n_);
  for (int c = 0; c < n_; ++c) r(i, c) = chk_sub(r(i, c), c_(i, c));
  return r;
}

i64 CartanPair::g_val(int i, int j) const {
  if (c_(i, j) >= 0) fail(errc::bad_input, "g_ij needs c_ij < 0");
  return std::gcd(c_(i, j) < 0 ? -c_(i, j) : c_(i, j), c_(j, i) < 0 ? -c_(j, i) : c_(j, i));
}

i64 CartanPair::f_val(int i, int j) const { return (-c_(i, j)) / g_val(i, j); }

CartanPair CartanPair::transposed() const {
  Mat ct = c_.transposed();
  return validate_gcm(ct);
}

bool CartanPair::has_g2_edge() const {
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (chk_mul(c_(i, j), c_(j, i)) == 3) return true;
  return false;
}

namespace {

void check_gcm_shape(const Mat& c) {
  int n = c.rows();
  if (n == 0 || c.cols() != n) fail(errc::not_gcm, "matrix must be square and nonempty");
  for (int i = 0; i < n; ++i) {
    if (c(i, i) != 2) fail(errc::not_gcm, "diagonal entry is not 2");
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (c(i, j) > 0) fail(errc::not_gcm, "positive off-diagonal entry");
      if ((c(i, j) == 0) != (c(j, i) == 0)) fail(errc::not_gcm, "zero pattern is not symmetric");
    }
  }
}

std::vector<std::vector<int>> components_of(const Mat& c) {
  int n = c.rows();
  std::vector<int> comp(n, -1);
  int nc = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = nc;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int u = 0; u < n; ++u)
        if (u != v && c(v, u) != 0 && comp[u] < 0) {
          comp[u] = nc;
          q.push(u);
        }
    }
    ++nc;
  }
  std::vector<std::vector<int>> out(nc);
  for (int v = 0; v < n; ++v) out[comp[v]].push_back(v);
  return out;
}

}  // namespace

IntVec minimal_symmetrizer(const Mat& c) {
  check_gcm_shape(c);
  int n = c.rows();
  std::vector<Rational> d(n, Rational(0));
  for (const auto& comp : components_of(c)) {
    d[comp[0]] = Rational(1);
    std::queue<int> q;
    q.push(comp[0]);
    std::vector<bool> seen(n, false);
    seen[comp[0]] = true;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int u = 0; u < n; ++u) {
        if (u == v || c(v, u) == 0) continue;
        // d_v * c_vu = d_u * c_uv
        Rational want = d[v] * Rational(c(v, u), c(u, v));
        if (!seen[u]) {
          d[u] = want;
          seen[u] = true;
          q.push(u);
        } else if (d[u] != want) {
          fail(errc::not_symmetrizable, "no positive symmetrizer exists");
        }
      }
    }
    // clear denominators, then divide by the common gcd
    i64 lcm_den = 1;
    for (int v : comp) lcm_den = std::lcm(lcm_den, d[v].den());
    i64 g = 0;
    for (int v : comp) {
      d[v] = d[v] * Rational(lcm_den);
      g = std::gcd(g, d[v].num());
    }
    for (int v : comp) d[v] = Rational(d[v].num() / g);
  }
  IntVec out(n);
  for (int i = 0; i < n; ++i) out[i] = d[i].num();
  return out;
}

CartanPair validate_gcm(const Mat& c, const std::optional<IntVec>& symmetrizer,
                        const std::optional<CartanPair::Orientation>& omega) {
  check_gcm_shape(c);
  int n = c.rows();
  IntVec d;
  if (symmetrizer) {
    d = *symmetrizer;
    if (int(d.size()) != n) fail(errc::bad_symmetrizer, "symmetrizer length mismatch");
    for (i64 v : d)
      if (v <= 0) fail(errc::bad_symmetrizer, "symmetrizer entries must be positive");
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (chk_mul(d[i], c(i, j)) != chk_mul(d[j], c(j, i)))
          fail(errc::bad_symmetrizer, "DC is not symmetric");
  } else {
    d = minimal_symmetrizer(c);
  }
  if (omega) {
    for (auto [i, j] : *omega) {
      if (i < 0 || j < 0 || i >= n || j >= n || i == j)
        fail(errc::bad_orientation, "orientation index out of range");
      if (c(i, j) >= 0) fail(errc::bad_orientation, "orientation on a non-edge");
    }
    // acyclicity of the directed graph
    std::vector<int> state(n, 0);
    std::function<bool(int)> dfs = [&](int v) {
      state[v] = 1;
      for (auto [a, b] : *omega)
        if (a == v) {
          if (state[b] == 1) return false;
          if (state[b] == 0 && !dfs(b)) return false;
        }
      state[v] = 2;
      return true;
    };
    for (int v = 0; v < n; ++v)
      if (state[v] == 0 && !dfs(v)) fail(errc::bad_orientation, "orientation has a cycle");
  }
  return CartanPair(n, c, d, omega);
}

i64 quadratic_form(const CartanPair& pair, const IntVec& x) {
  int n = pair.rank();
  if (int(x.size()) != n) fail(errc::bad_input, "vector length mismatch");
  i64 s = 0;
  for (int i = 0; i < n; ++i) s = chk_add(s, chk_mul(pair.d(i), chk_mul(x[i], x[i])));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      s = chk_add(s, chk_mul(chk_mul(pair.d(i), pair.c(i, j)), chk_mul(x[i], x[j])));
  return s;
}

i64 euler_form(const CartanPair& pair, const IntVec& a, const IntVec& b) {
  if (!pair.orientation()) fail(errc::missing_orientation, "euler_form needs an orientation");
  int n = pair.rank();
  if (int(a.size()) != n || int(b.size()) != n) fail(errc::bad_input, "vector length mismatch");
  i64 s = 0;
  for (int i = 0; i < n; ++i) s = chk_add(s, chk_mul(pair.d(i), chk_mul(a[i], b[i])));
  for (auto [p, q] : *pair.orientation())
    s = chk_add(s, chk_mul(chk_mul(pair.d(p), pair.c(p, q)), chk_mul(a[p], b[q])));
  return s;
}

i64 symmetric_form(const CartanPair& pair, const IntVec& a, const IntVec& b) {
  // (a,b)_C = sum_i c_i a_i b_i * 2-ish via both Euler orders; independent of
  // orientation, so compute directly from DC.
  int n = pair.rank();
  if (int(a.size()) != n || int(b.size()) != n) fail(errc::bad_input, "vector length mismatch");
  i64 s = 0;
  for (int i = 0; i < n; ++i)
    s = chk_add(s, chk_mul(2 * pair.d(i), chk_mul(a[i], b[i])));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) s = chk_add(s, chk_mul(chk_mul(pair.d(i), pair.c(i, j)), chk_mul(a[i], b[j])));
  return s;
}

namespace {

struct EdgeInfo {
  int a, b;
  i64 product;
};

std::string finite_label(const Mat& c, const std::vector<int>& comp) {
  int m = int(comp.size());
  if (m == 1) return "A1";
  std::vector<EdgeInfo> edges;
  std::vector<int> deg(m, 0);
  for (int x = 0; x < m; ++x)
    for (int y = x + 1; y < m; ++y)
      if (c(comp[x], comp[y]) != 0) {
        edges.push_back({x, y, chk_mul(c(comp[x], comp[y]), c(comp[y], comp[x]))});
        ++deg[x];
        ++deg[y];
      }
  i64 maxp = 0;
  int n2 = 0, n3 = 0;
  for (auto& e : edges) {
    maxp = std::max(maxp, e.product);
    if (e.product == 2) ++n2;
    if (e.product == 3) ++n3;
  }
  int maxdeg = *std::max_element(deg.begin(), deg.end());
  auto num = [&](int k) { return std::to_string(k); };
  if (n3 == 1 && m == 2) return "G2";
  if (maxp == 1) {
    if (maxdeg <= 2) return "A" + num(m);
    // one branch vertex: D or E by branch lengths
    std::vector<int> branch;
    int center = int(std::max_element(deg.begin(), deg.end()) - deg.begin());
    for (int s = 0; s < m; ++s) {
      if (s == center || deg[s] != 1) continue;
      // walk from leaf s toward center
      int len = 0, prev = -1, cur = s;
      while (cur != center) {
        ++len;
        for (auto& e : edges) {
          int other = e.a == cur ? e.b : e.b == cur ? e.a : -1;
          if (other >= 0 && other != prev) {
            prev = cur;
            cur = other;
            break;
          }
        }
      }
      branch.push_back(len);
    }
    std::sort(branch.begin(), branch.end());
    if (branch.size() == 3 && branch[0] == 1 && branch[1] == 1) return "D" + num(m);
    if (branch == std::vector<int>{1, 2, 2}) return "E6";
    if (branch == std::vector<int>{1, 2, 3}) return "E7";
    if (branch == std::vector<int>{1, 2, 4}) return "E8";
    return "finite";
  }
  if (n2 == 1 && maxdeg <= 2) {
    if (m == 4) {
      // F4 iff the doubled edge is interior to the path
      for (auto& e : edges)
        if (e.product == 2 && deg[e.a] == 2 && deg[e.b] == 2) return "F4";
    }
    return "B" + num(m) + "/C" + num(m);
  }
  return "finite";
}

}  // namespace

bool Classification::all_finite() const {
  for (const auto& c : components)
    if (c.kind != ComponentKind::finite) return false;
  return true;
}

bool Classification::has_g2_content() const {
  for (const auto& c : components)
    if (c.max_edge_product == 3) return true;
  return false;
}

Classification classify(const CartanPair& pair) {
  Classification out;
  const Mat& c = pair.cartan();
  for (const auto& comp : components_of(c)) {
    int m = int(comp.size());
    Mat sym(m, m);
    for (int x = 0; x < m; ++x)
      for (int y = 0; y < m; ++y)
        sym(x, y) = chk_mul(pair.d(comp[x]), c(comp[x], comp[y]));
    ComponentClass cc;
    cc.vertices = comp;
    cc.max_edge_product = 0;
    for (int x = 0; x < m; ++x)
      for (int y = x + 1; y < m; ++y)
        if (c(comp[x], comp[y]) != 0)
          cc.max_edge_product =
              std::max(cc.max_edge_product, chk_mul(c(comp[x], comp[y]), c(comp[y], comp[x])));
    if (is_positive_definite(sym)) {
      cc.kind = ComponentKind::finite;
      cc.label = finite_label(c, comp);
    } else if (is_positive_semidefinite(sym)) {
      cc.kind = ComponentKind::euclidean;
      cc.label = "euclidean";
    } else {
      cc.kind = ComponentKind::other;
      cc.label = "other";
    }
    out.components.push_back(std::move(cc));
  }
  return out;
}

IntVec root_to_weight(const CartanPair& pair, const IntVec& r) {
  if (int(r.size()) != pair.rank()) fail(errc::bad_input, "vector length mismatch");
  return pair.cartan() * r;
}

CartanPair cartan_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    fail(errc::bad_input, std::string("invalid JSON: ") + e.what());
  }
  if (!j.contains("cartan") || !j["cartan"].is_array())
    fail(errc::bad_input, "missing \"cartan\" array");
  auto rows = j["cartan"];
  int n = int(rows.size());
  Mat c(n, n);
  for (int i = 0; i < n; ++i) {
    if (!rows[i].is_array() || int(rows[i].size()) != n)
      fail(errc::bad_input, "\"cartan\" must be a square matrix");
    for (int k = 0; k < n; ++k) c(i, k) = rows[i][k].get<i64>();
  }
  std::optional<IntVec> d;
  if (j.contains("symmetrizer")) {
    IntVec dv;
    for (auto& v : j["symmetrizer"]) dv.push_back(v.get<i64>());
    d = dv;
  }
  std::optional<CartanPair::Orientation> om;
  if (j.contains("orientation")) {
    CartanPair::Orientation o;
    for (auto& e : j["orientation"]) {
      if (!e.is_array() || e.size() != 2) fail(errc::bad_input, "orientation entries are pairs");
      o.insert({e[0].get<int>() - 1, e[1].get<int>() - 1});  // 1-based in files
    }
    om = o;
  }
  return validate_gcm(c, d, om);
}

std::string cartan_to_json(const CartanPair& pair, const Classification& cls) {
  nlohmann::json j;
  j["rank"] = pair.rank();
  auto& cm = j["cartan"] = nlohmann::json::array();
  for (int i = 0; i < pair.rank(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int k = 0; k < pair.rank(); ++k) row.push_back(pair.c(i, k));
    cm.push_back(row);
  }
  j["symmetrizer"] = pair.symmetrizer();
  auto& comps = j["components"] = nlohmann::json::array();
  for (const auto& c : cls.components) {
    nlohmann::json jc;
    jc["vertices"] = nlohmann::json::array();
    for (int v : c.vertices) jc["vertices"].push_back(v + 1);
    jc["kind"] = c.kind == ComponentKind::finite     ? "finite"
                 : c.kind == ComponentKind::euclidean ? "euclidean"
                                                      : "other";
    jc["label"] = c.label;
    jc["max_edge_product"] = c.max_edge_product;
    comps.push_back(jc);
  }
  return j.dump(2);
}

}  // namespace mvkit
