#include "mvkit/crystal.hpp"

#include "mvkit/gmatrix.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace mvkit {

Crystal::Crystal(const WeylGroup& group, const MoveGraph& mg) : group_(&group), mg_(&mg) {
  if (group.pair().has_g2_edge())
    fail(errc::g2_unsupported, "the crystal layer does not support G2 content");
  nakayama_ = nakayama_involution(group);
  const Word& ref = reference_word();
  Mat prefix = Mat::identity(group.rank());
  for (int i : ref) {
    ref_betas_.push_back(prefix.column(i));
    i64 h = 0;
    for (i64 v : ref_betas_.back()) h = chk_add(h, v);
    ref_heights_.push_back(h);
    prefix = prefix * group.pair().rank_reflection(i);
  }
}

IntVec Crystal::canonicalize(const LusztigDatum& d) const {
  return mg_->transition(d, reference_word()).a;
}

IntVec Crystal::wt(const IntVec& a) const {
  IntVec w(group_->rank(), 0);
  for (size_t k = 0; k < a.size(); ++k) w = vec_add(w, vec_scale(a[k], ref_betas_[k]));
  return w;
}

i64 Crystal::height(const IntVec& a) const {
  i64 h = 0;
  for (size_t k = 0; k < a.size(); ++k) h = chk_add(h, chk_mul(a[k], ref_heights_[k]));
  return h;
}

i64 Crystal::pairing_wt_alpha(const IntVec& a, int i) const {
  return dot(group_->pair().cartan().transposed().column(i), wt(a));
}

LusztigDatum Crystal::on_initial(const IntVec& a, int i) const {
  if (i < 0 || i >= group_->rank()) fail(errc::bad_input, "vertex index out of range");
  return mg_->transition({reference_word(), a}, mg_->initial_word(i));
}

i64 Crystal::phi(const IntVec& a, int i) const { return on_initial(a, i).a[0]; }

i64 Crystal::eps(const IntVec& a, int i) const {
  return chk_sub(phi(a, i), pairing_wt_alpha(a, i));
}

i64 Crystal::phi_star(const IntVec& a, int i) const { return phi(star(a), i); }

i64 Crystal::eps_star(const IntVec& a, int i) const {
  return chk_sub(phi_star(a, i), pairing_wt_alpha(a, i));
}

IntVec Crystal::e(const IntVec& a, int i) const {
  LusztigDatum d = on_initial(a, i);
  d.a[0] = chk_add(d.a[0], 1);
  return canonicalize(d);
}

std::optional<IntVec> Crystal::f(const IntVec& a, int i) const {
  LusztigDatum d = on_initial(a, i);
  if (d.a[0] == 0) return std::nullopt;
  d.a[0] -= 1;
  return canonicalize(d);
}

IntVec Crystal::f_max(const IntVec& a, int i) const {
  LusztigDatum d = on_initial(a, i);
  d.a[0] = 0;
  return canonicalize(d);
}

IntVec Crystal::e_star(const IntVec& a, int i) const { return star(e(star(a), i)); }

std::optional<IntVec> Crystal::f_star(const IntVec& a, int i) const {
  auto r = f(star(a), i);
  if (!r) return std::nullopt;
  return star(*r);
}

IntVec Crystal::f_max_star(const IntVec& a, int i) const { return star(f_max(star(a), i)); }

IntVec Crystal::star(const IntVec& a) const {
  const Word& ref = reference_word();
  Word rw(ref.size());
  IntVec ra(a.size());
  for (size_t k = 0; k < ref.size(); ++k) {
    rw[k] = nakayama_[size_t(ref[ref.size() - 1 - k])];
    ra[k] = a[a.size() - 1 - k];
  }
  return canonicalize({rw, ra});
}

IntVec Crystal::saito(const IntVec& a, int i) const {
  LusztigDatum d = on_initial(a, i);
  if (d.a[0] != 0) fail(errc::phi_nonzero, "Saito reflection needs phi_i = 0");
  Word w2(d.word.begin() + 1, d.word.end());
  w2.push_back(nakayama_[size_t(i)]);
  IntVec a2(d.a.begin() + 1, d.a.end());
  a2.push_back(0);
  return canonicalize({w2, a2});
}

IntVec Crystal::saito_via_operators(const IntVec& a, int i) const {
  if (phi(a, i) != 0) fail(errc::phi_nonzero, "Saito reflection needs phi_i = 0");
  i64 k = eps_star(a, i);
  IntVec b = f_max_star(a, i);
  for (i64 t = 0; t < k; ++t) b = e(b, i);
  return b;
}

IntVec Crystal::saito_star(const IntVec& a, int i) const {
  if (phi_star(a, i) != 0) fail(errc::phi_nonzero, "starred Saito reflection needs phi*_i = 0");
  return star(saito(star(a), i));
}

IntVec Crystal::pbw_unwind(const IntVec& a, const Word& word) const {
  if (!group_->is_reduced(word) || group_->from_word(word) != group_->longest())
    fail(errc::not_reduced_target, "not a reduced word of w0");
  IntVec out;
  IntVec cur = a;
  for (int i : word) {
    out.push_back(phi(cur, i));
    cur = saito(f_max(cur, i), i);
  }
  if (!is_zero(cur)) fail(errc::non_termination, "PBW unwinding did not reach the zero element");
  return out;
}

MVPolytope Crystal::polytope(const IntVec& a) const {
  return build_polytope(*mg_, {reference_word(), a});
}

std::vector<IntVec> Crystal::elements_up_to(i64 height_bound, size_t guard) const {
  if (guard == 0) guard = default_size_guard();
  std::vector<IntVec> out;
  IntVec cur(reference_word().size(), 0);
  auto rec = [&](auto&& self, size_t k, i64 budget) -> void {
    if (k == cur.size()) {
      if (out.size() >= guard) fail(errc::size_guard, "crystal enumeration exceeds the size guard");
      out.push_back(cur);
      return;
    }
    for (i64 v = 0; chk_mul(v, ref_heights_[k]) <= budget; ++v) {
      cur[k] = v;
      self(self, k + 1, budget - v * ref_heights_[k]);
    }
    cur[k] = 0;
  };
  rec(rec, 0, height_bound);
  std::sort(out.begin(), out.end());
  return out;
}

i64 Crystal::kostant_count(const IntVec& nu) const {
  // brute force over the positive roots of C^T, enumerated independently of
  // the reference word
  std::vector<IntVec> roots = group_->positive_roots_dual();
  auto rec = [&](auto&& self, size_t idx, const IntVec& rest) -> i64 {
    if (is_zero(rest)) return 1;
    if (idx == roots.size()) return 0;
    i64 total = 0;
    IntVec r = rest;
    while (true) {
      total = chk_add(total, self(self, idx + 1, r));
      bool can = true;
      for (size_t t = 0; t < r.size(); ++t)
        if (r[t] < roots[idx][t]) { can = false; break; }
      if (!can) break;
      r = vec_sub(r, roots[idx]);
    }
    return total;
  };
  for (i64 v : nu)
    if (v < 0) return 0;
  return rec(rec, 0, nu);
}

CrystalGraph enumerate_crystal(const Crystal& crystal, i64 height_bound, size_t guard) {
  CrystalGraph g;
  std::vector<IntVec> elems = crystal.elements_up_to(height_bound, guard);
  std::unordered_map<IntVec, int, VecHash> index;
  std::vector<int> order(elems.size());
  for (size_t k = 0; k < elems.size(); ++k) order[k] = int(k);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    i64 hx = crystal.height(elems[size_t(x)]), hy = crystal.height(elems[size_t(y)]);
    if (hx != hy) return hx < hy;
    return elems[size_t(x)] < elems[size_t(y)];
  });
  for (size_t k = 0; k < order.size(); ++k) {
    const IntVec& a = elems[size_t(order[k])];
    index.emplace(a, int(k));
    g.nodes.push_back({a, crystal.wt(a)});
  }
  for (size_t k = 0; k < g.nodes.size(); ++k)
    for (int i = 0; i < crystal.group().rank(); ++i) {
      IntVec up = crystal.e(g.nodes[k].a, i);
      auto it = index.find(up);
      if (it != index.end()) g.arrows.push_back({int(k), it->second, i});
    }
  return g;
}

namespace {

std::string vec_label(const IntVec& v) {
  std::string s = "(";
  for (size_t k = 0; k < v.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(v[k]);
  }
  return s + ")";
}

}  // namespace

std::string crystal_graph_to_json(const CrystalGraph& g) {
  nlohmann::json j;
  auto& nodes = j["nodes"] = nlohmann::json::array();
  for (const auto& n : g.nodes) nodes.push_back({{"a", n.a}, {"wt", n.wt}});
  auto& arrows = j["arrows"] = nlohmann::json::array();
  for (const auto& a : g.arrows)
    arrows.push_back({{"from", a.from}, {"to", a.to}, {"i", a.i + 1}});
  return j.dump(2);
}

namespace {

// stable node id: canonical entries joined by '.'
std::string node_id(const IntVec& a) {
  std::string s;
  for (size_t k = 0; k < a.size(); ++k) {
    if (k) s += '.';
    s += std::to_string(a[k]);
  }
  return s;
}

}  // namespace

std::string crystal_graph_to_dot(const CrystalGraph& g) {
  std::ostringstream os;
  os << "digraph crystal {\n  rankdir=BT;\n";
  for (const auto& n : g.nodes)
    os << "  \"" << node_id(n.a) << "\" [label=\"" << vec_label(n.a) << " wt" << vec_label(n.wt)
       << "\"];\n";
  for (const auto& a : g.arrows)
    os << "  \"" << node_id(g.nodes[size_t(a.from)].a) << "\" -> \""
       << node_id(g.nodes[size_t(a.to)].a) << "\" [label=\"" << a.i + 1 << "\"];\n";
  os << "}\n";
  return os.str();
}

TWReport verify_tingley_webster(const Crystal& crystal, i64 height_bound,
                                const TWOptions& options) {
  TWReport rep;
  const int n = crystal.group().rank();
  auto complain = [&](const IntVec& a, int i, const std::string& what) {
    rep.ok = false;
    if (rep.violations.size() < 32)
      rep.violations.push_back(what + " at element " + vec_label(a) + ", i=" +
                               std::to_string(i + 1));
  };
  // operator wrappers so a fault can be injected without touching the library
  auto f_op = [&](const IntVec& a, int i) -> std::optional<IntVec> {
    if (options.fault_f && crystal.phi(a, i) == 1) return std::nullopt;
    return crystal.f(a, i);
  };
  auto f_star_op = [&](const IntVec& a, int i) -> std::optional<IntVec> {
    if (options.fault_f && crystal.phi_star(a, i) == 1) return std::nullopt;
    return crystal.f_star(a, i);
  };
  std::vector<IntVec> elems = crystal.elements_up_to(height_bound);
  rep.elements = elems.size();
  for (const IntVec& a : elems) {
    IntVec w = crystal.wt(a);
    for (int i = 0; i < n; ++i) {
      i64 ph = crystal.phi(a, i), eps = crystal.eps(a, i);
      i64 phs = crystal.phi_star(a, i);
      // cr1
      if (ph != chk_add(eps, crystal.pairing_wt_alpha(a, i))) complain(a, i, "cr1 fails");
      // cr2 on e_i
      IntVec up = crystal.e(a, i);
      if (crystal.phi(up, i) != ph + 1) complain(a, i, "cr2 phi step fails");
      if (crystal.wt(up) != vec_add(w, unit_vec(n, i))) complain(a, i, "cr2 weight step fails");
      // cr3 both ways
      auto down = f_op(up, i);
      if (!down || *down != a) complain(a, i, "cr3 f(e(b)) != b");
      if (auto fb = f_op(a, i)) {
        if (crystal.e(*fb, i) != a) complain(a, i, "cr3 e(f(b)) != b");
      }
      // cr5: phi = max applicable f-power
      i64 m = 0;
      IntVec cur = a;
      while (auto nx = f_op(cur, i)) {
        cur = *nx;
        ++m;
        if (m > ph + 1) break;
      }
      if (m != ph) complain(a, i, "cr5 fails");
      // TW: e and e* always defined -- by construction; commutation for i != j
      for (int j = 0; j < n; ++j)
        if (i != j && crystal.e_star(crystal.e(a, j), i) != crystal.e(crystal.e_star(a, i), j))
          complain(a, i, "e*_i e_j != e_j e*_i (j=" + std::to_string(j + 1) + ")");
      i64 s = chk_sub(chk_add(ph, phs), crystal.pairing_wt_alpha(a, i));
      if (s < 0) complain(a, i, "phi + phi* - <wt,alpha> < 0");
      if (s == 0 && crystal.e(a, i) != crystal.e_star(a, i)) complain(a, i, "s=0 but e != e*");
      if (s >= 1) {
        if (crystal.phi(crystal.e_star(a, i), i) != ph) complain(a, i, "s>=1 phi(e* b) != phi(b)");
        if (crystal.phi_star(crystal.e(a, i), i) != phs)
          complain(a, i, "s>=1 phi*(e b) != phi*(b)");
      }
      if (s >= 2 && crystal.e_star(crystal.e(a, i), i) != crystal.e(crystal.e_star(a, i), i))
        complain(a, i, "s>=2 e* e != e e*");
      // the starred family must satisfy cr3/cr5 as well
      if (options.fault_f) {
        i64 ms = 0;
        IntVec curs = a;
        while (auto nx = f_star_op(curs, i)) {
          curs = *nx;
          ++ms;
          if (ms > phs + 1) break;
        }
        if (ms != phs) complain(a, i, "starred cr5 fails");
      }
    }
  }
  return rep;
}

}  // namespace mvkit
