// Command-line front end: validates Cartan data, runs Weyl/lattice/polytope/
// crystal computations, and emits JSON or DOT documents.

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "mvkit/crystal.hpp"
#include "mvkit/gmatrix.hpp"
#include "mvkit/layers.hpp"
#include "mvkit/presets.hpp"

namespace {

using namespace mvkit;

struct CommonOpts {
  std::string type;
  std::string input;
  std::string format = "json";
  std::string out;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_format = true) {
  cmd->add_option("--type", o.type, "built-in Cartan preset (A1..A4, B2, B3, C2, C3, D4, F4, G2)");
  cmd->add_option("--input", o.input, "path to a Cartan JSON document, or inline JSON");
  if (with_format)
    cmd->add_option("--format", o.format, "output format: json or dot")
        ->check(CLI::IsMember({"json", "dot"}));
  cmd->add_option("--out", o.out, "write output to this path instead of stdout");
}

CartanPair resolve_pair(const CommonOpts& o) {
  if (!o.type.empty()) return preset_pair(o.type);
  if (o.input.empty()) fail(errc::bad_input, "one of --type or --input is required");
  std::string text = o.input;
  if (!text.empty() && text[0] != '{') {
    std::ifstream in(o.input);
    if (!in) fail(errc::bad_input, "cannot open input file: " + o.input);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  return cartan_from_json(text);
}

void emit(const CommonOpts& o, const std::string& doc) {
  if (o.out.empty()) {
    std::cout << doc;
    if (!doc.empty() && doc.back() != '\n') std::cout << '\n';
  } else {
    std::ofstream out(o.out);
    if (!out) fail(errc::bad_input, "cannot open output file: " + o.out);
    out << doc;
    if (!doc.empty() && doc.back() != '\n') out << '\n';
  }
}

Word parse_word(const std::string& csv, int rank) {
  Word w;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    int v = std::stoi(tok);
    if (v < 1 || v > rank) fail(errc::bad_input, "word letter out of range: " + tok);
    w.push_back(v - 1);
  }
  return w;
}

IntVec parse_ints(const std::string& csv) {
  IntVec v;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) v.push_back(std::stoll(tok));
  }
  return v;
}

nlohmann::json word_json(const Word& w) {
  nlohmann::json j = nlohmann::json::array();
  for (int i : w) j.push_back(i + 1);
  return j;
}

void require(bool cond, const std::string& msg) {
  if (!cond) fail(errc::bad_input, msg);
}

int run(int argc, char** argv) {
  CLI::App app{"exact Weyl-group, tau-tilting and MV-polytope combinatorics"};
  app.require_subcommand(1);

  CommonOpts o_cartan, o_weyl, o_gmat, o_layers, o_trans, o_build, o_verify, o_cop, o_cver,
      o_cgraph;

  auto* c_cartan = app.add_subcommand("cartan-validate", "validate Cartan data and classify");
  add_common(c_cartan, o_cartan, false);

  auto* c_weyl = app.add_subcommand("weyl-words", "reduced words of a Weyl group element");
  add_common(c_weyl, o_weyl, false);
  std::string weyl_w;
  bool weyl_all = false;
  size_t weyl_cap = 100000;
  c_weyl->add_option("--w", weyl_w, "element as a comma-separated word (default: w0)");
  c_weyl->add_flag("--all", weyl_all, "list all reduced words");
  c_weyl->add_option("--cap", weyl_cap, "enumeration cap");

  auto* c_gmat = app.add_subcommand("gmatrix-lattice", "support tau-tilting mutation lattice");
  add_common(c_gmat, o_gmat);

  auto* c_layers = app.add_subcommand("layers", "layer rank vectors along a reduced word");
  add_common(c_layers, o_layers, false);
  std::string layers_word;
  c_layers->add_option("--word", layers_word, "reduced word, e.g. 1,2,1,2")->required();

  auto* c_trans = app.add_subcommand("lusztig-transition", "transport a datum between words");
  add_common(c_trans, o_trans, false);
  std::string trans_word, trans_a, trans_target;
  bool trans_trace = false;
  c_trans->add_option("--word", trans_word, "source reduced word of w0")->required();
  c_trans->add_option("--a", trans_a, "multiplicity vector")->required();
  c_trans->add_option("--target", trans_target, "target reduced word of w0")->required();
  c_trans->add_flag("--trace", trans_trace, "include the move path");

  auto* c_build = app.add_subcommand("mv-build", "build the MV polytope of a datum");
  add_common(c_build, o_build, false);
  std::string build_word, build_a;
  c_build->add_option("--word", build_word, "reduced word of w0")->required();
  c_build->add_option("--a", build_a, "multiplicity vector")->required();

  auto* c_verify = app.add_subcommand("mv-verify", "verify BZ axioms on polytopes");
  add_common(c_verify, o_verify, false);
  std::string verify_word, verify_a;
  int verify_random = 0;
  unsigned verify_seed = 1;
  i64 verify_max = 6;
  c_verify->add_option("--word", verify_word, "reduced word of w0");
  c_verify->add_option("--a", verify_a, "multiplicity vector");
  c_verify->add_option("--random", verify_random, "verify this many random data instead");
  c_verify->add_option("--seed", verify_seed, "random seed");
  c_verify->add_option("--max-entry", verify_max, "largest random entry");

  auto* c_cop = app.add_subcommand("crystal-op", "apply a crystal operator");
  add_common(c_cop, o_cop, false);
  std::string cop_word, cop_a, cop_op = "wt";
  int cop_i = 1;
  c_cop->add_option("--word", cop_word, "reduced word of w0")->required();
  c_cop->add_option("--a", cop_a, "multiplicity vector")->required();
  c_cop->add_option("--op", cop_op,
                    "one of wt, phi, eps, phi-star, eps-star, e, f, f-max, e-star, f-star, star, "
                    "saito, saito-star")
      ->required();
  c_cop->add_option("--i", cop_i, "vertex index (1-based)");

  auto* c_cver = app.add_subcommand("crystal-verify", "run the crystal axiom verifier");
  add_common(c_cver, o_cver, false);
  i64 cver_height = 6;
  bool cver_fault = false;
  c_cver->add_option("--height", cver_height, "weight-height bound");
  c_cver->add_flag("--fault-f", cver_fault, "inject an off-by-one fault into f (must fail)");

  auto* c_cgraph = app.add_subcommand("crystal-graph", "emit the truncated crystal graph");
  add_common(c_cgraph, o_cgraph);
  i64 cgraph_height = 4;
  c_cgraph->add_option("--height", cgraph_height, "weight-height bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // usage errors exit with 2; --help and friends with 0
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (c_cartan->parsed()) {
    CartanPair pair = resolve_pair(o_cartan);
    emit(o_cartan, cartan_to_json(pair, classify(pair)));
    return 0;
  }
  if (c_weyl->parsed()) {
    CartanPair pair = resolve_pair(o_weyl);
    WeylGroup group(pair);
    int w = weyl_w.empty() ? group.longest() : group.from_word(parse_word(weyl_w, group.rank()));
    nlohmann::json j;
    j["length"] = group.length(w);
    j["canonical_word"] = word_json(group.canonical_word(w));
    if (weyl_all) {
      auto words = group.all_reduced_words(w, weyl_cap);
      j["reduced_words"] = nlohmann::json::array();
      for (const Word& rw : words) j["reduced_words"].push_back(word_json(rw));
    }
    emit(o_weyl, j.dump(2));
    return 0;
  }
  if (c_gmat->parsed()) {
    CartanPair pair = resolve_pair(o_gmat);
    WeylGroup group(pair);
    SttiltLattice lat = sttilt_hasse(group);
    emit(o_gmat, o_gmat.format == "dot" ? sttilt_to_dot(lat) : sttilt_to_json(lat));
    return 0;
  }
  if (c_layers->parsed()) {
    CartanPair pair = resolve_pair(o_layers);
    WeylGroup group(pair);
    emit(o_layers, layers_to_json(beta_sequence(group, parse_word(layers_word, group.rank()))));
    return 0;
  }
  if (c_trans->parsed()) {
    CartanPair pair = resolve_pair(o_trans);
    WeylGroup group(pair);
    MoveGraph mg(group);
    LusztigDatum d{parse_word(trans_word, group.rank()), parse_ints(trans_a)};
    std::vector<Move> trace;
    LusztigDatum r = mg.transition(d, parse_word(trans_target, group.rank()),
                                   trans_trace ? &trace : nullptr);
    nlohmann::json j = nlohmann::json::parse(datum_to_json(r));
    if (trans_trace) j["trace"] = nlohmann::json::parse(trace_to_json(trace))["path"];
    emit(o_trans, j.dump(2));
    return 0;
  }
  if (c_build->parsed()) {
    CartanPair pair = resolve_pair(o_build);
    WeylGroup group(pair);
    MoveGraph mg(group);
    MVPolytope p = build_polytope(mg, {parse_word(build_word, group.rank()), parse_ints(build_a)});
    emit(o_build, polytope_to_json(p));
    return 0;
  }
  if (c_verify->parsed()) {
    CartanPair pair = resolve_pair(o_verify);
    WeylGroup group(pair);
    MoveGraph mg(group);
    std::vector<LusztigDatum> data;
    if (verify_random > 0) {
      std::mt19937 rng(verify_seed);
      Word ref = mg.words()[0];
      std::uniform_int_distribution<i64> dist(0, verify_max);
      for (int t = 0; t < verify_random; ++t) {
        IntVec a(ref.size());
        for (auto& v : a) v = dist(rng);
        data.push_back({ref, a});
      }
    } else {
      require(!verify_word.empty() && !verify_a.empty(),
              "provide --word and --a, or --random N");
      data.push_back({parse_word(verify_word, group.rank()), parse_ints(verify_a)});
    }
    nlohmann::json j;
    j["checked"] = data.size();
    bool all_ok = true;
    auto& reports = j["reports"] = nlohmann::json::array();
    for (const auto& d : data) {
      BZReport rep = verify_bz(build_polytope(mg, d));
      all_ok = all_ok && rep.ok();
      nlohmann::json jr;
      jr["a"] = d.a;
      jr["bz1"] = rep.bz1;
      jr["bz2"] = rep.bz2;
      jr["bz3"] = rep.bz3;
      if (!rep.ok()) {
        auto& vs = jr["violations"] = nlohmann::json::array();
        for (const auto& v : rep.violations)
          vs.push_back({{"rule", v.rule},
                        {"w", word_json(v.w)},
                        {"i", v.i + 1},
                        {"j", v.j + 1},
                        {"lhs", v.lhs},
                        {"rhs", v.rhs}});
      }
      reports.push_back(jr);
    }
    j["pass"] = all_ok;
    emit(o_verify, j.dump(2));
    return 0;
  }
  if (c_cop->parsed()) {
    CartanPair pair = resolve_pair(o_cop);
    WeylGroup group(pair);
    MoveGraph mg(group);
    Crystal crystal(group, mg);
    IntVec a = crystal.canonicalize({parse_word(cop_word, group.rank()), parse_ints(cop_a)});
    int i = cop_i - 1;
    nlohmann::json j;
    j["word"] = word_json(crystal.reference_word());
    auto put_elem = [&](const std::optional<IntVec>& r) {
      if (r)
        j["a"] = *r;
      else
        j["a"] = nullptr;  // the crystal's bottom on this direction
    };
    if (cop_op == "wt") j["wt"] = crystal.wt(a);
    else if (cop_op == "phi") j["phi"] = crystal.phi(a, i);
    else if (cop_op == "eps") j["eps"] = crystal.eps(a, i);
    else if (cop_op == "phi-star") j["phi_star"] = crystal.phi_star(a, i);
    else if (cop_op == "eps-star") j["eps_star"] = crystal.eps_star(a, i);
    else if (cop_op == "e") put_elem(crystal.e(a, i));
    else if (cop_op == "f") put_elem(crystal.f(a, i));
    else if (cop_op == "f-max") put_elem(crystal.f_max(a, i));
    else if (cop_op == "e-star") put_elem(crystal.e_star(a, i));
    else if (cop_op == "f-star") put_elem(crystal.f_star(a, i));
    else if (cop_op == "star") put_elem(crystal.star(a));
    else if (cop_op == "saito") put_elem(crystal.saito(a, i));
    else if (cop_op == "saito-star") put_elem(crystal.saito_star(a, i));
    else fail(errc::bad_input, "unknown crystal op: " + cop_op);
    emit(o_cop, j.dump(2));
    return 0;
  }
  if (c_cver->parsed()) {
    CartanPair pair = resolve_pair(o_cver);
    WeylGroup group(pair);
    MoveGraph mg(group);
    Crystal crystal(group, mg);
    TWOptions opts;
    opts.fault_f = cver_fault;
    TWReport rep = verify_tingley_webster(crystal, cver_height, opts);
    nlohmann::json j;
    j["elements"] = rep.elements;
    j["pass"] = rep.ok;
    j["violations"] = rep.violations;
    emit(o_cver, j.dump(2));
    return 0;
  }
  if (c_cgraph->parsed()) {
    CartanPair pair = resolve_pair(o_cgraph);
    WeylGroup group(pair);
    MoveGraph mg(group);
    Crystal crystal(group, mg);
    CrystalGraph g = enumerate_crystal(crystal, cgraph_height);
    emit(o_cgraph, o_cgraph.format == "dot" ? crystal_graph_to_dot(g) : crystal_graph_to_json(g));
    return 0;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const mvkit::domain_error& e) {
    std::cerr << "error: " << e.name() << ": " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
