#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cgt/error.hpp"
#include "cgt/fibre/fibre.hpp"
#include "cgt/fingerprint/fingerprint.hpp"
#include "cgt/fingerprint/separate.hpp"
#include "cgt/graph/graph_ops.hpp"
#include "cgt/io/json_io.hpp"
#include "cgt/reconstruct/clique_poset.hpp"
#include "cgt/rewriting/coxeter.hpp"
#include "cgt/rewriting/graph_product.hpp"
#include "cgt/thompson/claims.hpp"
#include "cgt/thompson/synthesis.hpp"
#include "json.hpp"

using namespace cgt;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kFailed = 1, kUsage = 2, kDiffer = 3, kInconclusive = 4 };

struct Global {
  std::string out;
  bool quiet = false;
  std::uint64_t seed = 1;
};

void emit(const Global& g, const std::string& text) {
  if (g.out.empty())
    std::cout << text << "\n";
  else
    io::write_file(g.out, text + "\n");
}

void note(const Global& g, const std::string& line) {
  if (!g.quiet) std::cerr << line << "\n";
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, ','))
    if (!cur.empty()) out.push_back(cur);
  return out;
}

std::vector<int> vertex_list(const graph::LabeledGraph& g, const std::string& s) {
  std::vector<int> out;
  for (const auto& id : split_list(s)) out.push_back(g.require(id));
  return out;
}

json ids(const graph::LabeledGraph& g, const std::vector<int>& vs) {
  json a = json::array();
  for (int v : vs) a.push_back(g.id(v));
  return a;
}

json mask_ids(const graph::LabeledGraph& g, unsigned mask) {
  json a = json::array();
  for (int v = 0; v < g.size(); ++v)
    if (mask >> v & 1u) a.push_back(g.id(v));
  return a;
}

std::string word_text(const fin::GroupPresentation& p, const fin::FreeWord& w) {
  return w.empty() ? "1" : p.format_word(w);
}

// vn ---------------------------------------------------------------------

struct VnArgs {
  int n = 3;
  std::string word;
  std::string element;
};

int run_vn(const Global& g, const VnArgs& a) {
  vn::VnElement x = vn::VnElement::identity(a.n);
  json j{{"n", a.n}};
  if (!a.word.empty()) {
    auto w = vn::GenWord::parse(a.n, a.word);
    j["word"] = w.to_string();
    x = vn::evaluate(w);
  } else if (!a.element.empty()) {
    x = vn::canonicalize(vn::VnElement::parse(a.element));
    if (x.arity() != a.n) throw InvalidInput("element arity differs from --n");
  }
  j["element"] = x.to_string();
  j["leaves"] = x.leaf_count();
  j["identity"] = x.is_identity();
  if (a.n % 2 == 1) j["parity"] = vn::to_string(vn::class_parity(x));
  auto ord = vn::element_order(x, 10'000);
  j["order"] = ord ? json(*ord) : json(nullptr);
  emit(g, j.dump(2));
  return kOk;
}

// verify-thm41 -----------------------------------------------------------

struct ClaimArgs {
  std::vector<int> n{3};
  vn::ClaimBounds bounds;
};

int run_claims(const Global& g, ClaimArgs a) {
  a.bounds.seed = g.seed;
  json j{{"arities", json::array()}};
  bool ok = true;
  for (int n : a.n) {
    json nj{{"n", n}, {"checks", json::array()}};
    for (const auto& c : vn::check_generation_claims(n, a.bounds)) {
      nj["checks"].push_back({{"name", c.name},
                              {"statement", c.statement},
                              {"cases", c.cases},
                              {"failures", c.failures},
                              {"first_failure", c.first_failure},
                              {"passed", c.passed()}});
      note(g, "n=" + std::to_string(n) + "  " + (c.passed() ? "PASS  " : "FAIL  ") + c.name + "  (" +
                  std::to_string(c.cases) + " cases)");
      ok = ok && c.passed();
    }
    j["arities"].push_back(nj);
  }
  j["passed"] = ok;
  emit(g, j.dump(2));
  return ok ? kOk : kFailed;
}

// graph ------------------------------------------------------------------

struct GraphArgs {
  std::string file;
  std::string word;
  std::string equal;
  std::string retract;
  bool split = false;
};

int run_graph(const Global& g, const GraphArgs& a) {
  auto gr = io::read_graph(a.file);
  const auto& cat = graph::GroupCatalog::builtin();
  json j;
  j["mode"] = graph::to_string(gr.mode());
  j["vertices"] = gr.size();
  j["edges"] = gr.edges().size();
  auto pres = graph::presentation(gr, cat);
  j["presentation"] = {{"generators", pres.generators}, {"relators", json::array()}};
  for (const auto& r : pres.relators) j["presentation"]["relators"].push_back(pres.format_word(r));
  if (gr.mode() == graph::Mode::Coxeter) {
    j["even"] = graph::is_even(gr);
    j["right_angled"] = graph::is_right_angled(gr);
  }
  if (auto jd = graph::join_decomposition(gr))
    j["join"] = {ids(gr, jd->first), ids(gr, jd->second)};
  else
    j["join"] = nullptr;
  j["modules"] = json::array();
  if (gr.size() <= 24)
    for (const auto& m : graph::find_modules(gr)) j["modules"].push_back(ids(gr, m));
  j["maximal_cliques"] = json::array();
  for (unsigned m : graph::maximal_cliques(gr)) j["maximal_cliques"].push_back(mask_ids(gr, m));
  if (gr.mode() == graph::Mode::Product) j["T0"] = recon::is_T0(gr);

  if (!a.word.empty()) {
    json w{{"input", a.word}};
    if (gr.mode() == graph::Mode::Coxeter) {
      auto x = rw::parse_coxeter_word(gr, a.word);
      w["normal_form"] = rw::format_coxeter_word(gr, rw::coxeter_normal_form(gr, x));
      if (!a.equal.empty()) w["equal"] = rw::coxeter_equal(gr, x, rw::parse_coxeter_word(gr, a.equal));
      if (!a.retract.empty())
        w["retraction"] = rw::format_coxeter_word(gr, rw::coxeter_retraction(gr, vertex_list(gr, a.retract), x));
    } else {
      rw::GraphProduct gp(gr, cat);
      auto x = gp.parse(a.word);
      w["normal_form"] = gp.format(gp.normal_form(x));
      if (!a.equal.empty()) w["equal"] = gp.equal(x, gp.parse(a.equal));
      if (!a.retract.empty()) w["retraction"] = gp.format(gp.retraction(vertex_list(gr, a.retract), x));
    }
    j["word"] = w;
  }
  if (a.split) j["split"] = json::parse(io::graph_to_json(graph::split_indecomposable(gr, cat)));
  emit(g, j.dump(2));
  return kOk;
}

// reconstruct ------------------------------------------------------------

int run_reconstruct(const Global& g, const std::string& file) {
  const auto& cat = graph::GroupCatalog::builtin();
  std::string text = io::read_file(file);
  json in;
  try {
    in = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(file + ": " + e.what());
  }
  json j;
  if (in.is_object() && in.contains("nodes")) {
    auto p = recon::LabeledPoset::from_json(text, cat);
    j["graph"] = json::parse(io::graph_to_json(recon::reconstruct_graph(p, cat)));
    emit(g, j.dump(2));
    return kOk;
  }
  auto gr = io::graph_from_json(text);
  if (gr.mode() != graph::Mode::Product) throw InvalidInput("reconstruction needs a product-mode graph");
  auto split = graph::split_indecomposable(gr, cat);
  auto cp = recon::clique_poset(split, cat);
  auto back = recon::reconstruct_graph(cp.poset, cat);
  bool iso = graph::graph_isomorphic(split, back);
  j["split"] = split.size() != gr.size();
  j["T0"] = recon::is_T0(split);
  j["poset"] = json::parse(cp.poset.to_json());
  j["graph"] = json::parse(io::graph_to_json(back));
  j["isomorphic"] = iso;
  note(g, std::to_string(cp.poset.size()) + " poset nodes; reconstruction " + (iso ? "matches" : "DIFFERS"));
  emit(g, j.dump(2));
  return iso ? kOk : kDiffer;
}

// fingerprint / compare --------------------------------------------------

struct FingerprintArgs {
  std::string file;
  fp::FingerprintOptions opts;
  std::string counts;
};

int run_fingerprint(const Global& g, FingerprintArgs a) {
  const auto& cat = graph::GroupCatalog::builtin();
  auto gr = io::read_graph(a.file);
  a.opts.count_targets = split_list(a.counts);
  auto f = fp::quotients_up_to(graph::presentation(gr, cat), a.opts, cat);
  note(g, std::to_string(f.classes.size()) + " quotient classes of order <= " + std::to_string(f.bound) + " in S_" +
              std::to_string(f.degree) + (f.complete ? "" : " (incomplete)"));
  emit(g, f.to_json());
  return f.complete ? kOk : kInconclusive;
}

int run_compare(const Global& g, const std::string& f1, const std::string& f2) {
  auto a = fp::Fingerprint::from_json(io::read_file(f1));
  auto b = fp::Fingerprint::from_json(io::read_file(f2));
  auto c = fp::compare(a, b);
  json j{{"verdict", fp::to_string(c.verdict)}, {"reason", c.reason}, {"counts", fp::to_string(c.counts)}};
  if (c.witness)
    j["witness"] = {{"name", c.witness->name},
                    {"order", c.witness->signature.order},
                    {"signature", c.witness->signature.to_string()},
                    {"only_in", c.witness_in_first ? f1 : f2}};
  if (!c.count_witness.empty()) j["count_witness"] = c.count_witness;
  note(g, fp::to_string(c.verdict) + (c.reason.empty() ? "" : ": " + c.reason));
  emit(g, j.dump(2));
  switch (c.verdict) {
    case fp::Verdict::Equal: return kOk;
    case fp::Verdict::Differ: return kDiffer;
    case fp::Verdict::Incomparable: return kInconclusive;
  }
  return kInconclusive;
}

// separate ---------------------------------------------------------------

struct SeparateArgs {
  std::string file;
  std::vector<std::string> a, b;
  fp::SeparationOptions opts;
};

int run_separate(const Global& g, const SeparateArgs& a) {
  auto gr = io::read_graph(a.file);
  auto r = fp::separating_quotient(gr, a.a, a.b, a.opts);
  note(g, fp::to_string(r.verdict) + (r.reason.empty() ? "" : ": " + r.reason));
  emit(g, r.to_json());
  switch (r.verdict) {
    case fp::SeparationVerdict::Separated: return kOk;
    case fp::SeparationVerdict::Conjugate: return kDiffer;
    case fp::SeparationVerdict::Inconclusive: return kInconclusive;
  }
  return kInconclusive;
}

// fibre ------------------------------------------------------------------

struct FibreArgs {
  std::string file;
  int vn = 0;
  int depth = 2;
  int drop_kernel = -1;
  fib::VerifyOptions opts;
};

int run_fibre(const Global& g, const FibreArgs& a) {
  json j;
  if (a.vn > 0) {
    j["checklist"] = json::parse(fib::hypothesis_checklist_vn(a.vn).to_json());
    if (a.vn >= 3) j["epimorphism"] = json::parse(fib::vn_epimorphism_data(a.vn, a.depth).to_json());
    emit(g, j.dump(2));
    return kOk;
  }
  if (a.file.empty()) throw InvalidInput("fibre needs a spec file or --vn");
  auto s = io::fibre_spec_from_json(io::read_file(a.file));
  auto gens = fib::fibre_generators(s, a.opts.max_order);
  if (a.drop_kernel >= 0)
    std::erase_if(gens, [&](const fib::FibreGenerator& x) {
      return x.kind == fib::TupleKind::Kernel && x.source == static_cast<std::size_t>(a.drop_kernel);
    });
  j["generators"] = json::array();
  for (const auto& x : gens) {
    json words = json::array();
    for (std::size_t i = 0; i < s.d(); ++i) words.push_back(word_text(s.factors[i].presentation, x.words[i]));
    json gj{{"kind", x.kind == fib::TupleKind::Diagonal ? "diagonal" : "kernel"}, {"words", words}};
    if (x.kind == fib::TupleKind::Kernel) gj["coordinate"] = x.coordinate + 1;
    j["generators"].push_back(gj);
  }
  auto rep = fib::verify_fibre(s, gens, a.opts);
  j["report"] = json::parse(rep.to_json());
  j["checklist"] = json::parse(fib::hypothesis_checklist(s.target(a.opts.max_order)).to_json());
  for (const auto& c : rep.checks) note(g, fib::to_string(c.status) + "  " + c.name + "  " + c.detail);
  emit(g, j.dump(2));
  bool failed = false, open = false;
  for (const auto& c : rep.checks) {
    failed = failed || c.status == fib::CheckStatus::Fail;
    open = open || c.status == fib::CheckStatus::Inconclusive;
  }
  return failed ? kDiffer : (open ? kInconclusive : kOk);
}

// collapse ---------------------------------------------------------------

int run_collapse(const Global& g, const std::string& file, const std::string& module, const std::string& star) {
  auto gr = io::read_graph(file);
  if (module.empty()) {
    json j{{"modules", json::array()}};
    for (const auto& m : graph::find_modules(gr)) j["modules"].push_back(ids(gr, m));
    emit(g, j.dump(2));
    return kOk;
  }
  auto omega = vertex_list(gr, module);
  if (!graph::is_module(gr, omega)) throw InvalidInput("{" + module + "} is not a module");
  emit(g, io::graph_to_json(graph::collapse(gr, omega, star)));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cgt: computational group theory toolkit"};
  app.require_subcommand(1);
  Global glob;
  app.add_option("-o,--out", glob.out, "Write JSON here instead of stdout");
  app.add_flag("-q,--quiet", glob.quiet, "No summary on stderr");
  app.add_option("--seed", glob.seed, "Seed for randomized checks");

  VnArgs vna;
  auto* vn_cmd = app.add_subcommand("vn", "Evaluate a word in b1..b4 or canonicalize a tree-pair diagram");
  vn_cmd->add_option("--n", vna.n, "Arity")->check(CLI::Range(2, 36));
  auto* wopt = vn_cmd->add_option("--word", vna.word, "Word such as \"b1 b2\"");
  vn_cmd->add_option("--element", vna.element, "Diagram \"n=3; dom=[..]; map=[..]\"")->excludes(wopt);

  ClaimArgs ca;
  auto* claims_cmd = app.add_subcommand("verify-thm41", "Check the four-involution generation argument");
  claims_cmd->add_option("--n", ca.n, "Arities (>= 3)")->check(CLI::Range(3, 36));
  claims_cmd->add_option("--depth", ca.bounds.max_depth, "Complete-tree depth")->check(CLI::Range(1, 6));
  claims_cmd->add_option("--max-m", ca.bounds.max_m)->check(CLI::PositiveNumber);
  claims_cmd->add_option("--max-p", ca.bounds.max_p)->check(CLI::NonNegativeNumber);
  claims_cmd->add_option("--address-length", ca.bounds.max_address)->check(CLI::PositiveNumber);

  GraphArgs ga;
  auto* graph_cmd = app.add_subcommand("graph", "Structure of a labelled graph; word problem and retractions");
  graph_cmd->add_option("file", ga.file)->required()->check(CLI::ExistingFile);
  graph_cmd->add_option("--word", ga.word, "Word to normalize");
  graph_cmd->add_option("--equal", ga.equal, "Compare --word with this word");
  graph_cmd->add_option("--retract", ga.retract, "Comma-separated vertex ids to retract --word onto");
  graph_cmd->add_flag("--split", ga.split, "Also print the graph with indecomposable vertex groups");

  std::string recon_file;
  auto* recon_cmd = app.add_subcommand("reconstruct", "Rebuild a graph from its clique poset");
  recon_cmd->add_option("file", recon_file, "Product-mode graph or poset JSON")->required()->check(CLI::ExistingFile);

  FingerprintArgs fa;
  auto* fp_cmd = app.add_subcommand("fingerprint", "Finite quotients embedding in S_K");
  fp_cmd->add_option("file", fa.file)->required()->check(CLI::ExistingFile);
  fp_cmd->add_option("--deg", fa.opts.degree, "K")->check(CLI::Range(1, 7));
  fp_cmd->add_option("--order", fa.opts.bound, "Largest quotient order B")->check(CLI::PositiveNumber);
  fp_cmd->add_option("--jobs", fa.opts.jobs)->check(CLI::Range(1, 256));
  fp_cmd->add_option("--max-nodes", fa.opts.max_nodes)->check(CLI::PositiveNumber);
  fp_cmd->add_option("--counts", fa.counts, "Catalog groups to count epimorphisms onto, e.g. S3,D4");

  std::string cmp1, cmp2;
  auto* cmp_cmd = app.add_subcommand("compare", "Compare two fingerprints (exit 0 equal, 3 differ, 4 incomparable)");
  cmp_cmd->add_option("first", cmp1)->required()->check(CLI::ExistingFile);
  cmp_cmd->add_option("second", cmp2)->required()->check(CLI::ExistingFile);

  SeparateArgs sa;
  auto* sep_cmd = app.add_subcommand("separate", "Separate two finite subgroups by a finite quotient");
  sep_cmd->add_option("file", sa.file)->required()->check(CLI::ExistingFile);
  sep_cmd->add_option("--a", sa.a, "Generator words of A")->required();
  sep_cmd->add_option("--b", sa.b, "Generator words of B")->required();
  sep_cmd->add_option("--conjugator-length", sa.opts.conjugator_length)->check(CLI::Range(0, 16));

  FibreArgs fba;
  auto* fib_cmd = app.add_subcommand("fibre", "Fibre product generators, verification and hypothesis ledger");
  fib_cmd->add_option("file", fba.file, "Fibre spec JSON")->check(CLI::ExistingFile);
  fib_cmd->add_option("--vn", fba.vn, "Report for the target V_n instead")->check(CLI::Range(2, 36));
  fib_cmd->add_option("--depth", fba.depth, "Leaf depth for generation evidence")->check(CLI::Range(1, 4));
  fib_cmd->add_option("--drop-kernel", fba.drop_kernel, "Omit kernel generator #k from every coordinate")
      ->check(CLI::NonNegativeNumber);
  fib_cmd->add_option("--max-rows", fba.opts.max_rows, "Coset table budget")->check(CLI::PositiveNumber);

  std::string col_file, col_module, col_star = "*";
  auto* col_cmd = app.add_subcommand("collapse", "List modules or collapse one to a vertex");
  col_cmd->add_option("file", col_file)->required()->check(CLI::ExistingFile);
  col_cmd->add_option("--module", col_module, "Comma-separated vertex ids");
  col_cmd->add_option("--star", col_star, "Id of the new vertex");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*vn_cmd) return run_vn(glob, vna);
    if (*claims_cmd) return run_claims(glob, ca);
    if (*graph_cmd) return run_graph(glob, ga);
    if (*recon_cmd) return run_reconstruct(glob, recon_file);
    if (*fp_cmd) return run_fingerprint(glob, fa);
    if (*cmp_cmd) return run_compare(glob, cmp1, cmp2);
    if (*sep_cmd) return run_separate(glob, sa);
    if (*fib_cmd) return run_fibre(glob, fba);
    if (*col_cmd) return run_collapse(glob, col_file, col_module, col_star);
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const BudgetExceeded& e) {
    std::cerr << "inconclusive: " << e.what() << "\n";
    return kInconclusive;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}
