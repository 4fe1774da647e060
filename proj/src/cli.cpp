#include "xifam/cli.hpp"

#include <cstdlib>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "xifam/crossing.hpp"
#include "xifam/extremal.hpp"
#include "xifam/gf2.hpp"
#include "xifam/io.hpp"
#include "xifam/numtheory.hpp"
#include "xifam/search.hpp"

namespace xifam::cli {

using io::json;

namespace {

Frac parse_frac_arg(const std::string& text, std::ostream& err) {
  bool changed = false;
  const Frac f = parse_fraction(text, &changed);
  if (changed) err << "warning: fraction " << text << " reduced to " << f.str() << "\n";
  return f;
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text << std::flush;
  } else {
    io::write_text_file(out_path, text);
  }
}

json closure_json(const ClosureReport& r) {
  return json{{"delta_closed", r.delta_closed},
              {"intersection_closed", r.intersection_closed},
              {"parity_table_ok", r.parity_table_ok},
              {"pairwise_mod_d_ok", r.pairwise_mod_d_ok},
              {"partition_ok", r.partition_ok}};
}

json decomposition_json(const PairInstance& p, const ClosureReport& closure) {
  if (!closure.delta_closed || !closure.intersection_closed) return nullptr;
  try {
    const auto frac = closure.partition_ok ? std::optional<Frac>(p.frac) : std::nullopt;
    const StructureDecomposition dec = structure_decompose(p.b, frac);
    json blocks = json::array();
    for (Mask m : dec.blocks) blocks.push_back(elements_of(m));
    json j{{"blocks", blocks}, {"k", dec.k}, {"n0", dec.n0}};
    if (frac) {
      j["block_multipliers"] = dec.block_multipliers;
      j["predicted_product"] = predicted_product(dec, p.frac, p.n());
    }
    return j;
  } catch (const DecompositionError& e) {
    return json{{"error", e.what()}};
  }
}

json class_json(const search::CanonicalClass& cls, bool with_count) {
  json j{{"A", io::sets_to_json(cls.representative.a)}, {"B", io::sets_to_json(cls.representative.b)}};
  if (with_count) j["count"] = cls.count;
  return j;
}

int default_threads() {
  if (const char* env = std::getenv("XIFAM_THREADS"); env != nullptr && *env != '\0') {
    try {
      return std::max(1, std::stoi(env));
    } catch (const std::exception&) {
    }
  }
  return 1;
}

}  // namespace

int cmd_check_pair(const std::string& path, std::ostream& out, std::ostream& err) {
  try {
    bool reduced = false;
    const PairInstance p = io::pair_from_json(io::read_json_file(path), &reduced);
    if (reduced) err << "warning: fraction in '" << path << "' reduced to " << p.frac.str() << "\n";

    const bool valid = is_cross_intersecting(p);
    const ClosureReport closure = closure_report(p.b, p.frac);
    json report{{"n", p.n()},
                {"c", p.frac.c()},
                {"d", p.frac.d()},
                {"valid", valid},
                {"product", p.product()},
                {"is_maximal_product", valid && p.product() == (std::uint64_t{1} << p.n())},
                {"closure", closure_json(closure)},
                {"decomposition", decomposition_json(p, closure)}};
    if (valid) {
      report["parity_identity"] = parity_identity_check(p);
      const gf2::LiftedPair lifted = gf2::lift_pair(p);
      report["lift_orthogonal"] = gf2::orthogonal_families(lifted.a, lifted.b);
    } else {
      report["parity_identity"] = nullptr;
      report["lift_orthogonal"] = nullptr;
    }
    out << io::dump(report) << std::flush;
    return valid ? kOk : kFailed;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

int cmd_search(const SearchOptions& opts, std::ostream& out, std::ostream& err) {
  search::SearchResult r;
  try {
    const Frac frac = parse_frac_arg(opts.frac, err);
    check_ground_size(opts.n);
    if (opts.threads < 1) throw InputError("--threads must be at least 1");
    search::SearchConfig cfg;
    cfg.max_nodes = opts.max_nodes;
    cfg.threads = opts.threads;
    cfg.canonicalize = opts.canonicalize;
    r = search::enumerate_maximal(opts.n, frac, cfg);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  json classes = json::array();
  for (const auto& cls : r.classes) classes.push_back(class_json(cls, true));
  json report{{"n", r.n},
              {"c", r.frac.c()},
              {"d", r.frac.d()},
              {"max_product", r.max_product},
              {"exhausted", r.exhausted},
              {"classes", classes},
              {"maximal_pairs", r.maximal_pairs.size()},
              {"nodes", r.nodes_visited},
              {"pruned", r.pruned},
              {"bound_violation", r.bound_violation}};

  int code = kOk;
  if (!r.exhausted) {
    code = kBudget;
  } else if (r.bound_violation || r.max_product != (std::uint64_t{1} << r.n)) {
    code = kFailed;
  }
  if (r.exhausted && r.canonicalized) {
    const search::MatchReport match = search::compare_with_predicted(r);
    json missing = json::array();
    json extra = json::array();
    for (const auto& cls : match.missing) missing.push_back(class_json(cls, false));
    for (const auto& cls : match.extra) extra.push_back(class_json(cls, false));
    report["comparison"] = json{{"match", match.match},
                                {"predicted_count", match.predicted_count},
                                {"found_count", match.found_count},
                                {"missing", missing},
                                {"extra", extra}};
    if (!match.match) code = kFailed;
  }

  try {
    emit(io::dump(report), opts.out_path, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  if (code == kBudget) err << "search stopped at the node budget; result is partial\n";
  return code;
}

int cmd_gen(int n, const std::string& frac_text, int k, const std::string& out_path,
            std::ostream& out, std::ostream& err) {
  try {
    const Frac frac = parse_frac_arg(frac_text, err);
    const PairInstance p = extremal::gen_class(n, frac, k);
    emit(io::dump(io::pair_to_json(p)), out_path, out);
    return kOk;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

int cmd_binom_pow2(int max_n, const std::string& out_path, std::ostream& out, std::ostream& err) {
  if (max_n < 0) {
    err << "error: --max-n must be non-negative\n";
    return kInputError;
  }
  std::ostringstream csv;
  csv << "n,k,nu2,is_pow2,characterized\n";
  std::size_t disagreements = 0;
  for (int n = 0; n <= max_n; ++n) {
    for (int k = 0; k <= n; ++k) {
      const bool pow2 = numtheory::is_pow2_binom(n, k);
      const bool predicted = numtheory::characterize_pow2(n, k);
      if (pow2 != predicted) ++disagreements;
      csv << n << ',' << k << ',' << numtheory::nu2_binom(n, k) << ',' << (pow2 ? 1 : 0) << ','
          << (predicted ? 1 : 0) << '\n';
    }
  }
  try {
    emit(csv.str(), out_path, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  if (disagreements != 0) {
    err << disagreements << " disagreement(s) between valuation test and closed form\n";
    return kFailed;
  }
  return kOk;
}

int cmd_sym_search(int n, const std::string& frac_text, unsigned long long max_nodes,
                   const std::string& out_path, std::ostream& out, std::ostream& err) {
  try {
    const Frac frac = parse_frac_arg(frac_text, err);
    search::SearchConfig cfg;
    cfg.max_nodes = max_nodes;
    const search::SymmetricReport r = search::symmetric_max_search(n, frac, cfg);
    json witnesses = json::array();
    for (const auto& w : r.witnesses) {
      witnesses.push_back(json{{"A", io::sets_to_json(w.a)}, {"B", io::sets_to_json(w.b)}});
    }
    const json report{{"label", "EXPLORATORY"},
                      {"n", r.n},
                      {"a", r.frac.c()},
                      {"b", r.frac.d()},
                      {"best_product", r.best_product},
                      {"witness_count", r.witnesses.size()},
                      {"witnesses", witnesses},
                      {"nodes", r.nodes_visited},
                      {"pruned", r.pruned},
                      {"exhausted", r.exhausted}};
    emit(io::dump(report), out_path, out);
    return r.exhausted ? kOk : kBudget;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Maximal fractional cross-intersecting families: generators and exhaustive checks",
               args.empty() ? "xifam" : args.front()};
  app.require_subcommand(1);

  std::string pair_path;
  auto* check = app.add_subcommand("check-pair", "Validate a pair file and report its structure");
  check->add_option("path", pair_path, "Pair JSON file")->required();

  SearchOptions sopts;
  sopts.threads = default_threads();
  auto* search_cmd = app.add_subcommand("search", "Enumerate all maximal pairs for (n, c/d)");
  search_cmd->add_option("--n", sopts.n, "Ground set size")->required();
  search_cmd->add_option("--frac", sopts.frac, "Fraction c/d")->required();
  search_cmd->add_flag("--canonicalize", sopts.canonicalize,
                       "Group pairs up to ground-set permutation and compare with the known classes");
  search_cmd->add_option("--max-nodes", sopts.max_nodes, "Node budget");
  search_cmd->add_option("--threads", sopts.threads, "Worker threads (default $XIFAM_THREADS or 1)");
  search_cmd->add_option("--out", sopts.out_path, "Write the report here instead of stdout");

  int gen_n = 0;
  int gen_k = 0;
  std::string gen_frac;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "Write the k-th characterized maximal pair");
  gen->add_option("--n", gen_n, "Ground set size")->required();
  gen->add_option("--frac", gen_frac, "Fraction c/d")->required();
  gen->add_option("--k", gen_k, "Class index");
  gen->add_option("--out", gen_out, "Output pair file (stdout if omitted)");

  int max_n = 0;
  std::string binom_out;
  auto* binom = app.add_subcommand("binom-pow2", "CSV table of power-of-two binomial coefficients");
  binom->add_option("--max-n", max_n, "Largest n")->required();
  binom->add_option("--out", binom_out, "Output CSV (stdout if omitted)");

  int sym_n = 0;
  std::string sym_frac;
  unsigned long long sym_nodes = 100'000'000;
  std::string sym_out;
  auto* sym = app.add_subcommand("sym-search", "Exploratory search for the symmetric variant");
  sym->add_option("--n", sym_n, "Ground set size")->required();
  sym->add_option("--frac", sym_frac, "Fraction a/b")->required();
  sym->add_option("--max-nodes", sym_nodes, "Node budget");
  sym->add_option("--out", sym_out, "Write the report here instead of stdout");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  for (const auto& a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("xifam");
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  if (check->parsed()) return cmd_check_pair(pair_path, out, err);
  if (search_cmd->parsed()) return cmd_search(sopts, out, err);
  if (gen->parsed()) return cmd_gen(gen_n, gen_frac, gen_k, gen_out, out, err);
  if (binom->parsed()) return cmd_binom_pow2(max_n, binom_out, out, err);
  if (sym->parsed()) return cmd_sym_search(sym_n, sym_frac, sym_nodes, sym_out, out, err);
  return kInputError;
}

}  // namespace xifam::cli
