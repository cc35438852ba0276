#include "orderdim/cli.hpp"

#include <filesystem>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "orderdim/bounds.hpp"
#include "orderdim/diagonal.hpp"
#include "orderdim/dimension.hpp"
#include "orderdim/generators.hpp"
#include "orderdim/io.hpp"
#include "orderdim/separators.hpp"

namespace orderdim::cli {

namespace fs = std::filesystem;

namespace {

std::string set_str(const std::vector<std::string>& names, const std::vector<std::size_t>& xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ", ";
    s += names[xs[i]];
  }
  return s + "}";
}

std::string ext_str(const Poset& P, const LinearExtension& ext) {
  std::string s;
  for (std::size_t i = 0; i < ext.size(); ++i) {
    if (i) s += ' ';
    s += P.label(ext.at(i));
  }
  return s;
}

void print_realizer(std::ostream& out, const Poset& P, const Realizer& R) {
  for (std::size_t i = 0; i < R.size(); ++i) out << "  " << i << ": " << ext_str(P, R.exts[i]) << '\n';
}

// Writes `text` to `path`, or to `out` when path is empty.
void emit(std::ostream& out, const std::string& path, const std::string& text, const char* what) {
  if (path.empty()) {
    out << text;
    return;
  }
  write_text(path, text);
  out << "wrote " << what << " " << path << '\n';
}

struct Context {
  std::ostream& out;
  std::ostream& err;
};

int cmd_dim(Context& c, const std::string& path, std::size_t max_t, std::uint64_t budget, bool oracle,
            const std::string& witness_path) {
  const PosetDocument doc = load_poset(path);
  const Poset& P = doc.poset;
  DimensionResult res;
  try {
    res = dimension_exact(P, DimensionOptions{max_t, budget});
  } catch (const BudgetExceededError& e) {
    c.out << "budget exceeded after " << e.nodes() << " nodes\n";
    c.out << "dim in [" << e.lower() << ", " << e.upper() << "]\n";
    return kBudget;
  }
  c.out << "dim " << res.dim << '\n';
  c.out << "witness " << res.witness.size() << " extensions\n";
  print_realizer(c.out, P, res.witness);
  c.out << "nodes " << res.nodes << '\n';
  if (!witness_path.empty()) {
    write_text(witness_path, dump_realizer(RealizerDocument{doc, res.witness}));
    c.out << "wrote realizer " << witness_path << '\n';
  }
  if (!oracle) {
    c.out << "oracle not run\n";
  } else if (P.size() > 8) {
    c.out << "oracle skipped (more than 8 elements)\n";
  } else {
    const std::size_t o = dimension_oracle(P);
    c.out << "oracle " << o << (o == res.dim ? " (agrees)" : " (DISAGREES)") << '\n';
    if (o != res.dim) return kViolation;
  }
  return kOk;
}

int cmd_verify(Context& c, const std::string& poset_path, const std::string& realizer_path) {
  const PosetDocument doc = load_poset(poset_path);
  const RealizerDocument rdoc = load_realizer(realizer_path);
  const Poset& P = doc.poset;
  const Realizer R = translate_realizer(rdoc.poset.poset, rdoc.realizer, P);
  RealizerVerdict v;
  try {
    v = verify_realizer(P, R);
  } catch (const NotAnExtensionError& e) {
    c.out << "violation: extension " << e.ext_index() << " puts " << P.label(e.upper()) << " below "
          << P.label(e.lower()) << '\n';
    return kViolation;
  }
  if (!v) {
    c.out << "violation: no extension puts " << P.label(v.upper) << " below " << P.label(v.lower) << '\n';
    return kViolation;
  }
  c.out << "ok: " << R.size() << " extensions realize the poset\n";
  return kOk;
}

int cmd_extend(Context& c, const std::string& mode, const std::string& poset_path, const std::string& realizer_path,
               const std::string& point, const std::vector<std::string>& chain_names, const std::string& out_path) {
  const PosetDocument doc = load_poset(poset_path);
  const RealizerDocument rdoc = load_realizer(realizer_path);
  const Poset& P = doc.poset;
  Realizer result;
  if (mode == "point") {
    std::size_t x0 = 0;
    if (!point.empty()) x0 = P.index_of(point);
    else if (doc.marked_point) x0 = *doc.marked_point;
    else throw Error(ErrorCode::ParseError, "no --point given and the poset has no marked_point");
    // A realizer that still lists x0 is reported as such, not as a size mismatch.
    if (rdoc.poset.poset.find(P.label(x0))) {
      throw Error(ErrorCode::ElementNotRemoved, "realizer still contains " + P.label(x0));
    }
    const std::size_t drop[] = {x0};
    const Subposet sub = remove_elements(P, drop);
    result = db_point(P, x0, translate_realizer(rdoc.poset.poset, rdoc.realizer, sub.poset));
  } else {
    ChainSet chains;
    if (chain_names.empty()) {
      chains = doc.all_chains();
    } else {
      for (const auto& n : chain_names) chains.push_back(doc.chain(n).elements);
    }
    if (chains.empty()) throw Error(ErrorCode::ParseError, "no chains given and the poset names none");
    ElementSet all;
    for (const auto& ch : chains) all.insert(all.end(), ch.begin(), ch.end());
    all = normalize_subset(P, all);
    const Subposet sub = remove_elements(P, all);
    const Realizer R = translate_realizer(rdoc.poset.poset, rdoc.realizer, sub.poset);
    result = mode == "incomparable-chains" ? dbi(P, chains, R) : dbc(P, chains, R);
  }
  if (!verify_realizer(P, result)) throw std::logic_error("extension output does not verify");
  c.out << "extended realizer: " << result.size() << " extensions (verified)\n";
  emit(c.out, out_path, dump_realizer(RealizerDocument{doc, result}), "realizer");
  return kOk;
}

int cmd_separate(Context& c, const std::string& path, const std::string& mode, bool elements, bool roundtrip,
                 const std::string& xc1, std::size_t depth) {
  if (!xc1.empty()) {
    const auto comma = xc1.find(',');
    if (comma == std::string::npos) throw Error(ErrorCode::ParseError, "--xc1 expects LO,HI");
    Rational lo, hi;
    try {
      lo = Rational(xc1.substr(0, comma));
      hi = Rational(xc1.substr(comma + 1));
    } catch (const std::invalid_argument&) {
      throw Error(ErrorCode::ParseError, "--xc1 expects rationals like 1/3,1/2");
    }
    const RationalInterval A(lo, hi);
    const Rational x = xc1_via_ls(A, depth);
    c.out << "xc1 [" << A.lo.get_str() << ", " << A.hi.get_str() << "] -> " << x.get_str() << '\n';
    if (!A.contains(x)) return kViolation;
    if (path.empty()) return kOk;
  }
  if (path.empty()) throw Error(ErrorCode::ParseError, "no instance file given");
  const SeparatorDocument doc = load_separators(path);
  const SeparatorMode m = mode == "maximal" ? SeparatorMode::maximal : SeparatorMode::minimal;
  const auto cuts = ls_star(doc.instances, m);
  int code = kOk;
  for (std::size_t j = 0; j < cuts.size(); ++j) {
    c.out << "instance " << j << ": B = " << set_str(doc.names[j], cuts[j]) << '\n';
  }
  if (elements) {
    c.out << "separator elements at:";
    for (std::size_t j : separator_elements(doc.instances)) c.out << ' ' << j;
    c.out << '\n';
  }
  if (roundtrip) {
    for (std::size_t j = 0; j < doc.instances.size(); ++j) {
      const auto& inst = doc.instances[j];
      const Rational x = ls_to_point(inst);
      const ElementSet B = point_to_separator(inst, x);
      const bool ok = is_separator(inst, B);
      c.out << "instance " << j << ": point " << x.get_str() << " -> B = " << set_str(doc.names[j], B)
            << (ok ? " valid" : " INVALID") << '\n';
      if (!ok) code = kViolation;
    }
  }
  return code;
}

int cmd_diagonalize(Context& c, const std::string& path, const std::string& dir) {
  const DiagonalConfig cfg = load_diagonal_config(path);
  const auto programs = materialize_copies(cfg.k, cfg.assignment, cfg.programs, cfg.copies, cfg.stages);
  const DiagonalRun run = run_diagonalization(cfg.k, cfg.assignment, programs, cfg.stages);
  const auto verdicts = check_requirements(run.instances, run.transcript, programs, cfg.stages);
  std::ostringstream report;
  int code = kOk;
  for (std::size_t e = 0; e < verdicts.size(); ++e) {
    report << "program " << e << " (" << (cfg.copies[e] ? std::string("copy_minimal") : to_string(programs[e].kind))
           << " on L" << cfg.assignment[e] << "): " << verdicts[e].describe() << '\n';
    if (!verdicts[e].defeated() && !verdicts[e].unresolved) code = kViolation;
  }
  c.out << report.str();
  if (!dir.empty()) {
    const fs::path d(dir);
    write_text(d / "instances.json", dump_separators(separator_document(run.instances)));
    write_text(d / "transcript.log", run.transcript.log());
    write_text(d / "verdicts.txt", report.str());
    c.out << "wrote " << (d / "instances.json").string() << ", " << (d / "transcript.log").string() << ", "
          << (d / "verdicts.txt").string() << '\n';
  } else {
    c.out << run.transcript.log();
  }
  return code;
}

int cmd_extract(Context& c, const std::string& poset_path, const std::string& realizer_path, std::size_t threshold) {
  const PosetDocument doc = load_poset(poset_path);
  const RealizerDocument rdoc = load_realizer(realizer_path);
  const LeveledPoset lp = leveled_view(doc);
  const Realizer R = translate_realizer(rdoc.poset.poset, rdoc.realizer, lp.poset);
  const auto A = extract_separator(lp, R, threshold);
  std::vector<int> in(lp.levels(), 0);
  for (std::size_t m : A) in[m] = 1;
  c.out << "A = {";
  for (std::size_t i = 0; i < A.size(); ++i) c.out << (i ? ", " : "") << A[i];
  c.out << "}\n";
  bool f_ok = true, g_ok = true;
  for (std::size_t m = 0; m < lp.levels(); ++m) {
    if (lp.meta[m].kind == LevelTag::Kind::f_copy && !in[m]) f_ok = false;
    if (lp.meta[m].kind == LevelTag::Kind::g_copy && in[m]) g_ok = false;
  }
  c.out << "ran(f) in A: " << (f_ok ? "yes" : "no") << '\n';
  c.out << "A misses ran(g): " << (g_ok ? "yes" : "no") << '\n';
  return f_ok && g_ok ? kOk : kViolation;
}

// gen helpers

void write_poset_and_realizer(Context& c, const std::string& prefix, const PosetDocument& doc,
                              const std::optional<RealizerDocument>& rdoc) {
  write_text(prefix + ".poset.json", dump_poset(doc));
  c.out << "wrote poset " << prefix << ".poset.json (" << doc.poset.size() << " elements)\n";
  if (rdoc) {
    write_text(prefix + ".realizer.json", dump_realizer(*rdoc));
    c.out << "wrote realizer " << prefix << ".realizer.json (" << rdoc->realizer.size() << " extensions)\n";
  }
}

InjectionPair injection_from(const std::vector<std::size_t>& f, const std::vector<std::size_t>& g, std::size_t N,
                             bool random, std::uint64_t seed, std::size_t max_domain) {
  if (random) return random_injection_pair(N, max_domain, seed);
  return InjectionPair{f, g, N};
}

std::vector<NamedChain> name_chains(const ChainSet& chains, std::size_t first = 0) {
  std::vector<NamedChain> out;
  for (std::size_t i = 0; i < chains.size(); ++i) out.push_back({"C" + std::to_string(first + i), chains[i]});
  return out;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Order dimension toolkit"};
  app.require_subcommand(1);
  Context ctx{out, err};
  std::function<int()> action;

  // dim
  std::string poset_path, realizer_path, out_path;
  std::size_t max_t = 64;
  std::uint64_t budget = 10'000'000;
  bool oracle = false;
  auto* dim = app.add_subcommand("dim", "Exact dimension with a witness realizer");
  dim->add_option("poset", poset_path, "Poset document")->required();
  dim->add_option("--max-t", max_t, "Largest realizer size to search");
  dim->add_option("--budget", budget, "Search node budget");
  dim->add_flag("--oracle", oracle, "Cross-check with the enumeration oracle (at most 8 elements)");
  dim->add_option("-o,--witness", out_path, "Write the witness realizer here");
  dim->callback([&] { action = [&] { return cmd_dim(ctx, poset_path, max_t, budget, oracle, out_path); }; });

  auto* verify = app.add_subcommand("verify", "Check that a realizer realizes a poset");
  verify->add_option("poset", poset_path)->required();
  verify->add_option("realizer", realizer_path)->required();
  verify->callback([&] { action = [&] { return cmd_verify(ctx, poset_path, realizer_path); }; });

  std::string mode, point;
  std::vector<std::string> chain_names;
  auto* extend = app.add_subcommand("extend", "Extend a realizer of a reduced poset to the whole poset");
  extend->add_option("mode", mode, "point | incomparable-chains | chains")
      ->required()
      ->check(CLI::IsMember({"point", "incomparable-chains", "chains"}));
  extend->add_option("poset", poset_path)->required();
  extend->add_option("realizer", realizer_path, "Realizer of the reduced poset")->required();
  extend->add_option("--point", point, "Removed point (default: marked_point)");
  extend->add_option("--chain", chain_names, "Named chain (default: every chain in the poset)");
  extend->add_option("-o,--out", out_path, "Output realizer file (default: stdout)");
  extend->callback([&] {
    action = [&] { return cmd_extend(ctx, mode, poset_path, realizer_path, point, chain_names, out_path); };
  });

  // gen
  auto* gen = app.add_subcommand("gen", "Generate posets and realizers");
  gen->require_subcommand(1);
  std::string prefix;
  std::size_t n = 0, k = 0, N = 0, max_domain = 8;
  std::vector<std::size_t> fvals, gvals;
  bool random = false;
  std::uint64_t seed = 1;
  double p = 0.3;

  auto* gfn = gen->add_subcommand("fn", "Standard example F_n");
  gfn->add_option("n", n)->required();
  gfn->add_option("-o,--out", prefix, "Output prefix");
  gfn->callback([&] {
    action = [&] {
      const auto ex = gen_fn(n);
      const PosetDocument doc = poset_document(ex.poset);
      write_poset_and_realizer(ctx, prefix.empty() ? "F" + std::to_string(n) : prefix, doc,
                               RealizerDocument{doc, ex.realizer});
      return int(kOk);
    };
  });

  auto add_injection = [&](CLI::App* sub) {
    sub->add_option("--f", fvals, "Values f(0), f(1), ...")->delimiter(',');
    sub->add_option("--g", gvals, "Values g(0), g(1), ...")->delimiter(',');
    sub->add_option("--N", N, "Number of levels")->required();
    sub->add_flag("--random", random, "Draw f and g at random");
    sub->add_option("--seed", seed, "Random seed");
    sub->add_option("--max-domain", max_domain, "Largest random domain");
    sub->add_option("-o,--out", prefix, "Output prefix");
  };

  auto* gpk = gen->add_subcommand("pk", "Leveled poset P^k");
  gpk->add_option("k", k)->required();
  add_injection(gpk);
  gpk->callback([&] {
    action = [&] {
      const auto inj = injection_from(fvals, gvals, N, random, seed, max_domain);
      const auto lp = gen_pk(k, inj);
      write_poset_and_realizer(ctx, prefix.empty() ? "P" + std::to_string(k) : prefix, leveled_document(lp),
                               std::nullopt);
      return int(kOk);
    };
  });

  std::string variant;
  auto* gvar = gen->add_subcommand("variant", "Chain-removal variant of P^k with a 2-realizer of the rest");
  gvar->add_option("name", variant, "thm46 | thm48 | thm49")
      ->required()
      ->check(CLI::IsMember({"thm46", "thm48", "thm49"}));
  gvar->add_option("--n", n, "Variant parameter (thm48, thm49)");
  gvar->add_option("--k", k, "Expected k (checked against the variant)");
  add_injection(gvar);
  gvar->callback([&] {
    action = [&] {
      VariantSpec spec;
      spec.kind = variant == "thm46"   ? VariantSpec::Kind::thm46
                  : variant == "thm48" ? VariantSpec::Kind::thm48
                                       : VariantSpec::Kind::thm49;
      spec.n = n;
      if (k) spec.k = k;
      const auto inj = injection_from(fvals, gvals, N, random, seed, max_domain);
      const auto v = gen_pk_chain_variant(spec, inj);
      PosetDocument doc = leveled_document(v.lp);
      doc.chains = name_chains(v.chains);
      const RealizerDocument rdoc{poset_document(v.reduced.poset), v.realizer};
      write_poset_and_realizer(ctx, prefix.empty() ? variant : prefix, doc, rdoc);
      ctx.out << "k " << *v.spec.k << ", " << v.chains.size() << " chains\n";
      return int(kOk);
    };
  });

  std::string example;
  auto* gsharp = gen->add_subcommand("sharpness", "Sharpness examples for the chain bounds");
  gsharp->add_option("id", example, "e31 | e32 | e33 | e34 | e35")
      ->required()
      ->check(CLI::IsMember({"e31", "e32", "e33", "e34", "e35"}));
  gsharp->add_option("--n", n, "Parameter for e31, e32, e33");
  gsharp->add_option("-o,--out", prefix, "Output prefix");
  gsharp->callback([&] {
    action = [&] {
      SharpnessSpec spec;
      const char* ids[] = {"e31", "e32", "e33", "e34", "e35"};
      for (int i = 0; i < 5; ++i) {
        if (example == ids[i]) spec.kind = static_cast<SharpnessSpec::Kind>(i);
      }
      spec.n = n;
      const auto ex = gen_sharpness(spec);
      PosetDocument doc = poset_document(ex.poset);
      doc.chains = name_chains(ex.chains);
      write_poset_and_realizer(ctx, prefix.empty() ? example : prefix, doc,
                               RealizerDocument{poset_document(ex.reduced.poset), ex.reduced_realizer});
      ctx.out << "expected dim before " << ex.dim_before << ", after " << ex.dim_after << '\n';
      return int(kOk);
    };
  });

  std::string inst_path;
  auto* gdbp = gen->add_subcommand("dbp-reversal", "Poset and realizer encoding separation instances");
  gdbp->add_option("instances", inst_path)->required();
  gdbp->add_option("-o,--out", prefix, "Output prefix");
  gdbp->callback([&] {
    action = [&] {
      const auto sdoc = load_separators(inst_path);
      const auto rev = gen_dbp_reversal(sdoc.instances);
      PosetDocument doc = poset_document(rev.poset);
      doc.marked_point = rev.z0;
      write_poset_and_realizer(ctx, prefix.empty() ? "dbp" : prefix, doc,
                               RealizerDocument{poset_document(rev.reduced.poset), rev.realizer});
      return int(kOk);
    };
  });

  auto* grand = gen->add_subcommand("random", "Random poset");
  grand->add_option("--n", n, "Number of elements")->required();
  grand->add_option("--p", p, "Edge probability before closure");
  grand->add_option("--seed", seed, "Random seed");
  grand->add_option("-o,--out", prefix, "Output prefix");
  grand->callback([&] {
    action = [&] {
      write_poset_and_realizer(ctx, prefix.empty() ? "random" : prefix, poset_document(random_poset(n, p, seed)),
                               std::nullopt);
      return int(kOk);
    };
  });

  // separate
  std::string sep_mode = "minimal", xc1;
  bool elements = false, roundtrip = false;
  std::size_t depth = 8;
  auto* sep = app.add_subcommand("separate", "Linear separation on instance files");
  sep->add_option("instances", inst_path, "Separator instance document");
  sep->add_option("--mode", sep_mode)->check(CLI::IsMember({"minimal", "maximal"}));
  sep->add_flag("--elements", elements, "Report instances with a separating element");
  sep->add_flag("--xc1-roundtrip", roundtrip, "Map each instance to a point and back");
  sep->add_option("--xc1", xc1, "Choose a point of the interval LO,HI via separation");
  sep->add_option("--depth", depth, "Approximation depth for --xc1");
  sep->callback([&] {
    action = [&] { return cmd_separate(ctx, inst_path, sep_mode, elements, roundtrip, xc1, depth); };
  });

  std::string cfg_path, dir;
  auto* diag = app.add_subcommand("diagonalize", "Run the stage construction against candidate programs");
  diag->add_option("config", cfg_path)->required();
  diag->add_option("-o,--out-dir", dir, "Directory for instances, transcript and verdicts");
  diag->callback([&] { action = [&] { return cmd_diagonalize(ctx, cfg_path, dir); }; });

  std::size_t threshold = 1;
  auto* extract = app.add_subcommand("extract-separator", "Level set read off a realizer of a leveled poset");
  extract->add_option("poset", poset_path)->required();
  extract->add_option("realizer", realizer_path)->required();
  extract->add_option("--threshold", threshold, "Largest count of y-before-x extensions inside A");
  extract->callback([&] { action = [&] { return cmd_extract(ctx, poset_path, realizer_path, threshold); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }
  try {
    return action ? action() : int(kInputError);
  } catch (const BudgetExceededError& e) {
    err << "error: " << e.what() << '\n';
    return kBudget;
  } catch (const NotAnExtensionError& e) {
    err << "error: " << e.what() << '\n';
    return kViolation;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kViolation;
  }
}

}  // namespace orderdim::cli
