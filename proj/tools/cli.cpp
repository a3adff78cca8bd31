#include "cli.hpp"

#include <alexinv/alexander.hpp>
#include <alexinv/corpus.hpp>
#include <alexinv/covers.hpp>
#include <alexinv/errors.hpp>
#include <alexinv/random_instances.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>

namespace alexinv::cli {
namespace {

using nlohmann::json;

const std::vector<std::string> kTheorems = {"levine",        "blanchfield", "b1-one-characterization",
                                            "torsion-cover", "shalen-wagreich", "hironaka",
                                            "b1-ge-4"};

/// Bad input that the argument parser could not catch.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string path;
  std::string corpus;
  std::string poly;
  std::size_t arity = 0;
  std::string theorem;
  std::string show_name;
  std::vector<unsigned> primes;
  std::uint64_t seed = 0;
  std::size_t cases = 50;
  std::size_t max_index = kDefaultMaxIndex;
  long max_degree = 12;
  bool json = true;
};

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

std::string unit_string(const MonomialUnit& u) { return to_string(u.as_poly()); }

// ---------------------------------------------------------------- compute

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

CorpusEntry named_entry(const std::string& name) {
  auto e = find_entry(name);
  if (!e) throw UsageError("unknown corpus entry '" + name + "'");
  return *e;
}

int cmd_compute(const Options& opt, std::ostream& out) {
  if (opt.corpus.empty() == opt.path.empty()) throw UsageError("compute: give exactly one of PATH or --corpus");
  std::optional<CorpusEntry> entry;
  Presentation p = opt.corpus.empty() ? parse_presentation(read_file(opt.path))
                                      : (entry = named_entry(opt.corpus))->presentation;
  InvariantReport report = full_report(p);
  if (entry) {
    if (entry->b1) report.checks["expected_b1"] = entry->b1->value == report.b1;
    if (entry->torsion) report.checks["expected_torsion"] = entry->torsion->value == report.torsion;
    if (entry->delta) report.checks["expected_delta"] = entry->delta->value == to_string(report.delta.poly);
  }
  json j = to_json(report);
  j["presentation"] = to_string(p);
  j["source"] = entry ? "corpus:" + entry->name : opt.path;
  if (opt.json) {
    emit(out, j);
  } else {
    out << "b1: " << report.b1 << "\ntorsion order: " << report.torsion_order() << "\ndelta: "
        << to_string(report.delta.poly) << "\nsymmetry: " << (report.symmetry ? to_string(report.symmetry->kind) : "n/a")
        << "\n";
  }
  return kSuccess;
}

// --------------------------------------------------------------- classify

std::size_t infer_arity(const std::string& text) {
  std::size_t arity = 1;
  static const std::regex indexed("t([0-9]+)");
  for (auto it = std::sregex_iterator(text.begin(), text.end(), indexed); it != std::sregex_iterator(); ++it)
    arity = std::max<std::size_t>(arity, std::stoul((*it)[1].str()));
  return arity;
}

int cmd_classify(const Options& opt, std::ostream& out) {
  const std::size_t arity = opt.arity ? opt.arity : infer_arity(opt.poly);
  const LaurentPoly f = parse_poly(opt.poly, arity);
  if (f.is_zero()) throw PreconditionError("classify: the zero polynomial has no symmetry class");
  const SymmetryClass s = classify_symmetry(f);
  const LevineHypotheses h = check_levine_hypotheses(f);

  json j;
  j["polynomial"] = to_string(f);
  j["arity"] = arity;
  j["normalized"] = to_string(normalize(f));
  j["symmetry"] = to_string(s.kind);
  j["witness"] = s.witness ? json(unit_string(*s.witness)) : json(nullptr);
  j["trace"] = integer_json(h.trace);
  j["levine_hypotheses"] = {{"is_symmetric", h.is_symmetric}, {"trace_nonzero", h.trace_nonzero}};
  j["realizable"] = nullptr;
  if (arity == 1) j["realizable"] = characterize_b1_one(f).realizable;
  if (opt.json) {
    emit(out, j);
  } else {
    out << "symmetry: " << to_string(s.kind) << "\ntrace: " << h.trace.get_str() << "\n";
    if (arity == 1) out << "realizable: " << (j["realizable"].get<bool>() ? "true" : "false") << "\n";
  }
  return kSuccess;
}

// ----------------------------------------------------------------- verify

struct Suite {
  std::string theorem;
  json cases = json::array();
  json skipped = json::array();
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::optional<json> counterexample;

  void record(json c, bool ok) {
    if (ok) {
      ++passed;
    } else {
      ++failed;
      if (!counterexample) counterexample = c;
    }
    cases.push_back(std::move(c));
  }
  void skip(const std::string& what, const std::string& reason) {
    skipped.push_back({{"case", what}, {"reason", reason}});
  }
  void record(const TheoremReport& r, const std::string& label) {
    json c = to_json(r);
    c["case"] = label;
    record(std::move(c), r.passed);
  }
};

Rng case_rng(std::uint64_t seed, std::size_t k) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(k)};
  return Rng(seq);
}

std::vector<CorpusEntry> selected_entries(const Options& opt) {
  if (opt.corpus.empty() || opt.corpus == "all") return all_entries();
  return {named_entry(opt.corpus)};
}

bool explicit_request(const Options& opt) {
  return !opt.primes.empty() || !(opt.corpus.empty() || opt.corpus == "all");
}

void suite_levine(const Options& opt, Suite& s) {
  for (std::size_t k = 0; k < opt.cases; ++k) {
    Rng rng = case_rng(opt.seed, k);
    const std::size_t arity = 1 + k % 3;
    const std::size_t n = static_cast<std::size_t>(uniform_int(rng, 1, 3));
    const AlexanderMatrix a = random_alexander_matrix(rng, n, n, arity, opt.max_degree);
    const LaurentPoly lambda = random_symmetric_nonzero_trace(rng, arity, opt.max_degree);
    const AlexanderPolynomial before = order_zero_direct(a);
    const AlexanderPolynomial after = order_zero_direct(levine_extend(a, lambda));
    const LaurentPoly expected = normalize(lambda * before.poly);
    const bool ok = after.poly == expected;
    s.record({{"case", k},
              {"arity", arity},
              {"lambda", to_string(lambda)},
              {"delta", to_string(before.poly)},
              {"delta_extended", to_string(after.poly)},
              {"expected", to_string(expected)},
              {"status", ok ? "equal" : "unequal"}},
             ok);
  }
}

void suite_b1_one(const Options& opt, Suite& s) {
  for (std::size_t k = 0; k < opt.cases; ++k) {
    Rng rng = case_rng(opt.seed, k);
    const LaurentPoly accepted = random_unit_symmetric_nonzero_trace(rng, opt.max_degree);
    const B1OneCharacterization yes = characterize_b1_one(accepted);
    const bool witness_ok = yes.realizable && order_zero_direct(*yes.witness).poly == normalize(accepted);
    s.record({{"case", k},
              {"polynomial", to_string(accepted)},
              {"expected", "realizable"},
              {"realizable", yes.realizable},
              {"witness_matches", witness_ok},
              {"status", witness_ok ? "accepted" : "wrongly_rejected"}},
             witness_ok);

    const LaurentPoly rejected = random_b1_one_rejected(rng, opt.max_degree, k);
    const B1OneCharacterization no = characterize_b1_one(rejected);
    s.record({{"case", k},
              {"polynomial", to_string(rejected)},
              {"expected", "not_realizable"},
              {"realizable", no.realizable},
              {"status", no.realizable ? "wrongly_accepted" : "rejected"}},
             !no.realizable);
  }
}

void suite_blanchfield(const Options& opt, Suite& s) {
  for (const auto& e : selected_entries(opt)) {
    const AbelianizationData ab = abelianize(e.presentation);
    if (ab.rank == 0) {
      s.skip(e.name, "b1 = 0");
      continue;
    }
    const AlexanderPolynomial delta = alexander_polynomial(e.presentation);
    if (delta.is_zero()) {
      s.skip(e.name, "delta = 0");
      continue;
    }
    const SymmetryClass sym = classify_symmetry(delta.poly);
    bool ok = check_blanchfield(delta);
    json c = {{"case", e.name}, {"delta", to_string(delta.poly)}, {"symmetry", to_string(sym.kind)}};
    if (ab.rank == 1 && trace(delta.poly) != 0) {
      const bool even = delta.poly.degree_span(0) % 2 == 0;
      c["unit_symmetric"] = sym.unit_symmetric();
      c["even_degree_span"] = even;
      ok = ok && sym.unit_symmetric() && even;
    }
    c["status"] = ok ? "holds" : "violated";
    s.record(std::move(c), ok);
  }
}

std::size_t product_index(const std::vector<unsigned>& primes) {
  std::size_t index = 1;
  for (unsigned p : primes) index = index > SIZE_MAX / p ? SIZE_MAX : index * p;
  return index;
}

// Prime lists to use for an entry with the given b1: one prime for every
// coordinate, or a full list.
std::vector<std::vector<unsigned>> prime_lists(const Options& opt, std::size_t b1) {
  if (opt.primes.empty()) return {std::vector<unsigned>(b1, 2), std::vector<unsigned>(b1, 3)};
  if (opt.primes.size() == 1) return {std::vector<unsigned>(b1, opt.primes[0])};
  if (opt.primes.size() == b1) return {opt.primes};
  return {};
}

void suite_torsion_cover(const Options& opt, Suite& s) {
  for (const auto& e : selected_entries(opt)) {
    const std::size_t b1 = abelianize(e.presentation).rank;
    if (b1 == 0) {
      s.skip(e.name, "b1 = 0");
      continue;
    }
    // The product identity is asserted for b1 = 1 only; it fails on the
    // Heisenberg manifold's (Z/2)^2 cover (torsion Z/4, product 1). Such
    // entries still run when named explicitly.
    if (b1 != 1 && !explicit_request(opt)) {
      s.skip(e.name, "b1 != 1: not part of the default suite");
      continue;
    }
    const auto lists = prime_lists(opt, b1);
    if (lists.empty()) {
      if (explicit_request(opt) && opt.corpus != "all" && !opt.corpus.empty())
        throw ArityError("--primes needs 1 or " + std::to_string(b1) + " entries for " + e.name);
      s.skip(e.name, "prime count does not match b1");
      continue;
    }
    for (const auto& primes : lists) {
      if (product_index(primes) > opt.max_index && !explicit_request(opt)) {
        s.skip(e.name, "cover index exceeds --max-index");
        continue;
      }
      s.record(verify_torsion_cover_formula(e.presentation, primes, opt.max_index), e.name);
    }
  }
}

void suite_hironaka(const Options& opt, Suite& s) {
  const bool single = !(opt.corpus.empty() || opt.corpus == "all");
  if (single) named_entry(opt.corpus);
  if (single && !opt.primes.empty()) {
    const CorpusEntry e = named_entry(opt.corpus);
    const std::size_t b1 = abelianize(e.presentation).rank;
    const auto lists = prime_lists(opt, b1);
    if (lists.empty()) throw ArityError("--primes needs 1 or " + std::to_string(b1) + " entries for " + e.name);
    s.record(hironaka_check(free_abelian_cover(e.presentation, lists.front()), opt.max_index), e.name);
    return;
  }
  for (const auto& c : corpus_covers(opt.max_index)) {
    if (single && c.entry != opt.corpus) continue;
    s.record(hironaka_check(c.cover, opt.max_index), c.label);
  }
}

void suite_shalen_wagreich(const Options& opt, Suite& s) {
  const std::vector<unsigned> primes = opt.primes.empty() ? std::vector<unsigned>{2, 3, 5} : opt.primes;
  for (const auto& e : selected_entries(opt)) {
    for (unsigned p : primes) {
      const std::string label = e.name + "/p=" + std::to_string(p);
      const std::size_t r = mod_p_betti(e.presentation, p);
      if (r == 0) {
        s.skip(label, "d_p = 0");
        continue;
      }
      if (product_index(std::vector<unsigned>(r, p)) > opt.max_index && !explicit_request(opt)) {
        s.skip(label, "cover index exceeds --max-index");
        continue;
      }
      s.record(shalen_wagreich_report(e.presentation, p, opt.max_index), label);
    }
  }
}

void suite_b1_ge_4(const Options& opt, Suite& s) {
  const bool single = !(opt.corpus.empty() || opt.corpus == "all");
  for (const auto& e : selected_entries(opt)) {
    if (!single && abelianize(e.presentation).rank < 4) {
      s.skip(e.name, "b1 < 4");
      continue;
    }
    s.record(b1_ge_4_consistency(e.presentation), e.name);
  }
}

int cmd_verify(const Options& opt, std::ostream& out) {
  Suite s;
  s.theorem = opt.theorem;
  if (opt.theorem == "levine")
    suite_levine(opt, s);
  else if (opt.theorem == "b1-one-characterization")
    suite_b1_one(opt, s);
  else if (opt.theorem == "blanchfield")
    suite_blanchfield(opt, s);
  else if (opt.theorem == "torsion-cover")
    suite_torsion_cover(opt, s);
  else if (opt.theorem == "hironaka")
    suite_hironaka(opt, s);
  else if (opt.theorem == "shalen-wagreich")
    suite_shalen_wagreich(opt, s);
  else
    suite_b1_ge_4(opt, s);

  const bool ok = s.failed == 0;
  if (opt.json) {
    json j;
    j["theorem"] = s.theorem;
    j["seed"] = opt.seed;
    j["cases"] = s.cases;
    j["skipped"] = s.skipped;
    j["passed"] = s.passed;
    j["failed"] = s.failed;
    j["status"] = ok ? "ok" : "failed";
    j["counterexample"] = s.counterexample ? *s.counterexample : json(nullptr);
    emit(out, j);
  } else {
    out << s.theorem << ": " << s.passed << " passed, " << s.failed << " failed, " << s.skipped.size()
        << " skipped\n";
    if (s.counterexample) out << "counterexample: " << s.counterexample->dump() << "\n";
  }
  return ok ? kSuccess : kFailure;
}

// ----------------------------------------------------------------- corpus

void print_entry(const CorpusEntry& e, std::ostream& out, bool with_expected) {
  out << "# " << e.name << ": " << e.description << "\n";
  if (with_expected) {
    if (e.b1) out << "# b1 = " << e.b1->value << " (" << to_string(e.b1->source) << ")\n";
    if (e.torsion) {
      out << "# torsion = [";
      for (std::size_t i = 0; i < e.torsion->value.size(); ++i) out << (i ? "," : "") << e.torsion->value[i].get_str();
      out << "] (" << to_string(e.torsion->source) << ")\n";
    }
    if (e.delta) out << "# delta = " << e.delta->value << " (" << to_string(e.delta->source) << ")\n";
  }
  out << to_string(e.presentation) << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Alexander invariants of finitely presented groups", "alexinv"};
  app.require_subcommand(1);

  auto* compute = app.add_subcommand("compute", "Invariant report for a presentation");
  compute->add_option("path", opt.path, "Presentation file");
  compute->add_option("--corpus", opt.corpus, "Built-in corpus entry instead of a file");

  auto* classify = app.add_subcommand("classify", "Symmetry class and trace of a Laurent polynomial");
  classify->add_option("polynomial", opt.poly, "e.g. \"t^2 - 4*t + 1\"")->required();
  classify->add_option("--arity", opt.arity, "Number of variables (default: inferred)");

  auto* verify = app.add_subcommand("verify", "Run a theorem check suite");
  verify->add_option("theorem", opt.theorem, "Suite name")->required()->check(CLI::IsMember(kTheorems));
  verify->add_option("--corpus", opt.corpus, "Corpus entry name or 'all' (default all)");
  verify->add_option("--primes", opt.primes, "Comma-separated primes")->delimiter(',');
  verify->add_option("--seed", opt.seed, "Seed for random suites")->capture_default_str();
  verify->add_option("--cases", opt.cases, "Number of random cases")->capture_default_str();
  verify->add_option("--max-index", opt.max_index, "Largest cover index")->capture_default_str();
  verify->add_option("--max-degree", opt.max_degree, "Degree bound for random polynomials")
      ->capture_default_str()
      ->check(CLI::Range(0L, 64L));

  auto* corpus = app.add_subcommand("corpus", "Built-in presentations");
  corpus->require_subcommand(1);
  auto* list = corpus->add_subcommand("list", "Print every entry");
  auto* show = corpus->add_subcommand("show", "Print one entry with its expected invariants");
  show->add_option("name", opt.show_name)->required();

  for (auto* sub : {compute, classify, verify})
    sub->add_flag("--json,!--no-json", opt.json, "JSON output (default on)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    if (compute->parsed()) return cmd_compute(opt, out);
    if (classify->parsed()) return cmd_classify(opt, out);
    if (verify->parsed()) return cmd_verify(opt, out);
    if (list->parsed()) {
      for (const auto& e : all_entries()) print_entry(e, out, false);
      return kSuccess;
    }
    if (show->parsed()) {
      print_entry(named_entry(opt.show_name), out, true);
      return kSuccess;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ArityError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ResourceLimitError& e) {
    err << "resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}

}  // namespace alexinv::cli
