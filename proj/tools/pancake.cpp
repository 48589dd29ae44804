// pancake: command-line front end.
//
// Exit status: 0 success, 1 domain failure (bad input, failed expectation),
// 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <omp.h>

#include "pancake/canonical.hpp"
#include "pancake/classify.hpp"
#include "pancake/compose.hpp"
#include "pancake/json.hpp"
#include "pancake/oracle.hpp"
#include "pancake/patterns.hpp"
#include "pancake/potential.hpp"
#include "pancake/search.hpp"
#include "pancake/text_format.hpp"

using namespace pancake;

namespace {

enum class Format { Text, Json };


std::vector<Claim> claims_of(const Certificate& cert) {
  std::vector<Claim> out;
  for (SeqClass c : cert.classes) out.push_back({c, true});
  return out;
}

void print_certificate(const FlipSequence& seq, const Certificate& cert, Format fmt) {
  if (fmt == Format::Json) {
    std::cout << certificate_json(seq, cert).dump() << '\n';
  } else {
    std::cout << format_sequence_line(seq, claims_of(cert)) << '\n';
  }
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::vector<std::string> paths;
  std::vector<std::string> sequences;
  std::vector<std::string> expect;
  Format format = Format::Text;
};

int cmd_verify(const VerifyArgs& a) {
  std::vector<Claim> extra;
  for (const auto& e : a.expect) {
    const bool negated = !e.empty() && e[0] == '!';
    const auto cls = parse_seq_class(negated ? e.substr(1) : e);
    if (!cls) throw Error(ErrorKind::InvalidArgument, "unknown class '" + e + "'");
    extra.push_back({*cls, !negated});
  }

  struct Item {
    std::string source;
    SequenceEntry entry;
  };
  std::vector<Item> items;
  for (const auto& path : a.paths) {
    std::vector<SequenceEntry> entries;
    if (path == "-") {
      entries = parse_sequence_file(std::cin, "<stdin>");
    } else {
      std::ifstream in(path);
      if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open " + path);
      entries = parse_sequence_file(in, path);
    }
    for (auto& e : entries) items.push_back({path, std::move(e)});
  }
  for (const auto& s : a.sequences) items.push_back({"<arg>", parse_sequence_line(s)});
  if (items.empty()) throw Error(ErrorKind::InvalidArgument, "nothing to verify");

  int failed = 0;
  for (auto& [source, entry] : items) {
    const Certificate cert = classify(entry.seq);
    std::vector<Claim> claims = entry.claims;
    claims.insert(claims.end(), extra.begin(), extra.end());
    if (claims.empty()) claims.push_back({SeqClass::Sorting, true});
    std::vector<std::string> broken;
    for (const Claim& c : claims)
      if (cert.has(c.cls) != c.expected)
        broken.push_back(std::string(c.expected ? "" : "!") + std::string(to_string(c.cls)));
    if (!broken.empty()) ++failed;

    if (a.format == Format::Json) {
      nlohmann::json j = certificate_json(entry.seq, cert);
      j["source"] = source;
      j["line"] = entry.line;
      j["pass"] = broken.empty();
      j["failed_claims"] = broken;
      std::cout << j.dump() << '\n';
    } else {
      std::cout << source << ':' << entry.line << ": " << (broken.empty() ? "PASS" : "FAIL") << " n="
                << cert.n << " length=" << cert.length << " classes=";
      bool first = true;
      for (SeqClass c : cert.classes) {
        std::cout << (first ? "" : ",") << to_string(c);
        first = false;
      }
      std::cout << '\n';
      for (const auto& b : broken) std::cout << "  claim " << b << " does not hold\n";
      if (!broken.empty())
        for (const auto& f : cert.failures) std::cout << "  " << f << '\n';
    }
  }
  if (a.format == Format::Text)
    std::cout << items.size() - failed << '/' << items.size() << " passed\n";
  return failed == 0 ? 0 : 1;
}

// ---------------------------------------------------------------- gen / table

int cmd_gen(int n, bool extraction_order, Format fmt) {
  const FlipSequence seq = extraction_order ? generate(n) : generate_listing(n);
  const Certificate cert = classify(seq);
  print_certificate(seq, cert, fmt);
  return 0;
}

int cmd_table(int n_max, bool splice, bool extraction_order, Format fmt, int jobs) {
  const auto rows = table(n_max, TableOptions{splice, jobs});
  int bad = 0;
  for (const auto& row : rows) {
    if (!row.verified()) ++bad;
    const auto family = family_of(row.n);
    const FlipSequence shown =
        extraction_order || !family ? row.sequence : listing_order(row.sequence, *family);
    const Certificate cert = shown == row.sequence ? row.certificate : classify(shown);
    if (fmt == Format::Json) {
      nlohmann::json j = certificate_json(shown, cert);
      j["verified"] = row.verified();
      if (splice) {
        j["splice"] = row.splice_note;
        j["spliced"] = row.spliced ? nlohmann::json(format_sequence(*row.spliced)) : nlohmann::json(nullptr);
      }
      std::cout << j.dump() << '\n';
    } else {
      std::cout << format_sequence_line(shown, claims_of(cert)) << '\n';
    }
  }
  std::cerr << rows.size() - bad << '/' << rows.size() << " rows verified\n";
  if (splice) {
    int spliced = 0;
    for (const auto& row : rows) spliced += row.spliced.has_value();
    std::cerr << spliced << " rows also reached by splicing\n";
  }
  return bad == 0 ? 0 : 1;
}

// ---------------------------------------------------------------- search

struct SearchArgs {
  int n = 0;
  std::string mode = "patchwork";
  std::vector<std::string> symmetry;
  std::string preset;
  std::vector<std::string> hints;
  bool all = false;
  bool serial = false;
  bool stats = false;
  double budget = 0;
  Format format = Format::Text;
};

int cmd_search(const SearchArgs& a, int jobs) {
  SearchConfig cfg;
  cfg.n = a.n;
  cfg.jobs = jobs;
  cfg.budget_seconds = a.budget;
  cfg.emit = a.all ? Emit::All : Emit::First;
  if (a.mode == "palin")
    cfg.mode = SearchMode::PalindromicOdd;
  else if (a.mode == "triple")
    cfg.mode = SearchMode::Triple;
  else
    cfg.mode = SearchMode::Patchwork;
  for (const auto& s : a.symmetry) {
    if (s == "double")
      cfg.symmetry |= kDouble;
    else if (s == "pal-n1")
      cfg.symmetry |= kPalCenterNminus1;
    else if (s == "pal-n")
      cfg.symmetry |= kPalCenterN;
  }
  if (!a.preset.empty()) cfg.hints = hint_preset(a.preset, a.n);
  for (const auto& h : a.hints) {
    const auto colon = h.find(':');
    if (colon == std::string::npos)
      throw Error(ErrorKind::InvalidArgument, "hint '" + h + "' is not of the form arg:value");
    try {
      cfg.hints.push_back({std::stoi(h.substr(0, colon)), std::stoi(h.substr(colon + 1))});
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidArgument, "hint '" + h + "' is not of the form arg:value");
    }
  }

  const SearchResult r = a.serial ? search_serial(cfg) : search(cfg);
  for (const auto& seq : r.sequences) print_certificate(seq, classify(seq), a.format);
  std::cerr << r.sequences.size() << " sequences, " << (r.complete ? "complete" : "budget exhausted")
            << '\n';
  if (a.stats) std::cerr << r.nodes << " nodes\n";
  return 0;
}

// ---------------------------------------------------------------- compose

// A sequence literal, or a file whose first sequence line is used.
FlipSequence load_sequence(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t");
  if (first != std::string::npos && (arg[first] == '(' || arg.compare(first, 2, "n=") == 0))
    return parse_sequence(arg);
  std::ifstream in(arg);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open " + arg);
  const auto entries = parse_sequence_file(in, arg);
  if (entries.empty()) throw Error(ErrorKind::InvalidArgument, arg + " holds no sequence");
  return entries.front().seq;
}

int cmd_compose(bool odd, const std::string& a, const std::string& b, Format fmt) {
  const FlipSequence sa = load_sequence(a);
  const FlipSequence sb = load_sequence(b);
  const FlipSequence out = odd ? compose_odd(sa, sb) : compose_even(sa, sb);
  print_certificate(out, classify(out), fmt);
  return 0;
}

// ---------------------------------------------------------------- oracle

int cmd_oracle(int n, bool serial, bool potential_check, int jobs, Format fmt) {
  const GodTable t = serial ? god_table_serial(n) : god_table(n, jobs);
  const IdentityReport r = check_identities(t);
  const FlipSequence w = minimal_sequence(t, SignedPerm::minus_identity(n));
  std::optional<PotentialReport> pr;
  if (potential_check) pr = check_potential_bound(t, Plate::Excluded);
  if (fmt == Format::Json) {
    nlohmann::json j{{"n", n},
                     {"states", t.size()},
                     {"diameter", t.diameter()},
                     {"g_minus_identity", r.g_minus_identity},
                     {"g_minus_fn", r.g_minus_fn},
                     {"bound", r.bound},
                     {"cohen_blum", r.cohen_blum},
                     {"above_bound", r.above_bound},
                     {"minimal_sequence", format_sequence(w)},
                     {"failures", r.failures}};
    if (pr) j["potential_violations"] = pr->violations;
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "n=" << n << " states=" << t.size() << " diameter=" << t.diameter() << '\n'
              << "g(-I)=" << r.g_minus_identity << " g(-f_n)=" << r.g_minus_fn
              << " bound=" << r.bound << '\n'
              << "minimal " << format_sequence(w) << '\n';
    for (const auto& f : r.failures) std::cout << "FAIL " << f << '\n';
    if (pr)
      std::cout << "potential bound: " << pr->states << " states, " << pr->violations
                << " violations\n";
  }
  return r.ok() && (!pr || pr->violations == 0) ? 0 : 1;
}

// ---------------------------------------------------------------- potential / extract

int cmd_potential(const std::string& text, bool plate, Format fmt) {
  const SignedPerm s = parse_stack(text);
  const PotentialBreakdown p = potential(s, plate ? Plate::Included : Plate::Excluded);
  if (fmt == Format::Json) {
    std::cout << nlohmann::json{{"stack", format_stack(s)},
                                {"per_pancake", p.per_pancake},
                                {"plate", p.plate},
                                {"total", p.total}}
                     .dump()
              << '\n';
  } else {
    std::cout << "stack  " << format_stack(s) << "\nvalues [";
    for (std::size_t i = 0; i < p.per_pancake.size(); ++i)
      std::cout << (i ? " " : "") << p.per_pancake[i];
    std::cout << "]\n";
    if (plate) std::cout << "plate  " << p.plate << '\n';
    std::cout << "total  " << p.total << '\n';
  }
  return 0;
}

int cmd_extract(const std::string& text, Format fmt) {
  const Checkpoint cp = make_checkpoint(parse_stack(text));
  const FlipSequence seq = extract(cp);
  print_certificate(seq, classify(seq), fmt);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Burnt pancake sorting: fortuitous sequences, searches and exact distances"};
  app.require_subcommand(1);

  int jobs = 0;
  app.add_option("-j,--jobs", jobs, "Worker threads (0 = all cores)")
      ->envname("PANCAKE_JOBS")
      ->check(CLI::NonNegativeNumber);
  std::string format_name = "text";
  const std::vector<std::string> formats{"text", "json"};
  app.add_option("--format", format_name, "Output format")->check(CLI::IsMember(formats));

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Classify sequences and check their claims");
  verify->add_option("paths", va.paths, "Sequence files ('-' for stdin)");
  verify->add_option("-s,--sequence", va.sequences, "Inline sequence line");
  verify->add_option("-e,--expect", va.expect, "Class every sequence must have ('!Class' to forbid)");

  int gen_n = 0;
  std::string order = "listing";
  const std::vector<std::string> orders{"listing", "extraction"};
  auto* gen = app.add_subcommand("gen", "Generate the closed-form sequence for n");
  gen->add_option("-n,--n", gen_n, "Stack size")->required();
  gen->add_option("--order", order, "Listing rotation or raw extraction order")
      ->check(CLI::IsMember(orders));

  int table_max = 0;
  bool splice = false;
  auto* tab = app.add_subcommand("table", "Generate and verify every size up to --max");
  tab->add_option("--max", table_max, "Largest n")->required()->check(CLI::Range(15, 4096));
  tab->add_flag("--splice", splice, "Also rebuild each size by splicing smaller ones");
  tab->add_option("--order", order, "Listing rotation or raw extraction order")
      ->check(CLI::IsMember(orders));

  SearchArgs sa;
  auto* srch = app.add_subcommand("search", "Exhaustive search for fortuitous sequences");
  srch->add_option("-n,--n", sa.n, "Stack size")->required();
  srch->add_option("--mode", sa.mode, "Search space")
      ->check(CLI::IsMember({"patchwork", "triple", "palin"}));
  srch->add_option("--symmetry", sa.symmetry, "Imposed symmetries")
      ->check(CLI::IsMember({"double", "pal-n1", "pal-n"}));
  srch->add_option("--hints", sa.preset, "Named hint table")
      ->check(CLI::IsMember({"even-family", "double", "pal-n1", "pal-n", "generalized-odd", "triple"}));
  srch->add_option("--assign", sa.hints, "Pre-assignment arg:value, meaning f(arg) = value");
  srch->add_flag("--all", sa.all, "Emit every sequence instead of the first");
  srch->add_flag("--serial", sa.serial, "Use the single-threaded reference");
  srch->add_flag("--stats", sa.stats, "Report visited nodes (varies with --jobs)");
  srch->add_option("--budget", sa.budget, "Wall-clock limit in seconds (0 = none)")
      ->check(CLI::NonNegativeNumber);

  bool comp_odd = false;
  bool comp_even = false;
  std::string comp_a;
  std::string comp_b;
  auto* comp = app.add_subcommand("compose", "Splice two fortuitous sequences");
  auto* odd_flag = comp->add_flag("--odd", comp_odd, "Odd splice, n1 + n2 - 3");
  auto* even_flag = comp->add_flag("--even", comp_even, "Even splice, n1 + n2 - 2");
  odd_flag->excludes(even_flag);
  comp->add_option("a", comp_a, "Inserted sequence (literal or file)")->required();
  comp->add_option("b", comp_b, "Host sequence (literal or file)")->required();

  int oracle_n = 0;
  bool oracle_serial = false;
  bool oracle_potential = false;
  auto* orc = app.add_subcommand("oracle", "Exact distances by breadth-first search");
  orc->add_option("-n,--n", oracle_n, "Stack size")->required();
  orc->add_flag("--serial", oracle_serial, "Use the single-threaded reference");
  orc->add_flag("--check-potential", oracle_potential, "Check the potential bound on every state");

  std::string stack_text;
  bool with_plate = false;
  auto* pot = app.add_subcommand("potential", "Potential of a stack");
  pot->add_option("stack", stack_text, "Stack such as \"[4 5 6 -1 -2 3]\"")->required();
  pot->add_flag("--plate", with_plate, "Include the plate boundary");

  std::string cp_text;
  auto* ext = app.add_subcommand("extract", "Extract the sequence of a checkpoint stack");
  ext->add_option("stack", cp_text, "Checkpoint stack")->required();

  for (auto* sub : {verify, gen, tab, srch, comp, orc, pot, ext}) {
    sub->add_option("--format", format_name, "Output format")->check(CLI::IsMember(formats));
    sub->add_option("-j,--jobs", jobs, "Worker threads (0 = all cores)")
        ->envname("PANCAKE_JOBS")
        ->check(CLI::NonNegativeNumber);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (comp->parsed() && !comp_odd && !comp_even) {
    std::cerr << "compose: one of --odd or --even is required\n";
    return 2;
  }
  if (jobs > 0) omp_set_num_threads(jobs);
  const Format format = format_name == "json" ? Format::Json : Format::Text;

  try {
    const bool extraction = order == "extraction";
    if (verify->parsed()) {
      va.format = format;
      return cmd_verify(va);
    }
    if (gen->parsed()) return cmd_gen(gen_n, extraction, format);
    if (tab->parsed()) return cmd_table(table_max, splice, extraction, format, jobs);
    if (srch->parsed()) {
      sa.format = format;
      return cmd_search(sa, jobs);
    }
    if (comp->parsed()) return cmd_compose(comp_odd, comp_a, comp_b, format);
    if (orc->parsed()) return cmd_oracle(oracle_n, oracle_serial, oracle_potential, jobs, format);
    if (pot->parsed()) return cmd_potential(stack_text, with_plate, format);
    if (ext->parsed()) return cmd_extract(cp_text, format);
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return 1;
  }
  return 2;
}
