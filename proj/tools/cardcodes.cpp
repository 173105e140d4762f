// Command-line frontend: generate, verify, decode, search, dualize, reduce,
// and inspect announcement colorings. Output contract: stdout carries
// line-oriented key=value pairs for scripting; prose diagnostics go to
// stderr. Exit codes: 0 success / true verdict / SAT, 1 false verdict /
// UNSAT / decode failure, 2 usage or precondition error, 3 search timeout.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cardcodes/coloring.hpp"
#include "cardcodes/deck.hpp"
#include "cardcodes/decode.hpp"
#include "cardcodes/johnson.hpp"
#include "cardcodes/protocols.hpp"
#include "cardcodes/search.hpp"
#include "cardcodes/verify.hpp"

namespace {

using namespace cardcodes;

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

/// Accepts a file path, `fixture:NAME`, or a bare built-in fixture name.
Coloring resolve_coloring(const std::string& arg) {
  if (arg.rfind("fixture:", 0) == 0) return builtin_fixture(arg.substr(8)).coloring;
  if (std::filesystem::exists(arg)) return load_coloring(arg);
  const auto names = fixture_names();
  if (std::find(names.begin(), names.end(), arg) != names.end())
    return builtin_fixture(arg).coloring;
  throw std::invalid_argument("no coloring file or built-in fixture named '" + arg + "'");
}

std::string class_sizes_text(const Coloring& col) {
  std::vector<int> sizes;
  for (MessageId m = 0; m < col.message_count; ++m)
    sizes.push_back(static_cast<int>(class_members(col, m).size()));
  std::sort(sizes.begin(), sizes.end());
  std::string out;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(sizes[i]);
  }
  return out;
}

void print_summary(const Coloring& col) {
  std::cout << "n=" << col.n << "\n";
  std::cout << "a=" << col.a << "\n";
  std::cout << "message_count=" << col.message_count << "\n";
  std::cout << "class_sizes=" << class_sizes_text(col) << "\n";
}

void maybe_save(const std::string& path, const Coloring& col) {
  if (path.empty()) return;
  save_coloring(col, path);
  std::cout << "wrote=" << path << "\n";
}

struct GenArgs {
  std::string protocol;
  std::string sig_text;
  int d = 0;  // 0: use the signature's c+r
  int q = 0;  // 0: least prime >= n
  std::string out;
};

int run_gen(const GenArgs& args) {
  Coloring col;
  if (args.protocol.rfind("fixture:", 0) == 0) {
    const Fixture fx = builtin_fixture(args.protocol.substr(8));
    col = fx.coloring;
    if (!args.sig_text.empty()) {
      const Signature sig = parse_signature(args.sig_text);
      if (sig.n() != col.n || sig.a != col.a)
        throw std::invalid_argument("signature " + args.sig_text + " does not match fixture " +
                                    fx.name + " (n=" + std::to_string(col.n) +
                                    ", a=" + std::to_string(col.a) + ")");
    }
  } else {
    if (args.sig_text.empty())
      throw std::invalid_argument("--sig is required for protocol '" + args.protocol + "'");
    const Signature sig = parse_signature(args.sig_text);
    if (args.protocol == "modn") {
      col = tabulate_chi_modn(sig);
    } else if (args.protocol == "mod2") {
      col = tabulate_chi_2(sig);
    } else if (args.protocol == "gf") {
      const int d = args.d > 0 ? args.d : sig.d();
      std::optional<FieldWeights> weights;
      if (args.q > 0) weights = make_field_weights(sig.n(), args.q);
      col = tabulate_chi_gf(sig, d, std::move(weights));
    } else {
      throw std::invalid_argument("unknown protocol '" + args.protocol +
                                  "' (expected modn, mod2, gf, or fixture:NAME)");
    }
  }
  print_summary(col);
  maybe_save(args.out, col);
  return 0;
}

struct VerifyArgs {
  std::string coloring;
  std::string sig_text;
  std::string checks;
  bool all_witnesses = false;
  int jobs = 1;
};

int run_verify(const VerifyArgs& args) {
  const Coloring col = resolve_coloring(args.coloring);
  const Signature sig = parse_signature(args.sig_text);
  VerifyOptions opt;
  opt.all_witnesses = args.all_witnesses;
  opt.jobs = args.jobs;

  bool all_ok = true;
  for (const std::string& check : split_list(args.checks)) {
    Report report;
    std::string key = check;
    if (check == "informative") {
      report = check_informative(col, sig, opt);
    } else if (check == "min-informative" || check == "min") {
      key = "min-informative";
      report = check_min_informative(col, sig, opt);
    } else if (check == "safe") {
      report = check_safe(col, sig, opt);
    } else if (check == "weak-safe" || check == "weaksafe") {
      key = "weak-safe";
      report = check_safe(col, make_signature(sig.a, sig.b + sig.c, 0, sig.r), opt);
    } else if (check == "ca23") {
      report = check_ca2_ca3(col, sig, opt);
    } else {
      throw std::invalid_argument("unknown check '" + check +
                                  "' (expected informative, min-informative, safe, weak-safe, "
                                  "or ca23)");
    }
    std::cout << key << "=" << (report.verdict ? "true" : "false") << "\n";
    std::cout << key << "_checked=" << report.checked_count << "\n";
    for (const Witness& w : report.witnesses) std::cout << "witness=" << witness_to_string(w) << "\n";
    all_ok = all_ok && report.verdict;
  }
  std::cout << "result=" << (all_ok ? "pass" : "fail") << "\n";
  return all_ok ? 0 : 1;
}

struct DecodeArgs {
  std::string coloring;
  std::string sig_text;
  std::string hand_text;
  std::uint32_t msg = 0;
  std::string mode;
};

int run_decode(const DecodeArgs& args) {
  const Coloring col = resolve_coloring(args.coloring);
  const Signature sig = parse_signature(args.sig_text);
  const Hand b_hand = parse_hand(args.hand_text, sig.n());
  // Resolve the answer before touching stdout so a decode failure never
  // leaves a partial line behind.
  if (args.mode == "full") {
    const std::string text = format_hand(decode_full(b_hand, args.msg, col, sig));
    std::cout << "hand=" << text << "\n";
  } else if (args.mode == "min") {
    const std::string text = format_hand(decode_min(b_hand, args.msg, col, sig));
    std::cout << "hand=" << text << "\n";
  } else if (args.mode == "card") {
    const Card card = learned_card(b_hand, args.msg, col, sig);
    std::cout << "card=" << static_cast<int>(card) << "\n";
  } else {
    throw std::invalid_argument("unknown decode mode '" + args.mode +
                                "' (expected full, min, or card)");
  }
  return 0;
}

struct SearchArgs {
  std::string sig_text;
  int k = 1;
  std::string constraints;
  std::string profile;
  std::optional<double> timeout;
  bool no_symmetry = false;
  bool no_coverage = false;
  std::string out;
};

int run_search(const SearchArgs& args, const std::optional<double>& global_timeout) {
  const Signature sig = parse_signature(args.sig_text);
  Constraints cons;
  cons.k = args.k;
  for (const std::string& token : split_list(args.constraints)) {
    if (token == "proper") {
      cons.informativeness = Informativeness::Proper;
    } else if (token == "min" || token == "min-informative") {
      cons.informativeness = Informativeness::MinInformative;
    } else if (token == "safe") {
      cons.safety = Safety::Safe;
    } else if (token == "weaksafe" || token == "weak-safe") {
      cons.safety = Safety::WeakSafe;
    } else if (token != "none") {
      throw std::invalid_argument("unknown constraint '" + token +
                                  "' (expected proper, min, safe, weaksafe, or none)");
    }
  }
  if (!args.profile.empty()) {
    std::vector<int> parts;
    for (const std::string& part : split_list(args.profile)) parts.push_back(std::stoi(part));
    cons.size_profile = std::move(parts);
  }
  if (args.timeout)
    cons.timeout_seconds = *args.timeout;
  else if (global_timeout)
    cons.timeout_seconds = *global_timeout;
  cons.symmetry_breaking = !args.no_symmetry;
  cons.coverage_pruning = !args.no_coverage;

  const SearchResult res = find_coloring(sig, cons);
  std::cout << "outcome=" << to_string(res.outcome) << "\n";
  std::cout << "nodes=" << res.nodes_explored << "\n";
  std::cout << "elapsed=" << res.elapsed_seconds << "\n";
  if (res.outcome == SearchOutcome::Sat) {
    print_summary(*res.coloring);
    maybe_save(args.out, *res.coloring);
    return 0;
  }
  return res.outcome == SearchOutcome::Unsat ? 1 : 3;
}

struct TransformArgs {
  std::string coloring;
  std::string sig_text;
  std::string out;
};

int run_dual(const TransformArgs& args) {
  const Coloring col = resolve_coloring(args.coloring);
  const Signature sig = parse_signature(args.sig_text);
  const auto [dual, dual_sig] = dual_protocol(col, sig);
  std::cout << "sig=" << format_signature(dual_sig) << "\n";
  print_summary(dual);
  maybe_save(args.out, dual);
  return 0;
}

int run_reduce(const TransformArgs& args) {
  const Coloring col = resolve_coloring(args.coloring);
  const Signature sig = parse_signature(args.sig_text);
  const Coloring reduced = reduce_protocol(col, sig);
  std::cout << "sig=" << format_signature(sig) << "\n";
  print_summary(reduced);
  maybe_save(args.out, reduced);
  return 0;
}

struct StatsArgs {
  std::string sig_text;
  std::string graph_text;
};

int run_stats(const StatsArgs& args) {
  const Signature sig = parse_signature(args.sig_text);
  std::optional<GraphSpec> gs;
  if (!args.graph_text.empty()) {
    const auto parts = split_list(args.graph_text);
    if (parts.size() != 3) throw std::invalid_argument("--graph expects n,m,d");
    gs = make_graph_spec(std::stoi(parts[0]), std::stoi(parts[1]), std::stoi(parts[2]));
  } else if (sig.d() <= std::min(sig.a, sig.n() - sig.a)) {
    gs = make_graph_spec(sig.n(), sig.a, sig.d());
  } else {
    // Every pair of distinct hands lies within the announcement distance, so
    // the adjacency structure degenerates to a complete graph.
    std::cout << "graph=complete\n";
    std::cout << "vertices=" << binomial(sig.n(), sig.a) << "\n";
  }
  if (gs) {
    std::cout << "graph_n=" << gs->n << "\n";
    std::cout << "graph_m=" << gs->m << "\n";
    std::cout << "graph_d=" << gs->d << "\n";
    const GraphStats stats = graph_stats(*gs);
    std::cout << "vertices=" << stats.vertex_count << "\n";
    if (stats.degree) std::cout << "degree=" << *stats.degree << "\n";
    if (stats.diameter) std::cout << "diameter=" << *stats.diameter << "\n";
    std::string cliques;
    for (std::size_t i = 0; i < stats.max_clique_sizes.size(); ++i) {
      if (i) cliques += ',';
      cliques += std::to_string(stats.max_clique_sizes[i]);
    }
    std::cout << "max_cliques=" << cliques << "\n";
  }

  const std::uint64_t deals = binomial(sig.n(), sig.a) *
                              binomial(sig.n() - sig.a, sig.b) *
                              binomial(sig.n() - sig.a - sig.b, sig.c);
  std::cout << "deals=" << deals << "\n";
  const SolvabilityReport rep = check_solvability_bounds(sig);
  std::cout << "solvability="
            << (rep.informative_safe_possible == Solvability::Impossible ? "impossible"
                                                                         : "unknown")
            << "\n";
  for (const std::string& reason : rep.reasons) std::cout << "reason=" << reason << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Announcement colorings for card-deal communication: generate, verify, "
      "decode, search, dualize, reduce, and inspect."};
  app.require_subcommand(1);

  int jobs = 1;
  std::optional<double> global_timeout;
  app.add_option("--jobs", jobs, "Worker threads for verification")->capture_default_str();
  app.add_option("--timeout", global_timeout, "Default search time budget in seconds");

  int exit_code = 0;

  GenArgs gen_args;
  CLI::App* gen = app.add_subcommand("gen", "Tabulate a protocol or emit a built-in fixture");
  gen->add_option("--protocol", gen_args.protocol, "modn | mod2 | gf | fixture:NAME")->required();
  gen->add_option("--sig", gen_args.sig_text, "Signature a,b,c,r");
  gen->add_option("--d", gen_args.d, "Announcement distance for gf (default: the signature's c+r)");
  gen->add_option("--q", gen_args.q, "Field size for gf (default: least prime >= n)");
  gen->add_option("-o,--out", gen_args.out, "Write the coloring to this file");
  gen->callback([&] { exit_code = run_gen(gen_args); });

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand("verify", "Check coloring properties and print witnesses");
  verify->add_option("--coloring", verify_args.coloring, "Coloring file or fixture name")
      ->required();
  verify->add_option("--sig", verify_args.sig_text, "Signature a,b,c,r")->required();
  verify
      ->add_option("--checks", verify_args.checks,
                   "Comma list: informative, min-informative, safe, weak-safe, ca23")
      ->required();
  verify->add_flag("--all-witnesses", verify_args.all_witnesses,
                   "Report every violation, not just the first per site");
  verify->callback([&] {
    verify_args.jobs = jobs;
    exit_code = run_verify(verify_args);
  });

  DecodeArgs decode_args;
  CLI::App* decode = app.add_subcommand("decode", "Reconstruct sender information from a message");
  decode->add_option("--coloring", decode_args.coloring, "Coloring file or fixture name")
      ->required();
  decode->add_option("--sig", decode_args.sig_text, "Signature a,b,c,r")->required();
  decode->add_option("--hand", decode_args.hand_text, "Receiver hand, e.g. 4,5,6")->required();
  decode->add_option("--msg", decode_args.msg, "Announced message id")->required();
  decode->add_option("--mode", decode_args.mode, "full | min | card")->required();
  decode->callback([&] { exit_code = run_decode(decode_args); });

  SearchArgs search_args;
  CLI::App* search = app.add_subcommand("search", "Backtracking existence search for colorings");
  search->add_option("--sig", search_args.sig_text, "Signature a,b,c,r")->required();
  search->add_option("-k", search_args.k, "Maximum number of messages")->required();
  search->add_option("--constraints", search_args.constraints,
                     "Comma list: proper | min, safe | weaksafe");
  search->add_option("--profile", search_args.profile, "Exact class sizes, e.g. 5,6,6,6,6,6");
  search->add_option("--timeout", search_args.timeout, "Time budget in seconds");
  search->add_flag("--no-symmetry", search_args.no_symmetry, "Disable symmetry breaking");
  search->add_flag("--no-coverage-pruning", search_args.no_coverage,
                   "Disable the per-class card coverage prune");
  search->add_option("-o,--out", search_args.out, "Write a SAT coloring to this file");
  search->callback([&] { exit_code = run_search(search_args, global_timeout); });

  TransformArgs dual_args;
  CLI::App* dual = app.add_subcommand("dual", "Complement transform (requires c+r = 1)");
  dual->add_option("--coloring", dual_args.coloring, "Coloring file or fixture name")->required();
  dual->add_option("--sig", dual_args.sig_text, "Signature a,b,c,r")->required();
  dual->add_option("-o,--out", dual_args.out, "Write the transformed coloring to this file");
  dual->callback([&] { exit_code = run_dual(dual_args); });

  TransformArgs reduce_args;
  CLI::App* reduce = app.add_subcommand("reduce", "Fold messages down to the one-card budget");
  reduce->add_option("--coloring", reduce_args.coloring, "Coloring file or fixture name")
      ->required();
  reduce->add_option("--sig", reduce_args.sig_text, "Signature a,b,c,r")->required();
  reduce->add_option("-o,--out", reduce_args.out, "Write the reduced coloring to this file");
  reduce->callback([&] { exit_code = run_reduce(reduce_args); });

  StatsArgs stats_args;
  CLI::App* stats = app.add_subcommand("stats", "Graph shape and solvability bounds");
  stats->add_option("--sig", stats_args.sig_text, "Signature a,b,c,r")->required();
  stats->add_option("--graph", stats_args.graph_text, "Override the graph as n,m,d");
  stats->callback([&] { exit_code = run_stats(stats_args); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const cardcodes::DecodeError& e) {
    std::cout << "error=" << cardcodes::to_string(e.code()) << "\n";
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
