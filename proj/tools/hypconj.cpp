#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hypconj/bench.hpp"
#include "hypconj/context.hpp"
#include "hypconj/intmath.hpp"
#include "hypconj/list_solver.hpp"
#include "hypconj/oracle.hpp"
#include "hypconj/straightness.hpp"
#include "hypconj/words.hpp"

namespace {

using namespace hypconj;

struct RunConfig {
  std::string group_file;
  std::string profile = "practical";
  bool structured = false;
  long long conjugator_radius = -1;
  long long centraliser_radius = -1;
  long long power_cap = -1;
  int straight_power = -1;
  long long node_budget = -1;
};

void add_common_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("-g,--group", cfg.group_file, "group definition file")
      ->required();
  cmd->add_option("--profile", cfg.profile, "practical or paper")
      ->check(CLI::IsMember({"practical", "paper"}));
  cmd->add_flag("--structured", cfg.structured,
                "machine-readable key=value output");
  cmd->add_option("--conjugator-radius", cfg.conjugator_radius,
                  "cap for exhaustive conjugator searches");
  cmd->add_option("--centraliser-radius", cfg.centraliser_radius,
                  "cap for exhaustive centraliser searches");
  cmd->add_option("--power-cap", cfg.power_cap,
                  "ceiling for the doubling schedule");
  cmd->add_option("--straight-power", cfg.straight_power,
                  "powers checked by the straightness test");
  cmd->add_option("--node-budget", cfg.node_budget,
                  "ball enumeration node budget");
}

GroupContext load_context(const RunConfig& cfg) {
  GroupContext ctx = GroupContext::load(cfg.group_file);
  ctx.set_profile(cfg.profile == "paper" ? Profile::Paper
                                         : Profile::Practical);
  Caps caps = ctx.caps();
  if (cfg.conjugator_radius >= 0) caps.conjugator_radius_cap = cfg.conjugator_radius;
  if (cfg.centraliser_radius >= 0) caps.centraliser_radius_cap = cfg.centraliser_radius;
  if (cfg.power_cap >= 0) caps.power_cap = cfg.power_cap;
  if (cfg.straight_power >= 2) caps.straight_check_power = cfg.straight_power;
  if (cfg.node_budget >= 0) caps.node_budget = cfg.node_budget;
  ctx.set_caps(caps);
  return ctx;
}

std::string show_word(const Word& w, const Alphabet& alphabet,
                      bool structured) {
  std::string text = format_word(w, alphabet);
  if (!structured && text.empty()) return "(identity)";
  return text;
}

void print_kv(bool structured, const std::string& key,
              const std::string& value) {
  if (structured)
    std::cout << key << "=" << value << "\n";
  else
    std::cout << key << ": " << value << "\n";
}

const char* outcome_name(ListOutcome::Tag tag) {
  switch (tag) {
    case ListOutcome::Tag::Conjugate: return "conjugate";
    case ListOutcome::Tag::NotConjugate: return "not-conjugate";
    default: return "unverified-at-cap";
  }
}

int report_outcome(const GroupContext& ctx, const RunConfig& cfg,
                   const ListOutcome& outcome) {
  print_kv(cfg.structured, "outcome", outcome_name(outcome.tag));
  if (outcome.tag == ListOutcome::Tag::Conjugate)
    print_kv(cfg.structured, "witness",
             show_word(outcome.witness, ctx.alphabet(), cfg.structured));
  if (outcome.tag == ListOutcome::Tag::UnverifiedAtCap)
    print_kv(cfg.structured, "cap", outcome.cap_note);
  print_kv(cfg.structured, "branch", outcome.branch);
  print_kv(cfg.structured, "checks",
           std::to_string(outcome.assertions_checked));
  print_kv(cfg.structured, "profile", cfg.profile);
  return outcome.decided() ? 0 : 2;
}

int report_centraliser(const GroupContext& ctx, const RunConfig& cfg,
                       const CentraliserResult& result) {
  for (const Word& g : result.generators)
    print_kv(cfg.structured, "generator",
             show_word(g, ctx.alphabet(), cfg.structured));
  print_kv(cfg.structured, "count", std::to_string(result.generators.size()));
  print_kv(cfg.structured, "complete", result.complete ? "true" : "false");
  print_kv(cfg.structured, "branch", result.branch);
  print_kv(cfg.structured, "profile", cfg.profile);
  return result.complete ? 0 : 2;
}

std::vector<long long> parse_mu_list(const std::string& text) {
  std::vector<long long> mus;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (item.empty()) continue;
    mus.push_back(std::stoll(item));
  }
  if (mus.empty()) throw ArgumentError("bench: empty --mu-list");
  return mus;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"conjugacy and centralisers of word lists in hyperbolic groups"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string word_text, u_text, v_text;
  std::string a_file, b_file;
  long long radius = 8;
  int bench_m = 2;
  std::string mu_list = "1000,2000,4000,8000";
  int bench_reps = 3;
  std::uint64_t bench_seed = 20240917;

  CLI::App* cmd_reduce = app.add_subcommand("reduce", "shortlex normal form");
  add_common_options(cmd_reduce, cfg);
  cmd_reduce->add_option("-w,--word", word_text, "input word")->required();

  CLI::App* cmd_order = app.add_subcommand("order", "element order test");
  add_common_options(cmd_order, cfg);
  cmd_order->add_option("-w,--word", word_text, "input word")->required();

  CLI::App* cmd_conj =
      app.add_subcommand("conj", "conjugacy of two single words");
  add_common_options(cmd_conj, cfg);
  cmd_conj->add_option("-u", u_text, "first word")->required();
  cmd_conj->add_option("-v", v_text, "second word")->required();

  CLI::App* cmd_lists =
      app.add_subcommand("conj-lists", "conjugacy of two word lists");
  add_common_options(cmd_lists, cfg);
  cmd_lists->add_option("-A", a_file, "first list file")->required();
  cmd_lists->add_option("-B", b_file, "second list file")->required();

  CLI::App* cmd_cent =
      app.add_subcommand("centraliser", "centraliser generating set");
  add_common_options(cmd_cent, cfg);
  cmd_cent->add_option("-A", a_file, "list file")->required();

  CLI::App* cmd_oracle =
      app.add_subcommand("oracle-conj", "brute-force conjugator search");
  add_common_options(cmd_oracle, cfg);
  cmd_oracle->add_option("-A", a_file, "first list file")->required();
  cmd_oracle->add_option("-B", b_file, "second list file")->required();
  cmd_oracle->add_option("--radius", radius, "search radius");

  CLI::App* cmd_constants =
      app.add_subcommand("constants", "derived group constants");
  add_common_options(cmd_constants, cfg);

  CLI::App* cmd_bench =
      app.add_subcommand("bench", "conjugate round-trip timing");
  add_common_options(cmd_bench, cfg);
  cmd_bench->add_option("--m", bench_m, "list length");
  cmd_bench->add_option("--mu-list", mu_list, "comma-separated word lengths");
  cmd_bench->add_option("--reps", bench_reps, "instances per length");
  cmd_bench->add_option("--seed", bench_seed, "instance seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    GroupContext ctx = load_context(cfg);
    const Alphabet& alphabet = ctx.alphabet();

    if (*cmd_reduce) {
      Word w = ctx.reduce(parse_word(word_text, alphabet));
      print_kv(cfg.structured, "reduced",
               show_word(w, alphabet, cfg.structured));
      print_kv(cfg.structured, "length", std::to_string(w.size()));
      return 0;
    }
    if (*cmd_order) {
      OrderClass order = test_inf_order(ctx, parse_word(word_text, alphabet));
      if (order.is_infinite()) {
        print_kv(cfg.structured, "order", "infinite");
        print_kv(cfg.structured, "witness-power", std::to_string(order.value));
      } else {
        print_kv(cfg.structured, "order", std::to_string(order.value));
      }
      return 0;
    }
    if (*cmd_conj) {
      ListOutcome outcome =
          solve_lists(ctx, {parse_word(u_text, alphabet)},
                      {parse_word(v_text, alphabet)});
      return report_outcome(ctx, cfg, outcome);
    }
    if (*cmd_lists) {
      ListOutcome outcome = solve_lists(ctx, load_word_list(a_file, alphabet),
                                        load_word_list(b_file, alphabet));
      return report_outcome(ctx, cfg, outcome);
    }
    if (*cmd_cent) {
      CentraliserResult result =
          centraliser_lists(ctx, load_word_list(a_file, alphabet));
      return report_centraliser(ctx, cfg, result);
    }
    if (*cmd_oracle) {
      auto witness = oracle::brute_conjugator(
          ctx, load_word_list(a_file, alphabet),
          load_word_list(b_file, alphabet), radius);
      if (witness) {
        print_kv(cfg.structured, "witness",
                 show_word(*witness, alphabet, cfg.structured));
      } else {
        print_kv(cfg.structured, "witness", "none");
        print_kv(cfg.structured, "radius", std::to_string(radius));
      }
      return 0;
    }
    if (*cmd_constants) {
      const Constants& c = ctx.constants();
      auto show = [](long long v) {
        return v == kSaturated ? std::string("saturated") : std::to_string(v);
      };
      print_kv(cfg.structured, "delta", std::to_string(c.delta));
      print_kv(cfg.structured, "generators", std::to_string(c.gen_count));
      print_kv(cfg.structured, "L", std::to_string(c.L));
      print_kv(cfg.structured, "V", std::to_string(c.V));
      print_kv(cfg.structured, "M", show(c.M));
      print_kv(cfg.structured, "R", show(c.R));
      print_kv(cfg.structured, "torsion-order-bound",
               std::to_string(c.torsion_order_bound));
      print_kv(cfg.structured, "profile", cfg.profile);
      return 0;
    }
    if (*cmd_bench) {
      auto points = run_conjugacy_bench(ctx, bench_m, parse_mu_list(mu_list),
                                        bench_reps, bench_seed);
      for (const BenchPoint& p : points)
        std::printf("bench m=%d mu=%lld reps=%d mean-seconds=%.6f\n", p.m,
                    p.mu, p.reps, p.mean_seconds);
      return 0;
    }
  } catch (const CapExceeded& e) {
    std::cerr << "unverified at cap: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 1;
  } catch (const ArgumentError& e) {
    std::cerr << "argument error: " << e.what() << "\n";
    return 1;
  } catch (const ResourceError& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return 1;
  } catch (const InternalError& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
