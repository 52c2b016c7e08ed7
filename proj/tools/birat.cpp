#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "birat/commands.hpp"

namespace {

struct RawFlags {
  std::string strategy = "hybrid";
  int hybrid_limit = 15;
  int step_limit = 30;
  std::string minors = "auto";
  std::string quick_rank = "on";
  bool assume_dominant = false;
  std::string check_birational = "on";
  std::string saturate_output = "on";
  bool verbose = false;
  std::uint64_t seed = 0;
};

void add_common(CLI::App* cmd, RawFlags& f) {
  cmd->add_option("--strategy", f.strategy,
                  "how the relation ideal is built: hybrid, rees, simis, or saturation")
      ->check(CLI::IsMember({"hybrid", "rees", "simis", "saturation"}));
  cmd->add_option("--hybrid-limit", f.hybrid_limit,
                  "escalation stage after which hybrid completes the full basis")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--step-limit", f.step_limit, "escalation stage guard for simis")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--minors-count", f.minors,
                  "minor draws for the inverse: a count, auto, or 0 to skip to null spaces");
  cmd->add_option("--quick-rank", f.quick_rank, "certify rank by point sampling first")
      ->check(CLI::IsMember({"on", "off"}));
  cmd->add_flag("--assume-dominant", f.assume_dominant,
                "skip the image computation and trust the declared target");
  cmd->add_option("--check-birational", f.check_birational,
                  "verify birationality before inverting")
      ->check(CLI::IsMember({"on", "off"}));
  cmd->add_option("--saturate-output", f.saturate_output,
                  "saturate the base locus by the irrelevant ideal")
      ->check(CLI::IsMember({"on", "off"}));
  cmd->add_flag("--verbose", f.verbose, "trace strategy stages on stderr");
  cmd->add_option("--seed", f.seed, "seed for every randomized choice");
}

bool to_options(const RawFlags& f, birat::CommandOptions& o, std::string& err) {
  using birat::Strategy;
  if (f.strategy == "rees")
    o.strategy = Strategy::rees;
  else if (f.strategy == "simis")
    o.strategy = Strategy::simis;
  else if (f.strategy == "saturation")
    o.strategy = Strategy::saturation;
  else
    o.strategy = Strategy::hybrid;
  o.hybrid_limit = f.hybrid_limit;
  o.step_limit = f.step_limit;
  if (f.minors == "auto") {
    o.minors_count.reset();
  } else {
    try {
      std::size_t used = 0;
      int v = std::stoi(f.minors, &used);
      if (used != f.minors.size() || v < 0) throw std::invalid_argument(f.minors);
      o.minors_count = v;
    } catch (const std::exception&) {
      err = "--minors-count takes a nonnegative count, auto, or 0";
      return false;
    }
  }
  o.quick_rank = f.quick_rank == "on";
  o.assume_dominant = f.assume_dominant;
  o.check_birational = f.check_birational == "on";
  o.saturate_output = f.saturate_output == "on";
  o.verbose = f.verbose;
  o.seed = f.seed;
  o.trace_stream = &std::cerr;
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rational maps between projective varieties: base loci, images, "
               "birationality, inverses, embeddings"};
  app.require_subcommand(1);

  RawFlags flags;
  std::string file;
  std::string map_name;
  std::vector<std::string> map_pair;
  int bench_n = 3;
  int bench_d = 2;

  auto* run = app.add_subcommand("run", "execute the command statements of a script file");
  run->add_option("file", file, "script file")->required()->check(CLI::ExistingFile);
  add_common(run, flags);

  static const char* kOneMap[][2] = {
      {"base-locus", "ideal of points where the map is undefined"},
      {"image", "ideal of the closure of the image"},
      {"is-dominant", "whether the image is dense in the target"},
      {"is-birational", "whether the map is birational onto its image"},
      {"inverse", "defining forms of the inverse map"},
      {"is-embedding", "whether the map embeds its source"},
      {"rees", "defining ideal of the blowup relations"},
      {"jacobian-dual", "the dual matrix and its certified rank"},
  };
  for (auto& row : kOneMap) {
    auto* c = app.add_subcommand(row[0], row[1]);
    c->add_option("file", file, "script file with the declarations")
        ->required()
        ->check(CLI::ExistingFile);
    c->add_option("--map", map_name, "declared map to use")->required();
    add_common(c, flags);
  }

  auto* same = app.add_subcommand("is-same", "whether two maps agree as rational maps");
  same->add_option("file", file, "script file with the declarations")
      ->required()
      ->check(CLI::ExistingFile);
  same->add_option("--map", map_pair, "the two declared maps to compare")
      ->required()
      ->expected(2);
  add_common(same, flags);

  auto* bench = app.add_subcommand("bench-gabber",
                                   "time the inverse of the degree-d family on P^n");
  bench->add_option("n", bench_n, "projective dimension")->required()->check(CLI::PositiveNumber);
  bench->add_option("d", bench_d, "degree of the defining forms")
      ->required()
      ->check(CLI::PositiveNumber);
  add_common(bench, flags);

  CLI11_PARSE(app, argc, argv);

  birat::CommandOptions opts;
  std::string opt_err;
  if (!to_options(flags, opts, opt_err)) {
    std::cerr << "error: " << opt_err << "\n";
    return 1;
  }

  CLI::App* chosen = app.get_subcommands().at(0);
  const std::string name = chosen->get_name();

  birat::CommandReport rep;
  if (name == "bench-gabber") {
    rep = birat::bench_gabber(bench_n, bench_d, opts);
  } else {
    std::ifstream in(file);
    if (!in) {
      std::cerr << "error: cannot read '" << file << "'\n";
      return 1;
    }
    std::ostringstream text;
    text << in.rdbuf();
    birat::SessionScript script;
    try {
      script = birat::parse_script(text.str());
    } catch (const birat::Error& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 1;
    }
    if (name == "run") {
      rep = birat::run_script(script, opts);
    } else {
      birat::SessionScript::Command c;
      c.name = name;
      c.args = name == "is-same" ? map_pair : std::vector<std::string>{map_name};
      rep = birat::run_command(script, c, opts);
    }
  }
  std::cout << rep.out;
  std::cerr << rep.err;
  return rep.exit_code;
}
