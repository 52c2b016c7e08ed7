#include "birat/commands.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <ostream>
#include <utility>

#include "birat/jacobian_dual.hpp"
#include "birat/rees.hpp"

namespace birat {

namespace {

std::function<void(const std::string&)> trace_fn(const CommandOptions& o, std::string* err) {
  if (!o.verbose) return {};
  if (o.trace_stream) {
    std::ostream* s = o.trace_stream;
    return [s](const std::string& line) { (*s) << line << '\n'; };
  }
  if (!err) return {};
  return [err](const std::string& line) { *err += line + "\n"; };
}

InverseOptions inverse_options(const CommandOptions& o, std::string* err) {
  InverseOptions io;
  io.strategy = o.strategy;
  io.hybrid_limit = o.hybrid_limit;
  io.step_limit = o.step_limit;
  io.minors_count = o.minors_count;
  io.assume_dominant = o.assume_dominant;
  io.check_birational = o.check_birational;
  io.quick_rank = o.quick_rank;
  io.seed = o.seed;
  io.trace = trace_fn(o, err);
  return io;
}

DualOptions dual_options(const CommandOptions& o, std::string* err) {
  DualOptions d;
  d.strategy = o.strategy;
  d.hybrid_limit = o.hybrid_limit;
  d.step_limit = o.step_limit;
  d.quick_rank = o.quick_rank;
  d.seed = o.seed;
  d.trace = trace_fn(o, err);
  return d;
}

std::string bracket_list(const std::vector<Poly>& fs) {
  std::string s = "[";
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (i) s += ", ";
    s += fs[i].to_string();
  }
  return s + "]";
}

void put_bool(CommandReport& rep, bool answer) {
  rep.out += answer ? "true\n" : "false\n";
  if (!answer) rep.exit_code = 2;
}

RationalMap onto_declared_image(const RationalMap& F) {
  const auto& img = F.image_ideal();
  if (img.empty()) return F;
  std::vector<Poly> gens = F.target().ideal();
  gens.insert(gens.end(), img.begin(), img.end());
  return F.with_target(Variety(F.target().ring(), std::move(gens)));
}

void dispatch(const SessionScript& script, const SessionScript::Command& c,
              const CommandOptions& o, CommandReport& rep) {
  if (c.name == "bench-gabber") {
    CommandReport b = bench_gabber(std::stoi(c.args.at(0)), std::stoi(c.args.at(1)), o);
    rep.out += b.out;
    rep.err += b.err;
    rep.exit_code = b.exit_code;
    return;
  }
  InverseOptions io = inverse_options(o, &rep.err);
  const RationalMap& F = script.map(c.args.at(0));
  if (c.name == "base-locus") {
    rep.out += to_string(F.base_locus(o.saturate_output)) + "\n";
  } else if (c.name == "image") {
    rep.out += to_string(F.image_ideal()) + "\n";
  } else if (c.name == "is-dominant") {
    put_bool(rep, F.is_dominant());
  } else if (c.name == "is-birational") {
    put_bool(rep, is_birational(F, io));
  } else if (c.name == "inverse") {
    rep.out += bracket_list(inverse_of_map(F, io).forms()) + "\n";
  } else if (c.name == "is-embedding") {
    put_bool(rep, is_embedding(F, io));
  } else if (c.name == "is-same") {
    put_bool(rep, F.same_map(script.map(c.args.at(1))));
  } else if (c.name == "rees") {
    ReesChunk ch =
        o.strategy == Strategy::saturation ? rees_saturation(F) : rees_full(F);
    rep.out += to_string(ch.gens) + "\n";
  } else if (c.name == "jacobian-dual") {
    RationalMap G = o.assume_dominant ? F : onto_declared_image(F);
    DualResult dr = jacobian_dual(G, dual_options(o, &rep.err));
    char head[64];
    std::snprintf(head, sizeof head, "%u rows, %u columns\n",
                  static_cast<unsigned>(dr.psi.nrows()), dr.psi.ncols);
    rep.out += head;
    for (const auto& row : dr.psi.rows) rep.out += bracket_list(row) + "\n";
    if (dr.rank_attained) {
      char tail[64];
      std::snprintf(tail, sizeof tail, "certified rank >= %u\n", dr.psi.target_rank());
      rep.out += tail;
    }
  } else {
    throw ValidationError("unknown command '" + c.name + "'");
  }
}

}  // namespace

CommandReport run_command(const SessionScript& script, const SessionScript::Command& command,
                          const CommandOptions& options) {
  CommandReport rep;
  try {
    dispatch(script, command, options, rep);
  } catch (const NotBirationalError& e) {
    rep.err += std::string(e.what()) + "\n";
    rep.exit_code = 2;
  } catch (const StepLimitError& e) {
    rep.err += std::string(e.what()) + "\n";
    rep.exit_code = 3;
  } catch (const Error& e) {
    rep.err += std::string(e.what()) + "\n";
    rep.exit_code = 1;
  }
  return rep;
}

CommandReport run_script(const SessionScript& script, const CommandOptions& options) {
  CommandReport all;
  for (const auto& c : script.commands) {
    CommandReport one = run_command(script, c, options);
    all.out += one.out;
    all.err += one.err;
    if (one.exit_code > all.exit_code) all.exit_code = one.exit_code;
    if (one.exit_code == 1) break;
  }
  return all;
}

CommandReport bench_gabber(int n, int d, const CommandOptions& options) {
  CommandReport rep;
  if (n < 1 || d < 1) {
    rep.err = "bench-gabber needs n >= 1 and d >= 1\n";
    rep.exit_code = 1;
    return rep;
  }
  std::vector<std::string> names;
  for (int i = 0; i <= n; ++i) names.push_back("x" + std::to_string(i));
  RingPtr R = Ring::standard(Field::prime(101), std::move(names));
  std::vector<Poly> vars;
  for (int i = 0; i <= n; ++i) vars.push_back(Poly::variable(R, static_cast<std::size_t>(i)));
  std::vector<Poly> forms;
  Poly lead = pow(vars[0], static_cast<std::uint32_t>(d - 1));
  forms.push_back(mul(vars[0], lead));
  forms.push_back(mul(vars[1], lead));
  for (int i = 2; i <= n; ++i)
    forms.push_back(
        add(mul(vars[static_cast<std::size_t>(i)], lead),
            pow(vars[static_cast<std::size_t>(i - 1)], static_cast<std::uint32_t>(d))));
  Variety P(R, {});
  RationalMap F(P, P, std::move(forms));

  CommandOptions bench = options;
  bench.assume_dominant = true;
  bench.check_birational = false;
  if (!bench.minors_count) bench.minors_count = 0;
  InverseOptions io = inverse_options(bench, &rep.err);

  auto t0 = std::chrono::steady_clock::now();
  RationalMap inv = inverse_of_map(F, io);
  std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;

  std::uint64_t expected = 1;
  for (int i = 1; i < n; ++i) expected *= static_cast<std::uint64_t>(d);
  if (inv.degree() != expected) {
    char msg[128];
    std::snprintf(msg, sizeof msg,
                  "inverse degree %u does not match the expected %llu\n", inv.degree(),
                  static_cast<unsigned long long>(expected));
    rep.err += msg;
    rep.exit_code = 1;
    return rep;
  }
  char row[128];
  std::snprintf(row, sizeof row, "bench-gabber n=%d d=%d: inverse degree %llu, %.4f s\n", n,
                d, static_cast<unsigned long long>(expected), dt.count());
  rep.out += row;
  return rep;
}

}  // namespace birat
