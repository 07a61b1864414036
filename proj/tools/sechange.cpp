// Copyright 2026 The sechange Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Exit codes: 0 ok, 1 usage, 2 parse/input error,
// 3 capacity exceeded, 4 postulate failure or cross-check mismatch,
// 5 solver error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sechange/canonical.hpp"
#include "sechange/change.hpp"
#include "sechange/error.hpp"
#include "sechange/merge.hpp"
#include "sechange/meta.hpp"
#include "sechange/postulates.hpp"
#include "sechange/semantics.hpp"

namespace {

using nlohmann::ordered_json;
using namespace sechange;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitCapacity = 3;
constexpr int kExitFailureFound = 4;
constexpr int kExitSolver = 5;

struct CommonOpts {
  std::vector<std::string> alphabet_atoms;
  int max_atoms = kDefaultMaxAtoms;
  std::string format = "text";
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--alphabet", opts.alphabet_atoms,
                  "Alphabet override (comma-separated atoms)")
      ->delimiter(',');
  cmd->add_option("--max-atoms", opts.max_atoms, "Alphabet capacity cap")
      ->capture_default_str();
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
}

Limits limits_of(const CommonOpts& opts) {
  Limits lim;
  lim.max_atoms = opts.max_atoms;
  return lim;
}

std::optional<Alphabet> override_of(const CommonOpts& opts) {
  if (opts.alphabet_atoms.empty()) return std::nullopt;
  for (const std::string& a : opts.alphabet_atoms)
    if (!is_valid_atom_name(a)) throw AlphabetError("bad atom name '" + a + "'");
  return Alphabet(opts.alphabet_atoms);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Program load_program(const std::string& path) {
  try {
    return parse_program(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what(), e.line(), e.column());
  }
}

std::vector<Program> load_programs(const std::vector<std::string>& paths) {
  std::vector<Program> out;
  for (const std::string& p : paths) out.push_back(load_program(p));
  return out;
}

ordered_json json_atoms(const std::vector<std::string>& atoms) {
  return ordered_json(atoms);
}

ordered_json json_se_set(const SeModelSet& s) {
  ordered_json arr = ordered_json::array();
  for (SePair p : s.elems()) {
    arr.push_back({json_atoms(mask_atoms(p.here, s.alphabet())),
                   json_atoms(mask_atoms(p.there, s.alphabet()))});
  }
  return arr;
}

void print_models(const std::vector<Mask>& models, const Alphabet& a,
                  const CommonOpts& opts) {
  if (opts.format == "json") {
    ordered_json out;
    out["alphabet"] = json_atoms(a.atoms());
    ordered_json arr = ordered_json::array();
    for (Mask m : models) arr.push_back(json_atoms(mask_atoms(m, a)));
    out["models"] = arr;
    std::cout << out.dump(2) << "\n";
    return;
  }
  for (Mask m : models) std::cout << format_interpretation(m, a) << "\n";
}

void print_change(const SeModelSet& se, const Program& canonical,
                  const CommonOpts& opts,
                  const std::vector<std::size_t>* dropped = nullptr) {
  if (opts.format == "json") {
    ordered_json out;
    out["alphabet"] = json_atoms(se.alphabet().atoms());
    out["se_models"] = json_se_set(se);
    out["program"] = render_program(canonical);
    if (dropped) out["dropped"] = *dropped;
    std::cout << out.dump(2) << "\n";
    return;
  }
  std::cout << format_se_set(se);
  if (dropped && !dropped->empty()) {
    std::cout << "% dropped unsatisfiable members:";
    for (std::size_t i : *dropped) std::cout << " " << i;
    std::cout << "\n";
  }
  std::cout << "% canonical program\n" << render_program(canonical);
}

// --- check-postulates ---------------------------------------------------------

struct SuiteOpts {
  std::string suite = "ra";
  std::string op = "revise";
  int trials = 100;
  int atoms = 3;
  int max_rules = 3;
  std::uint64_t seed = 1;
  std::string format = "text";
  int max_atoms = kDefaultMaxAtoms;
};

RevisionOp revision_op_of(const std::string& name) {
  if (name == "revise") return RevisionOp::Revise;
  if (name == "revise_weak") return RevisionOp::ReviseWeak;
  if (name == "revise_card") return RevisionOp::ReviseCard;
  throw ParseError("unknown revision operator '" + name + "'");
}

int run_suite(const SuiteOpts& so) {
  Limits lim;
  lim.max_atoms = so.max_atoms;
  std::vector<std::string> pool(generator_atom_pool().begin(),
                                generator_atom_pool().begin() + so.atoms);
  Alphabet a(pool);
  RevisionOp rop = revision_op_of(so.op);

  auto gen = [&](std::uint64_t salt) {
    GeneratorConfig cfg;
    cfg.atom_count = so.atoms;
    cfg.max_rules = so.max_rules;
    cfg.seed = so.seed * 0x9e3779b97f4a7c15ull + salt;
    return random_program(cfg);
  };

  std::map<std::string, std::array<int, 3>> tally;  // pass, fail, n/a
  std::vector<ordered_json> failures;
  for (int t = 0; t < so.trials; ++t) {
    std::uint64_t base = static_cast<std::uint64_t>(t) * 16 + 1;
    PostulateReport report;
    if (so.suite == "ra") {
      report = check_ra(rop, gen(base), gen(base + 1), gen(base + 2), a, lim);
    } else if (so.suite == "principles") {
      report = check_principles(rop, gen(base), gen(base + 1), gen(base + 2), a, lim);
    } else if (so.suite == "expansion") {
      report = check_expansion(gen(base), gen(base + 1), gen(base + 2), a, lim);
    } else if (so.suite == "ls") {
      report = check_ls(gen(base), gen(base + 1), a, lim);
    } else if (so.suite == "ic") {
      BeliefProfile members;
      int count = 2 + (t % 2);
      for (int i = 0; i < count; ++i) members.programs.push_back(gen(base + 1 + i));
      report = check_ic(gen(base), members, a, lim);
    } else {
      throw ParseError("unknown suite '" + so.suite + "'");
    }
    report.seed = so.seed;
    report.trial = t;
    for (const PostulateResult& r : report.results) {
      auto& counts = tally[r.name];
      if (r.verdict == Verdict::Pass) ++counts[0];
      if (r.verdict == Verdict::Fail) ++counts[1];
      if (r.verdict == Verdict::NotApplicable) ++counts[2];
      if (r.verdict == Verdict::Fail && failures.size() < 8) {
        ordered_json f;
        f["trial"] = t;
        f["seed"] = so.seed;
        f["postulate"] = r.name;
        f["witness"] = r.witness;
        failures.push_back(f);
      }
    }
  }

  int total_failures = 0;
  for (auto& [name, counts] : tally) total_failures += counts[1];
  if (so.format == "json") {
    ordered_json out;
    out["suite"] = so.suite;
    out["op"] = so.op;
    out["trials"] = so.trials;
    out["atoms"] = so.atoms;
    out["seed"] = so.seed;
    ordered_json per;
    for (auto& [name, counts] : tally)
      per[name] = {{"pass", counts[0]}, {"fail", counts[1]}, {"na", counts[2]}};
    out["postulates"] = per;
    out["failures"] = failures;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "suite " << so.suite << " op " << so.op << " trials " << so.trials
              << " atoms " << so.atoms << " seed " << so.seed << "\n";
    for (auto& [name, counts] : tally) {
      std::cout << name << ": " << counts[0] << " pass, " << counts[1] << " fail, "
                << counts[2] << " n/a\n";
    }
    for (const ordered_json& f : failures) {
      std::cout << "FAIL trial " << f["trial"] << " " << std::string(f["postulate"])
                << "\n" << std::string(f["witness"]) << "\n";
    }
  }
  return total_failures == 0 ? kExitOk : kExitFailureFound;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Belief change for generalized logic programs via SE models"};
  app.set_help_all_flag("--help-all");

  // Subcommand state.
  CommonOpts mod_opts, se_opts, as_opts, eq_opts, ent_opts, ex_opts, rev_opts,
      arb_opts, mer_opts, can_opts;
  std::string mod_file, se_file, as_file, can_file;
  std::vector<std::string> eq_files, ent_files, ex_files, rev_files, arb_files, mer_files;
  bool rev_weak = false, rev_card = false, mer_constraints = false, can_dlp = false;

  CLI::App* mod = app.add_subcommand("mod", "List classical models of a program");
  mod->add_option("file", mod_file)->required();
  add_common(mod, mod_opts);
  CLI::App* se = app.add_subcommand("se", "List SE models of a program");
  se->add_option("file", se_file)->required();
  add_common(se, se_opts);
  CLI::App* as = app.add_subcommand("as", "List answer sets of a program");
  as->add_option("file", as_file)->required();
  add_common(as, as_opts);

  CLI::App* equiv = app.add_subcommand("equiv", "Strong equivalence of two programs");
  equiv->add_option("files", eq_files)->expected(2);
  add_common(equiv, eq_opts);
  CLI::App* entails = app.add_subcommand("entails", "SE consequence P |=s Q");
  entails->add_option("files", ent_files)->expected(2);
  add_common(entails, ent_opts);

  CLI::App* expand_cmd = app.add_subcommand("expand", "Expansion of P by Q");
  expand_cmd->add_option("files", ex_files)->expected(2);
  add_common(expand_cmd, ex_opts);
  CLI::App* revise_cmd = app.add_subcommand("revise", "Revision of P by Q");
  revise_cmd->add_option("files", rev_files)->expected(2);
  revise_cmd->add_flag("--weak", rev_weak, "Weak revision");
  revise_cmd->add_flag("--card", rev_card, "Cardinality-based revision");
  add_common(revise_cmd, rev_opts);

  CLI::App* arb = app.add_subcommand("arbitrate", "Arbitration merging of a profile");
  arb->add_option("files", arb_files)->expected(-1)->required();
  add_common(arb, arb_opts);
  CLI::App* mer = app.add_subcommand("merge", "Basic merging against constraints P0");
  mer->add_flag("--constraints", mer_constraints,
                "First file is the constraints program P0 (required)");
  mer->add_option("files", mer_files)->expected(-1)->required();
  add_common(mer, mer_opts);

  CLI::App* can = app.add_subcommand("canonical", "Canonical program from an SE-model set");
  can->add_option("--from-se", can_file, "SE-model set file (text lines or JSON)")
      ->required();
  can->add_flag("--dlp", can_dlp, "Use the complete-set (DLP) construction");
  add_common(can, can_opts);

  SuiteOpts so;
  CLI::App* chk = app.add_subcommand("check-postulates", "Run a postulate suite");
  chk->add_option("--suite", so.suite)
      ->check(CLI::IsMember({"ra", "ls", "ic", "principles", "expansion"}))
      ->capture_default_str();
  chk->add_option("--op", so.op)
      ->check(CLI::IsMember({"revise", "revise_weak", "revise_card"}))
      ->capture_default_str();
  chk->add_option("--trials", so.trials)->capture_default_str();
  chk->add_option("--atoms", so.atoms)->check(CLI::Range(1, 6))->capture_default_str();
  chk->add_option("--max-rules", so.max_rules)->capture_default_str();
  chk->add_option("--seed", so.seed)->capture_default_str();
  chk->add_option("--format", so.format)->check(CLI::IsMember({"text", "json"}));
  chk->add_option("--max-atoms", so.max_atoms);

  std::string emit_task, emit_out;
  CLI::App* emit = app.add_subcommand("emit", "Emit a fixed meta-program");
  emit->add_option("--task", emit_task)
      ->check(CLI::IsMember({"card-revision", "set-revision", "basic-merge", "arbitration"}))
      ->required();
  emit->add_option("-o,--output", emit_out, "Write to file instead of stdout");

  std::string cc_task, cc_solver;
  int cc_timeout = 60;
  std::vector<std::string> cc_files;
  bool cc_constraints = false;
  CLI::App* cc = app.add_subcommand("crosscheck", "Compare native result with a solver run");
  cc->add_option("--task", cc_task)
      ->check(CLI::IsMember({"card-revision", "set-revision", "basic-merge", "arbitration"}))
      ->required();
  cc->add_option("--solver-cmd", cc_solver,
                 "Solver command with {meta} and {facts} placeholders "
                 "(default: $SECHANGE_SOLVER)");
  cc->add_flag("--constraints", cc_constraints, "First file is P0 (basic-merge)");
  cc->add_option("--timeout", cc_timeout)->capture_default_str();
  cc->add_option("files", cc_files)->expected(-1)->required();

  app.require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*mod) {
      Program p = load_program(mod_file);
      Alphabet a = effective_alphabet(p, override_of(mod_opts));
      print_models(classical_models(p, a, limits_of(mod_opts)), a, mod_opts);
    } else if (*se) {
      Program p = load_program(se_file);
      Alphabet a = effective_alphabet(p, override_of(se_opts));
      SeModelSet s = se_models(p, a, limits_of(se_opts));
      if (se_opts.format == "json") {
        ordered_json out;
        out["alphabet"] = json_atoms(a.atoms());
        out["se_models"] = json_se_set(s);
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << format_se_set(s);
      }
    } else if (*as) {
      Program p = load_program(as_file);
      Alphabet a = effective_alphabet(p, override_of(as_opts));
      print_models(answer_sets(p, a, limits_of(as_opts)), a, as_opts);
    } else if (*equiv || *entails) {
      const CommonOpts& opts = *equiv ? eq_opts : ent_opts;
      auto files = *equiv ? eq_files : ent_files;
      std::vector<Program> ps = load_programs(files);
      Alphabet a = effective_alphabet(ps[0], ps[1], override_of(opts));
      bool result = *equiv
                        ? strongly_equivalent(ps[0], ps[1], a, limits_of(opts))
                        : entails_s(ps[0], ps[1], a, limits_of(opts));
      if (opts.format == "json")
        std::cout << ordered_json{{"result", result}}.dump(2) << "\n";
      else
        std::cout << (result ? "true" : "false") << "\n";
    } else if (*expand_cmd) {
      std::vector<Program> ps = load_programs(ex_files);
      Alphabet a = effective_alphabet(ps[0], ps[1], override_of(ex_opts));
      ChangeResult r = expand(ps[0], ps[1], a, limits_of(ex_opts));
      print_change(r.se, r.canonical.program, ex_opts);
    } else if (*revise_cmd) {
      if (rev_weak && rev_card)
        throw ParseError("--weak and --card are mutually exclusive");
      std::vector<Program> ps = load_programs(rev_files);
      Alphabet a = effective_alphabet(ps[0], ps[1], override_of(rev_opts));
      ChangeResult r = rev_weak   ? revise_weak(ps[0], ps[1], a, limits_of(rev_opts))
                       : rev_card ? revise_card(ps[0], ps[1], a, limits_of(rev_opts))
                                  : revise(ps[0], ps[1], a, limits_of(rev_opts));
      print_change(r.se, r.canonical.program, rev_opts);
    } else if (*arb) {
      BeliefProfile psi{load_programs(arb_files), false};
      Alphabet a = effective_alphabet(
          std::span<const Program>(psi.programs.data(), psi.programs.size()),
          override_of(arb_opts));
      MergeResult r = arbitrate(psi, a, limits_of(arb_opts));
      print_change(r.se, r.canonical.program, arb_opts, &r.dropped);
    } else if (*mer) {
      if (!mer_constraints)
        throw ParseError("merge requires --constraints (first file is P0)");
      if (mer_files.size() < 2)
        throw ParseError("merge needs P0 plus at least one profile member");
      BeliefProfile psi{load_programs(mer_files), true};
      Alphabet a = effective_alphabet(
          std::span<const Program>(psi.programs.data(), psi.programs.size()),
          override_of(mer_opts));
      MergeResult r = merge_basic(psi, a, limits_of(mer_opts));
      print_change(r.se, r.canonical.program, mer_opts, &r.dropped);
    } else if (*can) {
      std::string text = read_file(can_file);
      SeModelSet s = parse_se_set(text, override_of(can_opts));
      check_capacity(s.alphabet(), limits_of(can_opts));
      CanonicalProgram cp = can_dlp ? canonical_dlp(s) : canonical_glp(s);
      if (can_opts.format == "json") {
        ordered_json out;
        out["alphabet"] = json_atoms(s.alphabet().atoms());
        out["se_models"] = json_se_set(s);
        out["program"] = render_program(cp.program);
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << render_program(cp.program);
      }
    } else if (*chk) {
      return run_suite(so);
    } else if (*emit) {
      MetaProgram mp = emit_meta(meta_task_from_string(emit_task));
      if (emit_out.empty()) {
        std::cout << mp.text;
      } else {
        std::ofstream out(emit_out, std::ios::binary);
        if (!out) throw ParseError("cannot write '" + emit_out + "'");
        out << mp.text;
      }
    } else if (*cc) {
      MetaTask task = meta_task_from_string(cc_task);
      if (cc_solver.empty()) {
        const char* env = std::getenv("SECHANGE_SOLVER");
        if (env) cc_solver = env;
      }
      if (cc_solver.empty())
        throw SolverError("no solver configured (use --solver-cmd or $SECHANGE_SOLVER)");
      if (task == MetaTask::BasicMerge && !cc_constraints)
        throw ParseError("basic-merge crosscheck requires --constraints");
      BeliefProfile psi{load_programs(cc_files), task == MetaTask::BasicMerge};
      SolverConfig solver{cc_solver, cc_timeout};
      CrosscheckReport report = crosscheck(psi, task, solver);
      std::cout << (report.equal ? "equal" : "unequal") << "\n";
      for (const std::string& p : report.native_only)
        std::cout << "native only: " << p << "\n";
      for (const std::string& p : report.solver_only)
        std::cout << "solver only: " << p << "\n";
      if (!report.equal) return kExitFailureFound;
    }
  } catch (const CapacityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const SolverError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSolver;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const ModelSetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const AlphabetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}
