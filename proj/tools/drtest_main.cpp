// drtest command-line front end.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "drtest/adian.hpp"
#include "drtest/blocks.hpp"
#include "drtest/dot.hpp"
#include "drtest/generate.hpp"
#include "drtest/itest.hpp"
#include "drtest/ivanov.hpp"
#include "drtest/kervaire.hpp"
#include "drtest/linear.hpp"
#include "drtest/log.hpp"
#include "drtest/report.hpp"
#include "drtest/text.hpp"
#include "drtest/verify.hpp"
#include "drtest/whitehead.hpp"

namespace fs = std::filesystem;
using namespace drtest;

namespace {

constexpr int kExitRan = 0;
constexpr int kExitError = 1;

int exit_code(Status s) {
  switch (s) {
    case Status::ProvenDR:
      return 10;
    case Status::ProvenAspherical:
      return 11;
    case Status::Inconclusive:
      return 20;
    case Status::Inapplicable:
      return 30;
  }
  return kExitError;
}

// Strongest status wins: DR, then aspherical, then inconclusive.
int exit_code(const Report& r) {
  int best = 30;
  for (const auto& e : r.entries) {
    int c = exit_code(e.verdict.status);
    if (c == 10 || (c == 11 && best != 10) || (c == 20 && best == 30)) {
      best = c;
    }
  }
  return best;
}

struct Input {
  std::string name;
  Presentation presentation;
  std::optional<Log> log;
  std::optional<AdianPresentation> adian;
  std::string kind() const { return log ? "log" : adian ? "adian" : "presentation"; }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error(path + ": cannot open");
  }
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Input load(const std::string& path) {
  auto text = read_file(path);
  Input in;
  in.name = path;
  try {
    if (looks_like_log(text)) {
      in.log = parse_log(text);
      in.log->validate();
      in.presentation = log_to_presentation(*in.log);
    } else {
      in.presentation = parse_presentation(text);
    }
  } catch (const ParseError& e) {
    throw std::runtime_error(path + ":" + std::to_string(e.line()) + ":" +
                             std::to_string(e.column()) + ": " + e.message());
  }
  in.presentation.validate();
  in.adian = detect_adian(in.presentation);
  return in;
}

struct Settings {
  bool json = false;
  bool all = false;
  std::size_t budget = 100000;
  std::size_t cycle_cap = 100000;
  std::string vector;
};

std::size_t default_budget() {
  if (const char* env = std::getenv("DRTEST_BUDGET")) {
    try {
      return std::stoul(env);
    } catch (const std::exception&) {
      std::cerr << "ignoring malformed DRTEST_BUDGET\n";
    }
  }
  return 100000;
}

void add_common(CLI::App* cmd, Settings& s) {
  cmd->add_flag("--json", s.json, "emit a JSON report");
  cmd->add_option("--budget", s.budget, "LP call cap for vector search");
}

template <class F>
ReportEntry timed(const Input& in, F&& run) {
  auto t0 = std::chrono::steady_clock::now();
  ReportEntry e;
  e.verdict = run();
  e.milliseconds =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  e.budget_hit = e.verdict.reason == InconclusiveReason::Budget;
  VerifyContext ctx{&in.presentation, in.log ? &*in.log : nullptr,
                    in.adian ? &*in.adian : nullptr};
  auto check = verify_verdict(ctx, e.verdict);
  e.verified = check.ok;
  e.verify_note = check.reason;
  return e;
}

Verdict inapplicable(const std::string& test, const std::string& why) {
  Verdict v;
  v.test = test;
  v.status = Status::Inapplicable;
  v.note = why;
  return v;
}

bool abelian_trivial(const Presentation& p) {
  auto q = abelianize(p.relators[0], p.generator_count());
  return std::all_of(q.begin(), q.end(), [](auto x) { return x == 0; });
}

Verdict run_hull(const Presentation& p) {
  if (p.relator_count() != 1 || !abelian_trivial(p)) {
    return inapplicable("hull", "needs one relator in the commutator subgroup");
  }
  return hull_test(p);
}

Verdict run_dyck(const Presentation& p) {
  if (p.relator_count() != 1 || p.generator_count() != 2 || !abelian_trivial(p)) {
    return inapplicable("dyck", "needs two generators and one relator in the commutator subgroup");
  }
  return dyck_test(p);
}

Verdict run_adian(const Input& in) {
  if (!in.adian) {
    return inapplicable("adian", "not an Adian presentation");
  }
  return adian_verdict(*in.adian);
}

Verdict run_itest(const Presentation& p, const Settings& s) {
  SearchOptions options;
  options.lp_budget = s.budget;
  auto v = itest_search(p, options);
  if (v.status == Status::Inconclusive) {
    auto b = block_itest_search(p, options);
    if (b.status == Status::ProvenDR) {
      return b;
    }
    if (b.reason == InconclusiveReason::Budget) {
      v.reason = InconclusiveReason::Budget;
    }
  }
  return v;
}

Report check(const Input& in, const Settings& s) {
  Report r{in.name, in.kind(), in.presentation, in.log, std::nullopt, {}, std::nullopt};
  std::vector<std::function<Verdict()>> tests;
  if (in.log) {
    tests.push_back([&] { return log_verdict(*in.log); });
  }
  if (in.adian) {
    tests.push_back([&] { return run_adian(in); });
  }
  tests.push_back([&] { return generalized_left_verdict(in.presentation); });
  if (in.presentation.relator_count() == 1) {
    tests.push_back([&] { return run_hull(in.presentation); });
    if (in.presentation.generator_count() == 2) {
      tests.push_back([&] { return run_dyck(in.presentation); });
    }
  }
  tests.push_back([&] { return run_itest(in.presentation, s); });
  for (auto& t : tests) {
    r.entries.push_back(timed(in, t));
    if (!s.all && r.entries.back().verdict.status == Status::ProvenDR &&
        r.entries.back().verified) {
      break;
    }
  }
  r.weight_test = weight_test(in.presentation, s.cycle_cap);
  return r;
}

int emit(const Report& r, const Settings& s) {
  if (s.json) {
    std::cout << to_json(r).dump(2) << '\n';
  } else {
    std::cout << format_report(r);
  }
  for (const auto& e : r.entries) {
    if (!e.verified) {
      std::cerr << "witness rejected by the checker: " << e.verify_note << '\n';
      return kExitError;
    }
  }
  return exit_code(r);
}

int single(const Input& in, const Settings& s, std::function<Verdict()> run) {
  Report r{in.name, in.kind(), in.presentation, in.log, std::nullopt, {}, std::nullopt};
  r.entries.push_back(timed(in, std::move(run)));
  return emit(r, s);
}

std::string adian_text(const AdianPresentation& a) {
  std::string out;
  for (std::size_t i = 0; i < a.generators.size(); ++i) {
    out += (i ? ", " : "") + a.generators[i];
  }
  out += " |";
  for (std::size_t j = 0; j < a.relations.size(); ++j) {
    out += (j ? " ;" : "") + std::string(" ") + format_word(a.relations[j].lhs, a.generators) +
           " = " + format_word(a.relations[j].rhs, a.generators);
  }
  return out + "\n";
}

std::size_t generator_index(const Presentation& p, const std::string& name) {
  auto it = std::find(p.generators.begin(), p.generators.end(), name);
  if (it != p.generators.end()) {
    return static_cast<std::size_t>(it - p.generators.begin());
  }
  std::size_t k = std::stoul(name);
  if (k == 0 || k > p.generator_count()) {
    throw std::runtime_error("no generator " + name);
  }
  return k - 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tests for diagrammatic reducibility and asphericity of group presentations"};
  app.require_subcommand(1);
  Settings s;
  s.budget = default_budget();
  std::string file;
  int code = kExitRan;

  auto* cmd_check = app.add_subcommand("check", "run every applicable test");
  cmd_check->add_option("file", file)->required();
  add_common(cmd_check, s);
  cmd_check->add_flag("--all", s.all, "keep going after the first proof");
  cmd_check->add_option("--cycle-cap", s.cycle_cap, "simple cycle cap for the weight test");

  auto* cmd_itest = app.add_subcommand("itest", "I-test for a given vector, or search for one");
  cmd_itest->add_option("file", file)->required();
  cmd_itest->add_option("--vector", s.vector, "comma-separated rationals");
  add_common(cmd_itest, s);

  auto* cmd_log = app.add_subcommand("log", "Howie, deforestation and weak deforestation");
  cmd_log->add_option("file", file)->required();
  add_common(cmd_log, s);

  auto* cmd_adian = app.add_subcommand("adian", "left and right labeled graphs");
  cmd_adian->add_option("file", file)->required();
  add_common(cmd_adian, s);

  auto* cmd_wh = app.add_subcommand("whitehead", "weight test on the Whitehead graph");
  cmd_wh->add_option("file", file)->required();
  add_common(cmd_wh, s);
  cmd_wh->add_option("--cycle-cap", s.cycle_cap);

  auto* cmd_kerv = app.add_subcommand("kervaire", "hull and Dyck tests for one relator");
  cmd_kerv->add_option("file", file)->required();
  add_common(cmd_kerv, s);
  auto* cmd_hull = app.add_subcommand("hull", "convex hull test");
  cmd_hull->add_option("file", file)->required();
  add_common(cmd_hull, s);
  auto* cmd_dyck = app.add_subcommand("dyck", "strong Dyck test");
  cmd_dyck->add_option("file", file)->required();
  add_common(cmd_dyck, s);

  std::string tower_words;
  auto* cmd_tower = app.add_subcommand("tower", "commutator tower over x, y");
  cmd_tower->add_option("--words", tower_words, "words w_1; w_2; ... over x and y");
  add_common(cmd_tower, s);

  std::string relator;
  std::string extra = "x";
  std::string index;
  std::optional<std::int64_t> chosen_m;
  auto* cmd_iv = app.add_subcommand("ivanov", "distinguished rotation and perturbation bound");
  cmd_iv->add_option("file", file, "presentation the relator is added to")->required();
  cmd_iv->add_option("--relator", relator)->required();
  cmd_iv->add_option("--extra-gen", extra);
  cmd_iv->add_option("--index", index, "generator receiving the power")->required();
  cmd_iv->add_option("--vector", s.vector);
  cmd_iv->add_option("--m", chosen_m, "exponent for the emitted presentation");
  add_common(cmd_iv, s);

  std::string kind;
  std::size_t size = 5;
  std::uint64_t seed = 1;
  std::size_t count = 1;
  std::string out_dir;
  auto* cmd_gen = app.add_subcommand("gen", "generate instances");
  cmd_gen->add_option("kind", kind)->required()->check(CLI::IsMember({"lot", "tower", "adian"}));
  cmd_gen->add_option("--size", size);
  cmd_gen->add_option("--seed", seed);
  cmd_gen->add_option("--count", count);
  cmd_gen->add_option("--out", out_dir, "write files here instead of stdout");

  std::string dir;
  std::size_t jobs = std::max(1u, std::thread::hardware_concurrency());
  auto* cmd_batch = app.add_subcommand("batch", "check every .pres and .log file in a directory");
  cmd_batch->add_option("dir", dir)->required();
  cmd_batch->add_option("--jobs", jobs);
  add_common(cmd_batch, s);
  cmd_batch->add_flag("--all", s.all);
  cmd_batch->add_option("--cycle-cap", s.cycle_cap);

  std::string graph = "log";
  auto* cmd_dot = app.add_subcommand("dot", "Graphviz export");
  cmd_dot->add_option("file", file)->required();
  cmd_dot->add_option("--graph", graph)
      ->check(CLI::IsMember({"log", "initial", "terminal", "left", "right", "whitehead"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitRan : kExitError;
  }

  try {
    if (cmd_check->parsed()) {
      auto in = load(file);
      code = emit(check(in, s), s);
    } else if (cmd_itest->parsed()) {
      auto in = load(file);
      if (!s.vector.empty()) {
        auto v = parse_rational_vector(s.vector);
        code = single(in, s, [&] { return itest_fixed(in.presentation, v); });
        if (!s.json && code != 10 && code != 30) {
          std::cout << format_weight_matrix(in.presentation, weight_matrix(in.presentation, v));
        }
      } else {
        code = single(in, s, [&] { return run_itest(in.presentation, s); });
      }
    } else if (cmd_log->parsed()) {
      auto in = load(file);
      if (!in.log) {
        throw std::runtime_error(file + ": not a LOG file");
      }
      code = single(in, s, [&] { return log_verdict(*in.log); });
    } else if (cmd_adian->parsed()) {
      auto in = load(file);
      Report r{in.name, in.kind(), in.presentation, in.log, std::nullopt, {}, std::nullopt};
      r.entries.push_back(timed(in, [&] { return run_adian(in); }));
      r.entries.push_back(timed(in, [&] { return generalized_left_verdict(in.presentation); }));
      code = emit(r, s);
    } else if (cmd_wh->parsed()) {
      auto in = load(file);
      auto w = weight_test(in.presentation, s.cycle_cap);
      if (s.json) {
        Json out = {{"input", in.name}, {"weight_test", to_json(w)}};
        std::cout << out.dump(2) << '\n';
      } else {
        std::cout << "weight test: " << to_string(w.status) << " - " << w.note << " ("
                  << w.cycle_count << " simple cycles)\n";
        if (w.status == WeightTestStatus::Infeasible) {
          std::cout << "  certificate: " << to_string(w.certificate) << '\n';
        }
      }
    } else if (cmd_kerv->parsed() || cmd_hull->parsed() || cmd_dyck->parsed()) {
      auto in = load(file);
      Report r{in.name, in.kind(), in.presentation, in.log, std::nullopt, {}, std::nullopt};
      if (!cmd_dyck->parsed()) {
        r.entries.push_back(timed(in, [&] { return run_hull(in.presentation); }));
      }
      if (!cmd_hull->parsed()) {
        r.entries.push_back(timed(in, [&] { return run_dyck(in.presentation); }));
      }
      code = emit(r, s);
    } else if (cmd_tower->parsed()) {
      std::vector<std::string> names{"x", "y"};
      std::vector<Word> words;
      std::stringstream ss(tower_words);
      for (std::string part; std::getline(ss, part, ';');) {
        if (part.find_first_not_of(" \t") != std::string::npos) {
          words.push_back(parse_word(part, names));
        }
      }
      Input in;
      in.name = "tower";
      in.presentation = Presentation{names, {build_tower(words)}};
      if (!s.json) {
        std::cout << format_presentation(in.presentation);
      }
      code = single(in, s, [&] { return itest_fixed(in.presentation, {-1, -1}); });
    } else if (cmd_iv->parsed()) {
      auto in = load(file);
      const Presentation& q = in.presentation;
      auto names = q.generators;
      names.push_back(extra);
      Word r = parse_word(relator, names);
      std::size_t i = generator_index(q, index);
      RationalVector v;
      if (!s.vector.empty()) {
        v = parse_rational_vector(s.vector);
      } else {
        std::vector<ExponentVector> rows;
        for (const auto& rel : q.relators) {
          rows.push_back(abelianize(rel, q.generator_count()));
        }
        for (const auto& b : null_space(rows, q.generator_count())) {
          if (b[i] != 0) {
            v = b;
            break;
          }
        }
        if (v.empty()) {
          throw std::runtime_error("no orthogonal vector with a nonzero entry at " + index);
        }
      }
      auto pert = perturbation_bound(q, r, i, v);
      std::int64_t m = chosen_m ? *chosen_m : std::max<std::int64_t>(pert.m0, 1);
      auto qp = perturbed_presentation(q, extra, pert, m);
      if (s.json) {
        Json out = {{"relator", format_word(r, names)},
                    {"inverted", pert.rotation.inverted},
                    {"rotation_start", pert.rotation.start},
                    {"rotated", format_word(pert.rotation.word, names)},
                    {"beta", pert.rotation.beta},
                    {"sequence", pert.rotation.sequence},
                    {"vector", to_json(v)},
                    {"m0", pert.m0},
                    {"m", m},
                    {"perturbed", to_json(qp)}};
        std::cout << out.dump(2) << '\n';
      } else {
        std::cout << "r' = " << format_word(pert.rotation.word, names)
                  << (pert.rotation.inverted ? " (from r^-1)" : "") << "\n";
        std::cout << "beta = " << pert.rotation.beta << ", sequence:";
        for (auto a : pert.rotation.sequence) {
          std::cout << ' ' << a;
        }
        std::cout << "\nv = " << to_string(v) << ", M0 = " << pert.m0 << "\n";
        std::cout << "M = " << m << ": " << format_presentation(qp);
      }
    } else if (cmd_gen->parsed()) {
      Rng rng(seed);
      if (count > 1 && out_dir.empty()) {
        throw std::runtime_error("--count above 1 needs --out");
      }
      for (std::size_t c = 0; c < count; ++c) {
        std::string text;
        std::string ext = ".pres";
        if (kind == "lot") {
          text = format_log(random_lot(rng, size));
          ext = ".log";
        } else if (kind == "tower") {
          auto words = random_tower_words(rng, size, 4);
          text = format_presentation(Presentation{{"x", "y"}, {build_tower(words)}});
        } else {
          text = adian_text(random_adian(rng, size, std::max<std::size_t>(1, size - 1), 4));
        }
        if (out_dir.empty()) {
          std::cout << text;
        } else {
          fs::create_directories(out_dir);
          std::ostringstream name;
          name << kind << "_s" << seed << "_" << c + 1 << ext;
          std::ofstream(fs::path(out_dir) / name.str()) << text;
        }
      }
    } else if (cmd_batch->parsed()) {
      std::vector<std::string> files;
      for (const auto& entry : fs::directory_iterator(dir)) {
        auto ext = entry.path().extension();
        if (entry.is_regular_file() && (ext == ".pres" || ext == ".log")) {
          files.push_back(entry.path().string());
        }
      }
      std::sort(files.begin(), files.end());
      std::vector<std::string> outputs(files.size());
      std::vector<char> failed(files.size(), 0);  // not vector<bool>: written concurrently
      std::atomic<std::size_t> next{0};
      auto worker = [&] {
        for (std::size_t k; (k = next++) < files.size();) {
          try {
            auto r = check(load(files[k]), s);
            outputs[k] = s.json ? to_json(r).dump() : format_report(r);
          } catch (const std::exception& e) {
            outputs[k] = s.json ? Json{{"input", files[k]}, {"error", e.what()}}.dump()
                                : files[k] + ": error: " + e.what() + "\n";
            failed[k] = 1;
          }
        }
      };
      std::vector<std::thread> pool;
      for (std::size_t t = 0; t < std::min(jobs, std::max<std::size_t>(files.size(), 1)); ++t) {
        pool.emplace_back(worker);
      }
      for (auto& t : pool) {
        t.join();
      }
      if (s.json) {
        std::cout << "[\n";
        for (std::size_t k = 0; k < outputs.size(); ++k) {
          std::cout << "  " << outputs[k] << (k + 1 < outputs.size() ? ",\n" : "\n");
        }
        std::cout << "]\n";
      } else {
        for (const auto& o : outputs) {
          std::cout << o;
        }
      }
      code = std::any_of(failed.begin(), failed.end(), [](char b) { return b != 0; }) ? kExitError
                                                                                 : kExitRan;
    } else if (cmd_dot->parsed()) {
      auto in = load(file);
      if (graph == "whitehead") {
        std::cout << to_dot(whitehead_graph(in.presentation), in.presentation);
      } else if (graph == "left" || graph == "right") {
        if (!in.adian) {
          throw std::runtime_error(file + ": not an Adian presentation");
        }
        std::cout << to_dot(graph == "left" ? left_graph(*in.adian) : right_graph(*in.adian));
      } else {
        if (!in.log) {
          throw std::runtime_error(file + ": not a LOG file");
        }
        std::cout << (graph == "log"       ? to_dot(*in.log)
                      : graph == "initial" ? to_dot(initial_graph(*in.log))
                                           : to_dot(terminal_graph(*in.log)));
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return code;
}
