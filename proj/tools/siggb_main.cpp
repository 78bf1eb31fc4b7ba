// Copyright (c) 2026 the siggb developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Everything goes through the public C API.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "siggb/siggb.h"

namespace {

struct StringFree {
  void operator()(char* s) const { siggb_string_free(s); }
};
using ApiString = std::unique_ptr<char, StringFree>;

struct ProblemFree {
  void operator()(siggb_problem* p) const { siggb_problem_free(p); }
};
using ProblemPtr = std::unique_ptr<siggb_problem, ProblemFree>;

struct ResultFree {
  void operator()(siggb_result* r) const { siggb_result_free(r); }
};
using ResultPtr = std::unique_ptr<siggb_result, ResultFree>;

[[noreturn]] void die(const std::string& context) {
  std::cerr << "error: " << context << ": " << siggb_last_error() << "\n";
  std::exit(1);
}

std::string api_string(siggb_status st, char** raw, const std::string& context) {
  if (st != SIGGB_OK) die(context);
  ApiString s(*raw);
  *raw = nullptr;
  return std::string(s.get());
}

ProblemPtr load_problem(const std::string& path) {
  siggb_problem* prob = nullptr;
  if (siggb_problem_from_file(path.c_str(), &prob) != SIGGB_OK) die("loading " + path);
  return ProblemPtr(prob);
}

struct CommonFlags {
  int maxdeg = 0;
  bool no_syzygy = false;
  bool no_f5 = false;
  bool no_singular = false;
  bool top_only = false;
  long long pairs_budget = 0;
  double timeout = 0;
  std::string stats_json;

  void attach(CLI::App* cmd, bool with_criteria = true) {
    cmd->add_option("--maxdeg", maxdeg, "degree bound: drop pairs above this degree");
    if (with_criteria) {
      cmd->add_flag("--no-syzygy-crit", no_syzygy, "disable the syzygy criterion");
      cmd->add_flag("--no-f5-crit", no_f5, "disable the F5 criterion");
      cmd->add_flag("--no-singular-crit", no_singular, "disable the singular criterion");
      cmd->add_flag("--top-only", top_only, "restrict regular s-reduction to leading monomials");
    }
    cmd->add_option("--pairs-budget", pairs_budget, "stop after this many S-polynomial pairs are processed");
    cmd->add_option("--timeout", timeout, "per-run wall-clock limit in seconds");
    cmd->add_option("--stats-json", stats_json, "write machine-readable run statistics here");
  }

  siggb_options options() const {
    siggb_options o;
    siggb_options_init(&o);
    o.max_degree = maxdeg;
    o.use_syzygy_criterion = no_syzygy ? 0 : 1;
    o.use_f5_criterion = no_f5 ? 0 : 1;
    o.use_singular_criterion = no_singular ? 0 : 1;
    o.top_only_reduction = top_only ? 1 : 0;
    o.pairs_budget = pairs_budget;
    o.timeout_seconds = timeout;
    return o;
  }
};

void write_stats(const siggb_result* res, const std::string& path) {
  if (path.empty()) return;
  char* raw = nullptr;
  std::string json = api_string(siggb_result_stats_json(res, &raw), &raw, "formatting stats");
  std::ofstream out(path);
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    std::exit(1);
  }
  out << json;
}

void print_basis(const siggb_result* res, bool with_sigs, bool with_labels) {
  char* raw = nullptr;
  std::string status =
      api_string(siggb_result_status_string(res, &raw), &raw, "formatting status");
  std::cout << "# status: " << status << "\n";
  int n = siggb_result_basis_size(res);
  std::cout << "# basis (" << n << "):\n";
  for (int i = 0; i < n; ++i) {
    std::string poly =
        api_string(siggb_result_basis_poly(res, i, &raw), &raw, "formatting basis");
    if (with_sigs) {
      std::string sig =
          api_string(siggb_result_basis_signature(res, i, &raw), &raw, "formatting signature");
      std::cout << poly << "  [" << sig << "]\n";
    } else {
      std::cout << poly << "\n";
    }
    if (with_labels) {
      std::string label =
          api_string(siggb_result_basis_label(res, i, &raw), &raw, "formatting label");
      std::cout << "  label: " << label << "\n";
    }
  }
}

void print_syzygy_signatures(const siggb_result* res) {
  char* raw = nullptr;
  int h = siggb_result_syzygy_count(res);
  std::cout << "# syzygy signatures (" << h << "):\n";
  for (int i = 0; i < h; ++i)
    std::cout << api_string(siggb_result_syzygy_signature(res, i, &raw), &raw,
                            "formatting syzygy signature")
              << "\n";
}

int cmd_compute(const std::string& path, const CommonFlags& flags) {
  ProblemPtr prob = load_problem(path);
  siggb_options o = flags.options();
  siggb_result* raw_res = nullptr;
  if (siggb_compute(prob.get(), &o, &raw_res) != SIGGB_OK) die("compute");
  ResultPtr res(raw_res);
  print_basis(res.get(), true, false);
  print_syzygy_signatures(res.get());
  write_stats(res.get(), flags.stats_json);
  return 0;
}

int cmd_labelled(const std::string& path, const CommonFlags& flags) {
  ProblemPtr prob = load_problem(path);
  siggb_options o = flags.options();
  siggb_result* raw_res = nullptr;
  if (siggb_compute_labelled(prob.get(), &o, &raw_res) != SIGGB_OK) die("labelled");
  ResultPtr res(raw_res);
  print_basis(res.get(), true, true);
  char* raw = nullptr;
  int h = siggb_result_syzygy_count(res.get());
  std::cout << "# syzygies (" << h << "):\n";
  for (int i = 0; i < h; ++i)
    std::cout << api_string(siggb_result_syzygy_element(res.get(), i, &raw), &raw,
                            "formatting syzygy")
              << "\n";
  write_stats(res.get(), flags.stats_json);
  return 0;
}

int cmd_buchberger(const std::string& path, const CommonFlags& flags, bool chain) {
  ProblemPtr prob = load_problem(path);
  siggb_options o = flags.options();
  siggb_result* raw_res = nullptr;
  if (siggb_compute_buchberger(prob.get(), &o, chain ? 1 : 0, &raw_res) != SIGGB_OK)
    die("buchberger");
  ResultPtr res(raw_res);
  print_basis(res.get(), false, false);
  write_stats(res.get(), flags.stats_json);
  return 0;
}

int cmd_certify(const std::string& path, const CommonFlags& flags, const std::string& target) {
  ProblemPtr prob = load_problem(path);
  siggb_options o = flags.options();
  char* raw = nullptr;
  siggb_status st = siggb_certify(prob.get(), &o, target.c_str(), &raw);
  if (st != SIGGB_OK) die("certify");
  ApiString cert(raw);
  std::cout << "# target: " << target << "\n";
  std::cout << "# certificate rows: c | a | i | b\n";
  std::cout << cert.get();
  return 0;
}

int cmd_syzygies(const std::string& path, const CommonFlags& flags, int enumerate_deg) {
  ProblemPtr prob = load_problem(path);
  siggb_options o = flags.options();
  siggb_result* raw_res = nullptr;
  if (siggb_compute(prob.get(), &o, &raw_res) != SIGGB_OK) die("compute");
  ResultPtr res(raw_res);
  if (siggb_result_recover_syzygies(res.get()) != SIGGB_OK) die("syzygy recovery");
  char* raw = nullptr;
  std::string status =
      api_string(siggb_result_status_string(res.get(), &raw), &raw, "formatting status");
  std::cout << "# status: " << status << "\n";
  int h = siggb_result_syzygy_count(res.get());
  std::cout << "# recovered syzygies (" << h << "):\n";
  for (int i = 0; i < h; ++i) {
    std::string sig = api_string(siggb_result_syzygy_signature(res.get(), i, &raw), &raw,
                                 "formatting signature");
    std::string elem = api_string(siggb_result_syzygy_element(res.get(), i, &raw), &raw,
                                  "formatting syzygy");
    std::cout << sig << " : " << elem << "\n";
  }
  if (enumerate_deg > 0) {
    std::string all = api_string(
        siggb_result_enumerate_syzygy_basis(res.get(), enumerate_deg, &raw), &raw, "enumerate");
    std::cout << "# syzygy basis up to degree " << enumerate_deg << ":\n" << all;
  }
  write_stats(res.get(), flags.stats_json);
  return 0;
}

struct BenchRow {
  std::string problem;
  std::string algorithm;
  long long spolys = -1;
  long long zero_reductions = -1;
  long long basis = -1;
  std::string status;
  double ms = 0;
};

int cmd_bench(const std::string& suite_path, double timeout, const std::string& json_path) {
  std::ifstream in(suite_path);
  if (!in) {
    std::cerr << "error: cannot open suite file " << suite_path << "\n";
    return 1;
  }
  std::vector<std::string> paths;
  std::string line;
  while (std::getline(in, line)) {
    auto cut = line.substr(0, line.find('#'));
    std::istringstream ls(cut);
    std::string p;
    if (ls >> p) paths.push_back(p);
  }
  std::filesystem::path base = std::filesystem::path(suite_path).parent_path();

  std::vector<BenchRow> rows;
  for (const std::string& rel : paths) {
    std::filesystem::path full = rel;
    if (full.is_relative()) full = base / full;
    std::string name = full.stem().string();
    siggb_problem* raw_prob = nullptr;
    if (siggb_problem_from_file(full.string().c_str(), &raw_prob) != SIGGB_OK) {
      rows.push_back({name, "-", -1, -1, -1, std::string("load error: ") + siggb_last_error(), 0});
      continue;
    }
    ProblemPtr prob(raw_prob);
    siggb_options o;
    siggb_options_init(&o);
    o.timeout_seconds = timeout;

    auto record = [&](const char* algo, auto&& compute) {
      siggb_result* raw_res = nullptr;
      siggb_status st = compute(&raw_res);
      BenchRow row;
      row.problem = name;
      row.algorithm = algo;
      if (st != SIGGB_OK) {
        row.status = std::string("error: ") + siggb_last_error();
      } else {
        ResultPtr res(raw_res);
        char* raw = nullptr;
        row.spolys = siggb_result_stat(res.get(), "spolys");
        row.zero_reductions = siggb_result_stat(res.get(), "zero_reductions");
        row.basis = siggb_result_stat(res.get(), "basis_size");
        row.status =
            api_string(siggb_result_status_string(res.get(), &raw), &raw, "formatting status");
        row.ms = siggb_result_wall_ms(res.get());
      }
      rows.push_back(row);
      std::cerr << "bench: " << name << " / " << algo << " done\n";
    };

    record("siggb", [&](siggb_result** out) { return siggb_compute(prob.get(), &o, out); });
    record("bb-vanilla",
           [&](siggb_result** out) { return siggb_compute_buchberger(prob.get(), &o, 0, out); });
    record("bb-optimized",
           [&](siggb_result** out) { return siggb_compute_buchberger(prob.get(), &o, 1, out); });
  }

  std::printf("%-14s %-13s %9s %9s %7s %11s  %s\n", "problem", "algorithm", "spolys", "red0",
              "basis", "ms", "status");
  for (const BenchRow& row : rows)
    std::printf("%-14s %-13s %9lld %9lld %7lld %11.1f  %s\n", row.problem.c_str(),
                row.algorithm.c_str(), row.spolys, row.zero_reductions, row.basis, row.ms,
                row.status.c_str());

  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) {
      std::cerr << "error: cannot write " << json_path << "\n";
      return 1;
    }
    out << "[\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const BenchRow& row = rows[i];
      out << "  {\"problem\": \"" << row.problem << "\", \"algorithm\": \"" << row.algorithm
          << "\", \"spolys\": " << row.spolys << ", \"zero_reductions\": " << row.zero_reductions
          << ", \"basis_size\": " << row.basis << ", \"wall_time_ms\": " << row.ms
          << ", \"status\": \"" << row.status << "\"}" << (i + 1 < rows.size() ? "," : "") << "\n";
    }
    out << "]\n";
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"signature Groebner bases in the free algebra"};
  app.require_subcommand(1);

  std::string path, target, suite, json_path;
  int enumerate_deg = 0;
  bool chain = false;
  double bench_timeout = 0;
  CommonFlags flags;

  CLI::App* compute = app.add_subcommand("compute", "signature Groebner basis of a problem");
  compute->add_option("problem", path, "problem file")->required();
  flags.attach(compute);

  CLI::App* labelled =
      app.add_subcommand("labelled", "basis with full module labels (slower)");
  labelled->add_option("problem", path, "problem file")->required();
  flags.attach(labelled);

  CLI::App* bb = app.add_subcommand("buchberger", "classical Buchberger baseline");
  bb->add_option("problem", path, "problem file")->required();
  bb->add_flag("--chain", chain, "enable the chain criterion");
  flags.attach(bb, false);

  CLI::App* certify = app.add_subcommand("certify", "ideal-membership certificate");
  certify->add_option("problem", path, "problem file")->required();
  certify->add_option("--target", target, "polynomial expression to certify")->required();
  flags.attach(certify);

  CLI::App* syz = app.add_subcommand("syzygies", "recover syzygies of the generators");
  syz->add_option("problem", path, "problem file")->required();
  syz->add_option("--enumerate", enumerate_deg,
                  "also list the syzygy-module basis up to this degree");
  flags.attach(syz);

  CLI::App* bench = app.add_subcommand("bench", "run a benchmark suite");
  bench->add_option("suite", suite, "suite file: one problem path per line")->required();
  bench->add_option("--timeout", bench_timeout, "per-run wall-clock limit in seconds");
  bench->add_option("--json", json_path, "write machine-readable rows here");

  CLI11_PARSE(app, argc, argv);

  if (compute->parsed()) return cmd_compute(path, flags);
  if (labelled->parsed()) return cmd_labelled(path, flags);
  if (bb->parsed()) return cmd_buchberger(path, flags, chain);
  if (certify->parsed()) return cmd_certify(path, flags, target);
  if (syz->parsed()) return cmd_syzygies(path, flags, enumerate_deg);
  if (bench->parsed()) return cmd_bench(suite, bench_timeout, json_path);
  return 1;
}
