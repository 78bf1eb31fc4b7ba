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

#include "siggb/siggb.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>

#include "baseline.hpp"
#include "problem.hpp"
#include "reconstruct.hpp"

using namespace sgb;

struct siggb_problem {
  Problem prob;
};

// One result type backs all three pipelines; the optional members record
// which pieces of module data are present.
struct siggb_result {
  std::vector<std::string> vars;
  std::vector<Poly> generators;

  std::vector<Poly> basis_polys;
  std::vector<ModMonomial> basis_sigs;   // empty for Buchberger results
  std::vector<ModElement> basis_labels;  // filled by the labelled pipeline / recovery
  std::vector<ModMonomial> syzygy_sigs;
  std::vector<ModElement> syzygy_elems;  // filled by the labelled pipeline / recovery
  bool has_signatures = false;
  bool has_labels = false;
  bool has_syzygy_elems = false;

  RunStats stats;
  RunStatus status;
  bool baseline = false;
};

namespace {

thread_local std::string g_last_error = "no error";

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

siggb_status fail(siggb_status code, const std::string& msg) {
  g_last_error = msg;
  return code;
}

template <class Fn>
siggb_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const parse_error& e) {
    return fail(SIGGB_ERROR_PARSE, e.what());
  } catch (const inconsistent_input& e) {
    return fail(SIGGB_ERROR_INCONSISTENT, e.what());
  } catch (const domain_error& e) {
    return fail(SIGGB_ERROR_ARGUMENT, e.what());
  } catch (const error& e) {
    return fail(SIGGB_ERROR_INTERNAL, e.what());
  } catch (const std::exception& e) {
    return fail(SIGGB_ERROR_INTERNAL, e.what());
  }
}

EngineOptions to_engine_options(const siggb_problem* prob, const siggb_options* opts) {
  EngineOptions eo;
  if (prob->prob.max_degree) eo.max_degree = prob->prob.max_degree;
  if (opts) {
    if (opts->max_degree > 0) eo.max_degree = opts->max_degree;
    eo.syzygy_criterion = opts->use_syzygy_criterion != 0;
    eo.f5_criterion = opts->use_f5_criterion != 0;
    eo.singular_criterion = opts->use_singular_criterion != 0;
    eo.top_only = opts->top_only_reduction != 0;
    eo.pairs_budget = opts->pairs_budget;
    eo.timeout_seconds = opts->timeout_seconds;
  }
  return eo;
}

siggb_result* new_result(const siggb_problem* prob) {
  auto* res = new siggb_result;
  res->vars = prob->prob.vars;
  res->generators = prob->prob.generators;
  return res;
}

siggb_status string_out(char** out, const std::string& s) {
  *out = dup_string(s);
  return SIGGB_OK;
}

bool check_index(const siggb_result* res, int i, std::size_t n) {
  (void)res;
  return i >= 0 && static_cast<std::size_t>(i) < n;
}

siggb_status recover_labels_impl(siggb_result* res) {
  if (!res->has_signatures)
    return fail(SIGGB_ERROR_ARGUMENT, "label recovery needs a signature result");
  if (res->has_labels) return SIGGB_OK;
  std::vector<SigPoly> sig_basis;
  sig_basis.reserve(res->basis_polys.size());
  for (std::size_t i = 0; i < res->basis_polys.size(); ++i)
    sig_basis.push_back({res->basis_polys[i], res->basis_sigs[i]});
  std::vector<LabelledPoly> labelled = sig2labelled(sig_basis, res->generators);
  res->basis_labels.clear();
  for (std::size_t i = 0; i < labelled.size(); ++i) {
    res->basis_polys[i] = labelled[i].poly;
    res->basis_labels.push_back(std::move(labelled[i].label));
  }
  res->has_labels = true;
  return SIGGB_OK;
}

} // namespace

extern "C" {

void siggb_options_init(siggb_options* opts) {
  opts->max_degree = 0;
  opts->use_syzygy_criterion = 1;
  opts->use_f5_criterion = 1;
  opts->use_singular_criterion = 1;
  opts->top_only_reduction = 0;
  opts->pairs_budget = 0;
  opts->timeout_seconds = 0;
}

const char* siggb_last_error(void) { return g_last_error.c_str(); }

siggb_status siggb_problem_from_file(const char* path, siggb_problem** out) {
  return guarded([&]() -> siggb_status {
    if (!path || !out) return fail(SIGGB_ERROR_ARGUMENT, "null argument");
    auto prob = std::make_unique<siggb_problem>();
    try {
      prob->prob = parse_problem_file(path);
    } catch (const parse_error&) {
      throw;
    } catch (const error& e) {
      return fail(SIGGB_ERROR_IO, e.what());
    }
    *out = prob.release();
    return SIGGB_OK;
  });
}

siggb_status siggb_problem_from_string(const char* text, siggb_problem** out) {
  return guarded([&]() -> siggb_status {
    if (!text || !out) return fail(SIGGB_ERROR_ARGUMENT, "null argument");
    auto prob = std::make_unique<siggb_problem>();
    prob->prob = parse_problem_text(text);
    *out = prob.release();
    return SIGGB_OK;
  });
}

void siggb_problem_free(siggb_problem* prob) { delete prob; }

int siggb_problem_variable_count(const siggb_problem* prob) {
  return prob ? static_cast<int>(prob->prob.vars.size()) : 0;
}

int siggb_problem_generator_count(const siggb_problem* prob) {
  return prob ? static_cast<int>(prob->prob.generators.size()) : 0;
}

int siggb_problem_max_degree(const siggb_problem* prob) {
  return prob && prob->prob.max_degree ? *prob->prob.max_degree : 0;
}

siggb_status siggb_problem_generator(const siggb_problem* prob, int i, char** out) {
  return guarded([&]() -> siggb_status {
    if (!prob || !out || i < 0 || static_cast<std::size_t>(i) >= prob->prob.generators.size())
      return fail(SIGGB_ERROR_ARGUMENT, "generator index out of range");
    return string_out(out, format_poly(prob->prob.generators[i], prob->prob.vars));
  });
}

siggb_status siggb_compute(const siggb_problem* prob, const siggb_options* opts,
                           siggb_result** out) {
  return guarded([&]() -> siggb_status {
    if (!prob || !out) return fail(SIGGB_ERROR_ARGUMENT, "null argument");
    SigBasisResult r = siggb(prob->prob.generators, to_engine_options(prob, opts));
    auto* res = new_result(prob);
    for (SigPoly& p : r.basis) {
      res->basis_polys.push_back(std::move(p.poly));
      res->basis_sigs.push_back(std::move(p.sig));
    }
    res->syzygy_sigs = std::move(r.syzygies);
    res->has_signatures = true;
    res->stats = r.stats;
    res->status = r.status;
    *out = res;
    return SIGGB_OK;
  });
}

siggb_status siggb_compute_labelled(const siggb_problem* prob, const siggb_options* opts,
                                    siggb_result** out) {
  return guarded([&]() -> siggb_status {
    if (!prob || !out) return fail(SIGGB_ERROR_ARGUMENT, "null argument");
    LabelledBasisResult r = labelledgb(prob->prob.generators, to_engine_options(prob, opts));
    auto* res = new_result(prob);
    for (LabelledPoly& p : r.basis) {
      res->basis_sigs.push_back(p.label.signature());
      res->basis_polys.push_back(std::move(p.poly));
      res->basis_labels.push_back(std::move(p.label));
    }
    for (ModElement& s : r.syzygies) {
      res->syzygy_sigs.push_back(s.signature());
      res->syzygy_elems.push_back(std::move(s));
    }
    res->has_signatures = true;
    res->has_labels = true;
    res->has_syzygy_elems = true;
    res->stats = r.stats;
    res->status = r.status;
    *out = res;
    return SIGGB_OK;
  });
}

siggb_status siggb_compute_buchberger(const siggb_problem* prob, const siggb_options* opts,
                                      int chain_criterion, siggb_result** out) {
  return guarded([&]() -> siggb_status {
    if (!prob || !out) return fail(SIGGB_ERROR_ARGUMENT, "null argument");
    BaselineOptions bo;
    if (prob->prob.max_degree) bo.max_degree = prob->prob.max_degree;
    if (opts) {
      if (opts->max_degree > 0) bo.max_degree = opts->max_degree;
      bo.pairs_budget = opts->pairs_budget;
      bo.timeout_seconds = opts->timeout_seconds;
    }
    bo.chain_criterion = chain_criterion != 0;
    BaselineResult r = buchberger(prob->prob.generators, bo);
    auto* res = new_result(prob);
    res->basis_polys = std::move(r.basis);
    res->stats = r.stats;
    res->status = r.status;
    res->baseline = true;
    *out = res;
    return SIGGB_OK;
  });
}

void siggb_result_free(siggb_result* res) { delete res; }

int siggb_result_basis_size(const siggb_result* res) {
  return res ? static_cast<int>(res->basis_polys.size()) : 0;
}

siggb_status siggb_result_basis_poly(const siggb_result* res, int i, char** out) {
  return guarded([&]() -> siggb_status {
    if (!res || !out || !check_index(res, i, res->basis_polys.size()))
      return fail(SIGGB_ERROR_ARGUMENT, "basis index out of range");
    return string_out(out, format_poly(res->basis_polys[i], res->vars));
  });
}

siggb_status siggb_result_basis_signature(const siggb_result* res, int i, char** out) {
  return guarded([&]() -> siggb_status {
    if (!res || !out || !check_index(res, i, res->basis_polys.size()))
      return fail(SIGGB_ERROR_ARGUMENT, "basis index out of range");
    if (!res->has_signatures)
      return fail(SIGGB_ERROR_ARGUMENT, "this result carries no signatures");
    return string_out(out, format_mod_monomial(res->basis_sigs[i], res->vars));
  });
}

siggb_status siggb_result_basis_label(const siggb_result* res, int i, char** out) {
  return guarded([&]() -> siggb_status {
    if (!res || !out || !check_index(res, i, res->basis_polys.size()))
      return fail(SIGGB_ERROR_ARGUMENT, "basis index out of range");
    if (!res->has_labels) return fail(SIGGB_ERROR_ARGUMENT, "this result carries no labels");
    return string_out(out, format_mod_element(res->basis_labels[i], res->vars));
  });
}

int siggb_result_syzygy_count(const siggb_result* res) {
  return res ? static_cast<int>(res->syzygy_sigs.size()) : 0;
}

siggb_status siggb_result_syzygy_signature(const siggb_result* res, int i, char** out) {
  return guarded([&]() -> siggb_status {
    if (!res || !out || !check_index(res, i, res->syzygy_sigs.size()))
      return fail(SIGGB_ERROR_ARGUMENT, "syzygy index out of range");
    return string_out(out, format_mod_monomial(res->syzygy_sigs[i], res->vars));
  });
}

siggb_status siggb_result_syzygy_element(const siggb_result* res, int i, char** out) {
  return guarded([&]() -> siggb_status {
    if (!res || !out || !check_index(res, i, res->syzygy_sigs.size()))
      return fail(SIGGB_ERROR_ARGUMENT, "syzygy index out of range");
    if (!res->has_syzygy_elems)
      return fail(SIGGB_ERROR_ARGUMENT, "this result carries no syzygy witnesses");
    return string_out(out, format_mod_element(res->syzygy_elems[i], res->vars));
  });
}

siggb_status siggb_result_status_string(const siggb_result* res, char** out) {
  return guarded([&]() -> siggb_status {
    if (!res || !out) return fail(SIGGB_ERROR_ARGUMENT, "null argument");
    return string_out(out, format_status(res->status, res->vars));
  });
}

siggb_status siggb_result_stats_json(const siggb_result* res, char** out) {
  return guarded([&]() -> siggb_status {
    if (!res || !out) return fail(SIGGB_ERROR_ARGUMENT, "null argument");
    return string_out(out, format_stats_json(res->stats, res->status, res->vars, res->baseline));
  });
}

long long siggb_result_stat(const siggb_result* res, const char* key) {
  if (!res || !key) return -1;
  std::string k = key;
  if (k == "spolys") return res->stats.spolys;
  if (k == "zero_reductions") return res->stats.zero_reductions;
  if (k == "syzygy_hits") return res->stats.syzygy_hits;
  if (k == "f5_hits") return res->stats.f5_hits;
  if (k == "singular_hits") return res->stats.singular_hits;
  if (k == "chain_hits") return res->stats.chain_hits;
  if (k == "basis_size") return res->stats.basis_size;
  if (k == "syzygy_count") return static_cast<long long>(res->syzygy_sigs.size());
  if (k == "complete") return res->status.outcome == RunOutcome::complete ? 1 : 0;
  return -1;
}

double siggb_result_wall_ms(const siggb_result* res) { return res ? res->stats.wall_ms : 0; }

siggb_status siggb_result_recover_labels(siggb_result* res) {
  return guarded([&]() -> siggb_status {
    if (!res) return fail(SIGGB_ERROR_ARGUMENT, "null argument");
    return recover_labels_impl(res);
  });
}

siggb_status siggb_result_recover_syzygies(siggb_result* res) {
  return guarded([&]() -> siggb_status {
    if (!res) return fail(SIGGB_ERROR_ARGUMENT, "null argument");
    if (!res->has_signatures)
      return fail(SIGGB_ERROR_ARGUMENT, "syzygy recovery needs a signature result");
    if (res->has_syzygy_elems) return SIGGB_OK;
    std::vector<SigPoly> sig_basis;
    sig_basis.reserve(res->basis_polys.size());
    for (std::size_t i = 0; i < res->basis_polys.size(); ++i)
      sig_basis.push_back({res->basis_polys[i], res->basis_sigs[i]});
    res->syzygy_elems = syzygy_recovery(sig_basis, res->syzygy_sigs, res->generators);
    res->has_syzygy_elems = true;
    return recover_labels_impl(res);
  });
}

siggb_status siggb_result_enumerate_syzygy_basis(const siggb_result* res, int degree_bound,
                                                 char** out) {
  return guarded([&]() -> siggb_status {
    if (!res || !out) return fail(SIGGB_ERROR_ARGUMENT, "null argument");
    if (!res->has_syzygy_elems || !res->has_labels)
      return fail(SIGGB_ERROR_ARGUMENT, "enumerate needs recovered syzygies");
    if (degree_bound < 0) return fail(SIGGB_ERROR_ARGUMENT, "degree bound must be nonnegative");
    SyzygyBasisDescription desc;
    desc.explicit_part = res->syzygy_elems;
    for (std::size_t i = 0; i < res->basis_polys.size(); ++i)
      desc.trivial_part.push_back({res->basis_polys[i], res->basis_labels[i]});
    std::vector<ModElement> all = enumerate_syzygy_basis(
        desc, res->generators, static_cast<unsigned>(res->vars.size()), degree_bound);
    std::string joined;
    for (const ModElement& e : all) joined += format_mod_element(e, res->vars) + "\n";
    return string_out(out, joined);
  });
}

siggb_status siggb_certify(const siggb_problem* prob, const siggb_options* opts,
                           const char* target, char** out) {
  return guarded([&]() -> siggb_status {
    if (!prob || !target || !out) return fail(SIGGB_ERROR_ARGUMENT, "null argument");
    Poly t = parse_polynomial(target, prob->prob.vars);
    LabelledBasisResult r = labelledgb(prob->prob.generators, to_engine_options(prob, opts));
    std::optional<Certificate> cert = certify(t, r.basis, prob->prob.generators);
    if (!cert)
      return fail(SIGGB_ERROR_NOT_IN_IDEAL,
                  "target is not provably in the ideal at this truncation");
    return string_out(out, format_certificate(*cert, prob->prob.vars));
  });
}

void siggb_string_free(char* s) { std::free(s); }

} // extern "C"
