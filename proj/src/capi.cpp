#include "abdkit/abdkit.h"

#include <cstring>
#include <string>

#include "abdkit/classifier.hpp"
#include "abdkit/counting.hpp"
#include "abdkit/generators.hpp"
#include "abdkit/model.hpp"
#include "abdkit/solvers.hpp"

using namespace abdkit;

struct abdk_instance {
  Instance inst;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_error(char** errmsg, const std::string& msg) {
  if (errmsg) *errmsg = dup_string(msg);
}

abdk_status status_of(const std::exception& e, char** errmsg) {
  set_error(errmsg, e.what());
  if (dynamic_cast<const ParseError*>(&e)) return ABDK_ERR_PARSE;
  if (dynamic_cast<const ValidationError*>(&e)) return ABDK_ERR_INVALID;
  if (dynamic_cast<const LimitError*>(&e)) return ABDK_ERR_LIMIT;
  return ABDK_ERR_INTERNAL;
}

std::string witness_text(const Explanation& e) {
  std::string s;
  for (const Literal& l : e.literals()) {
    if (!s.empty()) s += ' ';
    s += l.to_string();
  }
  return s;
}

std::optional<CountKind> parse_count_kind(const char* kind) {
  if (!kind) return std::nullopt;
  std::string k(kind);
  if (k == "full") return CountKind::Full;
  if (k == "positive-all") return CountKind::PositiveAll;
  if (k == "positive-minimal") return CountKind::PositiveMinimal;
  return std::nullopt;
}

}  // namespace

extern "C" {

const char* abdk_version(void) { return "0.1.0"; }

void abdk_string_free(char* s) { std::free(s); }

abdk_status abdk_instance_parse(const char* text, abdk_instance** out, char** errmsg) {
  if (!text || !out) {
    set_error(errmsg, "null argument");
    return ABDK_ERR_INVALID;
  }
  *out = nullptr;
  try {
    Instance inst = parse_instance(text);
    *out = new abdk_instance{std::move(inst)};
    return ABDK_OK;
  } catch (const std::exception& e) {
    return status_of(e, errmsg);
  }
}

void abdk_instance_free(abdk_instance* inst) { delete inst; }

abdk_status abdk_instance_text(const abdk_instance* inst, char** out) {
  if (!inst || !out) return ABDK_ERR_INVALID;
  *out = dup_string(serialize_instance(inst->inst));
  return ABDK_OK;
}

abdk_status abdk_instance_override_mode(const abdk_instance* inst, const char* mode,
                                        abdk_instance** out, char** errmsg) {
  if (!inst || !mode || !out) {
    set_error(errmsg, "null argument");
    return ABDK_ERR_INVALID;
  }
  *out = nullptr;
  std::string m(mode);
  if (m != "symmetric" && m != "positive") {
    set_error(errmsg, "mode must be symmetric or positive");
    return ABDK_ERR_INVALID;
  }
  try {
    *out = new abdk_instance{
        inst->inst.with_mode(m == "symmetric" ? Mode::Symmetric : Mode::Positive)};
    return ABDK_OK;
  } catch (const std::exception& e) {
    return status_of(e, errmsg);
  }
}

abdk_status abdk_instance_stats(const abdk_instance* inst, int* num_vars,
                                int* num_hyps, int* num_formulas) {
  if (!inst) return ABDK_ERR_INVALID;
  if (num_vars) *num_vars = static_cast<int>(inst->inst.kb_vars().size());
  if (num_hyps) *num_hyps = static_cast<int>(inst->inst.hypotheses().size());
  if (num_formulas) *num_formulas = static_cast<int>(inst->inst.kb().formulas().size());
  return ABDK_OK;
}

abdk_status abdk_instance_mode(const abdk_instance* inst, char** mode) {
  if (!inst || !mode) return ABDK_ERR_INVALID;
  *mode = dup_string(inst->inst.mode() == Mode::Positive ? "positive" : "symmetric");
  return ABDK_OK;
}

abdk_status abdk_clone_name(const abdk_instance* inst, char** name, char** errmsg) {
  if (!inst || !name) {
    set_error(errmsg, "null argument");
    return ABDK_ERR_INVALID;
  }
  try {
    *name = dup_string(instance_clone(inst->inst).name());
    return ABDK_OK;
  } catch (const std::exception& e) {
    return status_of(e, errmsg);
  }
}

abdk_status abdk_solve(const abdk_instance* inst, const char* algorithm, int* found,
                       char** witness, char** algorithm_used, char** errmsg) {
  if (!inst || !found) {
    set_error(errmsg, "null argument");
    return ABDK_ERR_INVALID;
  }
  *found = 0;
  if (witness) *witness = nullptr;
  std::optional<Algorithm> alg =
      algorithm ? parse_algorithm(algorithm) : std::optional<Algorithm>(Algorithm::Auto);
  if (!alg) {
    set_error(errmsg, std::string("unknown algorithm '") + algorithm + "'");
    return ABDK_ERR_INVALID;
  }
  try {
    SolveResult r = solve(inst->inst, *alg);
    if (algorithm_used) *algorithm_used = dup_string(r.algorithm_used);
    if (!r.has_explanation) return ABDK_NO;
    *found = 1;
    if (witness) *witness = dup_string(witness_text(*r.witness));
    return ABDK_OK;
  } catch (const std::exception& e) {
    return status_of(e, errmsg);
  }
}

abdk_status abdk_count(const abdk_instance* inst, const char* kind, char** count,
                       char** method, char** errmsg) {
  if (!inst || !count) {
    set_error(errmsg, "null argument");
    return ABDK_ERR_INVALID;
  }
  auto k = parse_count_kind(kind);
  if (!k) {
    set_error(errmsg, "count kind must be full, positive-all, or positive-minimal");
    return ABDK_ERR_INVALID;
  }
  try {
    CountResult r = *k == CountKind::Full
                        ? count_full_explanations(inst->inst)
                        : count_positive_explanations(
                              inst->inst, *k == CountKind::PositiveMinimal);
    *count = dup_string(r.value.str());
    if (method) *method = dup_string(r.method);
    return ABDK_OK;
  } catch (const std::exception& e) {
    return status_of(e, errmsg);
  }
}

abdk_status abdk_enumerate(const abdk_instance* inst, int full_only,
                           abdk_explanation_cb cb, void* user, char** errmsg) {
  if (!inst || !cb) {
    set_error(errmsg, "null argument");
    return ABDK_ERR_INVALID;
  }
  try {
    const std::size_t hyp_count = inst->inst.hypotheses().size();
    enumerate_explanations(inst->inst, [&](const Explanation& e) {
      if (full_only && e.size() != hyp_count) return true;
      return cb(witness_text(e).c_str(), user) == 0;
    });
    return ABDK_OK;
  } catch (const std::exception& e) {
    return status_of(e, errmsg);
  }
}

abdk_status abdk_classify(const abdk_instance* inst, const char* variant,
                          char** membership, char** hardness, int* complete,
                          char** note, char** errmsg) {
  if (!inst || !membership || !complete) {
    set_error(errmsg, "null argument");
    return ABDK_ERR_INVALID;
  }
  try {
    const CloneId clone = instance_clone(inst->inst);
    Verdict v;
    if (!variant) {
      v = classify_decision(clone, inst->inst.mode(), inst->inst.manifestation().cls());
    } else {
      auto k = parse_count_kind(variant);
      if (!k) {
        set_error(errmsg, "variant must be full, positive-all, or positive-minimal");
        return ABDK_ERR_INVALID;
      }
      if (inst->inst.manifestation().cls() != ManifestationClass::PQ) {
        set_error(errmsg, "counting is classified for positive literal manifestations only");
        return ABDK_ERR_INVALID;
      }
      v = classify_counting(clone, inst->inst.mode(), *k);
    }
    *membership = dup_string(to_string(v.membership));
    if (hardness) {
      *hardness = v.hardness == ComplexityClass::None ? nullptr
                                                      : dup_string(to_string(v.hardness));
    }
    *complete = v.complete ? 1 : 0;
    if (note) *note = v.note ? dup_string(*v.note) : nullptr;
    return ABDK_OK;
  } catch (const std::exception& e) {
    return status_of(e, errmsg);
  }
}

abdk_status abdk_generate(const char* genspec, uint64_t seed, char** instance_text,
                          char** relation, char** errmsg) {
  if (!genspec || !instance_text) {
    set_error(errmsg, "null argument");
    return ABDK_ERR_INVALID;
  }
  try {
    GenSpec spec = parse_genspec(genspec);
    if (seed != 0) spec.seed = seed;
    Generated g = generate(spec);
    *instance_text = dup_string(serialize_instance(g.instance));
    if (relation) *relation = dup_string(g.relation);
    return ABDK_OK;
  } catch (const std::exception& e) {
    return status_of(e, errmsg);
  }
}

abdk_status abdk_check(const abdk_instance* inst, const char* algorithm, char** report,
                       char** errmsg) {
  if (!inst) {
    set_error(errmsg, "null argument");
    return ABDK_ERR_INVALID;
  }
  std::optional<Algorithm> alg =
      algorithm ? parse_algorithm(algorithm) : std::optional<Algorithm>(Algorithm::Auto);
  if (!alg) {
    set_error(errmsg, std::string("unknown algorithm '") + algorithm + "'");
    return ABDK_ERR_INVALID;
  }
  try {
    SolveResult r = solve(inst->inst, *alg);
    std::vector<Explanation> oracle = brute_force_explanations(inst->inst, false);
    std::string text = "solver (" + r.algorithm_used + "): " +
                       (r.has_explanation ? "sat" : "unsat") + "\n";
    text += "oracle: " + std::string(oracle.empty() ? "unsat" : "sat") + "\n";
    bool ok = r.has_explanation == !oracle.empty();
    if (r.has_explanation && ok) {
      const bool witness_ok = verify_explanation(inst->inst, *r.witness);
      text += "witness " + r.witness->to_string() + ": " +
              (witness_ok ? "verified" : "REJECTED") + "\n";
      ok = ok && witness_ok;
    }
    text += ok ? "agreement\n" : "DISAGREEMENT\n";
    if (report) *report = dup_string(text);
    return ok ? ABDK_OK : ABDK_NO;
  } catch (const std::exception& e) {
    return status_of(e, errmsg);
  }
}

}  // extern "C"
