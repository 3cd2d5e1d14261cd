// abdkit command-line front end. Talks to the shared library through the
// C interface only.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "abdkit/abdkit.h"

namespace {

using nlohmann::json;

constexpr int kExitNo = 1;
constexpr int kExitError = 2;

struct StringOwner {
  char* s = nullptr;
  ~StringOwner() { abdk_string_free(s); }
  char** out() { return &s; }
  std::string str() const { return s ? s : ""; }
};

struct InstanceOwner {
  abdk_instance* inst = nullptr;
  ~InstanceOwner() { abdk_instance_free(inst); }
};

int fail(const StringOwner& errmsg, const char* fallback) {
  std::cerr << "abdkit: " << (errmsg.s ? errmsg.s : fallback) << "\n";
  return kExitError;
}

bool read_input(const std::string& path, std::string& out) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    out = buf.str();
    return true;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buf;
  buf << in.rdbuf();
  out = buf.str();
  return true;
}

int load_instance(const std::string& path, const std::string& mode_override,
                  InstanceOwner& owner) {
  std::string text;
  if (!read_input(path, text)) {
    std::cerr << "abdkit: cannot read '" << path << "'\n";
    return kExitError;
  }
  StringOwner err;
  if (abdk_instance_parse(text.c_str(), &owner.inst, err.out()) != ABDK_OK) {
    return fail(err, "parse error");
  }
  if (!mode_override.empty()) {
    InstanceOwner overridden;
    StringOwner err2;
    if (abdk_instance_override_mode(owner.inst, mode_override.c_str(),
                                    &overridden.inst, err2.out()) != ABDK_OK) {
      return fail(err2, "bad mode override");
    }
    std::swap(owner.inst, overridden.inst);
  }
  return 0;
}

std::vector<std::string> split_literals(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string lit;
  while (in >> lit) out.push_back(lit);
  return out;
}

std::string verdict_text(const std::string& membership, const char* hardness,
                         bool complete, const char* note) {
  std::string s;
  if (complete) {
    s = membership + "-complete";
  } else if (hardness) {
    s = "in " + membership + ", " + std::string(hardness) + "-hard";
  } else {
    s = "in " + membership;
  }
  if (note) s += " (" + std::string(note) + ")";
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"abdkit: propositional abduction over restricted connective sets"};
  app.require_subcommand(1);

  std::string input;
  std::string algorithm = "auto";
  std::string mode_override;
  std::string counting_variant;
  bool as_json = false;
  bool minimal = false;
  bool full_only = false;
  uint64_t seed = 0;
  int max_vars = 0;

  const auto add_common = [&](CLI::App* cmd, bool with_mode = true) {
    cmd->add_option("input", input, "instance file, or - for standard input")->required();
    cmd->add_flag("--json", as_json, "JSON output");
    if (with_mode) {
      cmd->add_option("--mode-override", mode_override,
                      "run as symmetric or positive regardless of the file");
    }
  };

  CLI::App* solve_cmd = app.add_subcommand("solve", "decide explanation existence");
  add_common(solve_cmd);
  solve_cmd->add_option("--algorithm", algorithm,
                        "auto|generic|monotone|affine|syntactic|brute");

  CLI::App* count_cmd = app.add_subcommand("count", "count explanations");
  add_common(count_cmd);
  count_cmd->add_flag("--minimal", minimal, "count subset-minimal positive explanations");

  CLI::App* enum_cmd = app.add_subcommand("enumerate", "list explanations");
  add_common(enum_cmd);
  enum_cmd->add_flag("--full-only", full_only, "only explanations mentioning every hypothesis");

  CLI::App* classify_cmd = app.add_subcommand("classify", "complexity classification");
  add_common(classify_cmd);
  classify_cmd->add_option("--counting", counting_variant,
                           "classify counting instead: full|positive-all|positive-minimal");

  CLI::App* clone_cmd = app.add_subcommand("clone", "clone of the declared connectives");
  add_common(clone_cmd, false);

  CLI::App* gen_cmd = app.add_subcommand("gen", "generate an instance from a genspec");
  gen_cmd->add_option("input", input, "genspec file, or - for standard input")->required();
  gen_cmd->add_flag("--json", as_json, "JSON output");
  gen_cmd->add_option("--seed", seed, "override the genspec seed");

  CLI::App* check_cmd = app.add_subcommand("check", "cross-validate solver against the oracle");
  add_common(check_cmd);
  check_cmd->add_option("--algorithm", algorithm,
                        "auto|generic|monotone|affine|syntactic|brute");
  check_cmd->add_option("--max-vars", max_vars, "reject instances with more variables");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  if (gen_cmd->parsed()) {
    std::string text;
    if (!read_input(input, text)) {
      std::cerr << "abdkit: cannot read '" << input << "'\n";
      return kExitError;
    }
    StringOwner out, relation, err;
    if (abdk_generate(text.c_str(), seed, out.out(), relation.out(), err.out()) != ABDK_OK) {
      return fail(err, "generation failed");
    }
    if (as_json) {
      json j{{"instance", out.str()}, {"relation", relation.str()}};
      std::cout << j.dump() << "\n";
    } else {
      std::cout << "# " << relation.str() << "\n" << out.str();
    }
    return 0;
  }

  InstanceOwner inst;
  if (int rc = load_instance(input, mode_override, inst); rc != 0) return rc;

  if (solve_cmd->parsed()) {
    int found = 0;
    StringOwner witness, used, err;
    abdk_status st = abdk_solve(inst.inst, algorithm.c_str(), &found, witness.out(),
                                used.out(), err.out());
    if (st != ABDK_OK && st != ABDK_NO) return fail(err, "solve failed");
    if (as_json) {
      json j;
      j["status"] = found ? "sat" : "unsat";
      j["explanation"] = found ? json(split_literals(witness.str())) : json(nullptr);
      j["algorithm"] = used.str();
      std::cout << j.dump() << "\n";
    } else {
      std::cout << "status: " << (found ? "sat" : "unsat") << "\n";
      if (found) std::cout << "explanation: {" << witness.str() << "}\n";
      std::cout << "algorithm: " << used.str() << "\n";
    }
    return found ? 0 : kExitNo;
  }

  if (count_cmd->parsed()) {
    // Mode decides the counting problem; --minimal applies to positive mode.
    StringOwner mode;
    abdk_instance_mode(inst.inst, mode.out());
    const bool positive = mode.str() == "positive";
    const char* kind = positive ? (minimal ? "positive-minimal" : "positive-all") : "full";
    StringOwner count, method, err;
    if (abdk_count(inst.inst, kind, count.out(), method.out(), err.out()) != ABDK_OK) {
      return fail(err, "count failed");
    }
    if (as_json) {
      json j{{"count", count.str()}, {"method", method.str()}};
      std::cout << j.dump() << "\n";
    } else {
      std::cout << "count: " << count.str() << "\nmethod: " << method.str() << "\n";
    }
    return 0;
  }

  if (enum_cmd->parsed()) {
    StringOwner err;
    if (as_json) {
      json list = json::array();
      auto cb = [](const char* lits, void* user) {
        auto* l = static_cast<json*>(user);
        l->push_back(json(split_literals(lits)));
        return 0;
      };
      if (abdk_enumerate(inst.inst, full_only ? 1 : 0, cb, &list, err.out()) != ABDK_OK) {
        return fail(err, "enumeration failed");
      }
      std::cout << json{{"explanations", list}}.dump() << "\n";
    } else {
      auto cb = [](const char* lits, void*) {
        std::cout << "{" << lits << "}\n";
        return 0;
      };
      if (abdk_enumerate(inst.inst, full_only ? 1 : 0, cb, nullptr, err.out()) != ABDK_OK) {
        return fail(err, "enumeration failed");
      }
    }
    return 0;
  }

  if (classify_cmd->parsed()) {
    StringOwner membership, hardness, note, err;
    int complete = 0;
    abdk_status st = abdk_classify(
        inst.inst, counting_variant.empty() ? nullptr : counting_variant.c_str(),
        membership.out(), hardness.out(), &complete, note.out(), err.out());
    if (st != ABDK_OK) return fail(err, "classification failed");
    if (as_json) {
      json j;
      j["membership"] = membership.str();
      j["hardness"] = hardness.s ? json(hardness.str()) : json(nullptr);
      j["complete"] = complete != 0;
      j["note"] = note.s ? json(note.str()) : json(nullptr);
      std::cout << j.dump() << "\n";
    } else {
      std::cout << verdict_text(membership.str(), hardness.s, complete != 0, note.s) << "\n";
    }
    return 0;
  }

  if (clone_cmd->parsed()) {
    StringOwner name, err;
    if (abdk_clone_name(inst.inst, name.out(), err.out()) != ABDK_OK) {
      return fail(err, "clone identification failed");
    }
    if (as_json) {
      std::cout << json{{"clone", name.str()}}.dump() << "\n";
    } else {
      std::cout << name.str() << "\n";
    }
    return 0;
  }

  if (check_cmd->parsed()) {
    if (max_vars > 0) {
      int num_vars = 0;
      abdk_instance_stats(inst.inst, &num_vars, nullptr, nullptr);
      if (num_vars > max_vars) {
        std::cerr << "abdkit: instance has " << num_vars << " variables, --max-vars is "
                  << max_vars << "\n";
        return kExitError;
      }
    }
    StringOwner report, err;
    abdk_status st = abdk_check(inst.inst, algorithm.c_str(), report.out(), err.out());
    if (st == ABDK_OK || st == ABDK_NO) {
      std::cout << report.str();
      return st == ABDK_OK ? 0 : kExitNo;
    }
    return fail(err, "check failed");
  }

  return kExitError;
}
