#include "abdkit/model.hpp"

#include <algorithm>
#include <sstream>

#include "abdkit/clones.hpp"
#include "abdkit/sat.hpp"

namespace abdkit {

Literal parse_literal(std::string_view text) {
  bool positive = true;
  if (!text.empty() && text[0] == '!') {
    positive = false;
    text.remove_prefix(1);
  }
  if (text.empty()) throw ParseError("empty literal");
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    bool ok = (i == 0) ? (std::isalpha(static_cast<unsigned char>(c)) || c == '_')
                       : (std::isalnum(static_cast<unsigned char>(c)) || c == '_');
    if (!ok) throw ParseError("bad literal '" + std::string(text) + "'");
  }
  return Literal{std::string(text), positive};
}

std::string to_string(ManifestationClass c) {
  switch (c) {
    case ManifestationClass::PQ: return "PQ";
    case ManifestationClass::NQ: return "NQ";
    case ManifestationClass::Q: return "Q";
    case ManifestationClass::PC: return "PC";
    case ManifestationClass::NC: return "NC";
    case ManifestationClass::C: return "C";
    case ManifestationClass::PT: return "PT";
    case ManifestationClass::NT: return "NT";
    case ManifestationClass::T: return "T";
    case ManifestationClass::F: return "F";
  }
  throw InternalError("unhandled manifestation class");
}

std::optional<ManifestationClass> parse_manifestation_class(std::string_view s) {
  using MC = ManifestationClass;
  for (MC c : {MC::PQ, MC::NQ, MC::Q, MC::PC, MC::NC, MC::C, MC::PT, MC::NT,
               MC::T, MC::F}) {
    if (to_string(c) == s) return c;
  }
  return std::nullopt;
}

Manifestation::Manifestation(ManifestationKind k, std::vector<Literal> lits,
                             std::optional<Formula> f)
    : kind_(k), lits_(std::move(lits)), formula_(std::move(f)) {
  if (kind_ != ManifestationKind::BFormula) {
    if (lits_.empty()) throw ValidationError("manifestation needs at least one literal");
    for (std::size_t i = 0; i < lits_.size(); ++i) {
      for (std::size_t j = i + 1; j < lits_.size(); ++j) {
        if (lits_[i] == lits_[j]) {
          throw ValidationError("duplicate literal '" + lits_[i].to_string() +
                                "' in manifestation");
        }
      }
    }
  }
}

Manifestation Manifestation::literal(Literal l) {
  return Manifestation(ManifestationKind::Literal, {std::move(l)}, std::nullopt);
}
Manifestation Manifestation::clause(std::vector<Literal> lits) {
  return Manifestation(ManifestationKind::Clause, std::move(lits), std::nullopt);
}
Manifestation Manifestation::term(std::vector<Literal> lits) {
  return Manifestation(ManifestationKind::Term, std::move(lits), std::nullopt);
}
Manifestation Manifestation::formula(Formula f) {
  return Manifestation(ManifestationKind::BFormula, {}, std::move(f));
}

ManifestationClass Manifestation::cls() const {
  using MC = ManifestationClass;
  if (kind_ == ManifestationKind::BFormula) return MC::F;
  bool all_pos = std::all_of(lits_.begin(), lits_.end(),
                             [](const Literal& l) { return l.positive; });
  bool all_neg = std::all_of(lits_.begin(), lits_.end(),
                             [](const Literal& l) { return !l.positive; });
  switch (kind_) {
    case ManifestationKind::Literal: return all_pos ? MC::PQ : MC::NQ;
    case ManifestationKind::Clause: return all_pos ? MC::PC : all_neg ? MC::NC : MC::C;
    case ManifestationKind::Term: return all_pos ? MC::PT : all_neg ? MC::NT : MC::T;
    default: break;
  }
  throw InternalError("unhandled manifestation kind");
}

const std::vector<Literal>& Manifestation::literals() const {
  if (kind_ == ManifestationKind::BFormula) {
    throw InternalError("literals() on a formula manifestation");
  }
  return lits_;
}

const Formula& Manifestation::bformula() const {
  if (kind_ != ManifestationKind::BFormula) {
    throw InternalError("bformula() on a literal manifestation");
  }
  return *formula_;
}

std::set<std::string> Manifestation::vars() const {
  if (kind_ == ManifestationKind::BFormula) return formula_->vars();
  std::set<std::string> out;
  for (const Literal& l : lits_) out.insert(l.var);
  return out;
}

std::string Manifestation::to_string() const {
  std::string s;
  switch (kind_) {
    case ManifestationKind::Literal: return "literal " + lits_[0].to_string();
    case ManifestationKind::Clause: s = "clause"; break;
    case ManifestationKind::Term: s = "term"; break;
    case ManifestationKind::BFormula: return "formula " + formula_->to_string();
  }
  for (const Literal& l : lits_) s += " " + l.to_string();
  return s;
}

bool Manifestation::evaluate(const Assignment& a) const {
  switch (kind_) {
    case ManifestationKind::BFormula:
      return formula_->evaluate(a);
    case ManifestationKind::Literal:
    case ManifestationKind::Clause: {
      for (const Literal& l : lits_) {
        if (a.at(l.var) == l.positive) return true;
      }
      return false;
    }
    case ManifestationKind::Term: {
      for (const Literal& l : lits_) {
        if (a.at(l.var) != l.positive) return false;
      }
      return true;
    }
  }
  throw InternalError("unhandled manifestation kind");
}

Instance::Instance(KnowledgeBase kb, std::set<std::string> hypotheses,
                   Manifestation manifestation, Mode mode)
    : kb_(std::move(kb)),
      hyps_(std::move(hypotheses)),
      manifest_(std::move(manifestation)),
      mode_(mode),
      kb_vars_(kb_.vars()) {
  for (const std::string& h : hyps_) {
    if (!kb_vars_.count(h)) {
      throw ValidationError("hypothesis '" + h + "' does not occur in the knowledge base");
    }
  }
  for (const std::string& v : manifest_.vars()) {
    if (hyps_.count(v)) {
      throw ValidationError("manifestation variable '" + v + "' is a hypothesis");
    }
    if (!kb_vars_.count(v)) {
      throw ValidationError("manifestation variable '" + v +
                            "' does not occur in the knowledge base");
    }
  }
  const auto check_declared = [&](const Formula& root, const char* where) {
    std::vector<const Formula*> stack{&root};
    while (!stack.empty()) {
      const Formula* f = stack.back();
      stack.pop_back();
      if (!f->is_apply()) continue;
      FunPtr declared = kb_.functions().find(f->fun()->name());
      if (!declared || !declared->same_table(*f->fun())) {
        throw ValidationError(std::string(where) + " uses undeclared connective '" +
                              f->fun()->name() + "'");
      }
      for (const Formula& kid : f->children()) stack.push_back(&kid);
    }
  };
  for (const Formula& f : kb_.formulas()) check_declared(f, "knowledge base");
  if (manifest_.kind() == ManifestationKind::BFormula) {
    check_declared(manifest_.bformula(), "manifestation");
  }
}

Explanation::Explanation(const std::vector<Literal>& lits) {
  for (const Literal& l : lits) {
    auto [it, inserted] = signs_.emplace(l.var, l.positive);
    if (!inserted && it->second != l.positive) {
      throw ValidationError("inconsistent explanation: both signs of '" + l.var + "'");
    }
  }
}

void Explanation::set(const std::string& var, bool positive) {
  auto [it, inserted] = signs_.emplace(var, positive);
  if (!inserted && it->second != positive) {
    throw ValidationError("inconsistent explanation: both signs of '" + var + "'");
  }
}

std::optional<bool> Explanation::sign(const std::string& var) const {
  auto it = signs_.find(var);
  if (it == signs_.end()) return std::nullopt;
  return it->second;
}

bool Explanation::all_positive() const {
  return std::all_of(signs_.begin(), signs_.end(),
                     [](const auto& kv) { return kv.second; });
}

std::vector<Literal> Explanation::literals() const {
  std::vector<Literal> out;
  out.reserve(signs_.size());
  for (const auto& [var, pos] : signs_) out.push_back(Literal{var, pos});
  return out;
}

std::string Explanation::to_string() const {
  std::string s = "{";
  bool first = true;
  for (const auto& [var, pos] : signs_) {
    if (!first) s += ' ';
    first = false;
    if (!pos) s += '!';
    s += var;
  }
  s += '}';
  return s;
}

bool verify_explanation(const Instance& p, const Explanation& e) {
  for (const auto& [var, pos] : e.signs()) {
    if (!p.hypotheses().count(var)) {
      throw ValidationError("explanation variable '" + var + "' is not a hypothesis");
    }
    if (p.mode() == Mode::Positive && !pos) {
      throw ValidationError("negative literal '!" + var + "' in a positive-mode explanation");
    }
  }
  std::vector<Literal> extra = e.literals();
  if (!satisfiable(p.kb(), extra).first) return false;
  return entails(p.kb(), extra, p.manifestation());
}

namespace {

std::string fresh_var(const std::set<std::string>& used, const std::string& stem) {
  for (int i = 0;; ++i) {
    std::string cand = "__" + stem + std::to_string(i);
    if (!used.count(cand)) return cand;
  }
}

bool is_const_fun(const FunPtr& f, bool value) {
  return f->arity() == 0 && f->value(0) == value;
}

Formula replace_constant(const Formula& f, bool value, const Formula& repl) {
  if (f.is_var()) return f;
  if (f.is_constant() && f.fun()->value(0) == value) return repl;
  std::vector<Formula> kids;
  kids.reserve(f.children().size());
  bool changed = false;
  for (const Formula& kid : f.children()) {
    Formula s = replace_constant(kid, value, repl);
    if (s != kid) changed = true;
    kids.push_back(std::move(s));
  }
  return changed ? Formula::apply(f.fun(), std::move(kids)) : f;
}

bool uses_constant(const Formula& f, bool value) {
  if (f.is_var()) return false;
  if (f.is_constant() && f.fun()->value(0) == value) return true;
  for (const Formula& kid : f.children()) {
    if (uses_constant(kid, value)) return true;
  }
  return false;
}

}  // namespace

Instance eliminate_true_constant(const Instance& p) {
  bool has_top = false;
  for (const FunPtr& f : p.kb().functions().functions()) {
    if (is_const_fun(f, true)) has_top = true;
  }
  if (!has_top) return p;

  std::set<std::string> used = p.kb_vars();
  for (const std::string& v : p.manifestation().vars()) used.insert(v);
  const std::string t = fresh_var(used, "t");
  const Formula tvar = Formula::var(t);

  FunctionSet funs;
  for (const FunPtr& f : p.kb().functions().functions()) {
    if (!is_const_fun(f, true)) funs.add(*f);
  }
  KnowledgeBase kb(std::move(funs));
  for (const Formula& f : p.kb().formulas()) {
    kb.add_formula(replace_constant(f, true, tvar));
  }
  kb.add_formula(tvar);

  Manifestation m = p.manifestation();
  if (m.kind() == ManifestationKind::BFormula) {
    m = Manifestation::formula(replace_constant(m.bformula(), true, tvar));
  }
  return Instance(std::move(kb), p.hypotheses(), std::move(m), p.mode());
}

Instance eliminate_false_constant(const Instance& p) {
  bool has_bot = false;
  for (const FunPtr& f : p.kb().functions().functions()) {
    if (is_const_fun(f, false)) has_bot = true;
  }
  if (!has_bot) return p;

  if (p.mode() != Mode::Symmetric) {
    throw ValidationError("false-constant elimination applies to symmetric instances only");
  }
  switch (p.manifestation().cls()) {
    case ManifestationClass::F:
      throw ValidationError("false-constant elimination is undefined for B-formula manifestations");
    default:
      break;
  }

  // Needs disjunction in [B \ {bot}].
  FunctionSet remaining;
  for (const FunPtr& f : p.kb().functions().functions()) {
    if (!is_const_fun(f, false)) remaining.add(*f);
  }
  if (remaining.empty()) {
    throw ValidationError("false-constant elimination: OR is not expressible in [B]");
  }
  CloneId clone = clone_id(remaining);
  if (!clone_leq(make_clone(CloneFamily::V2), clone)) {
    throw ValidationError("false-constant elimination: OR is not expressible in [B]");
  }
  std::optional<Formula> or_rep = find_representation(remaining, fn::or_(), 31);
  if (!or_rep) {
    throw InternalError("false-constant elimination: OR representation not found within budget");
  }

  std::set<std::string> used = p.kb_vars();
  const std::string fv = fresh_var(used, "f");
  const Formula fvar = Formula::var(fv);

  KnowledgeBase kb(std::move(remaining));
  for (const Formula& f : p.kb().formulas()) {
    Formula rewritten = replace_constant(f, false, fvar);
    std::map<std::string, Formula> subst{{"x1", rewritten}, {"x2", fvar}};
    kb.add_formula(or_rep->substitute_vars(subst));
  }
  std::set<std::string> hyps = p.hypotheses();
  hyps.insert(fv);
  return Instance(std::move(kb), std::move(hyps), p.manifestation(), p.mode());
}

namespace {

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.emplace_back(line.substr(start, i - start));
  }
  return out;
}

}  // namespace

Instance parse_instance(std::string_view text) {
  FunctionSet funs;
  std::vector<std::string> kb_lines;
  std::set<std::string> hyps;
  std::optional<Mode> mode;
  std::optional<Manifestation> manifest;

  // Two passes: declarations first so kb lines can reference any fun line.
  std::vector<std::pair<int, std::string>> lines;
  {
    std::size_t pos = 0;
    int lineno = 0;
    while (pos <= text.size()) {
      std::size_t nl = text.find('\n', pos);
      std::string_view line = text.substr(
          pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
      ++lineno;
      if (auto hash = line.find('#'); hash != std::string_view::npos) {
        line = line.substr(0, hash);
      }
      if (!split_ws(line).empty()) lines.emplace_back(lineno, std::string(line));
      if (nl == std::string_view::npos) break;
      pos = nl + 1;
    }
  }

  const auto fail = [](int lineno, const std::string& msg) -> void {
    throw ParseError("line " + std::to_string(lineno) + ": " + msg);
  };

  for (const auto& [lineno, line] : lines) {
    std::vector<std::string> tok = split_ws(line);
    try {
      if (tok[0] == "fun") {
        if (tok.size() != 4) fail(lineno, "expected: fun <name> <arity> <bits>");
        int arity = 0;
        try {
          arity = std::stoi(tok[2]);
        } catch (const std::exception&) {
          fail(lineno, "bad arity '" + tok[2] + "'");
        }
        funs.add(BoolFun::from_bits(tok[1], arity, tok[3]));
      } else if (tok[0] == "kb") {
        kb_lines.push_back(line.substr(line.find("kb") + 2));
      } else if (tok[0] == "hyp") {
        if (tok.size() < 2) fail(lineno, "expected: hyp <var>...");
        for (std::size_t i = 1; i < tok.size(); ++i) hyps.insert(tok[i]);
      } else if (tok[0] == "mode") {
        if (tok.size() != 2 || (tok[1] != "symmetric" && tok[1] != "positive")) {
          fail(lineno, "expected: mode symmetric|positive");
        }
        mode = tok[1] == "symmetric" ? Mode::Symmetric : Mode::Positive;
      } else if (tok[0] == "manifest") {
        if (manifest) fail(lineno, "duplicate manifest directive");
        if (tok.size() < 3) fail(lineno, "expected: manifest <kind> ...");
        if (tok[1] == "literal") {
          if (tok.size() != 3) fail(lineno, "manifest literal takes one literal");
          manifest = Manifestation::literal(parse_literal(tok[2]));
        } else if (tok[1] == "clause" || tok[1] == "term") {
          std::vector<Literal> lits;
          for (std::size_t i = 2; i < tok.size(); ++i) lits.push_back(parse_literal(tok[i]));
          manifest = tok[1] == "clause" ? Manifestation::clause(std::move(lits))
                                        : Manifestation::term(std::move(lits));
        } else if (tok[1] == "formula") {
          std::string rest = line.substr(line.find("formula") + 7);
          manifest = Manifestation::formula(parse_formula(rest, funs));
        } else {
          fail(lineno, "unknown manifestation kind '" + tok[1] + "'");
        }
      } else {
        fail(lineno, "unknown directive '" + tok[0] + "'");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      fail(lineno, e.what());
    }
  }

  if (!manifest) throw ParseError("missing manifest directive");

  KnowledgeBase kb(std::move(funs));
  for (const std::string& src : kb_lines) {
    kb.add_formula(parse_formula(src, kb.functions()));
  }
  return Instance(std::move(kb), std::move(hyps), std::move(*manifest),
                  mode.value_or(Mode::Symmetric));
}

std::string serialize_instance(const Instance& p) {
  std::ostringstream out;
  for (const FunPtr& f : p.kb().functions().functions()) {
    out << "fun " << f->name() << ' ' << f->arity() << ' ' << f->bits() << '\n';
  }
  for (const Formula& f : p.kb().formulas()) {
    out << "kb " << f.to_string() << '\n';
  }
  if (!p.hypotheses().empty()) {
    out << "hyp";
    for (const std::string& h : p.hypotheses()) out << ' ' << h;
    out << '\n';
  }
  out << "mode " << (p.mode() == Mode::Symmetric ? "symmetric" : "positive") << '\n';
  out << "manifest " << p.manifestation().to_string() << '\n';
  return out.str();
}

}  // namespace abdkit
