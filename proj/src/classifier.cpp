#include "abdkit/classifier.hpp"

#include <nlohmann/json.hpp>

namespace abdkit {

std::string to_string(ComplexityClass c) {
  switch (c) {
    case ComplexityClass::None: return "none";
    case ComplexityClass::LogSpace: return "L";
    case ComplexityClass::ParityL: return "ParityL";
    case ComplexityClass::P: return "P";
    case ComplexityClass::NP: return "NP";
    case ComplexityClass::CoNP: return "coNP";
    case ComplexityClass::Sigma2P: return "Sigma2P";
    case ComplexityClass::FP: return "FP";
    case ComplexityClass::SharpP: return "#P";
    case ComplexityClass::SharpCoNP: return "#coNP";
  }
  throw InternalError("unhandled complexity class");
}

int hardness_rank(ComplexityClass c) {
  switch (c) {
    case ComplexityClass::LogSpace: return 0;
    case ComplexityClass::ParityL: return 1;
    case ComplexityClass::P: return 2;
    case ComplexityClass::NP:
    case ComplexityClass::CoNP: return 3;  // one rank for the monotonicity test
    case ComplexityClass::Sigma2P: return 4;
    case ComplexityClass::FP: return 0;
    case ComplexityClass::SharpP: return 1;
    case ComplexityClass::SharpCoNP: return 2;
    case ComplexityClass::None: return -1;
  }
  throw InternalError("unhandled complexity class");
}

std::string Verdict::to_json() const {
  nlohmann::json j;
  j["membership"] = to_string(membership);
  j["hardness"] = hardness == ComplexityClass::None ? nlohmann::json(nullptr)
                                                    : nlohmann::json(to_string(hardness));
  j["complete"] = complete;
  j["note"] = note ? nlohmann::json(*note) : nlohmann::json(nullptr);
  return j.dump();
}

std::string Verdict::to_text() const {
  std::string s;
  if (complete) {
    s = to_string(membership) + "-complete";
  } else if (hardness != ComplexityClass::None) {
    s = "in " + to_string(membership) + ", " + to_string(hardness) + "-hard";
  } else {
    s = "in " + to_string(membership);
  }
  if (note) s += " (" + *note + ")";
  return s;
}

namespace {

using CC = ComplexityClass;
using MC = ManifestationClass;

Verdict complete(CC c) { return {c, c, true, std::nullopt}; }
Verdict membership(CC c) { return {c, CC::None, false, std::nullopt}; }
Verdict member_hard(CC m, CC h) { return {m, h, false, std::nullopt}; }

Verdict trivial_no(CC printed) {
  return {printed, CC::None, false, std::string("trivially no explanation")};
}

bool leq(const CloneId& c, CloneFamily fam) { return clone_leq(c, make_clone(fam)); }
bool geq(CloneFamily fam, const CloneId& c) { return clone_leq(make_clone(fam), c); }

enum class ClassGroup { NegQuery, Query, TermLike, BFormula };

ClassGroup group_of(MC cls) {
  switch (cls) {
    case MC::NQ:
    case MC::NC:
    case MC::NT:
      return ClassGroup::NegQuery;
    case MC::PQ:
    case MC::PC:
    case MC::Q:
    case MC::C:
      return ClassGroup::Query;
    case MC::PT:
    case MC::T:
      return ClassGroup::TermLike;
    case MC::F:
      return ClassGroup::BFormula;
  }
  throw InternalError("unhandled manifestation class");
}

Verdict classify_symmetric(const CloneId& c, MC cls) {
  const ClassGroup g = group_of(cls);
  switch (g) {
    case ClassGroup::NegQuery: {
      if (leq(c, CloneFamily::M)) return trivial_no(CC::LogSpace);
      if (leq(c, CloneFamily::N)) return membership(CC::LogSpace);
      if (leq(c, CloneFamily::L)) return member_hard(CC::P, CC::ParityL);
      return complete(CC::Sigma2P);
    }
    case ClassGroup::Query: {
      if (leq(c, CloneFamily::E) || leq(c, CloneFamily::N) || leq(c, CloneFamily::V)) {
        return membership(CC::LogSpace);
      }
      if (leq(c, CloneFamily::L)) return member_hard(CC::P, CC::ParityL);
      if (leq(c, CloneFamily::M)) return complete(CC::NP);
      return complete(CC::Sigma2P);
    }
    case ClassGroup::TermLike: {
      if (leq(c, CloneFamily::E) || leq(c, CloneFamily::N)) return membership(CC::LogSpace);
      if (leq(c, CloneFamily::L)) return member_hard(CC::P, CC::ParityL);
      if (leq(c, CloneFamily::M)) return complete(CC::NP);  // includes the V clones
      return complete(CC::Sigma2P);
    }
    case ClassGroup::BFormula: {
      if (leq(c, CloneFamily::E) || leq(c, CloneFamily::N) || leq(c, CloneFamily::V)) {
        return membership(CC::LogSpace);
      }
      if (leq(c, CloneFamily::L)) return member_hard(CC::P, CC::ParityL);
      return complete(CC::Sigma2P);  // monotone region jumps to Sigma2P
    }
  }
  throw InternalError("unhandled class group");
}

Verdict classify_positive(const CloneId& c, MC cls) {
  const ClassGroup g = group_of(cls);
  const bool in_r1 = leq(c, CloneFamily::R1);
  const bool in_m = leq(c, CloneFamily::M);
  switch (g) {
    case ClassGroup::NegQuery: {
      if (in_m || in_r1) return trivial_no(CC::LogSpace);
      if (leq(c, CloneFamily::N)) return membership(CC::LogSpace);
      if (leq(c, CloneFamily::L)) {
        return cls == MC::NT ? complete(CC::NP) : membership(CC::P);
      }
      return complete(CC::Sigma2P);
    }
    case ClassGroup::Query: {
      if (leq(c, CloneFamily::E) || leq(c, CloneFamily::N) || leq(c, CloneFamily::V)) {
        return membership(CC::LogSpace);
      }
      if (leq(c, CloneFamily::L)) return member_hard(CC::P, CC::ParityL);
      if (in_m) return membership(CC::LogSpace);
      if (in_r1) return complete(CC::CoNP);
      return complete(CC::Sigma2P);
    }
    case ClassGroup::TermLike: {
      if (leq(c, CloneFamily::E) || leq(c, CloneFamily::N) || leq(c, CloneFamily::V)) {
        return membership(CC::LogSpace);
      }
      if (leq(c, CloneFamily::L)) {
        return in_r1 ? member_hard(CC::P, CC::ParityL) : complete(CC::NP);
      }
      if (in_m) return membership(CC::LogSpace);
      if (in_r1) return complete(CC::CoNP);
      return complete(CC::Sigma2P);
    }
    case ClassGroup::BFormula: {
      if (leq(c, CloneFamily::E) || leq(c, CloneFamily::N) || leq(c, CloneFamily::V)) {
        return membership(CC::LogSpace);
      }
      if (leq(c, CloneFamily::L)) {
        if (in_r1) return member_hard(CC::P, CC::ParityL);
        return {CC::NP, CC::ParityL, false, std::string("open")};
      }
      if (in_m) return complete(CC::CoNP);
      if (in_r1) return complete(CC::CoNP);
      return complete(CC::Sigma2P);
    }
  }
  throw InternalError("unhandled class group");
}

}  // namespace

Verdict classify_decision(const CloneId& c, Mode mode, ManifestationClass cls) {
  return mode == Mode::Symmetric ? classify_symmetric(c, cls) : classify_positive(c, cls);
}

Verdict classify_counting(const CloneId& c, Mode mode, CountKind variant) {
  if (mode == Mode::Symmetric && variant != CountKind::Full) {
    throw ValidationError("symmetric counting counts full explanations");
  }
  if (mode == Mode::Positive && variant == CountKind::Full) {
    throw ValidationError("positive counting counts all or subset-minimal explanations");
  }
  const bool hard_region = geq(CloneFamily::S02, c) || geq(CloneFamily::S12, c) ||
                           geq(CloneFamily::D1, c);
  if (mode == Mode::Symmetric) {
    if (hard_region) return complete(CC::SharpCoNP);
    const bool mid = (geq(CloneFamily::V2, c) || geq(CloneFamily::S10, c) ||
                      geq(CloneFamily::D2, c)) &&
                     leq(c, CloneFamily::M);
    if (mid) return complete(CC::SharpP);
    return membership(CC::FP);
  }
  if (hard_region) return complete(CC::SharpCoNP);
  if (geq(CloneFamily::L2, c) && leq(c, CloneFamily::L)) {
    return {CC::SharpP, CC::None, false, std::string("completeness open")};
  }
  return membership(CC::FP);
}

}  // namespace abdkit
