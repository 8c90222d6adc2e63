#pragma once

#include <string>

#include "nogo/io_json.hpp"

namespace nogo {

enum class CertKind {
  DerivedIdeal,
  BracketDecomposition,
  GramPositivity,
  TrivialityConclusion,
  FeasibilityVerdict,
  AdInvariance,
  Minimality,
};

inline const char* kind_name(CertKind k) {
  switch (k) {
    case CertKind::DerivedIdeal: return "derived_ideal";
    case CertKind::BracketDecomposition: return "bracket_decomposition";
    case CertKind::GramPositivity: return "gram_positivity";
    case CertKind::TrivialityConclusion: return "triviality_conclusion";
    case CertKind::FeasibilityVerdict: return "feasibility_verdict";
    case CertKind::AdInvariance: return "ad_invariance";
    case CertKind::Minimality: return "minimality";
  }
  return "unknown";
}

inline CertKind kind_from_name(const std::string& s) {
  for (CertKind k : {CertKind::DerivedIdeal, CertKind::BracketDecomposition,
                     CertKind::GramPositivity, CertKind::TrivialityConclusion,
                     CertKind::FeasibilityVerdict, CertKind::AdInvariance, CertKind::Minimality})
    if (s == kind_name(k)) return k;
  throw InputError("unknown certificate kind '" + s + "'");
}

/// Serializable exact witness. The payload alone must support re-checking;
/// `checked` is set only by the independent verifier, never by producers.
struct Certificate {
  static constexpr const char* schema = "nogo.cert/1";

  CertKind kind;
  Json payload;
  bool checked = false;

  Json to_json() const {
    return Json{{"schema", schema},
                {"kind", kind_name(kind)},
                {"checked", checked},
                {"payload", payload}};
  }

  static Certificate from_json(const Json& j) {
    if (!j.is_object() || !j.contains("schema")) throw InputError("not a certificate file");
    if (j.at("schema").get<std::string>() != schema)
      throw InputError("unsupported certificate schema '" +
                       j.at("schema").get<std::string>() + "'");
    Certificate c;
    c.kind = kind_from_name(j.at("kind").get<std::string>());
    c.payload = j.at("payload");
    c.checked = false;
    return c;
  }
};

}  // namespace nogo
