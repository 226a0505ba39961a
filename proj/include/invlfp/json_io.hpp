#pragma once

#include <string>

#include "invlfp/certificate.hpp"
#include "invlfp/model.hpp"

namespace invlfp {

struct ParsedDocument {
  Instance instance;
  TargetSet target;
  Scenario scenario = Scenario::Optimistic;
};

/// Parses the JSON instance document. Rationals are strings "p" or "p/q",
/// index sets 1-based sorted arrays. A partial-fix target may carry a
/// "positions" array naming the fixed coordinates; the instance is permuted
/// so they form a prefix. The result is validated.
ParsedDocument parse_instance(const std::string& text);

/// Inverse of parse_instance (emits prefix-form partial targets).
std::string serialize_instance(const ParsedDocument& doc);

Certificate parse_certificate(const std::string& text);
std::string serialize_certificate(const Certificate& cert);

}  // namespace invlfp
