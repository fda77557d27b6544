#ifndef LIEGEO_DOCUMENT_HPP
#define LIEGEO_DOCUMENT_HPP

#include <optional>
#include <string>
#include <vector>

#include "liegeo/contact.hpp"
#include "liegeo/frame.hpp"

namespace liegeo {

// JSON manifold document. Frame indices are 1-based in documents; rationals
// are strings ("3", "-4/7") or exact JSON integers. Unknown fields are
// rejected. Brackets appear once per unordered pair with i < j; the
// antisymmetric completion is implicit.

struct BracketTerm {
  int k = 0;  // 1-based
  Rational coef;
  bool operator==(const BracketTerm&) const = default;
};

struct BracketEntry {
  int i = 0, j = 0;  // 1-based, i < j
  std::vector<BracketTerm> terms;
  bool operator==(const BracketEntry&) const = default;
};

struct ContactBlock {
  Matrix phi;  // column action, 1-based indices in the document
  Vector xi;
  bool operator==(const ContactBlock&) const = default;
};

struct ManifoldDocument {
  std::string name;
  int dim = 0;
  std::vector<BracketEntry> brackets;
  std::optional<Matrix> metric;  // nullopt encodes "identity"
  std::optional<ContactBlock> contact;
  std::optional<std::string> catalog_tag;
  bool operator==(const ManifoldDocument&) const = default;
};

// Throws ParseError (with JSON path context), IndexOutOfRange, or
// AsymmetricMetricInput.
ManifoldDocument parse_manifold(const std::string& text);

// Canonical emission: fixed field order, rationals as canonical strings.
// parse_manifold(emit_manifold(doc)) == doc for every valid document.
std::string emit_manifold(const ManifoldDocument& doc);

LieFrameManifold to_manifold(const ManifoldDocument& doc);
std::optional<AlmostContactStructure> to_contact(const ManifoldDocument& doc,
                                                 const LieFrameManifold& m);

}  // namespace liegeo

#endif
