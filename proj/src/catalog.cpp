#include "liegeo/catalog.hpp"

namespace liegeo {

namespace {

// [e_i, e_last] = e_i for i < dim, identity metric: the hyperbolic frame
// model of constant curvature -1 that carries the standard Kenmotsu
// structure in every odd dimension.
ManifoldDocument hyperbolic_document(const std::string& name, int dim, bool with_contact) {
  ManifoldDocument doc;
  doc.name = name;
  doc.dim = dim;
  doc.catalog_tag = name;
  for (int i = 1; i < dim; ++i)
    doc.brackets.push_back(BracketEntry{i, dim, {BracketTerm{i, Rational(1)}}});
  doc.metric = std::nullopt;  // identity
  if (with_contact) {
    ContactBlock cb;
    cb.phi = Matrix(dim, dim);
    for (int k = 0; k + 1 < dim - 1; k += 2) {
      cb.phi(k + 1, k) = 1;   // phi(e_{k+1}) = e_{k+2}
      cb.phi(k, k + 1) = -1;  // phi(e_{k+2}) = -e_{k+1}
    }
    cb.xi = Vector::basis(dim, dim - 1);
    doc.contact = std::move(cb);
  }
  return doc;
}

ManifoldDocument flat_document(const std::string& name, int dim) {
  ManifoldDocument doc = hyperbolic_document(name, dim, true);
  doc.brackets.clear();  // abelian: every bracket vanishes
  return doc;
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> entries;
  entries.push_back({"kenmotsu5",
                     "5-dimensional Kenmotsu model ([e_i,e_5] = e_i), Einstein with S = -4g",
                     hyperbolic_document("kenmotsu5", 5, true)});
  entries.push_back({"hyperbolic3",
                     "3-dimensional Kenmotsu model ([e_i,e_3] = e_i), Einstein with S = -2g",
                     hyperbolic_document("hyperbolic3", 3, true)});
  entries.push_back({"flat3",
                     "abelian 3-dimensional model with the standard contact block; not Kenmotsu",
                     flat_document("flat3", 3)});
  return entries;
}

}  // namespace

const std::vector<CatalogEntry>& builtin_catalog() {
  static const std::vector<CatalogEntry> catalog = build_catalog();
  return catalog;
}

std::optional<ManifoldDocument> find_builtin(std::string_view name) {
  std::string_view stem = name;
  if (stem.ends_with(".json")) stem.remove_suffix(5);
  for (const auto& entry : builtin_catalog())
    if (entry.name == stem) return entry.document;
  return std::nullopt;
}

}  // namespace liegeo
