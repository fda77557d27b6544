#ifndef LIEGEO_CATALOG_HPP
#define LIEGEO_CATALOG_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "liegeo/document.hpp"

namespace liegeo {

struct CatalogEntry {
  std::string name;
  std::string description;
  ManifoldDocument document;
};

// Built-in models:
//   kenmotsu5   dim 5, [e_i, e_5] = e_i (i = 1..4), identity metric, standard
//               contact structure; Kenmotsu, Einstein with S = -4g.
//   hyperbolic3 dim 3 analogue, S = -2g.
//   flat3       abelian dim 3 with the standard contact block; almost contact
//               but not Kenmotsu.
const std::vector<CatalogEntry>& builtin_catalog();

// Accepts the entry name with or without a ".json" suffix.
std::optional<ManifoldDocument> find_builtin(std::string_view name);

}  // namespace liegeo

#endif
