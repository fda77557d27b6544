#include "liegeo/document.hpp"

#include <set>

#include <json.hpp>

#include "liegeo/errors.hpp"

namespace liegeo {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ParseError(path + ": " + what);
}

void reject_unknown_fields(const json& obj, const std::set<std::string>& allowed,
                           const std::string& path) {
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    if (!allowed.contains(key)) fail(path, "unknown field \"" + key + "\"");
  }
}

int read_int(const json& value, const std::string& path) {
  if (!value.is_number_integer() && !value.is_number_unsigned())
    fail(path, "expected an integer");
  return value.get<int>();
}

Rational read_rational(const json& value, const std::string& path) {
  if (value.is_number_integer()) return Rational(value.get<long long>());
  if (value.is_number_unsigned()) return Rational(value.get<unsigned long long>());
  if (value.is_string()) {
    if (auto q = parse_rational(value.get<std::string>())) return *q;
    fail(path, "malformed rational \"" + value.get<std::string>() + "\"");
  }
  fail(path, "expected a rational as string or integer");
}

int read_index(const json& value, int dim, const std::string& path) {
  const int idx = read_int(value, path);
  if (idx < 1 || idx > dim)
    throw IndexOutOfRange(path + ": index " + std::to_string(idx) + " outside 1.." +
                          std::to_string(dim));
  return idx;
}

Matrix read_matrix(const json& value, int dim, const std::string& path) {
  if (!value.is_array() || value.size() != static_cast<size_t>(dim))
    fail(path, "expected " + std::to_string(dim) + " rows");
  Matrix out(dim, dim);
  for (int i = 0; i < dim; ++i) {
    const json& row = value[static_cast<size_t>(i)];
    const std::string row_path = path + "[" + std::to_string(i + 1) + "]";
    if (!row.is_array() || row.size() != static_cast<size_t>(dim))
      fail(row_path, "expected " + std::to_string(dim) + " entries");
    for (int j = 0; j < dim; ++j)
      out(i, j) = read_rational(row[static_cast<size_t>(j)],
                                row_path + "[" + std::to_string(j + 1) + "]");
  }
  return out;
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

ManifoldDocument parse_manifold(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!root.is_object()) fail("$", "expected a JSON object");
  reject_unknown_fields(root, {"name", "dim", "brackets", "metric", "contact", "catalog_tag"},
                        "$");
  for (const char* required : {"name", "dim", "brackets", "metric"})
    if (!root.contains(required)) fail("$", std::string("missing field \"") + required + "\"");

  ManifoldDocument doc;
  if (!root["name"].is_string()) fail("$.name", "expected a string");
  doc.name = root["name"].get<std::string>();

  doc.dim = read_int(root["dim"], "$.dim");
  if (doc.dim < 1 || doc.dim > 64) fail("$.dim", "dimension must be in 1..64");

  const json& brackets = root["brackets"];
  if (!brackets.is_array()) fail("$.brackets", "expected an array");
  std::set<std::pair<int, int>> seen;
  for (size_t e = 0; e < brackets.size(); ++e) {
    const std::string epath = "$.brackets[" + std::to_string(e + 1) + "]";
    const json& entry = brackets[e];
    if (!entry.is_object()) fail(epath, "expected an object");
    reject_unknown_fields(entry, {"i", "j", "terms"}, epath);
    for (const char* required : {"i", "j", "terms"})
      if (!entry.contains(required)) fail(epath, std::string("missing field \"") + required + "\"");
    BracketEntry be;
    be.i = read_index(entry["i"], doc.dim, epath + ".i");
    be.j = read_index(entry["j"], doc.dim, epath + ".j");
    if (be.i >= be.j) fail(epath, "brackets are listed once per pair with i < j");
    if (!seen.insert({be.i, be.j}).second) fail(epath, "duplicate bracket pair");
    const json& terms = entry["terms"];
    if (!terms.is_array()) fail(epath + ".terms", "expected an array");
    for (size_t t = 0; t < terms.size(); ++t) {
      const std::string tpath = epath + ".terms[" + std::to_string(t + 1) + "]";
      const json& term = terms[t];
      if (!term.is_object()) fail(tpath, "expected an object");
      reject_unknown_fields(term, {"k", "coef"}, tpath);
      for (const char* required : {"k", "coef"})
        if (!term.contains(required)) fail(tpath, std::string("missing field \"") + required + "\"");
      BracketTerm bt;
      bt.k = read_index(term["k"], doc.dim, tpath + ".k");
      bt.coef = read_rational(term["coef"], tpath + ".coef");
      be.terms.push_back(std::move(bt));
    }
    doc.brackets.push_back(std::move(be));
  }

  const json& metric = root["metric"];
  if (metric.is_string()) {
    if (metric.get<std::string>() != "identity")
      fail("$.metric", "expected \"identity\" or a matrix");
    doc.metric = std::nullopt;
  } else {
    Matrix g = read_matrix(metric, doc.dim, "$.metric");
    if (!g.is_symmetric())
      throw AsymmetricMetricInput("$.metric: metric matrix is not symmetric");
    doc.metric = std::move(g);
  }

  if (root.contains("contact")) {
    const json& contact = root["contact"];
    if (!contact.is_object()) fail("$.contact", "expected an object");
    reject_unknown_fields(contact, {"phi", "xi"}, "$.contact");
    for (const char* required : {"phi", "xi"})
      if (!contact.contains(required))
        fail("$.contact", std::string("missing field \"") + required + "\"");
    ContactBlock cb;
    cb.phi = read_matrix(contact["phi"], doc.dim, "$.contact.phi");
    const json& xi = contact["xi"];
    if (!xi.is_array() || xi.size() != static_cast<size_t>(doc.dim))
      fail("$.contact.xi", "expected " + std::to_string(doc.dim) + " entries");
    cb.xi = Vector(doc.dim);
    for (int i = 0; i < doc.dim; ++i)
      cb.xi[i] = read_rational(xi[static_cast<size_t>(i)],
                               "$.contact.xi[" + std::to_string(i + 1) + "]");
    doc.contact = std::move(cb);
  }

  if (root.contains("catalog_tag")) {
    if (!root["catalog_tag"].is_string()) fail("$.catalog_tag", "expected a string");
    doc.catalog_tag = root["catalog_tag"].get<std::string>();
  }
  return doc;
}

std::string emit_manifold(const ManifoldDocument& doc) {
  json root;
  root["name"] = doc.name;
  root["dim"] = doc.dim;
  json brackets = json::array();
  for (const auto& be : doc.brackets) {
    json entry;
    entry["i"] = be.i;
    entry["j"] = be.j;
    json terms = json::array();
    for (const auto& bt : be.terms) {
      json term;
      term["k"] = bt.k;
      term["coef"] = to_string(bt.coef);
      terms.push_back(std::move(term));
    }
    entry["terms"] = std::move(terms);
    brackets.push_back(std::move(entry));
  }
  root["brackets"] = std::move(brackets);
  if (doc.metric) {
    root["metric"] = matrix_to_json(*doc.metric);
  } else {
    root["metric"] = "identity";
  }
  if (doc.contact) {
    json contact;
    contact["phi"] = matrix_to_json(doc.contact->phi);
    json xi = json::array();
    for (int i = 0; i < doc.contact->xi.dim(); ++i) xi.push_back(to_string(doc.contact->xi[i]));
    contact["xi"] = std::move(xi);
    root["contact"] = std::move(contact);
  }
  if (doc.catalog_tag) root["catalog_tag"] = *doc.catalog_tag;
  return root.dump(2) + "\n";
}

LieFrameManifold to_manifold(const ManifoldDocument& doc) {
  Tensor3 c(doc.dim);
  for (const auto& be : doc.brackets)
    for (const auto& bt : be.terms) {
      c(be.i - 1, be.j - 1, bt.k - 1) = bt.coef;
      c(be.j - 1, be.i - 1, bt.k - 1) = -bt.coef;  // implicit antisymmetric completion
    }
  Matrix g = doc.metric ? *doc.metric : Matrix::identity(doc.dim);
  return LieFrameManifold(doc.dim, std::move(c), std::move(g));
}

std::optional<AlmostContactStructure> to_contact(const ManifoldDocument& doc,
                                                 const LieFrameManifold& m) {
  if (!doc.contact) return std::nullopt;
  return make_almost_contact(m, doc.contact->phi, doc.contact->xi);
}

}  // namespace liegeo
