#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "liegeo/catalog.hpp"
#include "liegeo/document.hpp"
#include "support/models.hpp"

using namespace liegeo;

TEST_CASE("the shipped kenmotsu5 document parses and verifies") {
  const auto doc = find_builtin("kenmotsu5.json");
  REQUIRE(doc.has_value());
  const LieFrameManifold m = to_manifold(*doc);
  CHECK(validate_frame(m).all_passed());
  const auto acs = to_contact(*doc, m);
  REQUIRE(acs.has_value());
  CHECK(verify_almost_contact(m, *acs).all_passed());
  CHECK(verify_kenmotsu(m, levi_civita_connection(m), *acs).all_passed());
}

TEST_CASE("round-trip: parse(emit(doc)) == doc for all catalog entries") {
  for (const auto& entry : builtin_catalog()) {
    INFO(entry.name);
    const std::string text = emit_manifold(entry.document);
    CHECK(parse_manifold(text) == entry.document);
    // emission is canonical, so a second pass is byte-identical
    CHECK(emit_manifold(parse_manifold(text)) == text);
  }
}

TEST_CASE("minimal flat document with identity metric") {
  const ManifoldDocument doc = parse_manifold(R"({
    "name": "flat2", "dim": 2, "brackets": [], "metric": "identity"
  })");
  CHECK(doc.dim == 2);
  CHECK_FALSE(doc.metric.has_value());
  CHECK_FALSE(doc.contact.has_value());
  const LieFrameManifold m = to_manifold(doc);
  CHECK(validate_frame(m).all_passed());
  CHECK(levi_civita_connection(m).is_zero());
}

TEST_CASE("rationals accepted as strings or exact integers, not floats") {
  const ManifoldDocument doc = parse_manifold(R"({
    "name": "t", "dim": 2,
    "brackets": [{"i": 1, "j": 2, "terms": [{"k": 1, "coef": "-4/7"}, {"k": 2, "coef": 3}]}],
    "metric": [["1", 0], [0, "2"]]
  })");
  CHECK(doc.brackets[0].terms[0].coef == Rational(-4, 7));
  CHECK(doc.brackets[0].terms[1].coef == Rational(3));
  CHECK_THROWS_AS(parse_manifold(R"({"name":"t","dim":1,"brackets":[],"metric":[[1.5]]})"),
                  ParseError);
}

TEST_CASE("unknown fields are rejected everywhere") {
  CHECK_THROWS_AS(parse_manifold(R"({
    "name": "t", "dim": 2, "brackets": [], "metric": "identity", "extra": 1
  })"),
                  ParseError);
  CHECK_THROWS_AS(parse_manifold(R"({
    "name": "t", "dim": 2,
    "brackets": [{"i": 1, "j": 2, "note": "x", "terms": []}],
    "metric": "identity"
  })"),
                  ParseError);
  CHECK_THROWS_AS(parse_manifold(R"({
    "name": "t", "dim": 3, "brackets": [], "metric": "identity",
    "contact": {"phi": [["0","0","0"],["0","0","0"],["0","0","0"]],
                "xi": ["0","0","1"], "eta": ["0","0","1"]}
  })"),
                  ParseError);
}

TEST_CASE("bracket index out of range") {
  CHECK_THROWS_AS(parse_manifold(R"({
    "name": "t", "dim": 5,
    "brackets": [{"i": 1, "j": 7, "terms": [{"k": 1, "coef": "1"}]}],
    "metric": "identity"
  })"),
                  IndexOutOfRange);
  CHECK_THROWS_AS(parse_manifold(R"({
    "name": "t", "dim": 5,
    "brackets": [{"i": 1, "j": 2, "terms": [{"k": 0, "coef": "1"}]}],
    "metric": "identity"
  })"),
                  IndexOutOfRange);
}

TEST_CASE("bracket pairs must satisfy i < j and appear once") {
  CHECK_THROWS_AS(parse_manifold(R"({
    "name": "t", "dim": 3,
    "brackets": [{"i": 2, "j": 1, "terms": []}],
    "metric": "identity"
  })"),
                  ParseError);
  CHECK_THROWS_AS(parse_manifold(R"({
    "name": "t", "dim": 3,
    "brackets": [{"i": 1, "j": 2, "terms": []}, {"i": 1, "j": 2, "terms": []}],
    "metric": "identity"
  })"),
                  ParseError);
}

TEST_CASE("asymmetric metric input is a structural error") {
  CHECK_THROWS_AS(parse_manifold(R"({
    "name": "t", "dim": 2, "brackets": [],
    "metric": [["1", "1"], ["0", "1"]]
  })"),
                  AsymmetricMetricInput);
}

TEST_CASE("malformed JSON and missing fields give ParseError") {
  CHECK_THROWS_AS(parse_manifold("not json"), ParseError);
  CHECK_THROWS_AS(parse_manifold(R"({"name": "t"})"), ParseError);
  CHECK_THROWS_AS(parse_manifold(R"({"name": "t", "dim": -3, "brackets": [], "metric": "identity"})"),
                  ParseError);
}

TEST_CASE("antisymmetric completion of brackets is implicit") {
  const ManifoldDocument doc = parse_manifold(R"({
    "name": "h3", "dim": 3,
    "brackets": [{"i": 1, "j": 3, "terms": [{"k": 1, "coef": "1"}]},
                  {"i": 2, "j": 3, "terms": [{"k": 2, "coef": "1"}]}],
    "metric": "identity"
  })");
  const LieFrameManifold m = to_manifold(doc);
  CHECK(m.brackets(0, 2, 0) == 1);
  CHECK(m.brackets(2, 0, 0) == -1);
  CHECK(validate_frame(m).all_passed());
}

TEST_CASE("round-trip holds on randomized documents") {
  std::mt19937_64 rng(0xd0c5);
  auto rand_rational = [&]() {
    return Rational(static_cast<int>(rng() % 9) - 4, 1 + static_cast<int>(rng() % 3));
  };
  for (int trial = 0; trial < 25; ++trial) {
    ManifoldDocument doc;
    doc.name = "fuzz" + std::to_string(trial);
    doc.dim = 2 + static_cast<int>(rng() % 4);
    for (int i = 1; i < doc.dim; ++i)
      for (int j = i + 1; j <= doc.dim; ++j) {
        if (rng() % 2) continue;
        BracketEntry be{i, j, {}};
        const int terms = static_cast<int>(rng() % 3);
        for (int t = 0; t < terms; ++t)
          be.terms.push_back({1 + static_cast<int>(rng() % doc.dim), rand_rational()});
        doc.brackets.push_back(std::move(be));
      }
    if (rng() % 2) {
      Matrix g(doc.dim, doc.dim);
      for (int i = 0; i < doc.dim; ++i) {
        g(i, i) = Rational(1 + static_cast<int>(rng() % 5));
        for (int j = i + 1; j < doc.dim; ++j) g(i, j) = g(j, i) = rand_rational();
      }
      doc.metric = std::move(g);
    }
    if (rng() % 2) {
      ContactBlock cb;
      cb.phi = Matrix(doc.dim, doc.dim);
      for (int i = 0; i < doc.dim; ++i)
        for (int j = 0; j < doc.dim; ++j)
          if (rng() % 3 == 0) cb.phi(i, j) = rand_rational();
      cb.xi = Vector(doc.dim);
      for (int i = 0; i < doc.dim; ++i) cb.xi[i] = rand_rational();
      doc.contact = std::move(cb);
    }
    if (rng() % 2) doc.catalog_tag = "tag" + std::to_string(trial);
    INFO(doc.name);
    CHECK(parse_manifold(emit_manifold(doc)) == doc);
  }
}

TEST_CASE("full metric round-trips with non-trivial entries") {
  ManifoldDocument doc;
  doc.name = "weighted";
  doc.dim = 2;
  Matrix g(2, 2);
  g(0, 0) = Rational(2);
  g(0, 1) = g(1, 0) = Rational(1, 2);
  g(1, 1) = Rational(5, 3);
  doc.metric = g;
  doc.catalog_tag = "test";
  CHECK(parse_manifold(emit_manifold(doc)) == doc);
}
