#include <catch2/catch_amalgamated.hpp>

#include <array>

#include "natural-support.hpp"
#include "monocat/coherence.hpp"
#include "monocat/errors.hpp"
#include "monocat/fixtures.hpp"
#include "monocat/natural.hpp"
#include "monocat/watts.hpp"

using namespace monocat;

namespace {

  Json fixture_json(std::string const& name) {
    return read_json_file(fixture_directory() / "watts" / (name + ".json"));
  }

  WattsFixture fixture(std::string const& name) {
    return parse_watts_fixture(fixture_json(name));
  }

  std::vector<std::string> const all_fixtures{
      "strict-f3-z2", "graded-f3-trivial", "graded-f3-cocycle", "strict-f2-dual", "nonflat-f2"};

  // Brute-force 3-cocycle condition on Z/2 with values ±1 in F_3, written
  // with ω(a,b,c) stored at index 4a + 2b + c.
  bool is_cocycle(std::vector<long> const& w) {
    auto at = [&](int a, int b, int c) { return w[static_cast<std::size_t>(4 * a + 2 * b + c)] % 3; };
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) {
        for (int c = 0; c < 2; ++c) {
          for (int d = 0; d < 2; ++d) {
            long lhs = at(b, c, d) * at(a, (b + c) % 2, d) * at(a, b, c) % 3;
            long rhs = at((a + b) % 2, c, d) * at(a, b, (c + d) % 2) % 3;
            if (lhs != rhs) {
              return false;
            }
          }
        }
      }
    }
    return true;
  }

  std::vector<long> cocycle_of(Json const& doc) {
    return doc.at("graded").at("cocycle").get<std::vector<long>>();
  }

  ModuleMap ev_map(WattsFixture const& fx, RigidDatum const& r, Matrix const& m) {
    return ModuleMap{fx.tensor->tensor(fx.module(r.dual), fx.module(r.object)), fx.tensor->unit(), m};
  }

  ModuleMap db_map(WattsFixture const& fx, RigidDatum const& r, Matrix const& m) {
    return ModuleMap{fx.tensor->unit(), fx.tensor->tensor(fx.module(r.object), fx.module(r.dual)), m};
  }

}  // namespace

TEST_CASE("fixtures parse and name their modules", "[fixtures]") {
  for (auto const& name : all_fixtures) {
    auto const fx = fixture(name);
    CHECK(fx.name == name);
    CHECK_FALSE(fx.sample.empty());
    CHECK_NOTHROW(fx.sample_modules());
  }
  auto nonflat = fixture("nonflat-f2");
  CHECK(nonflat.module("B").dim() == 2);
  CHECK(nonflat.module("k+k").dim() == 2);
  CHECK(nonflat.module("I").dim() == 3);
  CHECK_THROWS_AS(nonflat.module("nope"), ParseError);
}

TEST_CASE("malformed fixture documents are rejected", "[fixtures]") {
  auto doc = fixture_json("strict-f3-z2");
  SECTION("missing field") {
    doc.erase("sample");
    CHECK_THROWS_AS(parse_watts_fixture(doc), ParseError);
  }
  SECTION("unknown sample module") {
    doc["sample"] = Json::array({"R", "Q"});
    CHECK_THROWS_AS(parse_watts_fixture(doc), ParseError);
  }
  SECTION("non-linear sequence map") {
    doc["sequences"][0]["maps"][0] = Json::array({Json::array({1}), Json::array({1})});
    CHECK_THROWS_AS(parse_watts_fixture(doc), InvalidStructure);
  }
  SECTION("cocycle of the wrong length") {
    auto graded                   = fixture_json("graded-f3-trivial");
    graded["graded"]["cocycle"]   = Json::array({1, 1});
    CHECK_THROWS_AS(parse_watts_fixture(graded), ParseError);
  }
  SECTION("missing file") {
    CHECK_THROWS_AS(load_watts_fixture("/nonexistent/fixture.json"), ParseError);
  }
}

TEST_CASE("strict fixture: T is R with coinciding left actions", "[watts][strict]") {
  auto const   fx = fixture("strict-f3-z2");
  Watts const  w(fx.tensor);
  auto const&  t   = w.T();
  auto const&  alg = *w.algebra();
  REQUIRE(t.dim() == alg.dim());
  CHECK(t.outer == t.inner);

  // r ↦ (1⊗1)·r identifies R with T and carries left multiplication to
  // the first left action.
  auto const   prod = fx.tensor->product(w.regular(), w.regular());
  Matrix const one  = prod->quotient.projection.column(0);
  std::vector<Matrix> cols;
  for (auto const& g : t.module.action().gens) {
    cols.push_back(g * one);
  }
  Matrix const iso = Matrix::hstack(cols, t.dim(), alg.characteristic());
  REQUIRE(iso.inverse().has_value());
  for (std::size_t a = 0; a < alg.dim(); ++a) {
    CHECK(t.outer.gens[a] * iso == iso * alg.left_multiplication(a));
  }

  Module const& r = w.regular();
  CHECK(w.alpha_prime(r, r, r).is_identity());
  for (auto const& x : fx.sample_modules()) {
    CHECK(w.omega(x).dim() == x.dim());
    CHECK(w.theta(x, r).inverse().has_value());
    CHECK(w.lambda_prime(x).inverse().has_value());
  }
}

TEST_CASE("graded fixtures: T has dimension 4 and α' carries the cocycle", "[watts][graded]") {
  auto const  trivial = fixture("graded-f3-trivial");
  auto const  twisted = fixture("graded-f3-cocycle");
  Watts const wt(trivial.tensor);
  Watts const wc(twisted.tensor);
  // R⊗_K R for R = K^{Z/2}.
  CHECK(wt.T().dim() == 4);
  CHECK(wc.T().dim() == 4);
  CHECK_FALSE(wc.T().outer == wc.T().inner);
  CHECK(wc.omega(wc.regular()).dim() == 4);

  Module const& r = wc.regular();
  Matrix const  a = wc.alpha_prime(r, r, r);
  CHECK(a.rows() == 8);
  CHECK_FALSE(a.is_identity());
  CHECK(wt.alpha_prime(wt.regular(), wt.regular(), wt.regular()).is_identity());
  // A signed permutation: one nonzero entry per column, each ±1.
  for (std::size_t j = 0; j < a.cols(); ++j) {
    int nonzero = 0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (!a(i, j).is_zero()) {
        ++nonzero;
        CHECK((a(i, j) == Scalar(1, 3) || a(i, j) == Scalar(2, 3)));
      }
    }
    CHECK(nonzero == 1);
  }
  CHECK(wc.theta(r, r).rows() == 4);
}

TEST_CASE("c is natural in both arguments", "[watts]") {
  for (auto const& name : {"graded-f3-cocycle", "nonflat-f2"}) {
    auto const              fx = fixture(name);
    Watts const             w(fx.tensor);
    TransportedTensor const tt(w);
    auto const              sample = fx.sample_modules();
    for (auto const& x : sample) {
      for (auto const& x2 : sample) {
        for (auto const& f : hom_modules(x, x2)) {
          for (auto const& y : sample) {
            CHECK(w.c(x2, y) * tt.tensor_left(x, x2, f, y)
                  == fx.tensor->tensor_left(x, x2, f, y) * w.c(x, y));
            CHECK(w.c(y, x2) * tt.tensor_right(y, x, x2, f)
                  == fx.tensor->tensor_right(y, x, x2, f) * w.c(y, x));
          }
        }
      }
    }
  }
}

TEST_CASE("all checks pass on every bundled fixture", "[watts][coherence]") {
  for (auto const& name : all_fixtures) {
    INFO(name);
    auto const  fx = fixture(name);
    Watts const w(fx.tensor);
    auto const  sample = fx.sample_modules();
    auto const  lookup = [&](std::string const& s) { return fx.module(s); };

    auto axioms = check_monoidal_axioms(*fx.tensor, sample);
    CHECK(axioms.ok());
    CHECK(axioms.count("pentagon") == sample.size() * sample.size() * sample.size() * sample.size());
    CHECK(check_T_coherence(w).ok());
    CHECK(verify_monoidal_functor(w, sample).ok());
    auto embedding = verify_embedding(w, fx.modules, fx.sequences, lookup);
    CHECK(embedding.ok());
    CHECK(embedding.count("right-exact") == fx.sequences.size());
  }
}

TEST_CASE("the transported structure is itself monoidal", "[watts][transport]") {
  for (auto const& name : all_fixtures) {
    INFO(name);
    auto const  fx = fixture(name);
    Watts const w(fx.tensor);
    CHECK(check_monoidal_axioms(*w.transported(), fx.sample_modules()).ok());
  }
}

TEST_CASE("sample preconditions and malformed components", "[watts][errors]") {
  auto const fx = fixture("graded-f3-trivial");
  CHECK_THROWS_AS(check_monoidal_axioms(*fx.tensor, {fx.module("L")}), InvalidStructure);
  CHECK_THROWS_AS(check_monoidal_axioms(*fx.tensor, {fx.module("R"), fx.module("L")}),
                  InvalidStructure);

  // ℓ = 0 gives a left unitor that is not an isomorphism.
  auto doc                       = fixture_json("strict-f2-dual");
  doc["tensor"]["left_unit"]     = Json::array({Json::array({0, 0}), Json::array({0, 0})});
  auto const broken              = parse_watts_fixture(doc);
  CHECK_THROWS_AS(check_monoidal_axioms(*broken.tensor, broken.sample_modules()), MalformedTensor);
}

TEST_CASE("single cocycle flips are caught exactly when the cocycle identity breaks",
          "[watts][mutation]") {
  for (auto const& name : {"graded-f3-trivial", "graded-f3-cocycle"}) {
    auto const base = fixture_json(name);
    REQUIRE(is_cocycle(cocycle_of(base)));
    for (std::size_t k = 0; k < 8; ++k) {
      auto doc                    = base;
      long const v                = doc["graded"]["cocycle"][k];
      doc["graded"]["cocycle"][k] = v == 1 ? 2 : 1;
      bool const  expected_ok     = is_cocycle(cocycle_of(doc));
      auto const  fx              = parse_watts_fixture(doc);
      Watts const w(fx.tensor);
      INFO(name << " flip " << k);
      auto const axioms = check_monoidal_axioms(*fx.tensor, fx.sample_modules());
      auto const t      = check_T_coherence(w);
      CHECK(axioms.failed("pentagon").empty() == expected_ok);
      CHECK(t.failed("T-pentagon").empty() == expected_ok);
      if (!expected_ok) {
        CHECK_FALSE(t.failed("T-pentagon").front().witness.empty());
        CHECK(t.failed("T-pentagon").front().lhs.has_value());
      }
    }
  }
}

TEST_CASE("a skewed second slot produces an action clash", "[watts][mutation]") {
  auto const fx = fixture("graded-f3-trivial");
  auto const skewed = std::make_shared<SkewedSecondSlot const>(fx.tensor);
  CHECK_THROWS_AS(build_T(*skewed), ActionClash);
  CHECK_THROWS_AS(Watts(skewed), ActionClash);
}

TEST_CASE("a rescaled ξ component breaks the unit squares", "[watts][mutation]") {
  auto const     fx = fixture("graded-f3-cocycle");
  Watts const    w(fx.tensor);
  FunctorOptions options;
  options.xi_hook = [&](Module const& x, Module const&, Matrix m) {
    return x == fx.tensor->unit() ? Scalar(2, 3) * m : m;
  };
  auto const report = verify_monoidal_functor(w, fx.sample_modules(), options);
  CHECK_FALSE(report.ok());
  CHECK_FALSE(report.failed("functor-left-unit").empty());
  CHECK(report.failed("functor-right-unit").size() <= 1);
}

TEST_CASE("rigidity: the snake equations fix the scalar in db", "[watts][rigidity]") {
  for (auto const& name : {"graded-f3-trivial", "graded-f3-cocycle"}) {
    auto const  doc = fixture_json(name);
    auto const  fx  = parse_watts_fixture(doc);
    Watts const w(fx.tensor);
    // With ev = 1 both snakes compose to ω(1,1,1)·db, so db = ω(1,1,1)⁻¹.
    long const  w111     = cocycle_of(doc)[7];
    long const  expected = w111 == 1 ? 1 : 2;
    for (auto const& r : fx.rigid) {
      auto const report = check_rigidity(*fx.tensor, fx.module(r.object), fx.module(r.dual),
                                         ev_map(fx, r, r.ev), db_map(fx, r, r.db), &w);
      CHECK(report.ok());
      for (auto const& probe : report.probes()) {
        CHECK(probe.pass);
      }
    }
    RigidDatum const& odd = fx.rigid.at(1);
    REQUIRE(odd.object == "L");
    for (long db : {1L, 2L}) {
      auto const report = check_rigidity(*fx.tensor, fx.module("L"), fx.module("L"),
                                         ev_map(fx, odd, Matrix::from_rows({{1}}, 3)),
                                         db_map(fx, odd, Matrix::from_rows({{db}}, 3)));
      INFO(name << " db=" << db);
      CHECK(report.ok() == (db == expected));
      if (db != expected) {
        CHECK(report.failed("snake-object").size() == 1);
        CHECK(report.failed("snake-dual").size() == 1);
      }
    }
  }
}

TEST_CASE("rigidity reports maps of the wrong shape", "[watts][rigidity]") {
  auto const fx = fixture("graded-f3-trivial");
  auto const& odd = fx.rigid.at(1);
  auto report = check_rigidity(*fx.tensor, fx.module("L"), fx.module("L"),
                               ev_map(fx, odd, Matrix::from_rows({{1, 1}}, 3)),
                               db_map(fx, odd, odd.db));
  CHECK_FALSE(report.ok());
  CHECK(report.failed("ev-linear").size() == 1);
}

TEST_CASE("flatness probe separates the split and non-split sequences", "[watts][embedding]") {
  auto const  fx = fixture("nonflat-f2");
  Watts const w(fx.tensor);
  auto const  report = verify_embedding(w, fx.modules, fx.sequences,
                                        [&](std::string const& s) { return fx.module(s); });
  CHECK(report.ok());
  std::map<std::string, bool> exact;
  for (auto const& p : report.probes()) {
    exact[p.witness] = p.pass;
  }
  CHECK_FALSE(exact.at("nonsplit"));
  CHECK(exact.at("split"));
  // ω(X) = X ⊗ T over the second left action, and T is not projective
  // (equivalently not flat) for that action.  R is commutative here.
  Module const t_inner(w.algebra(), w.T().dim(), Action{Side::right, w.T().inner.gens});
  CHECK_FALSE(is_projective(t_inner));

  for (auto const& name : {"strict-f3-z2", "strict-f2-dual", "graded-f3-cocycle"}) {
    auto const  other = fixture(name);
    Watts const wo(other.tensor);
    auto const  r     = verify_embedding(wo, other.modules, other.sequences,
                                         [&](std::string const& s) { return other.module(s); });
    CHECK(r.ok());
    for (auto const& p : r.probes()) {
      CHECK(p.pass);
    }
  }
}

TEST_CASE("ω of the zero module is zero and Hom(R, R) embeds", "[watts][embedding]") {
  auto const  fx = fixture("strict-f2-dual");
  Watts const w(fx.tensor);
  CHECK(w.omega(Module::zero(w.algebra())).dim() == 0);
  auto const report = verify_embedding(w, {w.regular()}, {}, [&](std::string const& s) {
    return fx.module(s);
  });
  REQUIRE(report.count("hom-injective") == 1);
  CHECK(report.ok());
}

TEST_CASE("projectivity test", "[watts]") {
  auto const fx = fixture("strict-f2-dual");
  CHECK(is_projective(fx.module("R")));
  CHECK_FALSE(is_projective(fx.module("k")));
  CHECK(is_projective(Module::zero(fx.module("R").algebra())));
}

TEST_CASE("natural families and bimodule maps correspond", "[natural]") {
  auto const cases = monocat::testing::natural_cases(20261019U, 60);
  REQUIRE(cases.size() >= 50);
  for (auto const& c : cases) {
    INFO(c.label);
    auto const family = induce_family(c.p, c.q, c.f, c.objects);
    Matrix const f    = nat_to_bimodule_hom(family);
    CHECK(f == c.f);
    CHECK(reconstructs(family, f));
  }
}

TEST_CASE("identity family gives the identity", "[natural]") {
  auto const alg = monocat::testing::small_algebras(3).at(4);
  auto const p   = monocat::testing::enveloping(alg);
  auto const id  = Matrix::identity(p.dim(), 3);
  CHECK(nat_to_bimodule_hom(induce_family(p, p, id, monocat::testing::small_objects(alg))) == id);
}

TEST_CASE("non-natural and unbalanced families are rejected", "[natural]") {
  auto const alg     = monocat::testing::small_algebras(2).at(1);  // K[x]/x^2
  auto const p       = Bimodule::regular(alg);
  auto const objects = monocat::testing::small_objects(alg);
  auto const id      = Matrix::identity(p.dim(), 2);

  SECTION("component off R perturbed") {
    auto family = induce_family(p, p, id, objects);
    REQUIRE(family.objects.at(1).dim() == 4);
    family.components.at(1)(0, 0) = family.components.at(1)(0, 0) + Scalar(1, 2);
    CHECK_THROWS_AS(nat_to_bimodule_hom(family), NotNatural);
  }
  SECTION("component at R not left linear") {
    auto family = induce_family(p, p, id, objects);
    // On R⊗R ≅ R, the map 1 ↦ x, x ↦ 0 is right linear; composing with a
    // map swapping 1 and x is not.
    family.components.at(0) = Matrix::from_rows({{0, 1}, {1, 0}}, 2);
    CHECK_THROWS_AS(nat_to_bimodule_hom(family), NotBalanced);
  }
  SECTION("missing R") {
    auto family = induce_family(p, p, id, {objects.at(1)});
    CHECK_THROWS_AS(nat_to_bimodule_hom(family), InvalidStructure);
  }
}
