#include <CLI11.hpp>

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fusion-oracle.hpp"
#include "natural-support.hpp"
#include "monocat/coherence.hpp"
#include "monocat/errors.hpp"
#include "monocat/fixtures.hpp"
#include "monocat/fusion.hpp"
#include "monocat/natural.hpp"
#include "monocat/pipeline.hpp"
#include "monocat/watts.hpp"

using namespace monocat;
using monocat::testing::RawFusion;

namespace {

  std::vector<std::string> const rings{"trivial", "z2", "z3", "z4", "z5", "z6",
                                       "fib", "ising", "rep-s3"};

  struct Outcome {
    bool                     pass = true;
    std::vector<std::string> lines;

    void require(bool condition, std::string const& what) {
      pass = pass && condition;
      lines.push_back((condition ? "ok   " : "FAIL ") + what);
    }
    void note(std::string const& what) {
      lines.push_back("     " + what);
    }
  };

  Json ring_json(std::string const& name) {
    return read_json_file(fixture_directory() / "fusion" / (name + ".json"));
  }

  Json watts_json(std::string const& name) {
    return read_json_file(fixture_directory() / "watts" / (name + ".json"));
  }

  std::string str(std::size_t n) {
    return std::to_string(n);
  }

  // 1. Bundled rings validate; single-entry mutations of c are detected.
  Outcome fusion_validation() {
    Outcome out;
    std::size_t mutations = 0, detected = 0, oracle_valid = 0, agree = 0;
    std::vector<std::string> undetected;
    for (auto const& name : rings) {
      auto const doc    = ring_json(name);
      auto const report = validate(parse_fusion(doc));
      out.require(report.ok() && RawFusion(doc).is_fusion_ring(),
                  name + ": " + str(report.checks()) + " checks, " + str(report.failures())
                      + " failures");

      // Every stored entry moved up or down by one, and every absent entry
      // raised to one.
      std::vector<std::pair<Json, std::string>> mutants;
      RawFusion const raw(doc);
      for (auto const& i : raw.simples) {
        for (auto const& k : raw.simples) {
          for (auto const& j : raw.simples) {
            long const v = raw.coeff(i, k, j);
            for (long nv : {v + 1, v - 1}) {
              if (nv < 0) {
                continue;
              }
              Json m      = doc;
              bool placed = false;
              for (auto& e : m["fusion"]) {
                if (e[0] == i && e[1] == k && e[2] == j) {
                  e[3]   = nv;
                  placed = true;
                }
              }
              if (!placed) {
                m["fusion"].push_back(Json::array({i, k, j, nv}));
              }
              mutants.emplace_back(m, "c(" + i + "," + k + ";" + j + ")=" + std::to_string(nv));
            }
          }
        }
      }
      for (auto const& [m, label] : mutants) {
        ++mutations;
        bool const caught    = !validate(parse_fusion(m)).ok();
        bool const valid     = RawFusion(m).is_fusion_ring();
        detected            += caught ? 1 : 0;
        oracle_valid        += valid ? 1 : 0;
        agree               += caught != valid ? 1 : 0;
        if (!caught) {
          undetected.push_back(name + " " + label);
        }
      }
    }
    out.require(agree == mutations,
                "validate agrees with the brute-force oracle on " + str(agree) + "/"
                    + str(mutations) + " mutants");
    out.require(detected == mutations,
                "mutants detected: " + str(detected) + "/" + str(mutations));
    out.note("oracle: " + str(oracle_valid)
             + " mutants are themselves valid fusion rings, so no validator can flag them");
    for (std::size_t i = 0; i < undetected.size() && i < 6; ++i) {
      out.note("undetected (valid ring): " + undetected[i]);
    }
    return out;
  }

  // 2. embed(X⊙Y) = embed(X)·embed(Y) on seeded random pairs.
  Outcome embedding_homomorphism() {
    Outcome         out;
    std::mt19937_64 rng(20261019);
    std::size_t     pairs = 0, product_ok = 0, dual_ok = 0, report_ok = 0;
    for (auto const& name : rings) {
      auto const doc = ring_json(name);
      RawFusion  raw(doc);
      auto const fd = parse_fusion(doc);
      for (int t = 0; t < 25; ++t) {
        RawFusion::Bag bx, by;
        ObjectExpr     x = zero_object(fd), y = zero_object(fd);
        auto const     total = rng() % 5;
        for (std::uint64_t s = 0; s < total; ++s) {
          auto const i = rng() % fd.rank();
          if (rng() % 2 == 0) {
            bx.push_back(fd.label(i));
            ++x.multiplicities[i];
          } else {
            by.push_back(fd.label(i));
            ++y.multiplicities[i];
          }
        }
        ++pairs;
        auto const ex = embed_object(fd, x);
        product_ok += tensor_images(ex, embed_object(fd, y)).entries == raw.blocks(raw.product(bx, by));
        dual_ok += dual_image(ex).entries == raw.blocks(raw.dual_of(bx));
        report_ok += check_embedding_homomorphism(fd, x, y).ok();
      }
    }
    out.require(pairs >= 200, str(pairs) + " random pairs, total multiplicity at most 4");
    out.require(product_ok == pairs,
                "block product equals brute-force expansion: " + str(product_ok) + "/" + str(pairs));
    out.require(dual_ok == pairs, "transpose equals image of the dual: " + str(dual_ok) + "/" + str(pairs));
    out.require(report_ok == pairs, "library homomorphism report clean: " + str(report_ok) + "/" + str(pairs));
    return out;
  }

  // dim End(X^n) from powers of the fusion matrix (N_X)_{jk} = c_{Xk}^j
  // applied to the multiplicity vector of X.
  std::vector<long> matrix_power_oracle(RawFusion const& raw, std::string const& x, unsigned n_max) {
    std::size_t const r = raw.simples.size();
    std::vector<long> m(r, 0);
    for (std::size_t j = 0; j < r; ++j) {
      m[j] = raw.simples[j] == x ? 1 : 0;
    }
    std::vector<long> dims;
    for (unsigned n = 1; n <= n_max; ++n) {
      if (n > 1) {
        std::vector<long> next(r, 0);
        for (std::size_t j = 0; j < r; ++j) {
          for (std::size_t k = 0; k < r; ++k) {
            next[j] += raw.coeff(raw.simples[k], x, raw.simples[j]) * m[k];
          }
        }
        m = next;
      }
      long d = 0;
      for (std::size_t j = 0; j < r; ++j) {
        d += m[j] * m[j] * raw.endo.at(raw.simples[j]);
      }
      dims.push_back(d);
    }
    return dims;
  }

  // 3. Growth of End(X^n) against d^{2n}.
  Outcome growth_of_end() {
    Outcome out;
    struct Case {
      std::string       ring, object;
      std::vector<long> expected;
      Count             d;
    };
    std::vector<Case> const cases{{"fib", "tau", {1, 2, 5, 13, 34}, 2},
                                  {"ising", "sigma", {1, 2, 4, 8}, 2},
                                  {"z6", "g1", {1, 1, 1, 1, 1, 1}, 1},
                                  {"z6", "g5", {1, 1, 1, 1, 1, 1}, 1}};
    for (auto const& c : cases) {
      auto const doc = ring_json(c.ring);
      auto const fd  = parse_fusion(doc);
      auto const res = check_growth(fd, parse_object(fd, c.object),
                                      static_cast<unsigned>(c.expected.size()));
      std::vector<long> got;
      bool              bounded = true;
      for (auto const& row : res.rows) {
        got.push_back(row.end_dim);
        Count d2n = 1;
        for (unsigned i = 0; i < 2 * row.n; ++i) {
          d2n *= c.d;
        }
        bounded = bounded && row.bound == d2n && row.end_dim <= d2n;
      }
      auto const oracle = matrix_power_oracle(RawFusion(doc), c.object, c.expected.size());
      std::ostringstream dims;
      for (auto g : got) {
        dims << ' ' << g;
      }
      out.require(got == c.expected && got == oracle && res.d == c.d && bounded && res.report.ok(),
                  c.ring + " " + c.object + ": dims" + dims.str() + ", d = " + std::to_string(res.d));
    }
    return out;
  }

  void watts_summary(Outcome& out, CoherenceReport const& report, std::string const& group) {
    out.require(report.ok(), group + ": " + str(report.checks()) + " checks, "
                                 + str(report.failures()) + " failures");
  }

  void full_pipeline(Outcome& out, WattsFixture const& fx) {
    Watts const w(fx.tensor);
    auto const  sample = fx.sample_modules();
    watts_summary(out, check_monoidal_axioms(*fx.tensor, sample), "monoidal axioms");
    watts_summary(out, check_T_coherence(w), "T coherence");
    watts_summary(out, verify_monoidal_functor(w, sample), "monoidal functor");
    watts_summary(out,
                  verify_embedding(w, fx.modules, fx.sequences,
                                   [&](std::string const& s) { return fx.module(s); }),
                  "embedding");
  }

  // 4. Strict tensor over F3[Z/2].
  Outcome strict_construction() {
    Outcome     out;
    auto const  fx = load_watts_fixture(fixture_directory() / "watts" / "strict-f3-z2.json");
    Watts const w(fx.tensor);
    auto const& t   = w.T();
    auto const& alg = *w.algebra();
    bool        iso = t.dim() == alg.dim();
    if (iso) {
      auto const   prod = fx.tensor->product(w.regular(), w.regular());
      Matrix const one  = prod->quotient.projection.column(0);
      std::vector<Matrix> cols;
      for (auto const& g : t.module.action().gens) {
        cols.push_back(g * one);
      }
      Matrix const phi = Matrix::hstack(cols, t.dim(), alg.characteristic());
      iso              = phi.inverse().has_value();
      for (std::size_t a = 0; iso && a < alg.dim(); ++a) {
        iso = t.outer.gens[a] * phi == phi * alg.left_multiplication(a);
      }
    }
    out.require(iso, "r -> (1 (x) 1) r is an isomorphism R -> T of left modules, dim T = " + str(t.dim()));
    out.require(t.outer == t.inner, "the two left actions on T coincide");
    full_pipeline(out, fx);
    return out;
  }

  bool is_cocycle(std::vector<long> const& w) {
    auto at = [&](int a, int b, int c) { return w[static_cast<std::size_t>(4 * a + 2 * b + c)] % 3; };
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) {
        for (int c = 0; c < 2; ++c) {
          for (int d = 0; d < 2; ++d) {
            if (at(b, c, d) * at(a, (b + c) % 2, d) * at(a, b, c) % 3
                != at((a + b) % 2, c, d) * at(a, b, (c + d) % 2) % 3) {
              return false;
            }
          }
        }
      }
    }
    return true;
  }

  // 5. Cocycle-twisted Z/2-graded spaces over F3.
  Outcome cocycle_construction() {
    Outcome     out;
    auto const  base = watts_json("graded-f3-cocycle");
    auto const  fx   = parse_watts_fixture(base);
    Watts const w(fx.tensor);
    full_pipeline(out, fx);
    Module const& r = w.regular();
    out.require(!w.alpha_prime(r, r, r).is_identity(), "alpha'_{R,R,R} is not the identity");

    std::size_t flagged = 0, cocycles = 0;
    for (std::size_t k = 0; k < 8; ++k) {
      auto doc                    = base;
      long const v                = doc["graded"]["cocycle"][k];
      doc["graded"]["cocycle"][k] = v == 1 ? 2 : 1;
      auto const  mutant          = parse_watts_fixture(doc);
      Watts const mw(mutant.tensor);
      auto const  axioms  = check_monoidal_axioms(*mutant.tensor, mutant.sample_modules());
      auto const  t       = check_T_coherence(mw);
      bool const  caught  = !axioms.failed("pentagon").empty() && !t.failed("T-pentagon").empty();
      bool const  cocycle = is_cocycle(doc["graded"]["cocycle"].get<std::vector<long>>());
      flagged += caught;
      cocycles += cocycle;
      int const a = static_cast<int>(k / 4), b = static_cast<int>(k / 2 % 2), c = static_cast<int>(k % 2);
      std::string const at = "omega(" + std::to_string(a) + "," + std::to_string(b) + ","
                             + std::to_string(c) + ")";
      if (caught) {
        out.note("flip " + at + ": pentagon fails at " + axioms.failed("pentagon").front().witness
                 + ", T-pentagon at " + t.failed("T-pentagon").front().witness);
      } else {
        out.note("flip " + at + ": no pentagon failure; oracle says the result "
                 + (cocycle ? "is a 3-cocycle (here the trivial one)" : "is NOT a cocycle"));
      }
      out.pass = out.pass && caught != cocycle;
    }
    out.require(flagged == 8, "single sign flips with a pentagon witness: " + str(flagged) + "/8");
    out.note("brute-force cocycle oracle: " + str(cocycles) + " of the 8 flips remain 3-cocycles");
    return out;
  }

  // 6. Natural families and bimodule maps.
  Outcome natural_roundtrip() {
    Outcome     out;
    auto const  cases = monocat::testing::natural_cases(20261019U, 60);
    std::size_t equal = 0, rebuilt = 0;
    for (auto const& c : cases) {
      auto const   family = induce_family(c.p, c.q, c.f, c.objects);
      Matrix const f      = nat_to_bimodule_hom(family);
      equal += f == c.f;
      rebuilt += reconstructs(family, f);
    }
    out.require(cases.size() >= 50, str(cases.size()) + " seeded bimodule maps over F2 and F3");
    out.require(equal == cases.size(), "extracted map equals the original: " + str(equal));
    out.require(rebuilt == cases.size(), "every sampled component reproduced: " + str(rebuilt));
    return out;
  }

  void exactness(Outcome& out, std::string const& name, bool expect_failure) {
    auto const  fx = load_watts_fixture(fixture_directory() / "watts" / (name + ".json"));
    Watts const w(fx.tensor);
    auto const  report = verify_embedding(w, fx.modules, fx.sequences,
                                          [&](std::string const& s) { return fx.module(s); });
    out.require(report.failed("right-exact").empty() && report.count("right-exact") == fx.sequences.size(),
                name + ": right exact on all " + str(fx.sequences.size()) + " sequences");
    std::size_t broken = 0;
    for (auto const& p : report.probes()) {
      if (p.check == "exact") {
        broken += !p.pass;
        out.note(name + " " + p.witness + ": omega " + (p.pass ? "exact" : "NOT exact"));
      }
    }
    out.require(expect_failure ? broken >= 1 : broken == 0,
                name + ": " + str(broken) + " short exact sequences lose exactness");
  }

  // 7. Flatness failure on a non-semisimple algebra.
  Outcome flatness_probe() {
    Outcome out;
    exactness(out, "nonflat-f2", true);
    exactness(out, "strict-f3-z2", false);
    exactness(out, "strict-f2-dual", false);
    out.note("on strict F2[x]/(x^2), T is R and flat, so omega is exact there;"
             " the failure is exhibited on the nonflat fixture");
    return out;
  }

  // 8. Snake identities.
  Outcome rigidity() {
    Outcome     out;
    auto const  fx = load_watts_fixture(fixture_directory() / "watts" / "graded-f3-cocycle.json");
    Watts const w(fx.tensor);
    for (auto const& r : fx.rigid) {
      Module const& x  = fx.module(r.object);
      Module const& xd = fx.module(r.dual);
      auto const    report = check_rigidity(*fx.tensor, x, xd, ModuleMap{fx.tensor->tensor(xd, x), fx.tensor->unit(), r.ev},
                                            ModuleMap{fx.tensor->unit(), fx.tensor->tensor(x, xd), r.db}, &w);
      out.require(report.ok() && report.count("snake-object") == 1 && report.count("snake-dual") == 1,
                  "snake identities for " + r.object + " with db = " + r.db.to_string());
      if (r.object == "L") {
        Matrix const flipped = Scalar(2, 3) * r.db;
        auto const   bad     = check_rigidity(*fx.tensor, x, xd, ModuleMap{fx.tensor->tensor(xd, x), fx.tensor->unit(), r.ev},
                                              ModuleMap{fx.tensor->unit(), fx.tensor->tensor(x, xd), flipped});
        out.require(!bad.failed("snake-object").empty() && !bad.failed("snake-dual").empty(),
                    "sign-mutated db = " + flipped.to_string() + " fails both snakes");
      }
    }
    return out;
  }

  std::pair<int, std::string> run_cli(std::vector<std::string> const& args, std::string const& dir) {
    std::string command = "cd '" + dir + "' && '" MONOCAT_CLI "'";
    for (auto const& a : args) {
      command += " '" + a + "'";
    }
    command += " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    if (pipe == nullptr) {
      return {-1, {}};
    }
    std::string            out;
    std::array<char, 4096> buf{};
    std::size_t            n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
      out.append(buf.data(), n);
    }
    int const status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
  }

  std::vector<std::string> split(std::string const& line, char sep) {
    std::vector<std::string> out;
    std::istringstream       in(line);
    std::string              item;
    while (std::getline(in, item, sep)) {
      out.push_back(item);
    }
    return out;
  }

  // 9. Golden files and byte-identical reruns.
  Outcome cli_determinism() {
    Outcome           out;
    std::string const golden = MONOCAT_GOLDEN_DIR;
    std::ifstream     cases(golden + "/cases.txt");
    std::size_t       total = 0, matched = 0, schema = 0, json_runs = 0;
    std::string       line;
    while (std::getline(cases, line)) {
      if (line.empty() || line[0] == '#') {
        continue;
      }
      auto fields = split(line, '|');
      auto const name = fields.at(0);
      int const  code = std::stoi(fields.at(1));
      std::vector<std::string> args(fields.begin() + 2, fields.end());
      std::ifstream expected_file(golden + "/expected/" + name + ".out", std::ios::binary);
      std::stringstream expected;
      expected << expected_file.rdbuf();
      auto const [rc, output] = run_cli(args, golden + "/inputs");
      ++total;
      bool const same = rc == code && output == expected.str();
      matched += same;
      if (!same) {
        out.note("mismatch: " + name + " (exit " + std::to_string(rc) + ", expected " + std::to_string(code) + ")");
      }
      if (std::find(args.begin(), args.end(), "json") != args.end()) {
        ++json_runs;
        auto const j = Json::parse(output, nullptr, false);
        schema += !j.is_discarded() && j.value("schema", 0) == 1 && j.contains("seed");
      }
    }
    out.require(total > 0 && matched == total,
                "golden outputs and exit codes: " + str(matched) + "/" + str(total));
    out.require(schema == json_runs, "JSON reports carry schema 1 and the seed: " + str(schema) + "/" + str(json_runs));
    for (std::string const seed : {"7", "424242"}) {
      auto const first  = run_cli({"report", "--format", "json", "--seed", seed}, golden + "/inputs");
      auto const second = run_cli({"report", "--format", "json", "--seed", seed}, golden + "/inputs");
      out.require(first == second && first.first == 0,
                  "report --seed " + seed + " twice: byte-identical (" + str(first.second.size()) + " bytes)");
    }
    return out;
  }

  struct Criterion {
    std::string              title;
    double                   budget;  // seconds, 0 for none
    std::function<Outcome()> run;
  };

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  int      only = 0;
  app.add_option("--criterion", only, "Run a single criterion (1-9)")->check(CLI::Range(1, 9));
  CLI11_PARSE(app, argc, argv);

  std::vector<Criterion> const criteria{
      {"fusion-ring validation and mutation detection", 1.0, fusion_validation},
      {"embedding is a ring homomorphism on random pairs", 5.0, embedding_homomorphism},
      {"growth of dim End(X^n) against d^(2n)", 1.0, growth_of_end},
      {"construction on the strict F3[Z/2] fixture", 10.0, strict_construction},
      {"construction on the cocycle-twisted graded fixture", 30.0, cocycle_construction},
      {"natural families and bimodule maps round trip", 5.0, natural_roundtrip},
      {"flatness failure probe", 0.0, flatness_probe},
      {"rigidity snake identities", 0.0, rigidity},
      {"command-line determinism and exit codes", 0.0, cli_determinism},
  };

  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only != 0 && static_cast<int>(i + 1) != only) {
      continue;
    }
    auto const& c     = criteria[i];
    auto const  start = std::chrono::steady_clock::now();
    Outcome     outcome;
    try {
      outcome = c.run();
    } catch (std::exception const& e) {
      outcome.require(false, std::string("exception: ") + e.what());
    }
    double const secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget > 0) {
      std::ostringstream t;
      t << std::fixed << std::setprecision(2) << "runtime " << secs << " s within " << c.budget << " s";
      outcome.require(secs < c.budget, t.str());
    }
    std::cout << (outcome.pass ? "PASS" : "FAIL") << "  criterion " << i + 1 << ": " << c.title
              << std::fixed << std::setprecision(2) << " (" << secs << " s)\n";
    for (auto const& l : outcome.lines) {
      std::cout << "      " << l << '\n';
    }
    all = all && outcome.pass;
  }
  return all ? 0 : 1;
}
