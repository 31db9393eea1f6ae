#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "monocat/errors.hpp"
#include "monocat/fixtures.hpp"
#include "monocat/fusion.hpp"
#include "monocat/pipeline.hpp"

namespace fs = std::filesystem;
using namespace monocat;

namespace {

  enum Exit : int { ok = 0, failure = 1, malformed = 2 };

  struct RunConfig {
    std::string   command;
    std::string   input;
    std::string   object;
    unsigned      n_max  = 5;
    std::string   format = "text";
    std::uint64_t seed   = 1;
    std::string   checks = "all";
    unsigned      pairs  = 25;
  };

  Json envelope(RunConfig const& cfg) {
    Json j{{"schema", 1}, {"command", cfg.command}, {"seed", cfg.seed}};
    if (!cfg.input.empty()) {
      j["input"] = cfg.input;
    }
    return j;
  }

  std::string error_kind(std::exception const& e) {
    // Most specific first; every library error derives from Error.
    if (dynamic_cast<ParseError const*>(&e)) return "ParseError";
    if (dynamic_cast<UnknownSimple const*>(&e)) return "UnknownSimple";
    if (dynamic_cast<MalformedTensor const*>(&e)) return "MalformedTensor";
    if (dynamic_cast<InvalidStructure const*>(&e)) return "InvalidStructure";
    if (dynamic_cast<ActionClash const*>(&e)) return "ActionClash";
    if (dynamic_cast<DivisibilityError const*>(&e)) return "DivisibilityError";
    if (dynamic_cast<ZeroObject const*>(&e)) return "ZeroObject";
    if (dynamic_cast<InternalMismatch const*>(&e)) return "InternalMismatch";
    if (dynamic_cast<Overflow const*>(&e)) return "Overflow";
    if (dynamic_cast<Error const*>(&e)) return "Error";
    return "exception";
  }

  int emit_error(RunConfig const& cfg, std::exception const& e, int code) {
    if (cfg.format == "json") {
      Json j     = envelope(cfg);
      j["ok"]    = false;
      j["error"] = Json{{"type", error_kind(e)}, {"message", e.what()}};
      std::cout << j.dump(2) << '\n';
    } else {
      std::cerr << "error (" << error_kind(e) << "): " << e.what() << '\n';
    }
    return code;
  }

  // A path as given, or a name inside the fixture directory.
  fs::path resolve(std::string const& arg, std::string const& subdir) {
    std::vector<fs::path> candidates{arg};
    for (auto const& base : {fixture_directory() / subdir, fixture_directory()}) {
      candidates.push_back(base / arg);
      candidates.push_back(base / (arg + ".json"));
    }
    for (auto const& c : candidates) {
      if (fs::is_regular_file(c)) {
        return c;
      }
    }
    throw ParseError("cannot find input '" + arg + "'");
  }

  FusionData read_fusion(RunConfig const& cfg) {
    try {
      return parse_fusion(read_json_file(resolve(cfg.input, "fusion")));
    } catch (UnknownSimple const& e) {
      throw ParseError(e.what());
    } catch (InvalidStructure const& e) {
      throw ParseError(e.what());
    }
  }

  void print(RunConfig const& cfg, Json const& j, std::string const& text) {
    if (cfg.format == "json") {
      std::cout << j.dump(2) << '\n';
    } else {
      std::cout << text;
    }
  }

  int cmd_validate(RunConfig const& cfg) {
    FusionData const fd     = read_fusion(cfg);
    auto const       report = validate(fd);
    Json             j      = envelope(cfg);
    j["ok"]                 = report.ok();
    j["report"]             = report.to_json();
    print(cfg, j, report.to_text());
    return report.ok() ? ok : failure;
  }

  int cmd_embed(RunConfig const& cfg) {
    FusionData const fd = read_fusion(cfg);
    ObjectExpr const x  = parse_object(fd, cfg.object);
    BlockMatrix const m = embed_object(fd, x);
    Json j      = envelope(cfg);
    j["ok"]     = true;
    j["object"] = format_object(fd, x);
    j["matrix"] = to_json(m, fd);
    print(cfg, j, "embed(" + format_object(fd, x) + ")\n" + to_text(m, fd));
    return ok;
  }

  int cmd_bound(RunConfig const& cfg) {
    FusionData const fd  = read_fusion(cfg);
    ObjectExpr const x   = parse_object(fd, cfg.object);
    auto const       res = check_growth(fd, x, cfg.n_max);
    Json rows = Json::array();
    std::ostringstream text;
    text << "object " << format_object(fd, x) << ", d = " << res.d << '\n';
    text << "n\tdim End\tbound\n";
    for (auto const& r : res.rows) {
      rows.push_back(Json{{"n", r.n}, {"end_dim", r.end_dim}, {"bound", r.bound}});
      text << r.n << '\t' << r.end_dim << '\t' << r.bound << '\n';
    }
    text << res.report.to_text();
    Json j      = envelope(cfg);
    j["ok"]     = res.report.ok();
    j["object"] = format_object(fd, x);
    j["n_max"]  = cfg.n_max;
    j["d"]      = res.d;
    j["rows"]   = std::move(rows);
    j["report"] = res.report.to_json();
    print(cfg, j, text.str());
    return res.report.ok() ? ok : failure;
  }

  int cmd_watts(RunConfig const& cfg) {
    WattsSelection const selection = parse_selection(cfg.checks);
    WattsFixture         fx        = [&] {
      try {
        return load_watts_fixture(resolve(cfg.input, "watts"));
      } catch (Error const& e) {
        throw ParseError(e.what());
      }
    }();
    auto const report = run_watts(fx, selection);
    Json       j      = envelope(cfg);
    j["checks"]       = cfg.checks;
    j["ok"]           = report.ok();
    j["report"]       = report.to_json();
    print(cfg, j, report.to_text());
    return report.ok() ? ok : failure;
  }

  std::vector<fs::path> json_files(fs::path const& dir) {
    std::vector<fs::path> out;
    if (fs::is_directory(dir)) {
      for (auto const& entry : fs::directory_iterator(dir)) {
        if (entry.path().extension() == ".json") {
          out.push_back(entry.path());
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // Random objects with total multiplicity at most four, split between two
  // factors.  Raw engine output keeps the draws identical on every platform.
  CoherenceReport sample_embedding(FusionData const& fd, std::mt19937_64& rng, unsigned pairs) {
    CoherenceReport report("embedding homomorphism on " + fd.name());
    for (unsigned t = 0; t < pairs; ++t) {
      ObjectExpr x = zero_object(fd), y = zero_object(fd);
      auto const total = rng() % 5;
      for (std::uint64_t s = 0; s < total; ++s) {
        auto const i = rng() % fd.rank();
        ++(rng() % 2 == 0 ? x : y).multiplicities[i];
      }
      report.merge(check_embedding_homomorphism(fd, x, y));
    }
    return report;
  }

  int cmd_report(RunConfig const& cfg) {
    fs::path const root = cfg.input.empty() ? fixture_directory() : fs::path(cfg.input);
    std::mt19937_64 rng(cfg.seed);
    bool            all_ok = true;
    std::ostringstream text;

    Json fusion = Json::array();
    for (auto const& path : json_files(root / "fusion")) {
      FusionData const fd = parse_fusion(read_json_file(path));
      CoherenceReport  report("fusion ring " + fd.name());
      report.merge(validate(fd));
      if (report.ok()) {
        report.merge(sample_embedding(fd, rng, cfg.pairs));
        for (std::size_t i = 0; i < fd.rank(); ++i) {
          report.merge(check_growth(fd, simple(fd, i), cfg.n_max).report);
        }
      }
      all_ok = all_ok && report.ok();
      fusion.push_back(Json{{"file", path.filename().string()}, {"report", report.to_json()}});
      text << report.to_text();
    }

    Json watts = Json::array();
    for (auto const& path : json_files(root / "watts")) {
      auto const report = run_watts(load_watts_fixture(path), parse_selection(cfg.checks));
      all_ok            = all_ok && report.ok();
      watts.push_back(Json{{"file", path.filename().string()}, {"report", report.to_json()}});
      text << report.to_text();
    }

    Json j      = envelope(cfg);
    j["ok"]     = all_ok;
    j["pairs"]  = cfg.pairs;
    j["n_max"]  = cfg.n_max;
    j["fusion"] = std::move(fusion);
    j["watts"]  = std::move(watts);
    print(cfg, j, text.str());
    return all_ok ? ok : failure;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App  app{"Monoidal category and fusion ring checker"};
  RunConfig cfg;
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", cfg.seed, "Seed for randomized sampling");
  app.add_option("--n-max", cfg.n_max, "Largest tensor power")->check(CLI::PositiveNumber);
  app.add_option("--checks", cfg.checks,
                 "Comma-separated subset of all, axioms, T, functor, embedding, rigidity");

  auto* validate_cmd = app.add_subcommand("validate", "Validate fusion data");
  validate_cmd->add_option("path", cfg.input, "Fusion data file")->required();

  auto* embed_cmd = app.add_subcommand("embed", "Print the block matrix of an object");
  embed_cmd->add_option("path", cfg.input, "Fusion data file")->required();
  embed_cmd->add_option("object", cfg.object, "Object expression")->required();

  auto* bound_cmd = app.add_subcommand("bound", "Tabulate dim End(X^n) against the bound");
  bound_cmd->add_option("path", cfg.input, "Fusion data file")->required();
  bound_cmd->add_option("object", cfg.object, "Object expression")->required();

  auto* watts_cmd = app.add_subcommand("watts", "Run the bimodule construction checks");
  watts_cmd->add_option("path", cfg.input, "Watts fixture file")->required();

  auto* report_cmd = app.add_subcommand("report", "Check every fixture in a directory");
  report_cmd->add_option("dir", cfg.input, "Fixture directory");
  report_cmd->add_option("--pairs", cfg.pairs, "Random embedding pairs per ring");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? ok : malformed;
  }

  cfg.command = app.get_subcommands().front()->get_name();
  try {
    if (cfg.command == "validate") return cmd_validate(cfg);
    if (cfg.command == "embed") return cmd_embed(cfg);
    if (cfg.command == "bound") return cmd_bound(cfg);
    if (cfg.command == "watts") return cmd_watts(cfg);
    return cmd_report(cfg);
  } catch (ParseError const& e) {
    return emit_error(cfg, e, malformed);
  } catch (std::exception const& e) {
    return emit_error(cfg, e, failure);
  }
}
