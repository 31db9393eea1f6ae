#pragma once

#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include "monocat/custom_tensor.hpp"
#include "monocat/serialize.hpp"

namespace monocat {

  // A sequence A -f-> B -g-> C of sample modules, claimed right exact
  // (kind "right_exact") or short exact (kind "short_exact").
  struct ExactSequence {
    std::string name;
    std::string kind;
    std::string a, b, c;
    Matrix      f, g;
  };

  // Duality data ev : X*⊙X -> I and db : I -> X⊙X*.
  struct RigidDatum {
    std::string object;
    std::string dual;
    Matrix      ev;
    Matrix      db;
  };

  struct WattsFixture {
    std::string                            name;
    std::string                            description;
    std::shared_ptr<PresentedTensor const> tensor;
    std::vector<Module>                    modules;
    std::vector<std::string>               sample;
    std::vector<ExactSequence>             sequences;
    std::vector<RigidDatum>                rigid;

    // Throws ParseError for an unknown name.
    [[nodiscard]] Module const&       module(std::string const& name) const;
    [[nodiscard]] std::vector<Module> sample_modules() const;
  };

  // Parses a fixture document.  Malformed documents throw ParseError; data
  // that does not define a tensor throws MalformedTensor or InvalidStructure.
  WattsFixture parse_watts_fixture(Json const& doc);
  WattsFixture load_watts_fixture(std::filesystem::path const& path);

  // The graded presentation over K^{Z/n}: X⊙Y = X⊗_K Y with degrees added,
  // associator given by the 3-cocycle ω (listed as ω(a, b, c) at index
  // (a n + b) n + c), unit the degree-zero line.
  TensorPresentation graded_presentation(std::size_t             n,
                                         Characteristic          p,
                                         std::vector<long> const& cocycle);

  // $MONOCAT_FIXTURES if set, else the bundled directory.
  std::filesystem::path fixture_directory();

  Json read_json_file(std::filesystem::path const& path);

}  // namespace monocat
