#pragma once

#include <string>

#include "monocat/fixtures.hpp"
#include "monocat/report.hpp"

namespace monocat {

  struct WattsSelection {
    bool axioms    = true;
    bool T         = true;
    bool functor   = true;
    bool embedding = true;
    bool rigidity  = true;
  };

  // A comma-separated list drawn from all, axioms, T, functor, embedding and
  // rigidity.  Throws ParseError on an unknown name.
  WattsSelection parse_selection(std::string const& list);

  // Runs the selected checks on a fixture and merges them into one report.
  // The rigidity data in the fixture is checked with ω-projectivity probes.
  CoherenceReport run_watts(WattsFixture const& fx, WattsSelection const& selection = {});

}  // namespace monocat
