#include "monocat/pipeline.hpp"

#include <sstream>

#include "monocat/coherence.hpp"
#include "monocat/errors.hpp"
#include "monocat/watts.hpp"

namespace monocat {

  WattsSelection parse_selection(std::string const& list) {
    WattsSelection     none{false, false, false, false, false};
    std::istringstream in(list);
    std::string        item;
    bool               any = false;
    while (std::getline(in, item, ',')) {
      any = true;
      if (item == "all") {
        return {};
      } else if (item == "axioms") {
        none.axioms = true;
      } else if (item == "T") {
        none.T = true;
      } else if (item == "functor") {
        none.functor = true;
      } else if (item == "embedding") {
        none.embedding = true;
      } else if (item == "rigidity") {
        none.rigidity = true;
      } else {
        throw ParseError("unknown check group '" + item + "'");
      }
    }
    if (!any) {
      throw ParseError("empty check list");
    }
    return none;
  }

  CoherenceReport run_watts(WattsFixture const& fx, WattsSelection const& selection) {
    CoherenceReport report(fx.name);
    auto const      sample = fx.sample_modules();
    Watts const     w(fx.tensor);

    if (selection.axioms) {
      report.merge(check_monoidal_axioms(*fx.tensor, sample));
    }
    if (selection.T) {
      report.merge(check_T_coherence(w));
    }
    if (selection.functor) {
      report.merge(verify_monoidal_functor(w, sample));
    }
    if (selection.embedding) {
      report.merge(verify_embedding(w, fx.modules, fx.sequences,
                                    [&](std::string const& s) { return fx.module(s); }));
    }
    if (selection.rigidity) {
      for (auto const& r : fx.rigid) {
        Module const& x     = fx.module(r.object);
        Module const& xdual = fx.module(r.dual);
        ModuleMap     ev{fx.tensor->tensor(xdual, x), fx.tensor->unit(), r.ev};
        ModuleMap     db{fx.tensor->unit(), fx.tensor->tensor(x, xdual), r.db};
        report.merge(check_rigidity(*fx.tensor, x, xdual, ev, db, &w));
      }
    }
    return report;
  }

}  // namespace monocat
