#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "monocat/serialize.hpp"

namespace monocat::testing {

  // Brute-force reference computations that read the raw fusion table and
  // never touch FusionData.
  struct RawFusion {
    std::vector<std::string>                                 simples;
    std::string                                              unit;
    std::map<std::string, long>                              endo;
    std::map<std::string, std::string>                       dual;
    std::map<std::tuple<std::string, std::string, std::string>, long> c;

    explicit RawFusion(Json const& doc) {
      simples = doc.at("simples").get<std::vector<std::string>>();
      unit    = doc.at("unit").get<std::string>();
      for (auto const& s : simples) {
        endo[s] = doc.contains("endo_dim") && doc.at("endo_dim").contains(s)
                      ? doc.at("endo_dim").at(s).get<long>()
                      : 1;
        dual[s] = doc.contains("dual") && doc.at("dual").contains(s)
                      ? doc.at("dual").at(s).get<std::string>()
                      : s;
      }
      for (auto const& e : doc.at("fusion")) {
        c[{e[0].get<std::string>(), e[1].get<std::string>(), e[2].get<std::string>()}]
            = e[3].get<long>();
      }
    }

    [[nodiscard]] long coeff(std::string const& i, std::string const& k, std::string const& j) const {
      auto it = c.find({i, k, j});
      return it == c.end() ? 0 : it->second;
    }

    // An object as a bag of simple labels, one entry per copy.
    using Bag = std::vector<std::string>;

    // X⊙Y by expanding every pair of summands separately.
    [[nodiscard]] Bag product(Bag const& x, Bag const& y) const {
      Bag out;
      for (auto const& a : x) {
        for (auto const& b : y) {
          for (auto const& j : simples) {
            for (long n = 0; n < coeff(a, b, j); ++n) {
              out.push_back(j);
            }
          }
        }
      }
      return out;
    }

    // K-dimension of ⊕ Hom(X_j, X_a⊙X_k) over the summands a of x.
    [[nodiscard]] std::vector<std::vector<long>> blocks(Bag const& x) const {
      std::vector<std::vector<long>> out(simples.size(), std::vector<long>(simples.size(), 0));
      for (std::size_t j = 0; j < simples.size(); ++j) {
        for (std::size_t k = 0; k < simples.size(); ++k) {
          for (auto const& a : x) {
            out[j][k] += coeff(a, simples[k], simples[j]) * endo.at(simples[j]);
          }
        }
      }
      return out;
    }

    [[nodiscard]] Bag dual_of(Bag const& x) const {
      Bag out;
      for (auto const& a : x) {
        out.push_back(dual.at(a));
      }
      return out;
    }

    [[nodiscard]] static Bag sorted(Bag b) {
      std::sort(b.begin(), b.end());
      return b;
    }

    // Whether the table defines a fusion ring: unit laws, associativity of
    // the expansion, reciprocity, non-negativity and the dual involution.
    [[nodiscard]] bool is_fusion_ring() const {
      if (endo.at(unit) != 1) {
        return false;
      }
      for (auto const& [key, value] : c) {
        if (value < 0) {
          return false;
        }
      }
      for (auto const& s : simples) {
        if (dual.at(dual.at(s)) != s || sorted(product({unit}, {s})) != Bag{s}
            || sorted(product({s}, {unit})) != Bag{s}) {
          return false;
        }
      }
      for (auto const& a : simples) {
        for (auto const& b : simples) {
          for (auto const& d : simples) {
            if (sorted(product(product({a}, {b}), {d})) != sorted(product({a}, product({b}, {d})))) {
              return false;
            }
            if (coeff(a, b, d) * endo.at(d) != coeff(dual.at(a), d, b) * endo.at(b)) {
              return false;
            }
          }
        }
      }
      return true;
    }

    [[nodiscard]] long end_dim(Bag const& x) const {
      std::map<std::string, long> m;
      for (auto const& a : x) {
        ++m[a];
      }
      long total = 0;
      for (auto const& [label, mult] : m) {
        total += mult * mult * endo.at(label);
      }
      return total;
    }
  };

}  // namespace monocat::testing
