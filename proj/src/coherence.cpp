#include "monocat/coherence.hpp"

#include <array>
#include <map>
#include <optional>

#include "monocat/errors.hpp"

namespace monocat {

  namespace {

    std::string label(Module const& m) {
      return m.name().empty() ? "(" + std::to_string(m.dim()) + "-dim)" : m.name();
    }

    std::string tuple(std::initializer_list<Module const*> ms) {
      std::string out = "(";
      for (auto const* m : ms) {
        if (out.size() > 1) {
          out += ", ";
        }
        out += label(*m);
      }
      return out + ")";
    }

    Matrix component_inverse(Matrix const& m, std::string const& what) {
      try {
        return invert(m, what);
      } catch (NotInvertible const& e) {
        throw MalformedTensor(std::string("structure component is not an isomorphism: ")
                              + e.what());
      }
    }

    Matrix identity(Module const& m) {
      return Matrix::identity(m.dim(), m.characteristic());
    }

    Matrix identity(Bimodule const& m) {
      return Matrix::identity(m.dim(), m.characteristic());
    }

    // Column vector listing the entries of m row by row.
    Matrix flatten(Matrix const& m) {
      Matrix out(m.rows() * m.cols(), 1, m.characteristic());
      for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
          out(i * m.cols() + j, 0) = m(i, j);
        }
      }
      return out;
    }

    bool is_bimodule_map(Bimodule const& src, Bimodule const& dst, Matrix const& f) {
      for (std::size_t a = 0; a < src.left().gens.size(); ++a) {
        if (f * src.left().gens[a] != dst.left().gens[a] * f
            || f * src.right().gens[a] != dst.right().gens[a] * f) {
          return false;
        }
      }
      return true;
    }

    void require_sample(CustomTensor const& ct, std::vector<Module> const& sample) {
      Module const regular = Module::right_regular(ct.algebra());
      bool         has_r   = false;
      bool         has_i   = false;
      for (auto const& m : sample) {
        require_same_algebra(ct.algebra(), m.algebra());
        has_r = has_r || m == regular;
        has_i = has_i || m == ct.unit();
      }
      if (!has_r || !has_i) {
        throw InvalidStructure("the sample must contain the regular module and the unit");
      }
    }

    struct SampleData {
      std::vector<Module>                          objects;
      std::vector<Matrix>                          lambda, rho;
      std::map<std::array<std::size_t, 3>, Matrix> alpha;
      std::vector<std::vector<std::vector<Matrix>>> homs;
    };

    SampleData collect(CustomTensor const& ct, std::vector<Module> const& sample) {
      SampleData    d{sample, {}, {}, {}, {}};
      std::size_t const n = sample.size();
      for (auto const& x : sample) {
        d.lambda.push_back(ct.left_unitor(x));
        d.rho.push_back(ct.right_unitor(x));
        component_inverse(d.lambda.back(), "λ_" + label(x));
        component_inverse(d.rho.back(), "ρ_" + label(x));
      }
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          for (std::size_t k = 0; k < n; ++k) {
            Matrix a = ct.associator(sample[i], sample[j], sample[k]);
            component_inverse(a, "α_" + tuple({&sample[i], &sample[j], &sample[k]}));
            d.alpha.emplace(std::array{i, j, k}, std::move(a));
          }
        }
      }
      d.homs.assign(n, std::vector<std::vector<Matrix>>(n));
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          d.homs[i][j] = hom_modules(sample[i], sample[j]);
        }
      }
      return d;
    }

    void pentagons(CustomTensor const& ct, SampleData const& d, CoherenceReport& report) {
      auto const& s = d.objects;
      for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = 0; j < s.size(); ++j) {
          for (std::size_t k = 0; k < s.size(); ++k) {
            for (std::size_t l = 0; l < s.size(); ++l) {
              Module const& w  = s[i];
              Module const& x  = s[j];
              Module const& y  = s[k];
              Module const& z  = s[l];
              Module const  wx = ct.tensor(w, x);
              Module const  xy = ct.tensor(x, y);
              Module const  yz = ct.tensor(y, z);
              Matrix lhs = ct.associator(w, x, yz) * ct.associator(wx, y, z);
              Matrix rhs = ct.tensor_right(w, ct.tensor(xy, z), ct.tensor(x, yz),
                                           d.alpha.at({j, k, l}))
                           * ct.associator(w, xy, z)
                           * ct.tensor_left(ct.tensor(wx, y), ct.tensor(w, xy),
                                            d.alpha.at({i, j, k}), z);
              report.add_equality("pentagon", tuple({&w, &x, &y, &z}), lhs, rhs);
            }
          }
        }
      }
    }

    void unit_diagrams(CustomTensor const& ct, SampleData const& d, CoherenceReport& report) {
      auto const&   s    = d.objects;
      Module const& unit = ct.unit();
      for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = 0; j < s.size(); ++j) {
          Module const& x       = s[i];
          Module const& y       = s[j];
          std::string   witness = tuple({&x, &y});
          Module const  xy      = ct.tensor(x, y);

          report.add_equality(
              "triangle",
              witness,
              ct.tensor_right(x, ct.tensor(unit, y), y, d.lambda[j])
                  * ct.associator(x, unit, y),
              ct.tensor_left(ct.tensor(x, unit), x, d.rho[i], y));
          report.add_equality("left-unit-compatibility",
                              witness,
                              ct.left_unitor(xy) * ct.associator(unit, x, y),
                              ct.tensor_left(ct.tensor(unit, x), x, d.lambda[i], y));
          report.add_equality("right-unit-compatibility",
                              witness,
                              ct.right_unitor(xy),
                              ct.tensor_right(x, ct.tensor(y, unit), y, d.rho[j])
                                  * ct.associator(x, y, unit));
        }
      }
      report.add_equality("unit-agreement", tuple({&unit}), ct.left_unitor(unit),
                          ct.right_unitor(unit));
    }

    void end_unit(CustomTensor const& ct, SampleData const& d, CoherenceReport& report) {
      Module const&             unit = ct.unit();
      std::vector<Matrix> const ends = hom_modules(unit, unit);
      for (std::size_t i = 0; i < ends.size(); ++i) {
        for (std::size_t j = i + 1; j < ends.size(); ++j) {
          report.add_equality("end-unit-commutative",
                              "(e" + std::to_string(i) + ", e" + std::to_string(j) + ")",
                              ends[i] * ends[j],
                              ends[j] * ends[i]);
        }
      }

      auto const&  s   = d.objects;
      Matrix const one = identity(unit);
      for (std::size_t a = 0; a < s.size(); ++a) {
        Matrix const lambda_inv = invert(d.lambda[a], "λ");
        Matrix const rho_inv    = invert(d.rho[a], "ρ");
        for (std::size_t b = 0; b < s.size(); ++b) {
          Module const& x = s[a];
          Module const& y = s[b];
          auto          act_left = [&](Matrix const& r, Matrix const& f) {
            return d.lambda[b] * ct.tensor_maps(unit, unit, r, x, y, f) * lambda_inv;
          };
          auto act_right = [&](Matrix const& f, Matrix const& r) {
            return d.rho[b] * ct.tensor_maps(x, y, f, unit, unit, r) * rho_inv;
          };
          auto const& basis = d.homs[a][b];
          for (std::size_t k = 0; k < basis.size(); ++k) {
            auto const& f       = basis[k];
            std::string witness = tuple({&x, &y}) + " f" + std::to_string(k);
            report.add_equality("end-unit-action-identity", witness + " left",
                                act_left(one, f), f);
            report.add_equality("end-unit-action-identity", witness + " right",
                                act_right(f, one), f);
            for (std::size_t r = 0; r < ends.size(); ++r) {
              for (std::size_t t = 0; t < ends.size(); ++t) {
                report.add_equality(
                    "end-unit-action-associative",
                    witness + " e" + std::to_string(r) + " e" + std::to_string(t),
                    act_right(act_left(ends[r], f), ends[t]),
                    act_left(ends[r], act_right(f, ends[t])));
              }
            }
          }
        }
      }
    }

    void naturality(CustomTensor const& ct, SampleData const& d, CoherenceReport& report) {
      auto const&       s = d.objects;
      std::size_t const n = s.size();
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          auto const& basis = d.homs[a][b];
          for (std::size_t k = 0; k < basis.size(); ++k) {
            Matrix const& f  = basis[k];
            Module const& x  = s[a];
            Module const& x2 = s[b];
            std::string   fw = label(x) + "->" + label(x2) + " f" + std::to_string(k);

            report.add_equality("naturality-left-unitor", fw,
                                d.lambda[b] * ct.tensor_right(ct.unit(), x, x2, f),
                                f * d.lambda[a]);
            report.add_equality("naturality-right-unitor", fw,
                                d.rho[b] * ct.tensor_left(x, x2, f, ct.unit()),
                                f * d.rho[a]);

            for (std::size_t i = 0; i < n; ++i) {
              for (std::size_t j = 0; j < n; ++j) {
                Module const& p  = s[i];
                Module const& q  = s[j];
                Module const  pq = ct.tensor(p, q);
                // f in the first slot: (X, P, Q).
                report.add_equality(
                    "naturality-associator",
                    "slot 1 " + fw + " " + tuple({&p, &q}),
                    d.alpha.at({b, i, j})
                        * ct.tensor_left(ct.tensor(x, p), ct.tensor(x2, p),
                                         ct.tensor_left(x, x2, f, p), q),
                    ct.tensor_left(x, x2, f, pq) * d.alpha.at({a, i, j}));
                // Second slot: (P, X, Q).
                report.add_equality(
                    "naturality-associator",
                    "slot 2 " + fw + " " + tuple({&p, &q}),
                    d.alpha.at({i, b, j})
                        * ct.tensor_left(ct.tensor(p, x), ct.tensor(p, x2),
                                         ct.tensor_right(p, x, x2, f), q),
                    ct.tensor_right(p, ct.tensor(x, q), ct.tensor(x2, q),
                                    ct.tensor_left(x, x2, f, q))
                        * d.alpha.at({i, a, j}));
                // Third slot: (P, Q, X).
                report.add_equality(
                    "naturality-associator",
                    "slot 3 " + fw + " " + tuple({&p, &q}),
                    d.alpha.at({i, j, b}) * ct.tensor_right(pq, x, x2, f),
                    ct.tensor_right(p, ct.tensor(q, x), ct.tensor(q, x2),
                                    ct.tensor_right(q, x, x2, f))
                        * d.alpha.at({i, j, a}));
              }
            }
          }
        }
      }
    }

    void interchange(CustomTensor const& ct, SampleData const& d, CoherenceReport& report) {
      auto const&       s = d.objects;
      std::size_t const n = s.size();
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          for (std::size_t c = 0; c < n; ++c) {
            for (std::size_t e = 0; e < n; ++e) {
              Module const& x  = s[a];
              Module const& x2 = s[b];
              Module const& y  = s[c];
              Module const& y2 = s[e];
              auto const&   fs = d.homs[a][b];
              auto const&   gs = d.homs[c][e];
              for (std::size_t i = 0; i < fs.size(); ++i) {
                for (std::size_t j = 0; j < gs.size(); ++j) {
                  std::string witness = tuple({&x, &x2, &y, &y2}) + " f" + std::to_string(i)
                                        + " g" + std::to_string(j);
                  Matrix both = ct.tensor_maps(x, x2, fs[i], y, y2, gs[j]);
                  report.add_equality(
                      "interchange", witness + " left-first", both,
                      ct.tensor_right(x2, y, y2, gs[j]) * ct.tensor_left(x, x2, fs[i], y));
                  report.add_equality(
                      "interchange", witness + " right-first", both,
                      ct.tensor_left(x, x2, fs[i], y2) * ct.tensor_right(x, y, y2, gs[j]));
                }
              }
            }
          }
        }
      }
    }

  }  // namespace

  CoherenceReport check_monoidal_axioms(CustomTensor const&        ct,
                                        std::vector<Module> const& sample,
                                        AxiomOptions const&        options) {
    require_sample(ct, sample);
    CoherenceReport report("monoidal axioms of " + ct.name());
    std::string     names;
    for (auto const& m : sample) {
      names += (names.empty() ? "" : ", ") + label(m);
    }
    report.set_note("sample", names);

    SampleData const d = collect(ct, sample);
    pentagons(ct, d, report);
    unit_diagrams(ct, d, report);
    if (options.end_unit) {
      end_unit(ct, d, report);
    }
    if (options.naturality) {
      naturality(ct, d, report);
    }
    if (options.interchange) {
      interchange(ct, d, report);
    }
    return report;
  }

  CoherenceReport check_T_coherence(Watts const& w) {
    CoherenceReport         report("coherence of T for " + w.tensor().name());
    TransportedTensor const tt(w);
    auto const&             alg = *w.algebra();
    Module const&           r   = w.regular();
    Module const&           i   = w.tensor().unit();
    Module const            rr  = tt.tensor(r, r);
    Module const            src = tt.tensor(rr, r);
    Module const            dst = tt.tensor(r, rr);
    Matrix const            a   = w.alpha_prime(r, r, r);
    report.set_note("dim T", std::to_string(w.T().dim()));
    report.set_note("alpha'_RRR is identity", a.is_identity() ? "yes" : "no");

    for (std::size_t k = 0; k < alg.dim(); ++k) {
      Matrix const      l       = left_translation(alg, k);
      std::string const witness = "e" + std::to_string(k);
      report.add_equality("T-equivariance", "first left action " + witness,
                          a * tt.tensor_left(rr, rr, tt.tensor_left(r, r, l, r), r),
                          tt.tensor_left(r, r, l, rr) * a);
      report.add_equality("T-equivariance", "second left action " + witness,
                          a * tt.tensor_left(rr, rr, tt.tensor_right(r, r, r, l), r),
                          tt.tensor_right(r, rr, rr, tt.tensor_left(r, r, l, r)) * a);
      report.add_equality("T-equivariance", "third left action " + witness,
                          a * tt.tensor_right(rr, r, r, l),
                          tt.tensor_right(r, rr, rr, tt.tensor_right(r, r, r, l)) * a);
      report.add_equality("T-equivariance", "right action " + witness,
                          a * src.action().gens[k], dst.action().gens[k] * a);
    }

    // α'_{X,Y,Z} determined by A: precomposing with (x̂⊙'ŷ)⊙'ẑ must give
    // (x̂⊙'(ŷ⊙'ẑ))∘A for all basis elements x, y, z.
    auto restore = [&](Module const& x, Module const& y, Module const& z) {
      Module const xy  = tt.tensor(x, y);
      Module const yz  = tt.tensor(y, z);
      Module const s   = tt.tensor(xy, z);
      Module const t   = tt.tensor(x, yz);
      Characteristic const p = alg.characteristic();
      std::vector<Matrix> gs, hs;
      auto basis = [&](Module const& m, std::size_t j) {
        Matrix e(m.dim(), 1, p);
        e(j, 0) = Scalar::one(p);
        return hat(m, e);
      };
      for (std::size_t xi = 0; xi < x.dim(); ++xi) {
        Matrix const xh = basis(x, xi);
        for (std::size_t yi = 0; yi < y.dim(); ++yi) {
          Matrix const yh = basis(y, yi);
          Matrix const xyh = tt.tensor_maps(r, x, xh, r, y, yh);
          for (std::size_t zi = 0; zi < z.dim(); ++zi) {
            Matrix const zh = basis(z, zi);
            gs.push_back(tt.tensor_maps(rr, xy, xyh, r, z, zh));
            hs.push_back(tt.tensor_maps(r, x, xh, rr, yz, tt.tensor_maps(r, y, yh, r, z, zh))
                         * a);
          }
        }
      }
      Matrix g       = Matrix::hstack(gs, s.dim(), p);
      Matrix h       = Matrix::hstack(hs, t.dim(), p);
      auto   section = g.solve(Matrix::identity(s.dim(), p));
      if (!section) {
        throw MalformedTensor("the maps from (R⊙'R)⊙'R do not cover "
                              + tuple({&x, &y, &z}));
      }
      return descend(h, g, *section, "α' restored from α'_RRR");
    };

    std::optional<Matrix> a_rr_r, a_r_rr, a_r_r_r;
    try {
      a_rr_r  = restore(rr, r, r);
      a_r_rr  = restore(r, rr, r);
      a_r_r_r = restore(r, r, rr);
      report.add_condition("T-restoration", "(R⊙'R, R, R), (R, R⊙'R, R), (R, R, R⊙'R)", true);
    } catch (MalformedTensor const& e) {
      report.add_condition("T-restoration", "(R⊙'R, R, R), (R, R⊙'R, R), (R, R, R⊙'R)",
                           false, e.what());
    }
    if (a_rr_r && a_r_rr && a_r_r_r) {
      report.add_equality("T-restoration-agrees", "(R⊙'R, R, R)", *a_rr_r,
                          w.alpha_prime(rr, r, r));
      report.add_equality("T-restoration-agrees", "(R, R⊙'R, R)", *a_r_rr,
                          w.alpha_prime(r, rr, r));
      report.add_equality("T-restoration-agrees", "(R, R, R⊙'R)", *a_r_r_r,
                          w.alpha_prime(r, r, rr));
      Module const rr_r = tt.tensor(rr, r);
      Module const r_rr = tt.tensor(r, rr);
      Matrix lhs = *a_r_r_r * *a_rr_r;
      Matrix rhs = tt.tensor_right(r, rr_r, r_rr, a) * *a_r_rr
                   * tt.tensor_left(rr_r, r_rr, a, r);
      report.add_equality("T-pentagon", "(R, R, R, R)", lhs, rhs);
    }

    report.add_equality("T-unit-triangle",
                        "(R, I, R)",
                        tt.tensor_right(r, tt.tensor(i, r), r, w.lambda_prime(r))
                            * w.alpha_prime(r, i, r),
                        tt.tensor_left(tt.tensor(r, i), r, w.rho_prime(r), r));
    return report;
  }

  CoherenceReport verify_monoidal_functor(Watts const&               w,
                                          std::vector<Module> const& sample,
                                          FunctorOptions const&      options) {
    CoherenceReport         report("monoidal functor ω for " + w.tensor().name());
    TransportedTensor const tt(w);
    Module const&           unit = w.tensor().unit();

    auto xi = [&](Module const& x, Module const& y) {
      Matrix m = w.xi(x, y);
      return options.xi_hook ? options.xi_hook(x, y, std::move(m)) : m;
    };

    for (auto const& x : sample) {
      for (auto const& y : sample) {
        std::string const witness = tuple({&x, &y});
        Bimodule const    wx      = w.omega(x);
        Bimodule const    wy      = w.omega(y);
        Bimodule const    src     = bimodule_tensor(wx, wy);
        Bimodule const    dst     = w.omega(tt.tensor(x, y));
        Matrix const      m       = xi(x, y);
        report.add_condition("xi-invertible", witness, m.inverse().has_value());
        report.add_condition("xi-bilinear", witness, is_bimodule_map(src, dst, m));
      }
    }

    Bimodule const regular = Bimodule::regular(w.algebra());
    Bimodule const wi      = w.omega(unit);
    Matrix const   eta     = w.eta();
    report.add_condition("eta-invertible", "η", eta.inverse().has_value());
    report.add_condition("eta-bilinear", "η", is_bimodule_map(regular, wi, eta));

    for (auto const& x : sample) {
      Bimodule const wx = w.omega(x);
      auto const     rx = bimodule_tensor_with_product(regular, wx);
      auto const     ix = bimodule_tensor_with_product(wi, wx);
      report.add_equality(
          "functor-left-unit",
          tuple({&x}),
          w.omega_map(tt.tensor(unit, x), x, w.lambda_prime(x)) * xi(unit, x)
              * tensor_maps(rx.product, ix.product, eta, identity(wx)),
          left_unitor(wx));
      auto const xr = bimodule_tensor_with_product(wx, regular);
      auto const xi_ = bimodule_tensor_with_product(wx, wi);
      report.add_equality(
          "functor-right-unit",
          tuple({&x}),
          w.omega_map(tt.tensor(x, unit), x, w.rho_prime(x)) * xi(x, unit)
              * tensor_maps(xr.product, xi_.product, identity(wx), eta),
          right_unitor(wx));
    }

    for (auto const& x : sample) {
      for (auto const& y : sample) {
        for (auto const& z : sample) {
          Bimodule const wx   = w.omega(x);
          Bimodule const wy   = w.omega(y);
          Bimodule const wz   = w.omega(z);
          Module const   xy   = tt.tensor(x, y);
          Module const   yz   = tt.tensor(y, z);
          Bimodule const wxy  = w.omega(xy);
          Bimodule const wyz  = w.omega(yz);
          auto const     bxy  = bimodule_tensor_with_product(wx, wy);
          auto const     byz  = bimodule_tensor_with_product(wy, wz);
          auto const     src  = bimodule_tensor_with_product(bxy.result, wz);
          auto const     midl = bimodule_tensor_with_product(wxy, wz);
          auto const     dst  = bimodule_tensor_with_product(wx, byz.result);
          auto const     midr = bimodule_tensor_with_product(wx, wyz);

          Matrix lhs = w.omega_map(tt.tensor(xy, z), tt.tensor(x, yz), w.alpha_prime(x, y, z))
                       * xi(xy, z)
                       * tensor_maps(src.product, midl.product, xi(x, y), identity(wz));
          Matrix rhs = xi(x, yz)
                       * tensor_maps(dst.product, midr.product, identity(wx), xi(y, z))
                       * canonical_rebracketing(wx, wy, wz);
          report.add_equality("functor-associativity", tuple({&x, &y, &z}), lhs, rhs);
        }
      }
    }
    return report;
  }

  CoherenceReport verify_embedding(Watts const&                      w,
                                   std::vector<Module> const&        sample,
                                   std::vector<ExactSequence> const& sequences,
                                   std::function<Module(std::string const&)> const& lookup) {
    CoherenceReport report("embedding ω for " + w.tensor().name());

    for (auto const& x : sample) {
      if (x.dim() > 0) {
        report.add_condition("faithful-on-objects", tuple({&x}), w.omega(x).dim() > 0,
                             "dim ω = " + std::to_string(w.omega(x).dim()));
      }
    }

    for (auto const& m : sample) {
      for (auto const& n : sample) {
        std::string const   witness = tuple({&m, &n});
        std::vector<Matrix> basis   = hom_modules(m, n);
        Bimodule const      wm      = w.omega(m);
        Bimodule const      wn      = w.omega(n);
        std::vector<Matrix> images;
        bool                bilinear = true;
        for (auto const& f : basis) {
          Matrix const wf = w.omega_map(m, n, f);
          bilinear        = bilinear && is_bimodule_map(wm, wn, wf);
          images.push_back(flatten(wf));
        }
        report.add_condition("omega-maps-bilinear", witness, bilinear);
        std::size_t const rank
            = images.empty()
                  ? 0
                  : Matrix::hstack(images, wm.dim() * wn.dim(), m.characteristic()).rank();
        report.add_condition("hom-injective", witness, rank == basis.size(),
                             "dim Hom = " + std::to_string(basis.size()) + ", rank "
                                 + std::to_string(rank));
      }
    }

    for (auto const& seq : sequences) {
      Module const a = lookup(seq.a);
      Module const b = lookup(seq.b);
      Module const c = lookup(seq.c);
      bool const   input_ok
          = seq.kind == "short_exact" ? is_short_exact(seq.f, seq.g) : is_right_exact(seq.f, seq.g);
      report.add_condition("sequence-input", seq.name, input_ok,
                           "the supplied sequence is not " + seq.kind);
      if (!input_ok) {
        continue;
      }
      Matrix const wf = w.omega_map(a, b, seq.f);
      Matrix const wg = w.omega_map(b, c, seq.g);
      report.add_condition("right-exact", seq.name, is_right_exact(wf, wg));
      if (seq.kind == "short_exact") {
        std::size_t const kernel = wf.cols() - wf.rank();
        report.add_probe("exact", seq.name, is_short_exact(wf, wg),
                         "kernel of ω(f) has dimension " + std::to_string(kernel));
      }
    }
    return report;
  }

  bool is_projective(Module const& m) {
    auto const&          alg = m.algebra();
    Characteristic const p   = m.characteristic();
    std::size_t const    n   = m.dim();
    std::size_t const    d   = alg->dim();
    if (n == 0) {
      return true;
    }
    Module const regular = Module::right_regular(alg);
    Action       free{Side::right, {}};
    for (auto const& g : regular.action().gens) {
      free.gens.push_back(Matrix::identity(n, p).kron(g));
    }
    Module const free_module(alg, n * d, free);
    // Multiplication e_i ⊗ e_b ↦ e_i · e_b.
    Matrix mult(n, n * d, p);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t b = 0; b < d; ++b) {
        mult.set_block(0, i * d + b, m.action().gens[b].column(i));
      }
    }
    std::vector<Matrix> columns;
    for (auto const& s : hom_modules(m, free_module)) {
      columns.push_back(flatten(mult * s));
    }
    if (columns.empty()) {
      return false;
    }
    return Matrix::hstack(columns, n * n, p)
        .solve(flatten(Matrix::identity(n, p)))
        .has_value();
  }

  CoherenceReport check_rigidity(CustomTensor const& ct,
                                 Module const&       x,
                                 Module const&       xdual,
                                 ModuleMap const&    ev,
                                 ModuleMap const&    db,
                                 Watts const*        w) {
    CoherenceReport report("rigidity of " + label(x) + " for " + ct.name());
    Module const&   unit = ct.unit();
    Module const    xdx  = ct.tensor(xdual, x);
    Module const    xxd  = ct.tensor(x, xdual);
    std::string const witness = tuple({&x, &xdual});

    bool const ev_shape = ev.matrix.rows() == unit.dim() && ev.matrix.cols() == xdx.dim();
    bool const db_shape = db.matrix.rows() == xxd.dim() && db.matrix.cols() == unit.dim();
    report.add_condition("ev-linear", witness,
                         ev_shape && ModuleMap{xdx, unit, ev.matrix}.is_equivariant());
    report.add_condition("db-linear", witness,
                         db_shape && ModuleMap{unit, xxd, db.matrix}.is_equivariant());
    if (!ev_shape || !db_shape) {
      return report;
    }

    Matrix snake1 = ct.right_unitor(x)
                    * ct.tensor_right(x, xdx, unit, ev.matrix)
                    * ct.associator(x, xdual, x)
                    * ct.tensor_left(unit, xxd, db.matrix, x)
                    * component_inverse(ct.left_unitor(x), "λ_X");
    report.add_equality("snake-object", witness, snake1, identity(x));

    Matrix snake2 = ct.left_unitor(xdual)
                    * ct.tensor_left(xdx, unit, ev.matrix, xdual)
                    * component_inverse(ct.associator(xdual, x, xdual), "α_{X*,X,X*}")
                    * ct.tensor_right(xdual, unit, xxd, db.matrix)
                    * component_inverse(ct.right_unitor(xdual), "ρ_{X*}");
    report.add_equality("snake-dual", witness, snake2, identity(xdual));

    if (w != nullptr) {
      Module const wx  = w->omega(x).right_module();
      Module const wxd = w->omega(xdual).right_module();
      std::size_t const hom_dim
          = hom_modules(wx, Module::right_regular(w->algebra())).size();
      report.add_probe("dual-dimension", witness, hom_dim == wxd.dim(),
                       "dim ω(X*) = " + std::to_string(wxd.dim())
                           + ", dim Hom_R(ω(X), R) = " + std::to_string(hom_dim));
      report.add_probe("projective", tuple({&x}), is_projective(wx));
      report.add_probe("projective", tuple({&xdual}), is_projective(wxd));
    }
    return report;
  }

}  // namespace monocat
