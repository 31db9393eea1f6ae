#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "monocat/report.hpp"
#include "monocat/serialize.hpp"

namespace monocat {

  using Count = std::int64_t;

  // Dimension data of a semisimple rigid category with finitely many simple
  // objects X_i: multiplicities c_{ik}^j of X_j in X_i⊙X_k, duals i ↦ i*, and
  // r_i = dim_K End(X_i).
  class FusionData {
   public:
    FusionData(std::string              name,
               std::vector<std::string> simples,
               std::size_t              unit,
               std::vector<std::size_t> dual,
               std::vector<Count>       endo_dim);

    [[nodiscard]] std::string const& name() const noexcept {
      return _name;
    }
    [[nodiscard]] std::size_t rank() const noexcept {
      return _simples.size();
    }
    [[nodiscard]] std::vector<std::string> const& simples() const noexcept {
      return _simples;
    }
    [[nodiscard]] std::string const& label(std::size_t i) const {
      return _simples.at(i);
    }
    // Throws UnknownSimple.
    [[nodiscard]] std::size_t index(std::string const& label) const;
    [[nodiscard]] bool        has(std::string const& label) const;

    [[nodiscard]] std::size_t unit() const noexcept {
      return _unit;
    }
    [[nodiscard]] std::size_t dual(std::size_t i) const {
      return _dual.at(i);
    }
    [[nodiscard]] Count endo_dim(std::size_t i) const {
      return _endo.at(i);
    }

    // c_{ik}^j.
    [[nodiscard]] Count c(std::size_t i, std::size_t k, std::size_t j) const {
      return _c[(i * rank() + k) * rank() + j];
    }
    void set(std::size_t i, std::size_t k, std::size_t j, Count value) {
      _c[(i * rank() + k) * rank() + j] = value;
    }

   private:
    std::string              _name;
    std::vector<std::string> _simples;
    std::size_t              _unit;
    std::vector<std::size_t> _dual;
    std::vector<Count>       _endo;
    std::vector<Count>       _c;
  };

  // X = ⊕ m_i X_i.
  struct ObjectExpr {
    std::vector<Count> multiplicities;

    [[nodiscard]] bool is_zero() const;
    friend bool        operator==(ObjectExpr const&, ObjectExpr const&) = default;
  };

  // The image of an object under the embedding: entry (j, k) is the
  // K-dimension of the (j, k) block, a vector space over the skew field of
  // row j.
  struct BlockMatrix {
    std::vector<std::vector<Count>> entries;
    std::vector<Count>              row_fields;
    std::vector<Count>              col_fields;

    [[nodiscard]] bool is_zero() const;
    friend bool        operator==(BlockMatrix const&, BlockMatrix const&) = default;
  };

  FusionData parse_fusion(Json const& doc);
  FusionData load_fusion(std::filesystem::path const& path);
  Json       to_json(FusionData const& fd);

  ObjectExpr simple(FusionData const& fd, std::size_t i);
  ObjectExpr zero_object(FusionData const& fd);
  ObjectExpr direct_sum(ObjectExpr const& x, ObjectExpr const& y);
  // Expansion through the fusion coefficients.
  ObjectExpr fusion_product(FusionData const& fd, ObjectExpr const& x, ObjectExpr const& y);
  ObjectExpr fusion_power(FusionData const& fd, ObjectExpr const& x, unsigned n);
  ObjectExpr dual_object(FusionData const& fd, ObjectExpr const& x);

  // Labels, `+` for direct sums, `*` for products, `^n` for powers and
  // parentheses.  Products bracket to the left.  "0" denotes the zero object
  // unless it is a label.  Throws ParseError or UnknownSimple.
  ObjectExpr parse_object(FusionData const& fd, std::string const& text);
  std::string format_object(FusionData const& fd, ObjectExpr const& x);

  // Unit laws, associativity, reciprocity c_{ik}^j r_j = c_{i*j}^k r_k,
  // r_e = 1, positivity of r, non-negativity of c and the dual involution.
  CoherenceReport validate(FusionData const& fd);

  // Entry (j, k) = Σ_i m_i c_{ik}^j r_j.
  BlockMatrix embed_object(FusionData const& fd, ObjectExpr const& x);
  // Entry (j, n) = Σ_k V_{jk} W_{kn} / r_k; throws DivisibilityError.
  BlockMatrix tensor_images(BlockMatrix const& v, BlockMatrix const& w);
  BlockMatrix dual_image(BlockMatrix const& v);
  // Σ m_i² r_i, checked against the multiplicity of the unit in X⊙X*;
  // throws InternalMismatch.
  Count end_dimension(FusionData const& fd, ObjectExpr const& x);
  // Largest row or column sum of embed(X); throws ZeroObject.
  Count growth_bound(FusionData const& fd, ObjectExpr const& x);

  struct GrowthRow {
    unsigned n;
    Count    end_dim;
    Count    bound;
  };
  struct GrowthResult {
    std::vector<GrowthRow> rows;
    Count                    d;
    CoherenceReport          report;
  };
  // dim End(X^n) for n = 1..n_max from iterated block-matrix products, with
  // the bound D^{2n} (D = growth_bound) when every r_i = 1, and (D c²)^{2n}
  // with c = max r_i otherwise.  Whether dim End(X^n) also stays below the
  // n-th power of the same base is recorded as a probe.
  GrowthResult check_growth(FusionData const& fd, ObjectExpr const& x, unsigned n_max);

  // embed(X⊙Y) = tensor_images(embed X, embed Y), embed(X⊕Y) = embed X +
  // embed Y, embed(X*) = embed(X)ᵀ, and embed(X) = 0 exactly for X = 0.
  CoherenceReport check_embedding_homomorphism(FusionData const& fd,
                                               ObjectExpr const& x,
                                               ObjectExpr const& y);

  Json        to_json(BlockMatrix const& m, FusionData const& fd);
  std::string to_text(BlockMatrix const& m, FusionData const& fd);

}  // namespace monocat
