#include "monocat/fusion.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "monocat/errors.hpp"
#include "monocat/fixtures.hpp"

namespace monocat {

  namespace {

    Count add(Count a, Count b) {
      Count out = 0;
      if (__builtin_add_overflow(a, b, &out)) {
        throw Overflow("integer overflow in fusion arithmetic");
      }
      return out;
    }

    Count mul(Count a, Count b) {
      Count out = 0;
      if (__builtin_mul_overflow(a, b, &out)) {
        throw Overflow("integer overflow in fusion arithmetic");
      }
      return out;
    }

    Count power(Count base, unsigned exponent) {
      Count out = 1;
      for (unsigned i = 0; i < exponent; ++i) {
        out = mul(out, base);
      }
      return out;
    }

    void require_size(FusionData const& fd, ObjectExpr const& x) {
      if (x.multiplicities.size() != fd.rank()) {
        throw DimensionMismatch("object has " + std::to_string(x.multiplicities.size())
                                + " multiplicities, the fusion data has rank "
                                + std::to_string(fd.rank()));
      }
    }

    std::string triple(FusionData const& fd, std::size_t i, std::size_t k, std::size_t j) {
      return "(" + fd.label(i) + ", " + fd.label(k) + ", " + fd.label(j) + ")";
    }

    class Parser {
     public:
      Parser(FusionData const& fd, std::string text) : _fd(fd), _text(std::move(text)) {}

      ObjectExpr parse() {
        ObjectExpr out = sum();
        skip();
        if (_pos != _text.size()) {
          fail("unexpected '" + std::string(1, _text[_pos]) + "'");
        }
        return out;
      }

     private:
      static bool is_label_char(char ch) {
        return std::string_view("+*^() \t\n").find(ch) == std::string_view::npos;
      }

      void skip() {
        while (_pos < _text.size() && std::isspace(static_cast<unsigned char>(_text[_pos]))) {
          ++_pos;
        }
      }

      bool accept(char ch) {
        skip();
        if (_pos < _text.size() && _text[_pos] == ch) {
          ++_pos;
          return true;
        }
        return false;
      }

      [[noreturn]] void fail(std::string const& what) const {
        throw ParseError("object expression \"" + _text + "\" at position "
                         + std::to_string(_pos) + ": " + what);
      }

      ObjectExpr sum() {
        ObjectExpr out = product();
        while (accept('+')) {
          out = direct_sum(out, product());
        }
        return out;
      }

      ObjectExpr product() {
        ObjectExpr out = factor();
        while (accept('*')) {
          out = fusion_product(_fd, out, factor());
        }
        return out;
      }

      ObjectExpr factor() {
        ObjectExpr base = primary();
        while (accept('^')) {
          skip();
          std::size_t start = _pos;
          while (_pos < _text.size() && std::isdigit(static_cast<unsigned char>(_text[_pos]))) {
            ++_pos;
          }
          if (start == _pos) {
            fail("expected an exponent");
          }
          std::string digits = _text.substr(start, _pos - start);
          if (digits.size() > 4) {
            fail("exponent too large");
          }
          base = fusion_power(_fd, base, static_cast<unsigned>(std::stoul(digits)));
        }
        return base;
      }

      ObjectExpr primary() {
        if (accept('(')) {
          ObjectExpr inner = sum();
          if (!accept(')')) {
            fail("expected ')'");
          }
          return inner;
        }
        skip();
        std::size_t start = _pos;
        while (_pos < _text.size() && is_label_char(_text[_pos])) {
          ++_pos;
        }
        if (start == _pos) {
          fail("expected a label");
        }
        std::string label = _text.substr(start, _pos - start);
        if (label == "0" && !_fd.has(label)) {
          return zero_object(_fd);
        }
        return simple(_fd, _fd.index(label));
      }

      FusionData const& _fd;
      std::string       _text;
      std::size_t       _pos = 0;
    };

  }  // namespace

  FusionData::FusionData(std::string              name,
                         std::vector<std::string> simples,
                         std::size_t              unit,
                         std::vector<std::size_t> dual,
                         std::vector<Count>       endo_dim)
      : _name(std::move(name)),
        _simples(std::move(simples)),
        _unit(unit),
        _dual(std::move(dual)),
        _endo(std::move(endo_dim)) {
    std::size_t const n = _simples.size();
    if (n == 0) {
      throw InvalidStructure("fusion data needs at least one simple object");
    }
    if (_unit >= n || _dual.size() != n || _endo.size() != n) {
      throw DimensionMismatch("fusion data: unit, dual or endo_dim do not match the simples");
    }
    for (auto d : _dual) {
      if (d >= n) {
        throw DimensionMismatch("fusion data: dual index out of range");
      }
    }
    std::vector<std::string> sorted = _simples;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw InvalidStructure("fusion data: duplicate simple label");
    }
    _c.assign(n * n * n, 0);
  }

  std::size_t FusionData::index(std::string const& label) const {
    auto it = std::find(_simples.begin(), _simples.end(), label);
    if (it == _simples.end()) {
      throw UnknownSimple("unknown simple object \"" + label + "\" in " + _name);
    }
    return static_cast<std::size_t>(it - _simples.begin());
  }

  bool FusionData::has(std::string const& label) const {
    return std::find(_simples.begin(), _simples.end(), label) != _simples.end();
  }

  bool ObjectExpr::is_zero() const {
    return std::all_of(multiplicities.begin(), multiplicities.end(), [](Count m) { return m == 0; });
  }

  bool BlockMatrix::is_zero() const {
    for (auto const& row : entries) {
      for (Count v : row) {
        if (v != 0) {
          return false;
        }
      }
    }
    return true;
  }

  FusionData parse_fusion(Json const& doc) {
    try {
      auto const simples = doc.at("simples").get<std::vector<std::string>>();
      std::vector<std::size_t> identity(simples.size());
      std::vector<Count>       ones(simples.size(), 1);
      for (std::size_t i = 0; i < simples.size(); ++i) {
        identity[i] = i;
      }
      auto find = [&](std::string const& label) {
        auto it = std::find(simples.begin(), simples.end(), label);
        if (it == simples.end()) {
          throw UnknownSimple("unknown simple object \"" + label + "\"");
        }
        return static_cast<std::size_t>(it - simples.begin());
      };
      std::size_t const unit = find(doc.at("unit").get<std::string>());
      std::vector<std::size_t> dual = identity;
      if (doc.contains("dual")) {
        for (auto const& [key, value] : doc.at("dual").items()) {
          dual[find(key)] = find(value.get<std::string>());
        }
      }
      std::vector<Count> endo = ones;
      if (doc.contains("endo_dim")) {
        for (auto const& [key, value] : doc.at("endo_dim").items()) {
          endo[find(key)] = value.get<Count>();
        }
      }
      FusionData fd(doc.value("name", std::string("fusion")), simples, unit, dual, endo);
      for (auto const& entry : doc.at("fusion")) {
        if (!entry.is_array() || entry.size() != 4) {
          throw ParseError("fusion entries are [i, k, j, c]");
        }
        std::size_t const i = find(entry[0].get<std::string>());
        std::size_t const k = find(entry[1].get<std::string>());
        std::size_t const j = find(entry[2].get<std::string>());
        fd.set(i, k, j, entry[3].get<Count>());
      }
      return fd;
    } catch (Json::exception const& e) {
      throw ParseError(std::string("fusion data: ") + e.what());
    } catch (UnknownSimple const& e) {
      throw ParseError(std::string("fusion data: ") + e.what());
    }
  }

  FusionData load_fusion(std::filesystem::path const& path) {
    return parse_fusion(read_json_file(path));
  }

  Json to_json(FusionData const& fd) {
    Json dual = Json::object();
    Json endo = Json::object();
    Json mult = Json::array();
    std::size_t const n = fd.rank();
    for (std::size_t i = 0; i < n; ++i) {
      dual[fd.label(i)] = fd.label(fd.dual(i));
      endo[fd.label(i)] = fd.endo_dim(i);
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t j = 0; j < n; ++j) {
          if (fd.c(i, k, j) != 0) {
            mult.push_back(Json::array({fd.label(i), fd.label(k), fd.label(j), fd.c(i, k, j)}));
          }
        }
      }
    }
    return Json{{"name", fd.name()},
                {"simples", fd.simples()},
                {"unit", fd.label(fd.unit())},
                {"dual", dual},
                {"endo_dim", endo},
                {"fusion", mult}};
  }

  ObjectExpr simple(FusionData const& fd, std::size_t i) {
    ObjectExpr out = zero_object(fd);
    out.multiplicities.at(i) = 1;
    return out;
  }

  ObjectExpr zero_object(FusionData const& fd) {
    return ObjectExpr{std::vector<Count>(fd.rank(), 0)};
  }

  ObjectExpr direct_sum(ObjectExpr const& x, ObjectExpr const& y) {
    if (x.multiplicities.size() != y.multiplicities.size()) {
      throw DimensionMismatch("direct sum of objects over different fusion data");
    }
    ObjectExpr out = x;
    for (std::size_t i = 0; i < out.multiplicities.size(); ++i) {
      out.multiplicities[i] = add(out.multiplicities[i], y.multiplicities[i]);
    }
    return out;
  }

  ObjectExpr fusion_product(FusionData const& fd, ObjectExpr const& x, ObjectExpr const& y) {
    require_size(fd, x);
    require_size(fd, y);
    std::size_t const n   = fd.rank();
    ObjectExpr        out = zero_object(fd);
    for (std::size_t i = 0; i < n; ++i) {
      if (x.multiplicities[i] == 0) {
        continue;
      }
      for (std::size_t k = 0; k < n; ++k) {
        Count const mk = mul(x.multiplicities[i], y.multiplicities[k]);
        if (mk == 0) {
          continue;
        }
        for (std::size_t j = 0; j < n; ++j) {
          out.multiplicities[j] = add(out.multiplicities[j], mul(mk, fd.c(i, k, j)));
        }
      }
    }
    return out;
  }

  ObjectExpr fusion_power(FusionData const& fd, ObjectExpr const& x, unsigned n) {
    ObjectExpr out = simple(fd, fd.unit());
    for (unsigned i = 0; i < n; ++i) {
      out = i == 0 ? x : fusion_product(fd, out, x);
    }
    return out;
  }

  ObjectExpr dual_object(FusionData const& fd, ObjectExpr const& x) {
    require_size(fd, x);
    ObjectExpr out = zero_object(fd);
    for (std::size_t i = 0; i < fd.rank(); ++i) {
      out.multiplicities[fd.dual(i)] = x.multiplicities[i];
    }
    return out;
  }

  ObjectExpr parse_object(FusionData const& fd, std::string const& text) {
    return Parser(fd, text).parse();
  }

  std::string format_object(FusionData const& fd, ObjectExpr const& x) {
    require_size(fd, x);
    std::string out;
    for (std::size_t i = 0; i < fd.rank(); ++i) {
      Count const m = x.multiplicities[i];
      if (m == 0) {
        continue;
      }
      if (!out.empty()) {
        out += " + ";
      }
      out += (m == 1 ? "" : std::to_string(m) + " ") + fd.label(i);
    }
    return out.empty() ? "0" : out;
  }

  CoherenceReport validate(FusionData const& fd) {
    CoherenceReport   report("fusion data " + fd.name());
    std::size_t const n = fd.rank();
    std::size_t const e = fd.unit();

    report.add_condition("unit-simple", fd.label(e), fd.endo_dim(e) == 1,
                         "r_e = " + std::to_string(fd.endo_dim(e)));
    for (std::size_t i = 0; i < n; ++i) {
      report.add_condition("endo-positive", fd.label(i), fd.endo_dim(i) >= 1,
                           "r = " + std::to_string(fd.endo_dim(i)));
      report.add_condition("dual-involution", fd.label(i), fd.dual(fd.dual(i)) == i,
                           "i** = " + fd.label(fd.dual(fd.dual(i))));
    }
    report.add_condition("dual-unit", fd.label(e), fd.dual(e) == e,
                         "e* = " + fd.label(fd.dual(e)));

    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t j = 0; j < n; ++j) {
          std::string const w = triple(fd, i, k, j);
          Count const       c = fd.c(i, k, j);
          if (c < 0) {
            report.add_condition("nonnegative", w, false, "c = " + std::to_string(c));
          }
          if (i == e) {
            report.add_condition("unit-left", w, c == (k == j ? 1 : 0),
                                 "c_{e k}^j = " + std::to_string(c));
          }
          if (k == e) {
            report.add_condition("unit-right", w, c == (i == j ? 1 : 0),
                                 "c_{i e}^j = " + std::to_string(c));
          }
          Count const lhs = mul(c, fd.endo_dim(j));
          Count const rhs = mul(fd.c(fd.dual(i), j, k), fd.endo_dim(k));
          report.add_condition("reciprocity", w, lhs == rhs,
                               "c_{ik}^j r_j = " + std::to_string(lhs) + ", c_{i*j}^k r_k = "
                                   + std::to_string(rhs));
        }
      }
    }
    // With a finite index set every row and column of c has finite support.
    report.add_condition("finiteness", fd.name(), true,
                         std::to_string(n) + " simple objects");

    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t m = 0; m < n; ++m) {
          for (std::size_t j = 0; j < n; ++j) {
            Count lhs = 0;
            Count rhs = 0;
            for (std::size_t l = 0; l < n; ++l) {
              lhs = add(lhs, mul(fd.c(i, k, l), fd.c(l, m, j)));
              rhs = add(rhs, mul(fd.c(k, m, l), fd.c(i, l, j)));
            }
            report.add_condition("associativity",
                                 "(" + fd.label(i) + ", " + fd.label(k) + ", " + fd.label(m)
                                     + "; " + fd.label(j) + ")",
                                 lhs == rhs,
                                 "(ik)m: " + std::to_string(lhs) + ", i(km): "
                                     + std::to_string(rhs));
          }
        }
      }
    }
    return report;
  }

  BlockMatrix embed_object(FusionData const& fd, ObjectExpr const& x) {
    require_size(fd, x);
    std::size_t const n = fd.rank();
    BlockMatrix       out;
    out.entries.assign(n, std::vector<Count>(n, 0));
    for (std::size_t j = 0; j < n; ++j) {
      out.row_fields.push_back(fd.endo_dim(j));
      out.col_fields.push_back(fd.endo_dim(j));
      for (std::size_t k = 0; k < n; ++k) {
        Count total = 0;
        for (std::size_t i = 0; i < n; ++i) {
          total = add(total, mul(x.multiplicities[i], fd.c(i, k, j)));
        }
        out.entries[j][k] = mul(total, fd.endo_dim(j));
      }
    }
    return out;
  }

  BlockMatrix tensor_images(BlockMatrix const& v, BlockMatrix const& w) {
    std::size_t const rows  = v.entries.size();
    std::size_t const inner = w.entries.size();
    std::size_t const cols  = w.col_fields.size();
    if (v.col_fields.size() != inner || w.row_fields != v.col_fields) {
      throw DimensionMismatch("tensor_images: blocks do not match");
    }
    BlockMatrix out;
    out.row_fields = v.row_fields;
    out.col_fields = w.col_fields;
    out.entries.assign(rows, std::vector<Count>(cols, 0));
    for (std::size_t j = 0; j < rows; ++j) {
      for (std::size_t k = 0; k < inner; ++k) {
        Count const vjk = v.entries[j][k];
        Count const rk  = v.col_fields[k];
        if (vjk % rk != 0) {
          throw DivisibilityError("block (" + std::to_string(j) + ", " + std::to_string(k)
                                  + ") of dimension " + std::to_string(vjk)
                                  + " is not a vector space over a field of dimension "
                                  + std::to_string(rk));
        }
        for (std::size_t m = 0; m < cols; ++m) {
          out.entries[j][m] = add(out.entries[j][m], mul(vjk / rk, w.entries[k][m]));
        }
      }
    }
    return out;
  }

  BlockMatrix dual_image(BlockMatrix const& v) {
    BlockMatrix out;
    out.row_fields = v.col_fields;
    out.col_fields = v.row_fields;
    out.entries.assign(v.col_fields.size(), std::vector<Count>(v.row_fields.size(), 0));
    for (std::size_t j = 0; j < v.entries.size(); ++j) {
      for (std::size_t k = 0; k < v.entries[j].size(); ++k) {
        out.entries[k][j] = v.entries[j][k];
      }
    }
    return out;
  }

  Count end_dimension(FusionData const& fd, ObjectExpr const& x) {
    require_size(fd, x);
    Count direct = 0;
    for (std::size_t i = 0; i < fd.rank(); ++i) {
      direct = add(direct, mul(mul(x.multiplicities[i], x.multiplicities[i]), fd.endo_dim(i)));
    }
    Count const via_unit
        = fusion_product(fd, x, dual_object(fd, x)).multiplicities[fd.unit()];
    if (direct != via_unit) {
      throw InternalMismatch("dim End(X) = " + std::to_string(direct)
                             + " but the unit occurs " + std::to_string(via_unit)
                             + " times in X⊙X*");
    }
    return direct;
  }

  Count growth_bound(FusionData const& fd, ObjectExpr const& x) {
    BlockMatrix const v = embed_object(fd, x);
    if (v.is_zero()) {
      throw ZeroObject("the growth bound is undefined for the zero object");
    }
    std::size_t const n = fd.rank();
    Count             d = 0;
    for (std::size_t a = 0; a < n; ++a) {
      Count row = 0;
      Count col = 0;
      for (std::size_t b = 0; b < n; ++b) {
        row = add(row, v.entries[a][b]);
        col = add(col, v.entries[b][a]);
      }
      d = std::max({d, row, col});
    }
    return d;
  }

  GrowthResult check_growth(FusionData const& fd, ObjectExpr const& x, unsigned n_max) {
    if (n_max < 1) {
      throw InvalidStructure("n_max must be at least 1");
    }
    GrowthResult result{{}, growth_bound(fd, x), CoherenceReport("growth of End(X^n) in " + fd.name())};
    Count max_r = 1;
    bool  unit_fields = true;
    for (std::size_t i = 0; i < fd.rank(); ++i) {
      max_r       = std::max(max_r, fd.endo_dim(i));
      unit_fields = unit_fields && fd.endo_dim(i) == 1;
    }
    Count const base = unit_fields ? result.d : mul(result.d, mul(max_r, max_r));
    result.report.set_note("object", format_object(fd, x));
    result.report.set_note("d", std::to_string(result.d));
    result.report.set_note("bound",
                           unit_fields ? "d^(2n)" : "(d c^2)^(2n) with c = " + std::to_string(max_r));

    BlockMatrix const v1   = embed_object(fd, x);
    BlockMatrix       vn   = v1;
    ObjectExpr        expn = x;
    std::size_t const e    = fd.unit();
    for (unsigned n = 1; n <= n_max; ++n) {
      if (n > 1) {
        vn   = tensor_images(vn, v1);
        expn = fusion_product(fd, expn, x);
      }
      // Column e of embed(X) holds m_j r_j.
      ObjectExpr from_blocks = zero_object(fd);
      for (std::size_t j = 0; j < fd.rank(); ++j) {
        from_blocks.multiplicities[j] = vn.entries[j][e] / fd.endo_dim(j);
      }
      std::string const witness = "n=" + std::to_string(n);
      result.report.add_condition("power-consistency", witness, from_blocks == expn,
                                  "blocks give " + format_object(fd, from_blocks)
                                      + ", expansion gives " + format_object(fd, expn));
      Count const dim   = end_dimension(fd, from_blocks);
      Count const bound = power(base, 2 * n);
      result.rows.push_back(GrowthRow{n, dim, bound});
      result.report.add_condition("growth-bound", witness, dim <= bound,
                                  "dim End = " + std::to_string(dim) + ", bound "
                                      + std::to_string(bound));
      // The tighter bound with exponent n is only recorded as a probe.
      Count const tight = power(base, n);
      result.report.add_probe("growth-bound-exponent-n", witness, dim <= tight,
                              "dim End = " + std::to_string(dim) + ", base^n = "
                                  + std::to_string(tight));
    }
    return result;
  }

  CoherenceReport check_embedding_homomorphism(FusionData const& fd,
                                               ObjectExpr const& x,
                                               ObjectExpr const& y) {
    CoherenceReport   report("embedding of " + fd.name());
    std::string const witness = "(" + format_object(fd, x) + ", " + format_object(fd, y) + ")";
    BlockMatrix const ex      = embed_object(fd, x);
    BlockMatrix const ey      = embed_object(fd, y);

    report.add_condition("homomorphism-tensor", witness,
                         embed_object(fd, fusion_product(fd, x, y)) == tensor_images(ex, ey));
    BlockMatrix sum = ex;
    for (std::size_t j = 0; j < fd.rank(); ++j) {
      for (std::size_t k = 0; k < fd.rank(); ++k) {
        sum.entries[j][k] = add(sum.entries[j][k], ey.entries[j][k]);
      }
    }
    report.add_condition("homomorphism-sum", witness, embed_object(fd, direct_sum(x, y)) == sum);
    report.add_condition("duality", witness,
                         embed_object(fd, dual_object(fd, x)) == dual_image(ex)
                             && embed_object(fd, dual_object(fd, y)) == dual_image(ey));
    report.add_probe("faithful", witness,
                     ex.is_zero() == x.is_zero() && ey.is_zero() == y.is_zero());
    return report;
  }

  Json to_json(BlockMatrix const& m, FusionData const& fd) {
    Json labels = Json::array();
    for (std::size_t i = 0; i < m.entries.size(); ++i) {
      labels.push_back(fd.label(i));
    }
    return Json{{"rows", labels},
                {"cols", labels},
                {"entries", m.entries},
                {"row_fields", m.row_fields},
                {"col_fields", m.col_fields}};
  }

  std::string to_text(BlockMatrix const& m, FusionData const& fd) {
    std::size_t width = 1;
    for (auto const& label : fd.simples()) {
      width = std::max(width, label.size());
    }
    for (auto const& row : m.entries) {
      for (Count v : row) {
        width = std::max(width, std::to_string(v).size());
      }
    }
    auto pad = [&](std::string s) {
      return std::string(width - std::min(width, s.size()), ' ') + s;
    };
    std::ostringstream out;
    out << pad("");
    for (std::size_t k = 0; k < m.col_fields.size(); ++k) {
      out << ' ' << pad(fd.label(k));
    }
    out << '\n';
    for (std::size_t j = 0; j < m.entries.size(); ++j) {
      out << pad(fd.label(j));
      for (Count v : m.entries[j]) {
        out << ' ' << pad(std::to_string(v));
      }
      out << '\n';
    }
    return out.str();
  }

}  // namespace monocat
