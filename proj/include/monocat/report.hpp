#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "monocat/matrix.hpp"
#include "monocat/serialize.hpp"

namespace monocat {

  // Checks count towards failure; probes record an observation (such as
  // whether a sequence stays exact) without failing the report.
  enum class Severity { check, probe };

  struct ReportEntry {
    std::string           check;
    std::string           witness;
    bool                  pass     = true;
    Severity              severity = Severity::check;
    std::string           detail;
    std::optional<Matrix> lhs;
    std::optional<Matrix> rhs;
  };

  class CoherenceReport {
   public:
    explicit CoherenceReport(std::string subject = {})
        : _subject(std::move(subject)) {}

    void add(ReportEntry entry);
    // Passes iff lhs == rhs; the matrices are kept only on failure.
    void add_equality(std::string check,
                      std::string witness,
                      Matrix const& lhs,
                      Matrix const& rhs);
    void add_condition(std::string check,
                       std::string witness,
                       bool        pass,
                       std::string detail = {});
    void add_probe(std::string check,
                   std::string witness,
                   bool        holds,
                   std::string detail = {});
    void set_note(std::string const& key, std::string value);
    void merge(CoherenceReport const& other);

    [[nodiscard]] std::string const& subject() const noexcept {
      return _subject;
    }
    [[nodiscard]] std::vector<ReportEntry> const& entries() const noexcept {
      return _entries;
    }
    [[nodiscard]] std::map<std::string, std::string> const& notes() const noexcept {
      return _notes;
    }
    [[nodiscard]] std::size_t checks() const;
    [[nodiscard]] std::size_t failures() const;
    [[nodiscard]] bool        ok() const {
      return failures() == 0;
    }
    // Failed checks, sorted by check name and then witness.
    [[nodiscard]] std::vector<ReportEntry> failed() const;
    [[nodiscard]] std::vector<ReportEntry> failed(std::string const& check) const;
    [[nodiscard]] std::vector<ReportEntry> probes() const;
    [[nodiscard]] std::size_t count(std::string const& check) const;

    [[nodiscard]] Json        to_json() const;
    [[nodiscard]] std::string to_text() const;

   private:
    std::string                        _subject;
    std::vector<ReportEntry>           _entries;
    std::map<std::string, std::string> _notes;
  };

}  // namespace monocat
