#include "monocat/report.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace monocat {

  namespace {

    bool entry_less(ReportEntry const& a, ReportEntry const& b) {
      return std::tie(a.check, a.witness, a.detail)
             < std::tie(b.check, b.witness, b.detail);
    }

    std::vector<ReportEntry> sorted_if(std::vector<ReportEntry> const& all,
                                       auto                            keep) {
      std::vector<ReportEntry> out;
      std::copy_if(all.begin(), all.end(), std::back_inserter(out), keep);
      std::stable_sort(out.begin(), out.end(), entry_less);
      return out;
    }

  }  // namespace

  void CoherenceReport::add(ReportEntry entry) {
    _entries.push_back(std::move(entry));
  }

  void CoherenceReport::add_equality(std::string   check,
                                     std::string   witness,
                                     Matrix const& lhs,
                                     Matrix const& rhs) {
    ReportEntry e;
    e.check   = std::move(check);
    e.witness = std::move(witness);
    e.pass = lhs.rows() == rhs.rows() && lhs.cols() == rhs.cols() && lhs == rhs;
    if (!e.pass) {
      e.lhs = lhs;
      e.rhs = rhs;
    }
    add(std::move(e));
  }

  void CoherenceReport::add_condition(std::string check,
                                      std::string witness,
                                      bool        pass,
                                      std::string detail) {
    ReportEntry e;
    e.check   = std::move(check);
    e.witness = std::move(witness);
    e.pass   = pass;
    e.detail = std::move(detail);
    add(std::move(e));
  }

  void CoherenceReport::add_probe(std::string check,
                                  std::string witness,
                                  bool        holds,
                                  std::string detail) {
    ReportEntry e;
    e.check   = std::move(check);
    e.witness = std::move(witness);
    e.pass     = holds;
    e.severity = Severity::probe;
    e.detail   = std::move(detail);
    add(std::move(e));
  }

  void CoherenceReport::set_note(std::string const& key, std::string value) {
    _notes[key] = std::move(value);
  }

  void CoherenceReport::merge(CoherenceReport const& other) {
    _entries.insert(_entries.end(), other._entries.begin(), other._entries.end());
    for (auto const& [k, v] : other._notes) {
      _notes[k] = v;
    }
  }

  std::size_t CoherenceReport::checks() const {
    return std::count_if(_entries.begin(), _entries.end(), [](auto const& e) {
      return e.severity == Severity::check;
    });
  }

  std::size_t CoherenceReport::failures() const {
    return std::count_if(_entries.begin(), _entries.end(), [](auto const& e) {
      return e.severity == Severity::check && !e.pass;
    });
  }

  std::size_t CoherenceReport::count(std::string const& check) const {
    return std::count_if(_entries.begin(), _entries.end(), [&](auto const& e) {
      return e.check == check;
    });
  }

  std::vector<ReportEntry> CoherenceReport::failed() const {
    return sorted_if(_entries, [](ReportEntry const& e) {
      return e.severity == Severity::check && !e.pass;
    });
  }

  std::vector<ReportEntry> CoherenceReport::failed(std::string const& check) const {
    return sorted_if(_entries, [&](ReportEntry const& e) {
      return e.severity == Severity::check && !e.pass && e.check == check;
    });
  }

  std::vector<ReportEntry> CoherenceReport::probes() const {
    return sorted_if(_entries, [](ReportEntry const& e) {
      return e.severity == Severity::probe;
    });
  }

  Json CoherenceReport::to_json() const {
    std::map<std::string, std::pair<std::size_t, std::size_t>> tally;
    for (auto const& e : _entries) {
      if (e.severity == Severity::check) {
        auto& t = tally[e.check];
        (e.pass ? t.first : t.second) += 1;
      }
    }
    Json summary = Json::object();
    for (auto const& [name, t] : tally) {
      summary[name] = Json{{"passed", t.first}, {"failed", t.second}};
    }
    Json failures_json = Json::array();
    for (auto const& e : failed()) {
      Json f{{"check", e.check}, {"witness", e.witness}};
      if (!e.detail.empty()) {
        f["detail"] = e.detail;
      }
      if (e.lhs) {
        f["lhs"] = monocat::to_json(*e.lhs);
      }
      if (e.rhs) {
        f["rhs"] = monocat::to_json(*e.rhs);
      }
      failures_json.push_back(std::move(f));
    }
    Json probes_json = Json::array();
    for (auto const& e : probes()) {
      Json f{{"check", e.check}, {"witness", e.witness}, {"holds", e.pass}};
      if (!e.detail.empty()) {
        f["detail"] = e.detail;
      }
      probes_json.push_back(std::move(f));
    }
    Json notes = Json::object();
    for (auto const& [k, v] : _notes) {
      notes[k] = v;
    }
    return Json{{"subject", _subject},
                {"ok", ok()},
                {"checks", checks()},
                {"failures", failures()},
                {"summary", std::move(summary)},
                {"failed", std::move(failures_json)},
                {"probes", std::move(probes_json)},
                {"notes", std::move(notes)}};
  }

  std::string CoherenceReport::to_text() const {
    std::ostringstream out;
    out << "report: " << _subject << '\n';
    out << "  " << checks() << " checks, " << failures() << " failures\n";
    std::map<std::string, std::pair<std::size_t, std::size_t>> tally;
    for (auto const& e : _entries) {
      if (e.severity == Severity::check) {
        auto& t = tally[e.check];
        (e.pass ? t.first : t.second) += 1;
      }
    }
    for (auto const& [name, t] : tally) {
      out << "  " << (t.second == 0 ? "ok   " : "FAIL ") << name << ": "
          << t.first << " passed, " << t.second << " failed\n";
    }
    for (auto const& e : failed()) {
      out << "  failure " << e.check << " at " << e.witness;
      if (!e.detail.empty()) {
        out << " (" << e.detail << ")";
      }
      out << '\n';
      if (e.lhs && e.rhs) {
        out << "    lhs = " << e.lhs->to_string() << '\n';
        out << "    rhs = " << e.rhs->to_string() << '\n';
      }
    }
    for (auto const& e : probes()) {
      out << "  probe " << e.check << " at " << e.witness << ": "
          << (e.pass ? "holds" : "fails");
      if (!e.detail.empty()) {
        out << " (" << e.detail << ")";
      }
      out << '\n';
    }
    for (auto const& [k, v] : _notes) {
      out << "  note " << k << ": " << v << '\n';
    }
    return out.str();
  }

}  // namespace monocat
