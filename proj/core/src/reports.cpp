#include "peodd/reports.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace peodd {

ReportFormat format_from_name(const std::string& s) {
  if (s == "json") return ReportFormat::json;
  if (s == "csv") return ReportFormat::csv;
  if (s == "md") return ReportFormat::md;
  throw std::invalid_argument("unknown format: " + s);
}

bool ExtTable::all_agree() const {
  for (const ExtEntry& e : entries)
    if (e.from_resolution != e.from_formula) return false;
  return true;
}

std::string render_relation_report(const std::vector<RelationCheck>& checks,
                                   ReportFormat fmt, const std::string& config_line) {
  if (fmt == ReportFormat::json) {
    nlohmann::json j;
    j["config"] = config_line;
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : checks)
      arr.push_back({{"center_a", c.center_a},
                     {"relation", c.relation},
                     {"status", c.ok ? "ok" : "FAIL"},
                     {"residual", c.residual}});
    j["checks"] = std::move(arr);
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  if (fmt == ReportFormat::csv) {
    os << "# " << config_line << "\n";
    os << "center_a,relation,status,residual\n";
    for (const auto& c : checks)
      os << c.center_a << "," << c.relation << "," << (c.ok ? "ok" : "FAIL") << ","
         << c.residual << "\n";
    return os.str();
  }
  os << "<!-- " << config_line << " -->\n";
  os << "| center a | relation | status | residual |\n";
  os << "|---|---|---|---|\n";
  for (const auto& c : checks)
    os << "| " << c.center_a << " | `" << c.relation << "` | "
       << (c.ok ? "ok" : "**FAIL**") << " | " << c.residual << " |\n";
  return os.str();
}

std::string render_multiplicity_report(const std::vector<MultiplicityRow>& rows,
                                       ReportFormat fmt, const std::string& config_line) {
  if (fmt == ReportFormat::json) {
    nlohmann::json j;
    j["config"] = config_line;
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows)
      arr.push_back({{"lambda", {r.lambda.a, r.lambda.b}},
                     {"mu", {r.mu.a, r.mu.b}},
                     {"targets", r.targets},
                     {"pipeline", r.pipeline},
                     {"closed_form", r.closed_form},
                     {"agree", r.targets == r.pipeline && r.pipeline == r.closed_form}});
    j["rows"] = std::move(arr);
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  if (fmt == ReportFormat::csv) {
    os << "# " << config_line << "\n";
    os << "lambda_a,lambda_b,mu_a,mu_b,targets,pipeline,closed_form\n";
    for (const auto& r : rows)
      os << r.lambda.a << "," << r.lambda.b << "," << r.mu.a << "," << r.mu.b << ","
         << r.targets << "," << r.pipeline << "," << r.closed_form << "\n";
    return os.str();
  }
  os << "<!-- " << config_line << " -->\n";
  os << "| lambda | mu | targets | pipeline | closed form |\n|---|---|---|---|---|\n";
  for (const auto& r : rows)
    os << "| " << r.lambda.str() << " | " << r.mu.str() << " | " << r.targets << " | "
       << r.pipeline << " | " << r.closed_form << " |\n";
  return os.str();
}

std::string render_ext_table(const ExtTable& table, ReportFormat fmt,
                             const std::string& config_line) {
  if (fmt == ReportFormat::json) {
    nlohmann::json j;
    j["config"] = config_line;
    j["mu"] = {table.mu.a, table.mu.b};
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& e : table.entries)
      arr.push_back({{"lambda", {e.lambda.a, e.lambda.b}},
                     {"n", e.n},
                     {"resolution", e.from_resolution},
                     {"formula", e.from_formula}});
    j["entries"] = std::move(arr);
    j["agree"] = table.all_agree();
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  if (fmt == ReportFormat::csv) {
    os << "# " << config_line << "\n";
    os << "mu_a,mu_b,lambda_a,lambda_b,n,value_resolution,value_formula\n";
    for (const auto& e : table.entries)
      os << table.mu.a << "," << table.mu.b << "," << e.lambda.a << "," << e.lambda.b
         << "," << e.n << "," << e.from_resolution << "," << e.from_formula << "\n";
    return os.str();
  }
  os << "<!-- " << config_line << " -->\n";
  int nmax = 0;
  for (const auto& e : table.entries) nmax = std::max(nmax, e.n);
  for (int n = 0; n <= nmax; ++n) {
    os << "\n### n = " << n << "\n\n" << ext_table_markdown_grid(table, n);
  }
  return os.str();
}

std::string ext_table_markdown_grid(const ExtTable& table, int n) {
  // grid keyed by (delta a, delta b) offsets from mu
  std::set<int> das, dbs;
  std::map<std::pair<int, int>, std::pair<int, int>> cells;
  for (const auto& e : table.entries) {
    if (e.n != n) continue;
    int da = e.lambda.a - table.mu.a, db = e.lambda.b - table.mu.b;
    das.insert(da);
    dbs.insert(db);
    cells[{da, db}] = {e.from_resolution, e.from_formula};
  }
  std::ostringstream os;
  if (cells.empty()) return "(empty)\n";
  os << "| da \\ db |";
  for (int db : dbs) os << " " << db << " |";
  os << "\n|---|";
  for (std::size_t i = 0; i < dbs.size(); ++i) os << "---|";
  os << "\n";
  for (auto it = das.rbegin(); it != das.rend(); ++it) {
    os << "| " << *it << " |";
    for (int db : dbs) {
      auto c = cells.find({*it, db});
      if (c == cells.end()) {
        os << " . |";
      } else if (c->second.first == c->second.second) {
        os << " " << c->second.first << " |";
      } else {
        os << " " << c->second.first << "!=" << c->second.second << " |";
      }
    }
    os << "\n";
  }
  return os.str();
}

std::string resolution_to_json(const Resolution& res) {
  nlohmann::json j;
  j["mu"] = {res.mu.a, res.mu.b};
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& s : res.steps) {
    nlohmann::json js;
    js["n"] = s.n;
    nlohmann::json summands = nlohmann::json::array();
    for (const auto& sm : s.projectives.summands)
      summands.push_back({{"vertex", {sm.vertex.a, sm.vertex.b}}, {"shift", sm.shift}});
    js["projectives"] = std::move(summands);
    js["generator_degrees"] = s.generator_degrees;
    nlohmann::json cols = nlohmann::json::array();
    for (const auto& col : s.boundary) {
      nlohmann::json rows = nlohmann::json::array();
      for (const auto& entry : col) {
        nlohmann::json terms = nlohmann::json::array();
        for (const auto& [p, c] : entry.terms()) {
          nlohmann::json word = nlohmann::json::array();
          for (ArrowKind k : p.word) word.push_back(arrow_name(k));
          terms.push_back({{"source", {p.source.a, p.source.b}},
                           {"word", std::move(word)},
                           {"coeff", to_string(c)}});
        }
        rows.push_back(std::move(terms));
      }
      cols.push_back(std::move(rows));
    }
    js["boundary"] = std::move(cols);
    steps.push_back(std::move(js));
  }
  j["steps"] = std::move(steps);
  return j.dump(2);
}

}  // namespace peodd
