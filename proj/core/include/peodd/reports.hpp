#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "peodd/relations.hpp"
#include "peodd/resolution.hpp"

namespace peodd {

enum class ReportFormat { json, csv, md };
ReportFormat format_from_name(const std::string& s);

/// map (mu, lambda, n) -> N^n_n with both computed values kept side by side.
struct ExtTable {
  Weight mu{0, 0};
  std::vector<ExtEntry> entries;
  bool all_agree() const;
};

std::string render_relation_report(const std::vector<RelationCheck>& checks,
                                   ReportFormat fmt, const std::string& config_line);

struct MultiplicityRow {
  Weight lambda;
  Weight mu;
  int targets;
  int pipeline;
  int closed_form;
};

std::string render_multiplicity_report(const std::vector<MultiplicityRow>& rows,
                                       ReportFormat fmt, const std::string& config_line);

std::string render_ext_table(const ExtTable& table, ReportFormat fmt,
                             const std::string& config_line);

std::string resolution_to_json(const Resolution& res);

std::string ext_table_markdown_grid(const ExtTable& table, int n);

}  // namespace peodd
