#pragma once

#include <string>
#include <vector>

#include "hgk/field.hpp"
#include "hgk/hopf.hpp"
#include "hgk/lattice.hpp"

namespace hgk {

enum class OutputFormat { text, json, csv };
OutputFormat parse_format(const std::string& name);

struct GroupDocument {
  unsigned degree = 1;
  std::vector<std::string> generators;
  std::string name;
};

GroupDocument parse_group_document(const std::string& json_text);
GroupDocument load_group_document(const std::string& path);
std::string group_document_json(const PermGroup& G, const std::string& name);
PermGroup group_from_document(const GroupDocument& doc);

SplittingFieldPresentation parse_presentation_document(const std::string& json_text);
SplittingFieldPresentation load_presentation_document(const std::string& path);

// renderers; all deterministic
std::string render_classify(const std::vector<ClassifyRow>& rows, unsigned degree,
                            OutputFormat format);
std::string render_count(const CountReport& report, OutputFormat format);
std::string render_check(const HGVerdict& verdict, const std::string& name, long long order,
                         OutputFormat format);
std::string render_intermediate(const IntermediateReport& report, OutputFormat format);

std::vector<ClassifyRow> classify_rows_from_json(const std::string& json_text);

}  // namespace hgk
