#include "hgk/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace hgk {

using ordered_json = nlohmann::ordered_json;

OutputFormat parse_format(const std::string& name) {
  if (name == "text") return OutputFormat::text;
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  throw ParseError("unknown format '" + name + "'");
}

namespace {

ordered_json parse_json(const std::string& text, const char* what) {
  ordered_json doc = ordered_json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw ParseError(std::string("malformed JSON in ") + what);
  return doc;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

Rat rat_from_json(const ordered_json& v) {
  if (v.is_number_integer()) return Rat(static_cast<long>(v.get<long long>()));
  if (v.is_string()) return rat_parse(v.get<std::string>());
  throw ParseError("rational values must be integers or \"p/q\" strings");
}

}  // namespace

GroupDocument parse_group_document(const std::string& json_text) {
  ordered_json doc = parse_json(json_text, "group document");
  GroupDocument out;
  if (!doc.contains("degree") || !doc["degree"].is_number_integer())
    throw ParseError("group document needs an integer \"degree\"");
  long long deg = doc["degree"].get<long long>();
  if (deg < 1 || deg > 255) throw ParseError("group degree out of range");
  out.degree = static_cast<unsigned>(deg);
  if (doc.contains("generators")) {
    if (!doc["generators"].is_array()) throw ParseError("\"generators\" must be an array");
    for (const auto& g : doc["generators"]) {
      if (!g.is_string()) throw ParseError("generators must be cycle strings");
      Perm::parse(g.get<std::string>(), out.degree);  // validate eagerly
      out.generators.push_back(g.get<std::string>());
    }
  }
  if (doc.contains("name") && doc["name"].is_string()) out.name = doc["name"].get<std::string>();
  return out;
}

GroupDocument load_group_document(const std::string& path) {
  return parse_group_document(read_file(path));
}

PermGroup group_from_document(const GroupDocument& doc) {
  std::vector<Perm> gens;
  for (const auto& s : doc.generators) gens.push_back(Perm::parse(s, doc.degree));
  return PermGroup::generate(doc.degree, std::move(gens));
}

std::string group_document_json(const PermGroup& G, const std::string& name) {
  ordered_json doc;
  doc["degree"] = G.degree();
  doc["generators"] = ordered_json::array();
  for (const Perm& g : G.generators()) doc["generators"].push_back(g.cycle_string());
  if (!name.empty()) doc["name"] = name;
  return doc.dump(2) + "\n";
}

SplittingFieldPresentation parse_presentation_document(const std::string& json_text) {
  ordered_json doc = parse_json(json_text, "field presentation");
  SplittingFieldPresentation out;
  if (doc.contains("name") && doc["name"].is_string()) out.name = doc["name"].get<std::string>();
  if (!doc.contains("min_poly") || !doc["min_poly"].is_array())
    throw ParseError("field presentation needs a \"min_poly\" array");
  for (const auto& c : doc["min_poly"]) out.min_poly.push_back(rat_from_json(c));
  if (!doc.contains("generators") || !doc["generators"].is_object())
    throw ParseError("field presentation needs a \"generators\" object");
  for (const auto& [name, coeffs] : doc["generators"].items()) {
    RatVec v;
    for (const auto& c : coeffs) v.push_back(rat_from_json(c));
    out.generator_images.emplace_back(name, std::move(v));
  }
  if (!doc.contains("binding") || !doc["binding"].is_object())
    throw ParseError("field presentation needs a \"binding\" object");
  for (const auto& [name, cyc] : doc["binding"].items())
    out.binding.emplace_back(name, cyc.get<std::string>());
  return out;
}

SplittingFieldPresentation load_presentation_document(const std::string& path) {
  return parse_presentation_document(read_file(path));
}

// ---------------------------------------------------------------------------

namespace {

ordered_json classify_row_json(const ClassifyRow& row) {
  ordered_json j;
  j["name"] = row.name;
  j["order"] = row.order;
  j["verdict"] = row.verdict;
  j["decided_by"] = row.decided_by;
  if (!row.witness_gprime.empty()) {
    j["witness_gprime"] = row.witness_gprime;
    j["witness_complement"] = row.witness_complement;
  }
  if (row.order_only) j["order_only"] = true;
  return j;
}

}  // namespace

std::string render_classify(const std::vector<ClassifyRow>& rows, unsigned degree,
                            OutputFormat format) {
  if (format == OutputFormat::json) {
    ordered_json doc;
    doc["degree"] = degree;
    doc["rows"] = ordered_json::array();
    for (const auto& r : rows) doc["rows"].push_back(classify_row_json(r));
    return doc.dump(2) + "\n";
  }
  if (format == OutputFormat::csv) {
    std::ostringstream out;
    out << "name,order,verdict,witness_gprime,witness_complement\n";
    for (const auto& r : rows)
      out << r.name << ',' << r.order << ',' << r.verdict << ',' << r.witness_gprime << ','
          << r.witness_complement << '\n';
    return out.str();
  }
  std::ostringstream out;
  out << "degree " << degree << "\n";
  std::size_t w = 4;
  for (const auto& r : rows) w = std::max(w, r.name.size());
  for (const auto& r : rows) {
    out << "  " << r.name << std::string(w - r.name.size() + 2, ' ') << r.order << "\t"
        << r.verdict;
    if (!r.witness_gprime.empty())
      out << "  [G'=" << r.witness_gprime << ", N=" << r.witness_complement << "]";
    out << "\n";
  }
  return out.str();
}

std::vector<ClassifyRow> classify_rows_from_json(const std::string& json_text) {
  ordered_json doc = parse_json(json_text, "classify output");
  std::vector<ClassifyRow> rows;
  for (const auto& j : doc["rows"]) {
    ClassifyRow r;
    r.name = j["name"].get<std::string>();
    r.order = j["order"].get<long long>();
    r.verdict = j["verdict"].get<std::string>();
    r.decided_by = j["decided_by"].get<std::string>();
    if (j.contains("witness_gprime")) {
      r.witness_gprime = j["witness_gprime"].get<std::string>();
      r.witness_complement = j["witness_complement"].get<std::string>();
    }
    if (j.contains("order_only")) r.order_only = j["order_only"].get<bool>();
    rows.push_back(std::move(r));
  }
  return rows;
}

std::string render_count(const CountReport& report, OutputFormat format) {
  if (format == OutputFormat::json) {
    ordered_json doc;
    doc["total"] = report.total;
    ordered_json types = ordered_json::object();
    for (const auto& [name, count] : report.per_type) types[name] = count;
    doc["per_type"] = types;
    ordered_json wit = ordered_json::array();
    for (const auto& s : report.witnesses) {
      ordered_json w;
      w["type"] = s.type_name;
      ordered_json gens = ordered_json::array();
      for (const Perm& g : s.regular_N.generators()) gens.push_back(g.cycle_string());
      w["generators"] = gens;
      w["classical"] = s.is_classical;
      w["canonical_nonclassical"] = s.is_canonical_nonclassical;
      w["almost_classical"] = s.acg_witness.has_value();
      wit.push_back(w);
    }
    doc["witnesses"] = wit;
    return doc.dump(2) + "\n";
  }
  std::ostringstream out;
  if (format == OutputFormat::csv) {
    out << "type,count\n";
    for (const auto& [name, count] : report.per_type)
      if (count > 0) out << name << ',' << count << '\n';
    out << "total," << report.total << '\n';
    return out.str();
  }
  out << "total " << report.total << "\n";
  for (const auto& [name, count] : report.per_type)
    if (count > 0) out << "  " << name << ": " << count << "\n";
  for (const auto& s : report.witnesses) {
    out << "  - type " << s.type_name << ": N = <";
    bool first = true;
    for (const Perm& g : s.regular_N.generators()) {
      if (!first) out << ", ";
      out << g.cycle_string();
      first = false;
    }
    out << ">";
    if (s.is_classical) out << "  (classical)";
    if (s.is_canonical_nonclassical) out << "  (canonical non-classical)";
    if (s.acg_witness) out << "  (from a normal complement)";
    out << "\n";
  }
  return out.str();
}

std::string render_check(const HGVerdict& verdict, const std::string& name, long long order,
                         OutputFormat format) {
  if (format == OutputFormat::json) {
    ordered_json doc;
    if (!name.empty()) doc["name"] = name;
    doc["order"] = order;
    doc["verdict"] = verdict.verdict_string();
    doc["hopf_galois"] = verdict.hopf_galois;
    doc["decided_by"] = decided_by_string(verdict.decided_by);
    if (verdict.witness) {
      ordered_json gens = ordered_json::array();
      for (const Perm& g : verdict.witness->regular_N.generators())
        gens.push_back(g.cycle_string());
      doc["witnesses"] = gens;
      doc["witness_type"] = verdict.witness->type_name;
    }
    return doc.dump(2) + "\n";
  }
  std::ostringstream out;
  out << (name.empty() ? std::string("extension") : name) << " (order " << order
      << "): " << verdict.verdict_string() << ", decided_by=" << decided_by_string(verdict.decided_by);
  if (verdict.witness) {
    out << "\n  witness N (type " << verdict.witness->type_name << "): ";
    bool first = true;
    for (const Perm& g : verdict.witness->regular_N.generators()) {
      if (!first) out << ", ";
      out << g.cycle_string();
      first = false;
    }
  }
  out << "\n";
  return out.str();
}

std::string render_intermediate(const IntermediateReport& report, OutputFormat format) {
  if (format == OutputFormat::json) {
    ordered_json doc = ordered_json::array();
    for (const auto& row : report.rows) {
      ordered_json j;
      j["index"] = row.index;
      j["verdict"] = row.verdict;
      j["exists_marker"] = row.exists_marker;
      ordered_json cls = ordered_json::array();
      for (const auto& c : row.classes) {
        ordered_json cj;
        ordered_json gens = ordered_json::array();
        for (const Perm& g : c.Gpp.generators()) gens.push_back(g.cycle_string());
        cj["subgroup"] = gens;
        cj["verdict"] = row_verdict_string(c.verdict);
        if (!c.type_name.empty()) cj["type"] = c.type_name;
        if (!c.skip_reason.empty()) cj["skip_reason"] = c.skip_reason;
        cls.push_back(cj);
      }
      j["classes"] = cls;
      doc.push_back(j);
    }
    return doc.dump(2) + "\n";
  }
  std::ostringstream out;
  if (format == OutputFormat::csv) {
    out << "index,verdict\n";
    for (const auto& row : report.rows) out << row.index << ',' << row.verdict << '\n';
    return out.str();
  }
  for (const auto& row : report.rows) {
    out << "  [F:k] = " << row.index << ": " << row.verdict << "\n";
    for (const auto& c : row.classes) {
      out << "      G'' = <";
      bool first = true;
      for (const Perm& g : c.Gpp.generators()) {
        if (!first) out << ", ";
        out << g.cycle_string();
        first = false;
      }
      out << ">: " << row_verdict_string(c.verdict);
      if (!c.type_name.empty()) out << " (type " << c.type_name << ")";
      if (!c.skip_reason.empty()) out << " (" << c.skip_reason << ")";
      out << "\n";
    }
  }
  return out.str();
}

}  // namespace hgk
