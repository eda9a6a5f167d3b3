#include <sstream>

#include "framegraph/cli.hpp"

namespace framegraph {

namespace {

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

Json note_json(const FormulaNote& n) {
  Json j;
  j["name"] = n.name;
  if (n.value) j["value"] = *n.value;
  if (n.min) j["min"] = *n.min;
  if (n.max) j["max"] = *n.max;
  if (n.literature_lower) j["literature_lower"] = true;
  j["citation"] = n.citation;
  return j;
}

std::string params_text(const Table1Instance& inst) {
  std::string s;
  for (const auto& [k, v] : inst.params) {
    if (!s.empty()) s += ';';
    s += k + "=" + std::to_string(v);
  }
  return s;
}

}  // namespace

Json witness_json(const OSWitness& w) {
  return Json{{"ordered", w.ordered}, {"companions", w.companions}};
}

Json frame_json(const Frame& f) {
  Json vectors = Json::array();
  for (int c = 0; c < f.count(); ++c) {
    Json v = Json::array();
    for (int r = 0; r < f.dim(); ++r) {
      const Scalar z = f.vectors(r, c);
      if (f.field == Field::real) {
        v.push_back(z.real());
      } else {
        v.push_back(Json::array({z.real(), z.imag()}));
      }
    }
    vectors.push_back(std::move(v));
  }
  return Json{{"field", field_name(f.field)}, {"dim", f.dim()}, {"vectors", vectors}};
}

Json bounds_json(const BoundsReport& r) {
  Json j;
  j["graph"] = r.graph;
  j["order"] = r.order;
  j["field"] = field_name(r.field);
  j["lower"] = {{"value", r.lower.value},
                {"cert", r.lower.cert},
                {"literature_sourced", r.lower_literature_sourced}};
  j["upper"] = {{"value", r.upper.value}, {"cert", r.upper.cert}};
  j["exact"] = r.dims.has_value();
  if (r.dims) j["dims"] = {{"min", r.dims->first}, {"max", r.dims->second}};
  Json notes = Json::array();
  for (const auto& n : r.formula_notes) notes.push_back(note_json(n));
  j["formula_notes"] = notes;

  Json certs;
  if (r.os_witness) {
    Json w = witness_json(*r.os_witness);
    w["size"] = r.os_witness->size();
    w["exact"] = r.os_exact;
    certs["os_witness"] = w;
  }
  if (r.independence) certs["independence"] = *r.independence;
  if (r.clique_cover) {
    certs["clique_cover"] = {{"value", r.clique_cover->value},
                             {"exact", r.clique_cover_exact},
                             {"cliques", r.clique_cover->cliques}};
  }
  if (r.connectivity) certs["connectivity"] = *r.connectivity;
  if (r.realization) {
    Json f = frame_json(*r.realization);
    f["method"] = r.realization_method;
    certs["realization"] = f;
  }
  j["certificates"] = certs;
  return j;
}

Json row_json(const HarnessRow& row) {
  const auto& inst = row.instance;
  Json j;
  j["index"] = row.index;
  j["row"] = inst.row;
  j["graph"] = inst.expr.to_string();
  Json params = Json::object();
  for (const auto& [k, v] : inst.params) params[k] = v;
  j["params"] = params;
  if (inst.interval()) {
    j["expected"] = {{"min", *inst.expected_min}, {"max", inst.expected},
                     {"min_literature_sourced", true}};
  } else {
    j["expected"] = inst.expected;
  }
  if (row.report) {
    const auto& r = *row.report;
    j["lower"] = {{"value", r.lower.value},
                  {"cert", r.lower.cert},
                  {"literature_sourced", r.lower_literature_sourced}};
    j["upper"] = {{"value", r.upper.value}, {"cert", r.upper.cert}};
    j["realized"] = {{"rank", row.realized},
                     {"method", r.realization_method},
                     {"verified", row.realization_verified}};
    if (row.kronecker_rank) j["kronecker_rank"] = *row.kronecker_rank;
    if (row.probe) {
      j["probe"] = {{"rank", row.probe->rank},
                    {"success", row.probe->success},
                    {"note", row.probe_note}};
    }
    j["exact"] = row.exact;
    j["verified"] = {{"os_witness", row.os_verified}, {"clique_cover", row.cover_verified}};
    j["bounds"] = bounds_json(r);
  }
  if (!row.error.empty()) j["error"] = row.error;
  j["status"] = row.pass ? "PASS" : "FAIL";
  return j;
}

std::string bounds_csv(const BoundsReport& r) {
  std::ostringstream out;
  out << "graph,order,field,lower,lower_cert,upper,upper_cert,literature_lower,dims_min,"
         "dims_max,formula_notes\n";
  std::string notes;
  for (const auto& n : r.formula_notes) {
    if (!notes.empty()) notes += ';';
    notes += n.name;
  }
  out << csv_cell(r.graph) << ',' << r.order << ',' << field_name(r.field) << ','
      << r.lower.value << ',' << r.lower.cert << ',' << r.upper.value << ',' << r.upper.cert
      << ',' << (r.lower_literature_sourced ? "true" : "false") << ','
      << (r.dims ? std::to_string(r.dims->first) : "") << ','
      << (r.dims ? std::to_string(r.dims->second) : "") << ',' << csv_cell(notes) << '\n';
  return out.str();
}

std::string table1_csv(const std::vector<HarnessRow>& rows) {
  std::ostringstream out;
  out << "index,row,graph,params,expected,lower,lower_cert,upper,upper_cert,realized,status\n";
  for (const auto& row : rows) {
    const auto& inst = row.instance;
    const std::string expected =
        inst.interval() ? std::to_string(*inst.expected_min) + ".." + std::to_string(inst.expected)
                        : std::to_string(inst.expected);
    out << row.index << ',' << csv_cell(inst.row) << ',' << csv_cell(inst.expr.to_string())
        << ',' << csv_cell(params_text(inst)) << ',' << expected << ',';
    if (row.report) {
      out << row.report->lower.value << ',' << row.report->lower.cert << ','
          << row.report->upper.value << ',' << row.report->upper.cert << ',' << row.realized;
    } else {
      out << ",,,,";
    }
    out << ',' << (row.pass ? "PASS" : "FAIL") << '\n';
  }
  return out.str();
}

}  // namespace framegraph
