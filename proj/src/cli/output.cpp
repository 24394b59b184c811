#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "qgraph/graph6.hpp"
#include "qgraph/output.hpp"

namespace qgraph {

namespace {

using Json = nlohmann::ordered_json;

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json coefficients_json(const IntPolynomial& p) {
  Json arr = Json::array();
  for (const auto& c : p.coefficients()) {
    if (c.fits_slong_p()) {
      arr.push_back(c.get_si());
    } else {
      arr.push_back(c.get_str());
    }
  }
  return arr;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

std::string csv_row(std::initializer_list<std::string> fields) {
  std::string row;
  bool first = true;
  for (const auto& f : fields) {
    if (!first) row += ',';
    row += csv_field(f);
    first = false;
  }
  return row + "\n";
}

std::string delta_text(const std::optional<int>& delta) {
  return delta ? std::to_string(*delta) : "";
}

Json class_json(const ClassKey& key, std::size_t count) {
  return {{"g", key.edges}, {"delta", key.delta}, {"count", count}};
}

Json diff_json(const TableDiff& d) {
  return {{"class", to_string(d.key)},  {"index", d.index},
          {"printed", d.printed},       {"computed", d.computed},
          {"verdict", to_string(d.verdict)}, {"graph6", d.graph6},
          {"duplicate", d.duplicate}};
}

void unsupported(Format format, const char* what) {
  throw std::invalid_argument("format " + to_string(format) + " is not available for " + what);
}

}  // namespace

std::string to_string(Format format) {
  switch (format) {
    case Format::Json:
      return "json";
    case Format::Csv:
      return "csv";
    case Format::Graph6:
      return "graph6";
    case Format::Dot:
      return "dot";
    case Format::Text:
      return "text";
  }
  return "text";
}

Format parse_format(const std::string& name) {
  for (Format f : {Format::Json, Format::Csv, Format::Graph6, Format::Dot, Format::Text}) {
    if (to_string(f) == name) return f;
  }
  throw std::invalid_argument("unknown format \"" + name + "\"");
}

std::string format_decimal(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", kLambdaDigits, value);
  return buf;
}

std::string render_graphs(const std::vector<Graph>& graphs, Format format) {
  std::string out;
  switch (format) {
    case Format::Graph6:
      for (const auto& g : graphs) out += to_graph6(g) + "\n";
      return out;
    case Format::Dot:
      for (std::size_t i = 0; i < graphs.size(); ++i) {
        out += to_dot(graphs[i], "G" + std::to_string(i + 1));
      }
      return out;
    case Format::Text:
      for (const auto& g : graphs) {
        out += to_graph6(g) + " p=" + std::to_string(g.vertex_count()) + " class=" +
               to_string(class_key(g)) + "\n";
      }
      return out;
    case Format::Csv:
      out = csv_row({"graph6", "p", "g", "delta"});
      for (const auto& g : graphs) {
        const ClassKey k = class_key(g);
        out += csv_row({to_graph6(g), std::to_string(g.vertex_count()), std::to_string(k.edges),
                        std::to_string(k.delta)});
      }
      return out;
    case Format::Json: {
      Json arr = Json::array();
      for (const auto& g : graphs) {
        const ClassKey k = class_key(g);
        arr.push_back({{"graph6", to_graph6(g)},
                       {"p", g.vertex_count()},
                       {"g", k.edges},
                       {"delta", k.delta}});
      }
      return dump(arr);
    }
  }
  return out;
}

std::string render_charpoly(const std::vector<Graph>& graphs, Format format) {
  std::string out;
  switch (format) {
    case Format::Text:
      for (const auto& g : graphs) out += charpoly_psi(g).to_string() + "\n";
      return out;
    case Format::Csv:
      out = csv_row({"graph6", "g", "delta", "psi"});
      for (const auto& g : graphs) {
        const ClassKey k = class_key(g);
        out += csv_row({to_graph6(g), std::to_string(k.edges), std::to_string(k.delta),
                        charpoly_psi(g).to_string()});
      }
      return out;
    case Format::Json: {
      Json arr = Json::array();
      for (const auto& g : graphs) {
        const ClassKey k = class_key(g);
        const IntPolynomial psi = charpoly_psi(g);
        arr.push_back({{"graph6", to_graph6(g)},
                       {"g", k.edges},
                       {"delta", k.delta},
                       {"psi", psi.to_string()},
                       {"coefficients", coefficients_json(psi)}});
      }
      return dump(arr);
    }
    default:
      unsupported(format, "charpoly");
  }
  return out;
}

std::string render_spectrum(const std::string& graph6, const SpectrumReport& report,
                            Format format) {
  auto labels = [](const Eigenvalue& e) {
    std::string s;
    for (const auto& c : e.contributions) {
      if (!s.empty()) s += ' ';
      s += c.label();
    }
    return s;
  };
  std::string out;
  switch (format) {
    case Format::Text:
      out = "graph6 " + graph6 + "\npsi " + report.psi.to_string() + "\ndelta " +
            std::to_string(report.delta) + "\n";
      for (std::size_t i = 0; i < report.eigenvalues.size(); ++i) {
        const auto& e = report.eigenvalues[i];
        out += std::to_string(i + 1) + " " + format_decimal(e.lambda) + " x" +
               std::to_string(e.multiplicity) + " " + labels(e) + "\n";
      }
      return out;
    case Format::Csv:
      out = csv_row({"index", "lambda", "multiplicity", "labels"});
      for (std::size_t i = 0; i < report.eigenvalues.size(); ++i) {
        const auto& e = report.eigenvalues[i];
        out += csv_row({std::to_string(i + 1), format_decimal(e.lambda),
                        std::to_string(e.multiplicity), labels(e)});
      }
      return out;
    case Format::Json: {
      Json roots = Json::array();
      for (const auto& r : report.roots) {
        roots.push_back({{"value", format_decimal(r.value)},
                         {"multiplicity", r.multiplicity},
                         {"low", r.low.get_str()},
                         {"high", r.high.get_str()}});
      }
      Json eig = Json::array();
      for (const auto& e : report.eigenvalues) {
        Json contribs = Json::array();
        for (const auto& c : e.contributions) {
          contribs.push_back({{"label", c.label()}, {"multiplicity", c.multiplicity}});
        }
        eig.push_back({{"lambda", format_decimal(e.lambda)},
                       {"multiplicity", e.multiplicity},
                       {"contributions", contribs}});
      }
      Json j = {{"graph6", graph6},
                {"length", format_decimal(report.length)},
                {"requested", report.requested},
                {"delta", report.delta},
                {"psi", report.psi.to_string()},
                {"psi_coefficients", coefficients_json(report.psi)},
                {"precision_digits", kLambdaDigits},
                {"psi_roots", roots},
                {"eigenvalues", eig}};
      return dump(j);
    }
    default:
      unsupported(format, "spectrum");
  }
  return out;
}

std::string render_scan(const CospectralReport& report, Format format) {
  std::string out;
  switch (format) {
    case Format::Text:
      out = "mode " + to_string(report.mode) + "\nrange " + std::to_string(report.min_edges) +
            ".." + std::to_string(report.max_edges) + "\n";
      for (const auto& c : report.classes) {
        out += "class " + to_string(c.key) + " " + std::to_string(c.count) + "\n";
      }
      out += "pairs " + std::to_string(report.pairs.size()) + "\n";
      for (const auto& p : report.pairs) {
        out += "pair " + to_string(p.key) + " " + p.a + " " + p.b + " psi_a=" + p.psi_a +
               " psi_b=" + p.psi_b + " shared=" + p.shared + "\n";
      }
      return out;
    case Format::Csv:
      out = csv_row({"record", "g", "delta", "count", "a", "b", "signature"});
      for (const auto& c : report.classes) {
        out += csv_row({"class", std::to_string(c.key.edges), std::to_string(c.key.delta),
                        std::to_string(c.count), "", "", ""});
      }
      for (const auto& p : report.pairs) {
        out += csv_row({"pair", std::to_string(p.key.edges), std::to_string(p.key.delta), "", p.a,
                        p.b, p.shared});
      }
      return out;
    case Format::Json: {
      Json classes = Json::array();
      for (const auto& c : report.classes) classes.push_back(class_json(c.key, c.count));
      Json pairs = Json::array();
      for (const auto& p : report.pairs) {
        pairs.push_back({{"a", p.a},
                         {"b", p.b},
                         {"signature", p.shared},
                         {"g", p.key.edges},
                         {"delta", p.key.delta},
                         {"psi_a", p.psi_a},
                         {"psi_b", p.psi_b}});
      }
      Json j = {{"mode", to_string(report.mode)},
                {"range", {report.min_edges, report.max_edges}},
                {"classes", classes},
                {"pairs", pairs},
                {"paper_diffs", Json::array()}};
      return dump(j);
    }
    default:
      unsupported(format, "scan");
  }
  return out;
}

std::string render_table_check(const TableCheck& check, Format format) {
  std::string out;
  switch (format) {
    case Format::Text: {
      for (const auto& d : check.diffs) {
        out += to_string(d.key) + "^" + std::to_string(d.index) + " " + to_string(d.verdict) +
               " printed=" + d.printed;
        if (d.verdict != Verdict::Exact) out += " computed=" + d.computed;
        if (!d.graph6.empty()) out += " graph6=" + d.graph6;
        if (d.duplicate) out += " duplicate";
        out += "\n";
      }
      out += "exact " + std::to_string(check.count(Verdict::Exact)) + "\n";
      out += "typo-corrected " + std::to_string(check.count(Verdict::TypoCorrected)) + "\n";
      out += "unmatched " + std::to_string(check.count(Verdict::Unmatched)) + "\n";
      for (const auto& [g, n] : check.enumerated_per_edges) {
        const auto it = check.printed_per_edges.find(g);
        const std::size_t printed = it == check.printed_per_edges.end() ? 0 : it->second;
        out += "g=" + std::to_string(g) + " printed " + std::to_string(printed) + " enumerated " +
               std::to_string(n) + "\n";
      }
      for (const auto& c : check.count_discrepancies) {
        out += "count g=" + std::to_string(c.edges) +
               (c.delta ? " delta=" + std::to_string(*c.delta) : std::string(" total")) +
               " stated " + std::to_string(c.stated) + " enumerated " +
               std::to_string(c.enumerated) + "\n";
      }
      for (const auto& u : check.unclaimed) {
        out += "unclaimed " + to_string(u.key) + " " + u.graph6 + " " + u.psi + "\n";
      }
      return out;
    }
    case Format::Csv:
      out = csv_row({"record", "class", "index", "printed", "computed", "verdict", "graph6"});
      for (const auto& d : check.diffs) {
        out += csv_row({"paper_diff", to_string(d.key), std::to_string(d.index), d.printed,
                        d.computed, to_string(d.verdict), d.graph6});
      }
      for (const auto& u : check.unclaimed) {
        out += csv_row({"unclaimed", to_string(u.key), "", "", u.psi, "", u.graph6});
      }
      for (const auto& c : check.count_discrepancies) {
        out += csv_row({"count", "(" + std::to_string(c.edges) + "," + delta_text(c.delta) + ")",
                        "", std::to_string(c.stated), std::to_string(c.enumerated), "", ""});
      }
      return out;
    case Format::Json: {
      Json classes = Json::array();
      for (const auto& [key, n] : check.class_counts) classes.push_back(class_json(key, n));
      Json diffs = Json::array();
      for (const auto& d : check.diffs) diffs.push_back(diff_json(d));
      Json unclaimed = Json::array();
      for (const auto& u : check.unclaimed) {
        unclaimed.push_back({{"class", to_string(u.key)}, {"graph6", u.graph6}, {"psi", u.psi}});
      }
      Json counts = Json::array();
      for (const auto& c : check.count_discrepancies) {
        Json row = {{"g", c.edges}, {"stated", c.stated}, {"enumerated", c.enumerated}};
        row["delta"] = c.delta ? Json(*c.delta) : Json(nullptr);
        counts.push_back(row);
      }
      int lo = check.enumerated_per_edges.empty() ? 0 : check.enumerated_per_edges.begin()->first;
      int hi = check.enumerated_per_edges.empty() ? 0 : check.enumerated_per_edges.rbegin()->first;
      Json j = {{"mode", "exact-text"},
                {"range", {lo, hi}},
                {"classes", classes},
                {"pairs", Json::array()},
                {"paper_diffs", diffs},
                {"unclaimed", unclaimed},
                {"count_discrepancies", counts},
                {"summary",
                 {{"printed", check.diffs.size()},
                  {"exact", check.count(Verdict::Exact)},
                  {"typo_corrected", check.count(Verdict::TypoCorrected)},
                  {"unmatched", check.count(Verdict::Unmatched)}}}};
      return dump(j);
    }
    default:
      unsupported(format, "verify-paper");
  }
  return out;
}

}  // namespace qgraph
