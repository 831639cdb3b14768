#include "vnum/formats.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <sstream>

namespace vnum {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

bool parse_int(std::string_view tok, int& out) {
  const auto* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, out);
  return ec == std::errc{} && ptr == end;
}

std::string at_line(std::size_t line, const std::string& msg) {
  return "line " + std::to_string(line) + ": " + msg;
}

// Meaningful lines with their 1-based line numbers, comments stripped.
std::vector<std::pair<std::size_t, std::string_view>> content_lines(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string_view>> out;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (!line.empty()) out.emplace_back(lineno, line);
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  return out;
}

ordered_json opt(const std::optional<bool>& b) { return b ? ordered_json(*b) : ordered_json(nullptr); }

std::string tsv_bool(const std::optional<bool>& b) {
  if (!b) return "NA";
  return *b ? "true" : "false";
}

}  // namespace

Clutter InputDocument::clutter() const {
  std::vector<VertexSet> sets;
  sets.reserve(edges.size());
  for (const auto& e : edges) sets.push_back(VertexSet::from_members(vertex_count, e));
  return Clutter(vertex_count, std::move(sets));
}

Graph InputDocument::graph() const {
  std::vector<Edge> list;
  for (const auto& e : edges) {
    if (e.size() != 2) throw InputError("document is not a graph: it has an edge with " + std::to_string(e.size()) + " vertices");
    list.emplace_back(e[0], e[1]);
  }
  return Graph(vertex_count, list);
}

InputDocument parse_edge_list(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw InputError("empty input");
  InputDocument doc;
  {
    const auto& [lineno, line] = lines.front();
    const auto head = tokens(line);
    if (head.size() != 2 || (head[0] != "graph" && head[0] != "clutter"))
      throw InputError(at_line(lineno, "expected 'graph <s>' or 'clutter <s>'"));
    doc.kind = head[0] == "graph" ? InputDocument::Kind::Graph : InputDocument::Kind::Clutter;
    if (!parse_int(head[1], doc.vertex_count) || doc.vertex_count < 0 || doc.vertex_count > kMaxVertices)
      throw InputError(at_line(lineno, "vertex count must be an integer in 0.." + std::to_string(kMaxVertices)));
  }
  const bool graph = doc.kind == InputDocument::Kind::Graph;
  std::vector<std::pair<Mask, std::size_t>> seen;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto& [lineno, line] = lines[k];
    std::vector<int> edge;
    Mask mask = 0;
    for (auto tok : tokens(line)) {
      int v = 0;
      if (!parse_int(tok, v)) throw InputError(at_line(lineno, "malformed vertex index '" + std::string(tok) + "'"));
      if (v < 1 || v > doc.vertex_count)
        throw InputError(at_line(lineno, "vertex index " + std::to_string(v) + " out of range 1.." + std::to_string(doc.vertex_count)));
      const Mask bit = Mask{1} << (v - 1);
      if (mask & bit) {
        throw InputError(at_line(lineno, graph ? "loop at vertex " + std::to_string(v)
                                               : "vertex " + std::to_string(v) + " repeated in an edge"));
      }
      mask |= bit;
      edge.push_back(v - 1);
    }
    if (graph && edge.size() != 2) throw InputError(at_line(lineno, "graph edges need exactly two vertices"));
    for (const auto& [other, other_line] : seen) {
      if (other == mask) throw InputError(at_line(lineno, "duplicate of the edge on line " + std::to_string(other_line)));
      if ((other & ~mask) == 0 || (mask & ~other) == 0)
        throw InputError(at_line(lineno, "edge is comparable with the edge on line " + std::to_string(other_line) +
                                             " (edges must form an antichain)"));
    }
    seen.emplace_back(mask, lineno);
    std::sort(edge.begin(), edge.end());
    doc.edges.push_back(std::move(edge));
  }
  return doc;
}

InputDocument parse_graph6(std::string_view line) {
  line = trim(line);
  if (line.substr(0, 10) == ">>graph6<<") line.remove_prefix(10);
  if (line.empty()) throw InputError("graph6: empty string");
  for (char ch : line) {
    const auto b = static_cast<unsigned char>(ch);
    if (b < 63 || b > 126) throw InputError("graph6: invalid byte " + std::to_string(b));
  }
  std::size_t pos = 0;
  long n = 0;
  if (line[0] != 126) {
    n = line[0] - 63;
    pos = 1;
  } else {
    if (line.size() < 4 || line[1] == 126) throw InputError("graph6: unsupported or truncated vertex count");
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | (line[i] - 63);
    pos = 4;
  }
  if (n > kMaxVertices) throw InputError("graph6: more than " + std::to_string(kMaxVertices) + " vertices");
  const std::size_t nbits = static_cast<std::size_t>(n * (n - 1) / 2);
  const std::size_t nbytes = (nbits + 5) / 6;
  if (line.size() - pos < nbytes) throw InputError("graph6: truncated adjacency data");
  if (line.size() - pos > nbytes) throw InputError("graph6: trailing data after adjacency bits");

  InputDocument doc;
  doc.kind = InputDocument::Kind::Graph;
  doc.vertex_count = static_cast<int>(n);
  std::size_t bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      const int byte = line[pos + bit / 6] - 63;
      if (byte & (1 << (5 - bit % 6))) doc.edges.push_back({i, j});
    }
  }
  std::sort(doc.edges.begin(), doc.edges.end());
  return doc;
}

std::string to_graph6(const Graph& g) {
  const int n = g.vertex_count();
  std::string out;
  if (n < 63) {
    out += static_cast<char>(n + 63);
  } else {
    out += static_cast<char>(126);
    for (int shift = 12; shift >= 0; shift -= 6) out += static_cast<char>(((n >> shift) & 63) + 63);
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out += static_cast<char>(acc + 63);
        acc = filled = 0;
      }
    }
  }
  if (filled) out += static_cast<char>((acc << (6 - filled)) + 63);
  return out;
}

InputDocument parse_input(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw InputError("empty input");
  const auto head = tokens(lines.front().second);
  if (!head.empty() && (head[0] == "graph" || head[0] == "clutter")) return parse_edge_list(text);
  if (lines.size() != 1) throw InputError("expected an edge list or a single graph6 line");
  return parse_graph6(lines.front().second);
}

std::string render_edge_list(const InputDocument& doc) {
  std::string out = (doc.kind == InputDocument::Kind::Graph ? "graph " : "clutter ") + std::to_string(doc.vertex_count) + '\n';
  const auto c = doc.clutter();
  for (const auto& e : c.edges()) {
    bool first = true;
    for (int v : e) {
      if (!first) out += ' ';
      out += std::to_string(v + 1);
      first = false;
    }
    out += '\n';
  }
  return out;
}

std::vector<int> one_based(const VertexSet& s) {
  std::vector<int> out;
  for (int v : s) out.push_back(v + 1);
  return out;
}

std::string report_json(const InvariantReport& r, const std::string& name, int indent) {
  ordered_json j;
  j["schema"] = "vnum/1";
  j["name"] = name;
  j["kind"] = r.is_graph ? "graph" : "clutter";
  j["vertices"] = r.vertex_count;
  j["edges"] = r.edge_count;
  j["isolated_vertices"] = one_based(r.isolated_vertices);
  j["v"] = r.v;
  j["v_witness"] = one_based(r.v_witness);
  j["beta0"] = r.beta0;
  j["alpha0"] = r.alpha0;
  j["i"] = r.i_dom;
  j["gamma"] = r.gamma ? ordered_json(*r.gamma) : ordered_json(nullptr);
  j["dim"] = r.dim;
  j["height"] = r.height;
  j["well_covered"] = r.well_covered;
  j["one_well_covered"] = r.one_well_covered;
  j["vertex_decomposable"] = r.vertex_decomposable;
  j["w2"] = opt(r.w2);
  j["edge_critical"] = opt(r.edge_critical);
  if (r.edge_critical_violation) {
    j["edge_critical_violation"] = {r.edge_critical_violation->first + 1, r.edge_critical_violation->second + 1};
  } else {
    j["edge_critical_violation"] = nullptr;
  }
  j["linear_resolution"] = opt(r.linear_resolution);
  ordered_json fields = ordered_json::object();
  for (const auto& f : r.fields) {
    ordered_json fj;
    fj["reg"] = f.reg;
    fj["cohen_macaulay"] = f.cohen_macaulay;
    fj["symbolic_square_cm"] = opt(f.symbolic_square_cm);
    fj["symbolic_square_oracle_checked"] = f.symbolic_square_oracle_checked;
    fields[to_string(f.field)] = std::move(fj);
  }
  j["fields"] = std::move(fields);
  return j.dump(indent);
}

std::string error_json(const std::string& name, const std::string& error, int indent) {
  ordered_json j;
  j["schema"] = "vnum/1";
  j["name"] = name;
  j["error"] = error;
  return j.dump(indent);
}

std::string report_tsv_header(const std::vector<Field>& fields) {
  std::string out =
      "name\tkind\tvertices\tedges\tv\tbeta0\talpha0\ti\tgamma\tdim\twell_covered\tw2\tedge_critical\t"
      "vertex_decomposable\tlinear_resolution";
  for (Field k : fields) {
    const auto f = to_string(k);
    out += "\treg_" + f + "\tcm_" + f + "\tsymbolic_square_cm_" + f;
  }
  return out + "\terror";
}

std::string report_tsv_row(const InvariantReport& r, const std::string& name, const std::vector<Field>& fields) {
  std::ostringstream os;
  os << name << '\t' << (r.is_graph ? "graph" : "clutter") << '\t' << r.vertex_count << '\t' << r.edge_count << '\t'
     << r.v << '\t' << r.beta0 << '\t' << r.alpha0 << '\t' << r.i_dom << '\t'
     << (r.gamma ? std::to_string(*r.gamma) : "NA") << '\t' << r.dim << '\t' << tsv_bool(r.well_covered) << '\t'
     << tsv_bool(r.w2) << '\t' << tsv_bool(r.edge_critical) << '\t' << tsv_bool(r.vertex_decomposable) << '\t'
     << tsv_bool(r.linear_resolution);
  for (Field k : fields) {
    const auto it = std::find_if(r.fields.begin(), r.fields.end(), [&](const FieldInvariants& f) { return f.field == k; });
    if (it == r.fields.end()) {
      os << "\tNA\tNA\tNA";
    } else {
      os << '\t' << it->reg << '\t' << tsv_bool(it->cohen_macaulay) << '\t' << tsv_bool(it->symbolic_square_cm);
    }
  }
  os << '\t';
  return os.str();
}

std::string error_tsv_row(const std::string& name, const std::string& error, const std::vector<Field>& fields) {
  std::string out = name;
  const std::size_t blanks = 14 + 3 * fields.size();
  for (std::size_t i = 0; i < blanks; ++i) out += '\t';
  std::string clean = error;
  std::replace_if(clean.begin(), clean.end(), [](char ch) { return ch == '\t' || ch == '\n'; }, ' ');
  return out + '\t' + clean;
}

std::string report_text(const InvariantReport& r, const std::string& name) {
  std::ostringstream os;
  auto flag = [](const std::optional<bool>& b) { return tsv_bool(b); };
  os << "name: " << name << '\n'
     << "kind: " << (r.is_graph ? "graph" : "clutter") << '\n'
     << "vertices: " << r.vertex_count << '\n'
     << "edges: " << r.edge_count << '\n';
  if (!r.isolated_vertices.empty()) os << "isolated vertices: " << r.isolated_vertices << '\n';
  os << "v-number: " << r.v << " (witness " << r.v_witness << ")\n"
     << "independence number: " << r.beta0 << '\n'
     << "cover number: " << r.alpha0 << '\n'
     << "independent domination number: " << r.i_dom << '\n';
  if (r.gamma) os << "domination number: " << *r.gamma << '\n';
  os << "dimension: " << r.dim << '\n'
     << "height: " << r.height << '\n'
     << "well-covered: " << flag(r.well_covered) << '\n'
     << "1-well-covered: " << flag(r.one_well_covered) << '\n'
     << "vertex decomposable: " << flag(r.vertex_decomposable) << '\n'
     << "W2: " << flag(r.w2) << '\n'
     << "edge-critical: " << flag(r.edge_critical);
  if (r.edge_critical_violation)
    os << " (fails at {t" << r.edge_critical_violation->first + 1 << ",t" << r.edge_critical_violation->second + 1 << "})";
  os << '\n' << "linear resolution: " << flag(r.linear_resolution) << '\n';
  for (const auto& f : r.fields) {
    const auto k = to_string(f.field);
    os << "reg [" << k << "]: " << f.reg << '\n'
       << "Cohen-Macaulay [" << k << "]: " << flag(f.cohen_macaulay) << '\n';
    if (f.symbolic_square_cm) {
      os << "symbolic square Cohen-Macaulay [" << k << "]: " << flag(f.symbolic_square_cm)
         << (f.symbolic_square_oracle_checked ? " (confirmed by polarization)" : "") << '\n';
    }
  }
  return os.str();
}

}  // namespace vnum
