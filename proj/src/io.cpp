#include "qpers/io.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qpers/errors.hpp"

namespace qpers {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("malformed JSON: " + std::string(e.what()), e.byte);
  }
}

const json& member(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ShapeError(std::string("missing member '") + key + "'");
  return *it;
}

std::vector<std::vector<Scalar>> int_rows(const json& j, const std::string& where) {
  if (!j.is_array()) throw ShapeError(where + " must be a list of rows");
  std::vector<std::vector<Scalar>> rows;
  for (const auto& r : j) {
    if (!r.is_array()) throw ShapeError(where + " must be a list of rows");
    std::vector<Scalar> row;
    for (const auto& x : r) {
      if (!x.is_number_integer()) throw ShapeError(where + " has a non-integer entry");
      row.push_back(x.get<Scalar>());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

Representation parse_representation(const std::string& text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw ShapeError("representation document must be an object");
  const json& field = member(doc, "field");
  if (!field.is_number_integer()) throw ShapeError("'field' must be an integer");
  PrimeField f;
  try {
    f = PrimeField(field.get<std::int64_t>());
  } catch (const std::invalid_argument& e) {
    throw ShapeError(e.what());
  }

  const json& vertices = member(doc, "vertices");
  if (!vertices.is_object()) throw ShapeError("'vertices' must map ids to dimensions");
  std::vector<std::string> ids;
  std::map<std::string, Eigen::Index> dims;
  for (const auto& [id, d] : vertices.items()) {
    if (!d.is_number_integer() || d.get<std::int64_t>() < 0)
      throw ShapeError("dimension of '" + id + "' must be a non-negative integer");
    ids.push_back(id);
    dims[id] = d.get<Eigen::Index>();
  }

  const json& edges = member(doc, "edges");
  if (!edges.is_array()) throw ShapeError("'edges' must be a list");
  std::vector<Edge> es;
  std::map<std::string, Matrix> mats;
  for (const auto& e : edges) {
    if (!e.is_object()) throw ShapeError("edge entries must be objects");
    for (const char* key : {"id", "src", "dst"})
      if (!member(e, key).is_string()) throw ShapeError(std::string("edge '") + key + "' must be a string");
    Edge edge{e["id"].get<std::string>(), e["src"].get<std::string>(), e["dst"].get<std::string>()};
    const std::string where = "matrix of edge '" + edge.id + "'";
    auto rows = int_rows(member(e, "matrix"), where);
    // a map out of a zero space has rows of length 0 and cannot say so in JSON
    Eigen::Index cols = dims.count(edge.src) ? dims.at(edge.src) : 0;
    for (const auto& r : rows)
      if (static_cast<Eigen::Index>(r.size()) != cols) cols = -1;
    if (cols < 0) throw ShapeError(where + " has rows of the wrong length");
    if (mats.count(edge.id)) throw ShapeError("duplicate edge id '" + edge.id + "'");
    mats.emplace(edge.id, from_rows(f, rows, cols));
    es.push_back(std::move(edge));
  }
  return Representation(f, Quiver(std::move(ids), std::move(es)), std::move(dims), std::move(mats));
}

std::string representation_to_json(const Representation& r) {
  nlohmann::ordered_json doc;
  doc["field"] = r.field().characteristic();
  doc["vertices"] = nlohmann::ordered_json::object();
  for (const auto& v : r.quiver().vertices()) doc["vertices"][v] = r.dim(v);
  doc["edges"] = nlohmann::ordered_json::array();
  for (const auto& e : r.quiver().edges()) {
    const Matrix& m = r.map(e.id);
    auto rows = nlohmann::ordered_json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      auto row = nlohmann::ordered_json::array();
      for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
      rows.push_back(std::move(row));
    }
    doc["edges"].push_back({{"id", e.id}, {"src", e.src}, {"dst", e.dst}, {"matrix", std::move(rows)}});
  }
  return doc.dump(2) + "\n";
}

GraphFiltration parse_filtration(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  std::optional<PrimeField> field;
  std::vector<std::string> order;
  std::map<std::string, std::vector<Simplex>> blocks;
  std::vector<Edge> edges;
  std::map<std::string, int> seen_pairs;
  std::string current;
  bool in_block = false;

  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::vector<std::string> tok;
    for (std::string w; words >> w;) tok.push_back(w);
    if (tok.empty()) continue;

    if (tok[0] == "field") {
      if (tok.size() != 2 || field) throw ParseError("expected a single 'field <p>' line", lineno);
      try {
        field = PrimeField(std::stoll(tok[1]));
      } catch (const std::exception&) {
        throw ParseError("'" + tok[1] + "' is not a prime", lineno);
      }
      in_block = false;
    } else if (tok[0] == "complex") {
      if (tok.size() != 2 || tok[1].size() < 2 || tok[1].back() != ':')
        throw ParseError("expected 'complex <id>:'", lineno);
      current = tok[1].substr(0, tok[1].size() - 1);
      if (blocks.count(current)) throw ParseError("complex '" + current + "' defined twice", lineno);
      blocks[current];
      order.push_back(current);
      in_block = true;
    } else if (tok[0] == "edge") {
      if (tok.size() != 3) throw ParseError("expected 'edge <src> <dst>'", lineno);
      std::string id = tok[1] + "->" + tok[2];
      if (int n = ++seen_pairs[id]; n > 1) id += "#" + std::to_string(n);
      edges.push_back({id, tok[1], tok[2]});
      in_block = false;
    } else if (in_block) {
      blocks[current].push_back(tok);
    } else {
      throw ParseError("simplex outside a complex block", lineno);
    }
  }
  if (!field) throw ParseError("missing 'field <p>' line", lineno + 1);

  GraphFiltration chi;
  chi.field = *field;
  for (const auto& e : edges)
    for (const auto* end : {&e.src, &e.dst})
      if (!blocks.count(*end)) throw UnknownVertex(*end);
  chi.quiver = Quiver(order, std::move(edges));
  for (auto& [id, simplices] : blocks) chi.complexes.emplace(id, SimplicialComplex::from_simplices(simplices));
  return chi;
}

std::map<std::string, FlowInput> parse_assignment(const std::string& text, const Representation& r) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw ShapeError("assignment document must be an object");
  std::map<std::string, FlowInput> out;
  for (const auto& [v, value] : doc.items()) {
    const Eigen::Index dim = r.dim(v);
    if (value.is_array()) {
      SubspaceSpec spec{SubspaceSpec::Kind::Span, int_rows(value, "assignment of '" + v + "'")};
      out.emplace(v, spec.resolve(r.field(), dim));
    } else if (value.is_string()) {
      const std::string s = value.get<std::string>();
      if (s == "full" || s == "zero")
        out.emplace(v, parse_subspace(s).resolve(r.field(), dim));
      else
        out.emplace(v, parse_expr(s));
    } else {
      throw ShapeError("assignment of '" + v + "' must be rows, 'full', 'zero' or an expression");
    }
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'", true);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char out[17];
  std::snprintf(out, sizeof out, "%016llx", static_cast<unsigned long long>(h));
  return out;
}

}  // namespace qpers
