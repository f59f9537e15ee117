#include "limitcheeger/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace limitcheeger {

using nlohmann::json;

std::string load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot open file: " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

IntervalSet parse_interval_set(const std::string& text) {
  std::vector<std::pair<double, double>> raw;
  std::stringstream ss(text);
  std::string piece;
  while (std::getline(ss, piece, ',')) {
    if (piece.empty()) continue;
    const auto colon = piece.find(':');
    if (colon == std::string::npos)
      throw input_error("interval set: expected lo:hi, got '" + piece + "'");
    try {
      const double lo = std::stod(piece.substr(0, colon));
      const double hi = std::stod(piece.substr(colon + 1));
      raw.emplace_back(lo, hi);
    } catch (const std::exception&) {
      throw input_error("interval set: bad number in '" + piece + "'");
    }
  }
  return normalize(std::move(raw));
}

std::string format_interval_set(const IntervalSet& a) {
  std::string out;
  for (const auto& [lo, hi] : a.parts) {
    if (!out.empty()) out += ',';
    out += json(lo).dump() + ":" + json(hi).dump();
  }
  return out;
}

StepGraphon parse_graphon_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw input_error(std::string("graphon JSON: ") + e.what());
  }
  if (!j.contains("cuts") || !j.contains("matrix"))
    throw input_error("graphon JSON: need 'cuts' and 'matrix'");
  StepGraphon w;
  w.cuts = j.at("cuts").get<std::vector<double>>();
  const auto rows = j.at("matrix").get<std::vector<std::vector<double>>>();
  w.n = rows.size();
  w.m.reserve(w.n * w.n);
  for (const auto& row : rows) {
    if (row.size() != w.n) throw input_error("graphon JSON: matrix is not square");
    for (double v : row) w.m.push_back(v);
  }
  validate(w);
  return w;
}

std::string graphon_to_json(const StepGraphon& w) {
  json j;
  j["cuts"] = w.cuts;
  std::vector<std::vector<double>> rows(w.n, std::vector<double>(w.n));
  for (std::size_t i = 0; i < w.n; ++i)
    for (std::size_t jx = 0; jx < w.n; ++jx) rows[i][jx] = w.at(i, jx);
  j["matrix"] = rows;
  return j.dump();
}

WeightedGraph parse_graph_text(const std::string& text) {
  std::istringstream in(text);
  std::size_t n = 0;
  if (!(in >> n) || n == 0) throw input_error("graph file: bad vertex count");
  WeightedGraph g;
  g.n = n;
  g.w.assign(n * n, 0.0);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  std::size_t u, v;
  double wt;
  while (in >> u >> v >> wt) {
    if (u < 1 || u > n || v < 1 || v > n)
      throw input_error("graph file: vertex index out of range");
    if (wt < 0.0 || wt > 1.0) throw input_error("graph file: weight outside [0,1]");
    auto key = std::minmax(u, v);
    if (!seen.insert(key).second)
      throw input_error("graph file: duplicate edge " + std::to_string(u) + " " +
                        std::to_string(v));
    g.at(u - 1, v - 1) = wt;
    g.at(v - 1, u - 1) = wt;
  }
  if (!in.eof() && in.fail()) {
    in.clear();
    std::string rest;
    in >> rest;
    if (!rest.empty()) throw input_error("graph file: trailing garbage '" + rest + "'");
  }
  bool loopless = true;
  for (std::size_t i = 0; i < n; ++i)
    if (g.at(i, i) != 0.0) loopless = false;
  g.loopless = loopless;
  validate(g);
  return g;
}

std::string graph_to_text(const WeightedGraph& g) {
  std::ostringstream out;
  out << g.n << "\n";
  for (std::size_t i = 0; i < g.n; ++i)
    for (std::size_t j = i; j < g.n; ++j)
      if (g.at(i, j) != 0.0)
        out << (i + 1) << " " << (j + 1) << " " << json(g.at(i, j)).dump() << "\n";
  return out.str();
}

Graphing parse_graphing_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw input_error(std::string("graphing JSON: ") + e.what());
  }
  const bool has_atoms = j.contains("atoms");
  const bool has_maps = j.contains("maps");
  if (has_atoms == has_maps)
    throw input_error("graphing JSON: need exactly one of 'atoms' or 'maps'");
  if (has_atoms) {
    std::vector<std::pair<double, double>> atoms;
    for (const auto& a : j.at("atoms")) {
      if (!a.is_array() || a.size() != 2)
        throw input_error("graphing JSON: atom must be [position, mass]");
      atoms.emplace_back(a[0].get<double>(), a[1].get<double>());
    }
    std::vector<std::pair<int, int>> edges;
    if (j.contains("atom_edges"))
      for (const auto& e : j.at("atom_edges")) {
        if (!e.is_array() || e.size() != 2)
          throw input_error("graphing JSON: edge must be [i, j]");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
      }
    return make_atomic_graphing(std::move(atoms), std::move(edges));
  }
  std::vector<TranslationMapT<double>> maps;
  for (const auto& m : j.at("maps")) {
    TranslationMapT<double> map;
    map.domain = parse_interval_set(m.at("domain").get<std::string>());
    map.offset = m.at("offset").get<double>();
    maps.push_back(std::move(map));
  }
  return make_continuous_graphing(std::move(maps));
}

std::string graphing_to_json(const Graphing& g) {
  json j;
  if (g.atomic()) {
    json atoms = json::array();
    for (const auto& [x, m] : g.atoms) atoms.push_back({x, m});
    json edges = json::array();
    for (const auto& [u, v] : g.atom_edges) edges.push_back({u, v});
    j["atoms"] = atoms;
    j["atom_edges"] = edges;
  } else {
    json maps = json::array();
    for (const auto& m : g.maps)
      maps.push_back({{"domain", format_interval_set(m.domain)}, {"offset", m.offset}});
    j["maps"] = maps;
  }
  j["degree_bound"] = g.degree_bound;
  return j.dump();
}

}  // namespace limitcheeger
