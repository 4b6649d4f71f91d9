#include "cgt/io/json_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "cgt/error.hpp"

namespace cgt::io {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write '" + path + "'");
  out << text;
}

graph::LabeledGraph graph_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("graph JSON: ") + e.what());
  }
  try {
    std::string mode = j.value("mode", "product");
    graph::Mode m;
    if (mode == "coxeter") m = graph::Mode::Coxeter;
    else if (mode == "product") m = graph::Mode::Product;
    else throw InvalidInput("graph JSON: mode must be \"coxeter\" or \"product\"");
    graph::LabeledGraph g(m);
    for (const auto& v : j.at("vertices")) {
      if (v.is_string()) {
        g.add_vertex(v.get<std::string>(), m == graph::Mode::Coxeter ? "" : "C2");
        continue;
      }
      std::string group = v.value("group", std::string());
      g.add_vertex(v.at("id").get<std::string>(), group);
    }
    if (j.contains("edges"))
      for (const auto& e : j.at("edges")) {
        int label = e.value("m", 2);
        if (m == graph::Mode::Product && label != 2) throw InvalidInput("graph JSON: product-mode edges carry no label");
        g.add_edge(e.at("u").get<std::string>(), e.at("v").get<std::string>(), label);
      }
    return g;
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("graph JSON: ") + e.what());
  }
}

std::string graph_to_json(const graph::LabeledGraph& g, int indent) {
  json j;
  j["mode"] = graph::to_string(g.mode());
  j["vertices"] = json::array();
  for (int v = 0; v < g.size(); ++v) {
    json vj{{"id", g.id(v)}};
    if (g.mode() == graph::Mode::Product) vj["group"] = g.group(v);
    j["vertices"].push_back(vj);
  }
  j["edges"] = json::array();
  for (const auto& e : g.edges()) j["edges"].push_back({{"u", g.id(e.u)}, {"v", g.id(e.v)}, {"m", e.m}});
  return j.dump(indent);
}

graph::LabeledGraph read_graph(const std::string& path) { return graph_from_json(read_file(path)); }

fib::FibreSpec fibre_spec_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("fibre JSON: ") + e.what());
  }
  try {
    fib::FibreSpec s;
    s.degree = j.at("degree").get<int>();
    if (s.degree < 1) throw InvalidInput("fibre JSON: degree must be positive");
    for (const auto& t : j.at("target")) s.target_generators.push_back(fin::Perm::parse(t.get<std::string>(), s.degree));
    for (const auto& fj : j.at("factors")) {
      fib::Factor f;
      f.presentation.generators = fj.at("generators").get<std::vector<std::string>>();
      for (const auto& r : fj.value("relators", json::array()))
        f.presentation.relators.push_back(f.presentation.parse_word(r.get<std::string>()));
      for (const auto& x : fj.at("images")) f.images.push_back(fin::Perm::parse(x.get<std::string>(), s.degree));
      s.factors.push_back(std::move(f));
    }
    if (j.contains("d")) {
      int d = j.at("d").get<int>();
      if (s.factors.size() != 1 || d < 2) throw InvalidInput("fibre JSON: \"d\" needs one factor and d >= 2");
      s.factors.assign(static_cast<std::size_t>(d), s.factors[0]);
    }
    return s;
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("fibre JSON: ") + e.what());
  }
}

}  // namespace cgt::io
