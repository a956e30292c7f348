#include "json_io.hpp"

#include <map>

namespace chevdv::cli {

Json header(const std::string& command) {
  Json j;
  j["schema"] = kSchema;
  j["command"] = command;
  return j;
}

Json root_json(const Root& r) { return Json(r.coeffs); }

Json roots_json(const RootSystem& rs) {
  Json j = header("roots");
  j["system"] = rs.name();
  j["rank"] = rs.rank();
  j["count"] = rs.size();
  Json simple = Json::array();
  for (int k = 1; k <= rs.rank(); ++k) simple.push_back(root_json(rs.root(rs.simple(k))));
  j["simple"] = simple;
  j["highest"] = root_json(rs.root(rs.highest()));
  Json list = Json::array();
  for (const auto& r : rs.roots()) list.push_back(root_json(r));
  j["roots"] = list;
  return j;
}

Json constants_json(const ChevalleySystem& sys) {
  const RootSystem& rs = sys.roots();
  Json j = header("constants");
  j["system"] = rs.name();
  Json list = Json::array();
  const auto n = static_cast<RootId>(rs.size());
  for (RootId a = 0; a < n; ++a)
    for (RootId b = 0; b < n; ++b)
      for (const auto& t : sys.constants().terms(a, b)) {
        Json e;
        e["alpha"] = root_json(rs.root(a));
        e["beta"] = root_json(rs.root(b));
        e["p"] = t.p;
        e["q"] = t.q;
        e["N"] = t.coeff;
        e["root"] = root_json(rs.root(t.root));
        list.push_back(e);
      }
  j["terms"] = list;
  return j;
}

Json diagram_json(const ChevalleySystem& sys) {
  const WeightDiagram& d = sys.rep().diagram();
  Json j = header("rep");
  j["system"] = sys.roots().name();
  j["dim"] = d.size();
  Json nodes = Json::array();
  for (const auto& node : d.nodes) {
    Json e;
    e["index"] = node.index;
    e["label"] = node.label ? Json(*node.label) : Json(nullptr);
    e["depth"] = node.depth;
    nodes.push_back(e);
  }
  j["nodes"] = nodes;
  Json edges = Json::array();
  std::map<int, int> counts;
  for (const auto& edge : d.edges) {
    edges.push_back(Json{{"from", edge.from}, {"to", edge.to}, {"simple", edge.simple}});
    ++counts[edge.simple];
  }
  j["edges"] = edges;
  Json per = Json::object();
  for (const auto& [k, c] : counts) per[std::to_string(k)] = c;
  j["edge_counts"] = per;
  return j;
}

Json word_json(const SteinbergWord& w) {
  Json list = Json::array();
  for (const auto& g : w.gens()) {
    std::string s;
    const auto& c = w.roots().root(g.root).coeffs;
    for (std::size_t k = 0; k < c.size(); ++k) s += (k ? "," : "") + std::to_string(c[k]);
    list.push_back(s + ";" + std::to_string(g.param));
  }
  return list;
}

Json vec_json(const Vec& v) { return Json(std::vector<Int>(v.values().begin(), v.values().end())); }

Json mat_json(const Mat& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::vector<Int> row;
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(row);
  }
  return rows;
}

Json decomposition_json(const SteinbergWord& input, const DVDecomposition& d, bool certified) {
  Json j;
  j["input_word"] = word_json(input);
  j["u"] = word_json(d.u);
  j["v"] = word_json(d.v);
  j["a"] = word_json(d.a);
  j["p"] = word_json(d.p);
  j["reduced"] = d.reduced;
  j["certified"] = certified;
  return j;
}

}  // namespace chevdv::cli
