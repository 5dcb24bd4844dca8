#include "wittforge/json_io.hpp"

#include "wittforge/errors.hpp"

namespace wittforge {

Json universal_to_json(const UniversalFamily& fam) {
  Json j;
  j["op"] = to_string(fam.op);
  if (fam.op == UniversalOp::frobenius) j["k"] = fam.k;
  j["index_set"] = index_set_json(fam.domain);
  const auto names = fam.var_names();
  j["variables"] = names;
  Json polys = Json::object();
  for (std::size_t i = 0; i < fam.polys.size(); ++i) {
    Json terms = Json::array();
    for (const auto& [e, c] : fam.polys[i].sorted_terms()) {
      Json mono = Json::object();
      for (std::size_t v = 0; v < e.size(); ++v)
        if (e[v]) mono[names[v]] = e[v];
      terms.push_back(Json::array({mono, c.get_str()}));
    }
    polys[std::to_string(fam.target.elements()[i])] = terms;
  }
  j["polynomials"] = polys;
  return j;
}

UniversalFamily universal_from_json(const Json& j, const IndexSet& e, UniversalOp op, IndexSet::Index k) {
  UniversalFamily fam;
  fam.domain = e;
  fam.op = op;
  fam.k = op == UniversalOp::frobenius ? k : 1;
  fam.target = op == UniversalOp::frobenius ? e.quotient_by(k) : e;
  fam.nvars = fam.binary() ? 2 * e.size() : e.size();
  const auto names = fam.var_names();
  if (j.at("variables").get<std::vector<std::string>>() != names) throw ParseError("universal polynomial variables differ");
  for (auto n : fam.target.elements()) {
    std::vector<std::pair<std::vector<int>, Integer>> terms;
    for (const auto& t : j.at("polynomials").at(std::to_string(n))) {
      std::vector<int> exps(fam.nvars, 0);
      for (auto it = t.at(0).begin(); it != t.at(0).end(); ++it) {
        auto pos = std::find(names.begin(), names.end(), it.key());
        if (pos == names.end()) throw ParseError("unknown variable " + it.key());
        exps[static_cast<std::size_t>(pos - names.begin())] = it.value().get<int>();
      }
      terms.emplace_back(std::move(exps), Integer(t.at(1).get<std::string>()));
    }
    fam.polys.push_back(IntPoly::from_terms(fam.nvars, terms));
  }
  return fam;
}

Json index_set_json(const IndexSet& e) {
  Json arr = Json::array();
  for (auto n : e.elements()) arr.push_back(n);
  return arr;
}

Json coords_json(const IndexSet& e, const std::vector<Element>& values) {
  Json j = Json::object();
  for (std::size_t i = 0; i < values.size(); ++i) j[std::to_string(e.elements()[i])] = values[i].to_string();
  return j;
}

Json witt_to_json(const WittVector& a) {
  Json j;
  j["ring"] = a.ring().descriptor();
  j["index_set"] = index_set_json(a.index_set());
  j["coords"] = coords_json(a.index_set(), a.coords());
  return j;
}

WittVector witt_from_json(const Json& j) {
  const Ring r = Ring::parse(j.at("ring").get<std::string>());
  const IndexSet e = IndexSet::from_list(j.at("index_set").get<std::vector<IndexSet::Index>>());
  std::vector<std::string> coords;
  for (auto n : e.elements()) coords.push_back(j.at("coords").at(std::to_string(n)).get<std::string>());
  return witt_parse(e, r, coords);
}

Json matrix_json(const linalg::Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).get_str());
    out.push_back(row);
  }
  return out;
}

Json rees_to_json(const ReesModule& g) {
  Json out;
  Json pieces = Json::object();
  for (std::size_t k = 0; k < g.dims.size(); ++k)
    pieces[std::to_string(g.lo_degree + static_cast<int>(k))] = Json{{"rank", g.dims[k]}, {"relations", Json::array()}};
  out["pieces"] = pieces;
  Json t = Json::object();
  for (std::size_t k = 0; k < g.t_maps.size(); ++k) t[std::to_string(g.lo_degree + static_cast<int>(k))] = matrix_json(g.t_maps[k]);
  out["t_maps"] = t;
  Json gens = Json::object();
  for (const auto& [deg, count] : g.generator_degrees()) gens[std::to_string(deg)] = count;
  out["generators"] = gens;
  out["zero_below"] = g.zero_below;
  return out;
}

Json filtered_to_json(const FilteredModule& m) {
  Json out;
  out["ambient_dim"] = m.ambient_dim();
  out["lo"] = m.lo();
  out["zero_above"] = m.zero_above();
  Json fil = Json::object();
  for (int i = m.lo(); i <= m.hi(); ++i) {
    const auto piece = m.fil(i);
    fil[std::to_string(i)] = Json{{"dim", piece.rows()}, {"basis", matrix_json(piece)}};
  }
  out["fil"] = fil;
  return out;
}

}  // namespace wittforge
