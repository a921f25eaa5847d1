#include "kanforge/json_io.hpp"

namespace kanforge {

using nlohmann::json;

json op_to_json(const SimplicialOperator& a) { return json(a.values); }

json ref_to_json(const FiniteSimplicialSet& X, const SimplexRef& r) {
  return json::array({X.cell(r.cell).name, json(r.epi.values)});
}

SimplexRef ref_from_json(const FiniteSimplicialSet& X, const json& j) {
  SimplexRef r;
  auto id = X.cell_by_name(j.at(0).get<std::string>());
  if (!id) throw std::invalid_argument("ref_from_json: unknown cell " +
                                       j.at(0).get<std::string>());
  r.cell = *id;
  r.epi.cod = X.dim_of(r.cell);
  r.epi.values = j.at(1).get<std::vector<int>>();
  if (!is_valid_op(r.epi) || !is_epi(r.epi))
    throw std::invalid_argument("ref_from_json: operator is not an epi");
  return r;
}

json sset_to_json(const FiniteSimplicialSet& X) {
  json nondeg = json::array();
  json faces = json::object();
  for (int id = 0; id < X.cell_count(); ++id) {
    const auto& c = X.cell(id);
    nondeg.push_back({{"id", c.name}, {"dim", c.dim}});
    if (c.dim > 0) {
      json fl = json::array();
      for (const auto& f : c.faces) fl.push_back(ref_to_json(X, f));
      faces[c.name] = fl;
    }
  }
  return json{{"schema", "sset.v1"}, {"nondeg", nondeg}, {"faces", faces}};
}

std::shared_ptr<FiniteSimplicialSet> sset_from_json(const json& j) {
  if (j.at("schema") != "sset.v1")
    throw std::invalid_argument("sset_from_json: expected schema sset.v1");
  std::vector<FiniteSimplicialSet::Cell> cells;
  std::map<std::string, int> id_of;
  std::vector<std::pair<std::string, int>> order;
  for (const auto& e : j.at("nondeg"))
    order.emplace_back(e.at("id").get<std::string>(), e.at("dim").get<int>());
  std::stable_sort(order.begin(), order.end(),
                   [](const auto& a, const auto& b) { return a.second < b.second; });
  for (const auto& [name, dim] : order) {
    if (id_of.count(name))
      throw std::invalid_argument("sset_from_json: duplicate id " + name);
    id_of.emplace(name, static_cast<int>(cells.size()));
    FiniteSimplicialSet::Cell c;
    c.name = name;
    c.dim = dim;
    cells.push_back(std::move(c));
  }
  for (const auto& [name, dim] : order) {
    if (dim == 0) continue;
    const json& fl = j.at("faces").at(name);
    auto& c = cells[id_of.at(name)];
    for (const auto& fe : fl) {
      SimplexRef r;
      r.cell = id_of.at(fe.at(0).get<std::string>());
      r.epi.cod = cells[r.cell].dim;
      r.epi.values = fe.at(1).get<std::vector<int>>();
      c.faces.push_back(r);
    }
  }
  return std::make_shared<FiniteSimplicialSet>(
      FiniteSimplicialSet::build(std::move(cells)));
}

json smap_to_json(const SimplicialMap& f) {
  json assign = json::object();
  for (int id = 0; id < f.source().cell_count(); ++id)
    assign[f.source().cell(id).name] =
        ref_to_json(f.target(), f.assignment()[id]);
  return json{{"schema", "smap.v1"},
              {"source", sset_to_json(f.source())},
              {"target", sset_to_json(f.target())},
              {"assignment", assign}};
}

LoadedMap smap_from_json(const json& j) {
  if (j.at("schema") != "smap.v1")
    throw std::invalid_argument("smap_from_json: expected schema smap.v1");
  LoadedMap out;
  out.source = sset_from_json(j.at("source"));
  out.target = sset_from_json(j.at("target"));
  std::vector<SimplexRef> assign(out.source->cell_count());
  for (int id = 0; id < out.source->cell_count(); ++id)
    assign[id] = ref_from_json(*out.target,
                               j.at("assignment").at(out.source->cell(id).name));
  out.map = SimplicialMap(out.source.get(), out.target.get(), std::move(assign));
  return out;
}

} // namespace kanforge
