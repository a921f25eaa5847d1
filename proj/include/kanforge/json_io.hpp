#pragma once

#include "kanforge/sset.hpp"

#include <json.hpp>

#include <memory>

namespace kanforge {

// sset.v1: {"schema":"sset.v1","nondeg":[{"id":...,"dim":...}],
//           "faces":{id:[["targetId",[epi values]],...]}}
nlohmann::json sset_to_json(const FiniteSimplicialSet& X);
std::shared_ptr<FiniteSimplicialSet> sset_from_json(const nlohmann::json& j);

// smap.v1: {"schema":"smap.v1","source":...,"target":...,
//           "assignment":{id:["targetId",[epi values]]}}
nlohmann::json smap_to_json(const SimplicialMap& f);
struct LoadedMap {
  std::shared_ptr<FiniteSimplicialSet> source;
  std::shared_ptr<FiniteSimplicialSet> target;
  SimplicialMap map;
};
LoadedMap smap_from_json(const nlohmann::json& j);

nlohmann::json op_to_json(const SimplicialOperator& a);
nlohmann::json ref_to_json(const FiniteSimplicialSet& X, const SimplexRef& r);
SimplexRef ref_from_json(const FiniteSimplicialSet& X, const nlohmann::json& j);

} // namespace kanforge
