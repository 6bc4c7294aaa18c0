#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "beireg/betti.hpp"
#include "beireg/bound.hpp"
#include "beireg/classify.hpp"
#include "beireg/harness.hpp"

namespace beireg {

using Json = nlohmann::ordered_json;

/// Vertices are written 1-based.
inline Json to_json(const BoundCertificate& c) {
  Json spine = Json::array();
  for (Vertex v : c.spine.vertices) spine.push_back(v + 1);
  Json c_set = Json::array();
  for (const auto& x : c.c_set)
    c_set.push_back({{"v", x.v + 1}, {"bd", x.bd}, {"lbd", x.lbd}, {"contribution", x.contribution}});
  return {{"spine", spine},       {"ell", c.ell()}, {"e2", c.e2},         {"e2Variant", to_string(c.e2_variant)},
          {"b", c.b},             {"cSet", c_set},  {"bound", c.bound},   {"policy", to_string(c.policy)}};
}

inline Json to_json(const GraphClass& c) {
  return {{"isConnected", c.is_connected},
          {"isTree", c.is_tree},
          {"isBlockGraph", c.is_block_graph},
          {"largeBlocksAllEndBlocks", c.large_blocks_all_end_blocks},
          {"isCaterpillar", c.is_caterpillar},
          {"specialForm", to_string(c.special)}};
}

inline Json to_json(const TheoremBound& t) {
  Json certs = Json::array();
  for (const auto& c : t.certificates) certs.push_back(to_json(c));
  Json out{{"bound", t.bound},
           {"policy", to_string(t.policy)},
           {"e2Variant", to_string(t.e2_variant)},
           {"boundMax", t.max_bound()},
           {"boundMin", t.min_bound()},
           {"fromClosedForm", t.from_closed_form}};
  out["selected"] = t.selected >= 0 ? Json(t.selected) : Json(nullptr);
  out["certificates"] = certs;
  return out;
}

inline Json betti_json(const BettiTable& t, std::uint32_t characteristic, BettiMethod method, GbRoute route) {
  Json entries = Json::array();
  for (const auto& [key, rank] : t.entries()) entries.push_back({{"i", key.first}, {"j", key.second}, {"rank", rank}});
  return {{"betti", entries},
          {"reg", t.regularity()},
          {"pd", t.projective_dimension()},
          {"char", characteristic},
          {"method", to_string(method)},
          {"route", to_string(route)}};
}

inline Json to_json(const VerificationRecord& r) {
  Json out{{"key", r.key},
           {"name", r.name},
           {"n", r.n},
           {"m", r.m},
           {"class", to_json(r.cls)},
           {"ellInduced", r.ell_induced},
           {"nMinus1", r.n_minus_1},
           {"boundMax", r.bound_max},
           {"boundMin", r.bound_min},
           {"upperBoundPaper", to_json(r.primary)}};
  out["closedForm"] = r.closed_form ? Json(*r.closed_form) : Json(nullptr);
  out["reg"] = r.reg ? Json(*r.reg) : Json(nullptr);
  out["oracle"] = r.oracle_status;
  out["tight"] = r.tight;
  Json v = Json::array();
  for (const auto& x : r.violations)
    v.push_back({{"policy", to_string(x.policy)},
                 {"variant", to_string(x.variant)},
                 {"spineIndex", x.spine_index},
                 {"bound", x.bound},
                 {"reg", x.reg}});
  out["violations"] = v;
  return out;
}

inline Json records_to_json(const std::vector<VerificationRecord>& records) {
  Json arr = Json::array();
  for (const auto& r : records) arr.push_back(to_json(r));
  return arr;
}

}  // namespace beireg
