#include "plifs/json_io.hpp"

#include <json.hpp>

#include "plifs/errors.hpp"

namespace plifs {

using Json = nlohmann::ordered_json;

namespace {

Json ambient_fields(const Ambient &amb) {
  Json j;
  j["ambient"] = amb.is_circle() ? "circle" : "interval";
  j["lo"] = amb.lo.str();
  j["hi"] = amb.hi.str();
  return j;
}

Ambient ambient_from(const Json &j) {
  std::string kind = j.at("ambient").get<std::string>();
  if (kind == "circle") return Ambient::circle();
  if (kind == "interval")
    return Ambient::interval(Rational::parse(j.at("lo").get<std::string>()),
                             Rational::parse(j.at("hi").get<std::string>()));
  fail(Errc::parse_error, "unknown ambient '" + kind + "'");
}

Json arcset_json(const ArcSet &s) {
  Json j = ambient_fields(s.ambient());
  Json arcs = Json::array();
  for (const auto &a : s.arcs()) {
    Json e;
    e["lo"] = a.lo.str();
    e["hi"] = a.hi.str();
    e["wraps"] = a.wraps;
    arcs.push_back(std::move(e));
  }
  j["arcs"] = std::move(arcs);
  return j;
}

ArcSet arcset_from(const Json &j) {
  Ambient amb = ambient_from(j);
  std::vector<Arc> arcs;
  for (const auto &e : j.at("arcs")) {
    Arc a(Rational::parse(e.at("lo").get<std::string>()),
          Rational::parse(e.at("hi").get<std::string>()), e.value("wraps", false));
    arcs.push_back(std::move(a));
  }
  return canonicalize(amb, std::move(arcs));
}

Json plmap_json(const PLMap &m) {
  Json j = ambient_fields(m.ambient());
  Json bps = Json::array();
  for (const auto &p : m.breakpoints()) bps.push_back(Json::array({p.x.str(), p.y.str()}));
  j["breakpoints"] = std::move(bps);
  return j;
}

Json stats_json(const ComponentStats &st) {
  Json j;
  j["count"] = st.count;
  j["min_len"] = st.min_len.str();
  j["max_len"] = st.max_len.str();
  j["total_len"] = st.total_len.str();
  return j;
}

template <typename F> auto guarded(F &&f) {
  try {
    return f();
  } catch (const Json::exception &e) {
    fail(Errc::parse_error, e.what());
  }
}

} // namespace

std::string arcset_to_json(const ArcSet &s) { return arcset_json(s).dump(); }

ArcSet arcset_from_json(const std::string &text) {
  return guarded([&] { return arcset_from(Json::parse(text)); });
}

std::string plmap_to_json(const PLMap &m) { return plmap_json(m).dump(); }

PLMap plmap_from_json(const std::string &text) {
  return guarded([&] {
    Json j = Json::parse(text);
    Ambient amb = ambient_from(j);
    std::vector<Breakpoint> pts;
    for (const auto &e : j.at("breakpoints"))
      pts.push_back({Rational::parse(e.at(0).get<std::string>()),
                     Rational::parse(e.at(1).get<std::string>())});
    return PLMap::from_breakpoints(std::move(pts), amb);
  });
}

std::string trace_to_json(const IterationTrace &t) {
  Json j;
  j["seed"] = arcset_json(t.seed);
  Json levels = Json::array();
  for (const auto &l : t.levels) levels.push_back(arcset_json(l));
  j["levels"] = std::move(levels);
  Json stats = Json::array();
  for (const auto &st : t.stats) stats.push_back(stats_json(st));
  j["stats"] = std::move(stats);
  j["overflow"] = t.overflow;
  return j.dump();
}

std::string trace_to_csv(const IterationTrace &t) {
  std::string out;
  for (size_t level = 0; level < t.levels.size(); ++level) {
    for (const auto &a : t.levels[level].arcs()) {
      Rational hi = a.wraps ? a.hi + 1 : a.hi; // lift, so lo <= hi always
      out += a.lo.num_str() + "," + a.lo.den_str() + "," + hi.num_str() + "," + hi.den_str() +
             "," + std::to_string(level) + "\n";
    }
  }
  return out;
}

std::string orbit_to_json(const Orbit &o) {
  Json j;
  j["count"] = o.points.size();
  j["truncated"] = o.truncated;
  Json pts = Json::array();
  for (const auto &p : o.points) pts.push_back(p.str());
  j["points"] = std::move(pts);
  return j.dump();
}

std::string bundle_to_json(const ExampleBundle &b) {
  Json j;
  j["example"] = b.number;
  j["name"] = b.name;
  Json amb = ambient_fields(b.ifs.ambient());
  j["ambient"] = amb.at("ambient");
  Json gens = Json::array();
  for (const auto &g : b.ifs.generators()) {
    Json e;
    e["name"] = g.name;
    e["map"] = plmap_json(g.map);
    gens.push_back(std::move(e));
  }
  j["generators"] = std::move(gens);
  j["seed"] = arcset_json(b.seed);
  j["declared_class"] = class_label_name(b.declared);
  Json wit;
  Json dp = Json::array();
  for (const auto &p : b.density_points) dp.push_back(p.str());
  wit["density_points"] = std::move(dp);
  Json nw = Json::array();
  for (const auto &p : b.n_witnesses) nw.push_back(p.str());
  wit["n_witnesses"] = std::move(nw);
  wit["interior"] = arcset_json(b.interior_witness);
  j["witnesses"] = std::move(wit);
  Json consts;
  for (const auto &c : b.constants) consts[c.first] = c.second.str();
  j["constants"] = std::move(consts);
  return j.dump();
}

std::string classification_report_json(int example, const Decomposition &d,
                                       const Classification &cls, const ExclusionVerdict &v) {
  Json j;
  j["example"] = example;
  j["depth"] = d.depth;
  j["label"] = class_label_name(cls.label);
  j["confidence"] = cls.confidence.proven ? "Proven" : "Evidence";
  j["evidence_depth"] = cls.confidence.depth;
  Json dec;
  dec["interior_components"] = d.interior.size();
  dec["interior_total_length"] = d.interior.total_length().str();
  dec["isolated_points"] = d.isolated.size();
  dec["unresolved_components"] = d.unresolved.size();
  Json counts = Json::array();
  for (long c : d.evidence.component_count_growth) counts.push_back(c);
  dec["component_count_growth"] = std::move(counts);
  Json lens = Json::array();
  for (size_t i = 0; i < d.evidence.max_component_length.size(); ++i)
    lens.push_back(d.evidence.has_new[i] ? Json(d.evidence.max_component_length[i].str())
                                         : Json(nullptr));
  dec["max_new_component_length"] = std::move(lens);
  dec["exp_growth"] = d.exp_growth;
  dec["boundary_accumulated"] = d.boundary_accumulated;
  j["decomposition"] = std::move(dec);
  Json verdict;
  verdict["pass"] = v.pass;
  verdict["matched_case"] = v.matched_case;
  j["excluded_case"] = std::move(verdict);
  return j.dump();
}

std::string cantorval_report_json(int example, int depth, int checks, bool value) {
  Json j;
  j["example"] = example;
  j["depth"] = depth;
  j["depth_checks"] = checks;
  j["is_symmetric_cantorval"] = value;
  return j.dump();
}

std::string psi_to_json(const std::string &pair_name, int depth, const PsiMap &psi) {
  Json j;
  j["pair"] = pair_name;
  j["depth"] = depth;
  Json dom;
  dom["lo"] = psi.domain.lo.str();
  dom["hi"] = psi.domain.hi.str();
  j["domain"] = std::move(dom);
  Json ran;
  ran["lo"] = psi.range.lo.str();
  ran["hi"] = psi.range.hi.str();
  j["range"] = std::move(ran);
  j["matched_pairs"] = psi.matches.size();
  j["interp_modulus"] = psi.interp_modulus.str();
  Json pts = Json::array();
  for (const auto &p : psi.pts) pts.push_back(Json::array({p.x.str(), p.y.str()}));
  j["breakpoints"] = std::move(pts);
  Json ms = Json::array();
  for (const auto &m : psi.matches) {
    Json e;
    e["from"] = Json::array({m.from.lo.str(), m.from.hi.str()});
    e["to"] = Json::array({m.to.lo.str(), m.to.hi.str()});
    e["family"] = m.family == GapFamily::primary ? "primary" : "secondary";
    e["level"] = m.level;
    ms.push_back(std::move(e));
  }
  j["matches"] = std::move(ms);
  return j.dump();
}

} // namespace plifs
