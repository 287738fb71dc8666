#include "folia/transcript.hpp"

#include "folia/text.hpp"

namespace folia {

Json singular_json(const std::vector<SingularRecord>& sing) {
  Json out = Json::array();
  for (const auto& r : sing) {
    Json e;
    if (r.is_cluster()) e["cluster"] = to_string(std::get<PointCluster>(r.where));
    else e["point"] = to_string(r.point());
    e["mu"] = r.mu;
    out.push_back(std::move(e));
  }
  return out;
}

Json frame_json(const LinearFrame& m) {
  Json out = Json::array();
  for (const auto& row : m.matrix()) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(to_string(v));
    out.push_back(std::move(r));
  }
  return out;
}

LinearFrame frame_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 3) throw ValidationError("frame must be a 3x3 array");
  Matrix3 m;
  for (std::size_t i = 0; i < 3; ++i) {
    if (!j[i].is_array() || j[i].size() != 3) throw ValidationError("frame must be a 3x3 array");
    for (std::size_t k = 0; k < 3; ++k) m[i][k] = Scalar(parse_rational(j[i][k].get<std::string>()));
  }
  return LinearFrame(m);
}

Json transcript_json(const ReductionTranscript& t) {
  Json out;
  out["input"] = to_string(t.input);
  out["degree"] = t.input.degree();
  Json steps = Json::array();
  for (const auto& s : t.steps) {
    Json e;
    e["line"] = to_string(s.line);
    e["basePoint"] = to_string(s.base_point);
    e["frame"] = frame_json(*s.frame.frame);
    e["map"] = s.quadratic.map->name;
    e["extractedFactor"] = to_string(s.quadratic.extracted);
    e["resultForm"] = to_string(s.result);
    e["resultDegree"] = s.result.degree();
    e["singular"] = singular_json(s.singular);
    e["darboux"] = Json{{"sum", s.darboux.sum}, {"target", s.darboux.target}, {"ok", s.darboux.ok}};
    steps.push_back(std::move(e));
  }
  out["steps"] = std::move(steps);
  Json fin;
  fin["form"] = to_string(t.final_form);
  fin["degree"] = t.final_form.degree();
  fin["singular"] = singular_json(t.final_singular);
  fin["count"] = distinct_count(t.final_singular);
  out["final"] = std::move(fin);
  return out;
}

FoliationForm replay_json(const Json& j) {
  try {
    FoliationForm f = parse_form(j.at("input").get<std::string>());
    for (const auto& s : j.at("steps")) {
      f = pullback_linear(f, frame_from_json(s.at("frame")));
      f = pullback_quadratic(f, builtin_map(s.at("map").get<std::string>())).form;
      if (!(f == parse_form(s.at("resultForm").get<std::string>())))
        throw InvariantBreach("replayed form differs from the recorded resultForm");
    }
    if (!(f == parse_form(j.at("final").at("form").get<std::string>())))
      throw InvariantBreach("replayed form differs from the recorded final form");
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed transcript: ") + e.what());
  }
}

}  // namespace folia
