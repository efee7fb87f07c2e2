#include "ckrtm/serialize.hpp"

#include "ckrtm/error.hpp"

namespace ckrtm {

Json to_json(const ForestSum& s) {
  Json out = Json::array();
  for (const auto& [f, c] : s) out.push_back({{"coeff", fraction_string(c)}, {"forest", render_forest_label(f)}});
  return out;
}

Json to_json(const ForestTensorSum& t) {
  Json out = Json::array();
  for (const auto& [pair, c] : t) {
    out.push_back({{"coeff", fraction_string(c)},
                   {"left", render_forest_label(pair.first)},
                   {"right", render_forest_label(pair.second)}});
  }
  return out;
}

Json to_json(const WordSum& p) {
  Json out = Json::array();
  for (const auto& [w, c] : p) out.push_back({{"coeff", fraction_string(c)}, {"word", w.letters()}});
  return out;
}

Json to_json(const WordTensorSum& t) {
  Json out = Json::array();
  for (const auto& [pair, c] : t) {
    out.push_back({{"coeff", fraction_string(c)}, {"left", pair.first.letters()}, {"right", pair.second.letters()}});
  }
  return out;
}

Json to_json(const VerificationReport& r) {
  Json bounds = Json::object();
  for (const auto& [k, v] : r.bounds) bounds[k] = v;
  Json counterexample = nullptr;
  if (r.counterexample) {
    counterexample = Json::object();
    for (const auto& [k, v] : *r.counterexample) counterexample[k] = v;
  }
  return {{"identity", r.identity},
          {"bounds", bounds},
          {"status", r.passed ? "pass" : "fail"},
          {"counterexample", counterexample},
          {"checked", r.checked},
          {"millis", r.millis}};
}

Json to_json(const mzv::Relation& r, const std::optional<mzv::Real>& residual) {
  Json provenance;
  if (const auto* src = std::get_if<mzv::RtmSource>(&r.provenance)) {
    provenance = {{"kind", "rtm"}, {"forest", to_json(src->forest)}, {"seed", src->seed.letters()}};
  } else {
    provenance = {{"kind", "duality"}, {"word", std::get<mzv::DualitySource>(r.provenance).word.letters()}};
  }
  Json terms = Json::array();
  for (const auto& [w, c] : r.lhs) {
    terms.push_back({{"coeff", fraction_string(c)}, {"index", mzv::word_index(w).parts()}});
  }
  Json res = nullptr;
  if (residual) res = residual->convert_to<double>();
  return {{"provenance", provenance}, {"terms", terms}, {"numeric_residual", res}};
}

namespace {

const Json& field(const Json& item, const char* key) {
  if (!item.is_object() || !item.contains(key) || !item[key].is_string()) {
    throw ParseError(std::string("expected string field \"") + key + "\"", 0);
  }
  return item[key];
}

}  // namespace

ForestSum forest_sum_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of terms", 0);
  ForestSum out;
  for (const auto& item : j) {
    out.add(parse_forest(field(item, "forest").get<std::string>()),
            parse_rational(field(item, "coeff").get<std::string>()));
  }
  return out;
}

WordSum word_sum_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of terms", 0);
  WordSum out;
  for (const auto& item : j) {
    out.add(Word(field(item, "word").get<std::string>()), parse_rational(field(item, "coeff").get<std::string>()));
  }
  return out;
}

}  // namespace ckrtm
