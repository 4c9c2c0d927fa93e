#include "bdeform/serialize.hpp"

#include "bdeform/errors.hpp"

namespace bdeform {

using nlohmann::json;

json to_json(const Coeff& c) { return c.to_string(); }

json to_json(const PMonomial& m) {
  json out = json::array();
  for (const auto& [i, e] : m.pairs()) out.push_back({i, e});
  return out;
}

json to_json(const PPoly& p) {
  json out = json::array();
  for (const auto& [m, c] : p.terms()) out.push_back({{"monomial", to_json(m)}, {"coeff", to_json(c)}});
  return out;
}

json to_json(const WeylOp& op) {
  json terms = json::array();
  for (const auto& [k, c] : op.terms()) {
    terms.push_back({{"create", to_json(k.create)}, {"annihilate", to_json(k.annihilate)}, {"coeff", to_json(c)}});
  }
  json out;
  out["working_degree"] = op.bounded() ? json(op.working_degree()) : json(nullptr);
  auto h = op.homogeneous_degree();
  out["homogeneous_degree"] = h ? json(*h) : json(nullptr);
  out["terms"] = std::move(terms);
  return out;
}

json to_json(const TGradedOp& op) {
  json pieces = json::array();
  for (const auto& [t, piece] : op.pieces()) pieces.push_back({{"t", t}, {"op", to_json(piece)}});
  return {{"working_degree", op.working_degree()}, {"pieces", std::move(pieces)}};
}

json to_json(const Series& s) {
  json coeffs = json::array();
  for (const auto& p : s) coeffs.push_back(to_json(p));
  return {{"order", static_cast<int>(s.size()) - 1}, {"coeffs", std::move(coeffs)}};
}

json to_json(const JackPoly& j) {
  json terms = json::array();
  for (auto it = j.p_expansion.rbegin(); it != j.p_expansion.rend(); ++it) {
    terms.push_back({{"partition", it->first.parts()}, {"coeff", it->second.to_string("alpha")}});
  }
  return {{"lambda", j.lambda.parts()}, {"p_expansion", std::move(terms)}};
}

json to_json(const CheckResult& r) {
  json out{{"check", r.check}};
  for (const auto& [k, v] : r.keys) out[k] = v;
  out["status"] = r.pass ? "pass" : "fail";
  if (!r.pass) out["first_mismatch"] = r.mismatch;
  if (!r.note.empty()) out["note"] = r.note;
  if (r.separate) out["reported_separately"] = true;
  return out;
}

json to_json(const Report& r) {
  json params = json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  json items = json::array();
  for (const auto& item : r.items) items.push_back(to_json(item));
  return {{"schema", kSchema},
          {"command", r.command},
          {"params", std::move(params)},
          {"items", std::move(items)},
          {"passed", r.passed()}};
}

PMonomial pmonomial_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("monomial must be an array of [index, exponent] pairs");
  std::vector<std::pair<int, int>> pairs;
  for (const auto& pr : j) {
    if (!pr.is_array() || pr.size() != 2) throw ParseError("monomial entries must be [index, exponent]");
    pairs.emplace_back(pr[0].get<int>(), pr[1].get<int>());
  }
  return PMonomial::from_pairs(pairs);
}

PPoly ppoly_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("polynomial must be an array of terms");
  PPoly out;
  for (const auto& t : j) out.add_term(pmonomial_from_json(t.at("monomial")), Coeff::parse(t.at("coeff").get<std::string>()));
  return out;
}

WeylOp weylop_from_json(const json& j) {
  const auto& wd = j.at("working_degree");
  WeylOp op(wd.is_null() ? WeylOp::kUnbounded : wd.get<int>());
  for (const auto& t : j.at("terms")) {
    op.add_term(pmonomial_from_json(t.at("create")), pmonomial_from_json(t.at("annihilate")),
                Coeff::parse(t.at("coeff").get<std::string>()));
  }
  return op;
}

}  // namespace bdeform
