#include "recur/printer.hpp"

#include <json.hpp>

#include "recur/errors.hpp"
#include "recur/parse.hpp"

namespace recur {

namespace {

std::string rat_factor_prefix(const Rat& coeff, bool lead, const std::string& body) {
  // Renders coeff * body with +/- joining and 1-elision.
  std::string sign = coeff.is_negative() ? (lead ? "-" : " - ") : (lead ? "" : " + ");
  Rat a = abs(coeff);
  if (a == Rat(1) && !body.empty()) return sign + body;
  if (body.empty()) return sign + a.str();
  return sign + a.str() + "*" + body;
}

std::string exponent_str(const Rat& e) {
  if (e.is_integer() && !e.is_negative()) return e.str();
  return "(" + e.str() + ")";
}

}  // namespace

std::string print_poly(const Poly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = 0; k <= p.degree(); ++k) {
    const Rat& c = p.coeff(static_cast<std::size_t>(k));
    if (c.is_zero()) continue;
    std::string body;
    if (k == 1) body = var;
    else if (k > 1) body = var + "^" + std::to_string(k);
    out += rat_factor_prefix(c, out.empty(), body);
  }
  return out;
}

std::string print_expr(const Integrand& i, const std::string& var) {
  std::vector<std::string> parts;
  if (i.cofactor.is_constant()) {
    if (!(i.cofactor.coeff(0) == Rat(1)) || (i.factors.empty() && !i.transc))
      parts.push_back(i.cofactor.coeff(0).str());
  } else {
    parts.push_back("(" + print_poly(i.cofactor, var) + ")");
  }
  if (i.transc)
    parts.push_back(std::string(transc_name(i.transc->kind)) + "(" +
                    print_poly(i.transc->arg, var) + ")");
  for (const PowerFactor& f : i.factors)
    parts.push_back("(" + print_poly(f.base, var) + ")^" + exponent_str(f.exponent));
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k) out += " * ";
    out += parts[k];
  }
  return out;
}

std::string print_algterm(const AlgTerm& g, const std::string& var) {
  Integrand shaped;
  shaped.cofactor = g.multiplier * g.weight;
  shaped.transc = g.transc;
  shaped.factors = g.factors;
  return print_expr(shaped, var);
}

namespace {

using nlohmann::json;

json algterm_to_json(const AlgTerm& g, const std::string& var) {
  json jf = json::array();
  for (const PowerFactor& f : g.factors) {
    jf.push_back({{"base", print_poly(f.base, var)}, {"exponent", f.exponent.str()}});
  }
  json out = {
      {"weight", g.weight.str()},
      {"multiplier", print_poly(g.multiplier, var)},
      {"factors", jf},
  };
  if (g.transc)
    out["transc"] = std::string(transc_name(g.transc->kind)) + "(" +
                    print_poly(g.transc->arg, var) + ")";
  else
    out["transc"] = nullptr;
  return out;
}

AlgTerm algterm_from_json(const json& j, const std::string& var) {
  AlgTerm g;
  auto weight = Rat::parse(j.at("weight").get<std::string>());
  if (!weight) fail(ErrorCode::SyntaxError, "bad weight in result file");
  g.weight = *weight;
  g.multiplier = parse_poly(j.at("multiplier").get<std::string>(), var);
  for (const auto& jf : j.at("factors")) {
    PowerFactor f;
    f.base = parse_poly(jf.at("base").get<std::string>(), var);
    auto e = Rat::parse(jf.at("exponent").get<std::string>());
    if (!e) fail(ErrorCode::SyntaxError, "bad exponent in result file");
    f.exponent = *e;
    g.factors.push_back(std::move(f));
  }
  if (!j.at("transc").is_null()) {
    Integrand t = parse_expr(j.at("transc").get<std::string>(), var);
    if (!t.transc) fail(ErrorCode::SyntaxError, "bad transc in result file");
    g.transc = t.transc;
  }
  return g;
}

}  // namespace

std::string serialize_result(const Integrand& input, const ReductionResult& r,
                             const std::string& var) {
  json out;
  out["input"] = print_expr(input, var);
  out["status"] = r.status == ReduceStatus::Terminal ? "terminal" : "obstructed";
  out["obstruction"] = r.obstruction;
  out["algebraic"] = json::array();
  for (const AlgTerm& g : r.algebraic) out["algebraic"].push_back(algterm_to_json(g, var));
  out["residuals"] = json::array();
  for (const auto& [coeff, ig] : r.residuals) {
    out["residuals"].push_back(
        {{"coefficient", coeff.str()}, {"integrand", print_expr(ig, var)}});
  }
  out["trace"] = json::array();
  for (const Step& s : r.trace) {
    json alg = json::array();
    for (const AlgTerm& g : s.alg_contribution) alg.push_back(algterm_to_json(g, var));
    out["trace"].push_back({{"rule", s.rule_id},
                            {"solveFor", s.solve_for},
                            {"scale", s.scale.str()},
                            {"algTerm", alg}});
  }
  return out.dump(2);
}

ReductionResult load_result(const std::string& json_text, const std::string& var) {
  json j = json::parse(json_text);
  ReductionResult r;
  r.status = j.at("status").get<std::string>() == "terminal" ? ReduceStatus::Terminal
                                                             : ReduceStatus::Obstructed;
  r.obstruction = j.value("obstruction", std::string());
  for (const auto& jg : j.at("algebraic")) r.algebraic.push_back(algterm_from_json(jg, var));
  for (const auto& jr : j.at("residuals")) {
    auto coeff = Rat::parse(jr.at("coefficient").get<std::string>());
    if (!coeff) fail(ErrorCode::SyntaxError, "bad coefficient in result file");
    r.residuals.emplace_back(*coeff, parse_expr(jr.at("integrand").get<std::string>(), var));
  }
  return r;
}

}  // namespace recur
