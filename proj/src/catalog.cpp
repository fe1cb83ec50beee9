#include "recur/catalog.hpp"

#include <algorithm>
#include <sstream>

#include "recur/errors.hpp"
#include "recur/symbols.hpp"

namespace recur {

extern const char* kCatalogText;  // catalog_text.cpp

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::optional<TranscKind> transc_from(const std::string& s) {
  if (s == "exp") return TranscKind::Exp;
  if (s == "cos") return TranscKind::Cos;
  if (s == "sin") return TranscKind::Sin;
  return std::nullopt;
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

int expected_slots(FormTag form) {
  return static_cast<int>(slot_layout(form).slot_coeffs.size());
}

}  // namespace

Catalog Catalog::load(const std::string& text) {
  Catalog cat;
  std::istringstream in(text);
  std::string line;
  int section = 0;
  FormTag form = FormTag::Q2;
  Rule* cur = nullptr;
  int lineno = 0;
  auto bad = [&](const std::string& why) {
    fail(ErrorCode::Internal, "catalog line " + std::to_string(lineno) + ": " + why);
  };

  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto toks = split_ws(line);
    if (toks.empty()) continue;
    const std::string& key = toks[0];

    if (key == "section") {
      if (toks.size() != 4 || toks[2] != "form") bad("expected: section <k> form <TAG>");
      section = std::stoi(toks[1]);
      auto f = form_from_name(toks[3]);
      if (!f) bad("unknown form tag " + toks[3]);
      form = *f;
      cur = nullptr;
      continue;
    }
    if (key == "rule") {
      if (toks.size() != 4 || toks[2] != "case") bad("expected: rule <id> case <label>");
      Rule r;
      r.id = toks[1];
      r.section = section;
      r.form = form;
      r.case_label = toks[3];
      cat.rules_.push_back(std::move(r));
      cur = &cat.rules_.back();
      continue;
    }
    if (cur == nullptr) bad("directive outside a rule block");

    auto rest_after = [&](std::size_t nftok) {
      std::size_t pos = 0;
      for (std::size_t k = 0; k < nftok; ++k) {
        pos = line.find(toks[k], pos);
        pos += toks[k].size();
      }
      return line.substr(pos);
    };

    if (key == "cof") {
      if (toks.size() != 2) bad("cof none|AB|ABC");
      if (toks[1] == "none") cur->cof = CofShape::None;
      else if (toks[1] == "AB") cur->cof = CofShape::AB;
      else if (toks[1] == "ABC") cur->cof = CofShape::ABC;
      else bad("cof none|AB|ABC");
    } else if (key == "trig") {
      if (toks.size() != 3) bad("trig <t1> <t2>");
      auto a = transc_from(toks[1]), b = transc_from(toks[2]);
      if (!a || !b) bad("bad transcendental kind");
      cur->t1 = *a;
      cur->t2 = *b;
    } else if (key == "vanish") {
      std::string e = trim(rest_after(1));
      cur->vanish.emplace_back(e, parse_template(e));
    } else if (key == "guard") {
      std::string e = trim(rest_after(1));
      cur->guards.emplace_back(e, parse_template(e));
    } else if (key == "shift") {
      cur->shift.clear();
      for (std::size_t k = 1; k < toks.size(); ++k) cur->shift.push_back(std::stoi(toks[k]));
      if (static_cast<int>(cur->shift.size()) != expected_slots(form))
        bad("shift arity does not match form");
    } else if (key == "k1") {
      cur->k1_text = trim(rest_after(1));
      cur->k1 = parse_template(cur->k1_text);
    } else if (key == "i2") {
      cur->i2_text = trim(rest_after(1));
      cur->i2 = parse_template(cur->i2_text);
    } else if (key == "local") {
      if (toks.size() < 4 || toks[2] != "=") bad("local <name> = <expr>");
      std::string name = toks[1];
      auto eq = line.find('=');
      std::string e = trim(line.substr(eq + 1));
      cur->locals.emplace_back(name, e, parse_template(e));
    } else if (key == "alg") {
      Rule::AlgPiece piece;
      std::size_t k = 1;
      while (k < toks.size() && toks[k] != ":" &&
             (toks[k][0] == '-' || toks[k][0] == '+' || std::isdigit(
                  static_cast<unsigned char>(toks[k][0])))) {
        piece.shift.push_back(std::stoi(toks[k]));
        ++k;
      }
      piece.kind = cur->t1;
      if (k < toks.size() && toks[k] != ":") {
        auto t = transc_from(toks[k]);
        if (!t) bad("bad alg transcendental kind");
        piece.kind = *t;
        ++k;
      }
      if (k >= toks.size() || toks[k] != ":") bad("alg <shifts> [kind] : <expr>");
      auto colon = line.find(':');
      piece.text = trim(line.substr(colon + 1));
      piece.mult = parse_template(piece.text);
      if (static_cast<int>(piece.shift.size()) != expected_slots(form))
        bad("alg shift arity does not match form");
      cur->alg.push_back(std::move(piece));
    } else if (key == "rev") {
      cur->reversible = true;
    } else {
      bad("unknown directive " + key);
    }
  }

  for (std::size_t idx = 0; idx < cat.rules_.size(); ++idx) {
    const Rule& r = cat.rules_[idx];
    if (!r.k1 || !r.i2 || r.shift.empty())
      fail(ErrorCode::Internal, "rule " + r.id + " is incomplete");
    bool moves = false;
    for (int s : r.shift) moves = moves || s != 0;
    if (!moves) fail(ErrorCode::Internal, "rule " + r.id + " has an all-zero shift");
    if (!cat.by_id_.emplace(r.id, idx).second)
      fail(ErrorCode::Internal, "duplicate rule id " + r.id);
  }
  return cat;
}

const Catalog& Catalog::builtin() {
  static const Catalog* cat = new Catalog(Catalog::load(kCatalogText));
  return *cat;
}

const Rule* Catalog::find(const std::string& id) const {
  auto it = by_id_.find(id);
  return it == by_id_.end() ? nullptr : &rules_[it->second];
}

std::vector<const Rule*> Catalog::rules_for_case(FormTag form,
                                                 const std::string& case_label) const {
  std::vector<const Rule*> out;
  for (const Rule& r : rules_) {
    if (r.form == form && r.case_label == case_label) out.push_back(&r);
  }
  return out;
}

std::string Catalog::export_text() const {
  std::ostringstream out;
  int prev_section = 0;
  for (const Rule& r : rules_) {
    if (r.section != prev_section) {
      out << "section " << r.section << " form " << form_name(r.form) << "\n";
      prev_section = r.section;
    }
    out << "rule " << r.id << " case " << r.case_label << "\n";
    out << "cof "
        << (r.cof == CofShape::None ? "none" : r.cof == CofShape::AB ? "AB" : "ABC") << "\n";
    if (r.t1 != TranscKind::Exp || r.t2 != TranscKind::Exp)
      out << "trig " << transc_name(r.t1) << " " << transc_name(r.t2) << "\n";
    for (const auto& [text, e] : r.vanish) out << "vanish " << text << "\n";
    for (const auto& [text, e] : r.guards) out << "guard " << text << "\n";
    out << "shift";
    for (int s : r.shift) out << " " << s;
    out << "\n";
    out << "k1 " << r.k1_text << "\n";
    out << "i2 " << r.i2_text << "\n";
    for (const auto& piece : r.alg) {
      out << "alg";
      for (int s : piece.shift) out << " " << s;
      if (piece.kind != r.t1) out << " " << transc_name(piece.kind);
      out << " : " << piece.text << "\n";
    }
    for (const auto& [name, text, e] : r.locals) out << "local " << name << " = " << text << "\n";
    if (r.reversible) out << "rev\n";
    out << "\n";
  }
  return out.str();
}

RelationInstance instantiate(const Rule& rule, const Integrand& i,
                             const std::vector<std::size_t>& slot_of) {
  if (form_tag_of(i) != rule.form)
    fail(ErrorCode::GuardViolated, "integrand form does not match rule " + rule.id);
  const SlotLayout& layout = slot_layout(rule.form);
  if (layout.transc) {
    if (!i.transc || i.transc->kind != rule.t1)
      fail(ErrorCode::GuardViolated,
           "transcendental kind does not match rule " + rule.id);
  }

  // Cofactor binding: pure-power rules scale linearly by a constant cofactor;
  // (A + B*x [+ C*x^2]) rules bind the coefficients directly.
  Rat lambda(1);
  if (rule.cof == CofShape::None) {
    if (!i.cofactor.is_constant())
      fail(ErrorCode::GuardViolated,
           "rule " + rule.id + " requires a constant cofactor");
    lambda = i.cofactor.coeff(0);
  } else if (i.cofactor.degree() > cof_shape_degree(rule.cof)) {
    fail(ErrorCode::GuardViolated,
         "cofactor degree exceeds rule " + rule.id + " template");
  }

  Env env = make_slot_env(i, rule.form, slot_of);
  bind_abbrevs(env, rule.section);
  if (rule.cof != CofShape::None) {
    env.set("A", i.cofactor.coeff(0));
    env.set("B", i.cofactor.coeff(1));
    if (rule.cof == CofShape::ABC) env.set("C", i.cofactor.coeff(2));
  }

  for (const auto& [text, e] : rule.vanish) {
    if (!eval_scalar(e, env).is_zero())
      fail(ErrorCode::GuardViolated,
           "rule " + rule.id + " requires " + text + " = 0");
  }
  for (const auto& [text, e] : rule.guards) {
    if (eval_scalar(e, env).is_zero())
      fail(ErrorCode::GuardViolated, "rule " + rule.id + " guard " + text + " vanished");
  }
  for (const auto& [name, text, e] : rule.locals) env.set(name, eval(e, env));
  env.set("x", Poly::x());

  RelationInstance inst;
  inst.rule = &rule;
  inst.slot_of = slot_of;
  inst.i1 = i;
  inst.k1 = eval_scalar(rule.k1, env);

  inst.i2 = i;
  inst.i2.cofactor = eval(rule.i2, env) * lambda;
  for (std::size_t slot = 0; slot < rule.shift.size(); ++slot) {
    inst.i2.factors[slot_of[slot]].exponent += Rat(rule.shift[slot]);
  }
  if (layout.transc) inst.i2.transc = TranscFactor{rule.t2, i.transc->arg};

  // Group the algebraic pieces by transcendental kind; within a group, factor
  // out the componentwise-minimum shift and absorb the rest into the
  // multiplier so each group becomes a single differentiable term.
  const std::vector<TranscKind> kinds =
      layout.transc ? std::vector<TranscKind>{TranscKind::Exp, TranscKind::Cos, TranscKind::Sin}
                    : std::vector<TranscKind>{TranscKind::Exp};
  for (TranscKind kind : kinds) {
    std::vector<const Rule::AlgPiece*> group;
    for (const auto& piece : rule.alg)
      if (!layout.transc || piece.kind == kind) group.push_back(&piece);
    if (group.empty()) continue;
    std::vector<int> base_shift(rule.shift.size());
    for (std::size_t slot = 0; slot < base_shift.size(); ++slot) {
      int mn = group[0]->shift[slot];
      for (const auto* piece : group) mn = std::min(mn, piece->shift[slot]);
      base_shift[slot] = mn;
    }
    Poly mult;
    for (const auto* piece : group) {
      Poly part = eval(piece->mult, env);
      for (std::size_t slot = 0; slot < base_shift.size(); ++slot) {
        for (int k = base_shift[slot]; k < piece->shift[slot]; ++k)
          part *= i.factors[slot_of[slot]].base;
      }
      mult += part;
    }
    AlgTerm term;
    term.weight = lambda;
    term.multiplier = mult;
    term.factors = i.factors;
    for (std::size_t slot = 0; slot < base_shift.size(); ++slot)
      term.factors[slot_of[slot]].exponent += Rat(base_shift[slot]);
    std::erase_if(term.factors,
                  [](const PowerFactor& f) { return f.exponent.is_zero(); });
    if (layout.transc) term.transc = TranscFactor{kind, i.transc->arg};
    if (!term.is_zero()) inst.alg.push_back(std::move(term));
  }
  return inst;
}

RelationInstance instantiate(const Rule& rule, const Integrand& i) {
  DegeneracyProfile prof = degeneracy_profile(i, form_tag_of(i));
  return instantiate(rule, i, prof.slot_of);
}

std::vector<const Rule*> rules_for(const Catalog& cat, FormTag form,
                                   const std::string& case_label,
                                   const std::vector<int>& want) {
  std::vector<const Rule*> all = cat.rules_for_case(form, case_label);
  if (all.empty())
    fail(ErrorCode::NoRuleForCase,
         std::string(form_name(form)) + " has no case " + case_label);

  // A rule serves the wanted move if some slot permutation of its shift (or
  // the negated shift, for the backward solve) moves every constrained slot
  // the wanted way. Degree grouping is ignored here; the engine's candidate
  // filter applies it.
  auto serves = [&](const Rule& r, int dir) {
    std::vector<int> shift = r.shift;
    std::sort(shift.begin(), shift.end());
    do {
      bool ok = true;
      for (std::size_t k = 0; k < want.size() && ok; ++k) {
        if (want[k] == 0) continue;
        int moved = dir * shift[k];
        if (moved != 0 && moved != want[k]) ok = false;
      }
      if (ok) {
        bool touches = false;
        for (std::size_t k = 0; k < want.size(); ++k)
          if (want[k] != 0 && dir * shift[k] == want[k]) touches = true;
        if (touches) return true;
      }
    } while (std::next_permutation(shift.begin(), shift.end()));
    return false;
  };

  std::vector<const Rule*> out;
  for (const Rule* r : all)
    if (serves(*r, +1)) out.push_back(r);
  for (const Rule* r : all)
    if (!serves(*r, +1) && serves(*r, -1)) out.push_back(r);
  return out;
}

}  // namespace recur
