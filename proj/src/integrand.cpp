#include "recur/integrand.hpp"

#include <algorithm>

#include "recur/errors.hpp"
#include "recur/symbols.hpp"

namespace recur {

const char* form_name(FormTag t) {
  switch (t) {
    case FormTag::Q2: return "Q2";
    case FormTag::C3: return "C3";
    case FormTag::Q4: return "Q4";
    case FormTag::LL: return "LL";
    case FormTag::EL: return "EL";
    case FormTag::LQ: return "LQ";
    case FormTag::EQ: return "EQ";
    case FormTag::QQ: return "QQ";
    case FormTag::LLL: return "LLL";
    case FormTag::ELL: return "ELL";
    case FormTag::LLQ: return "LLQ";
    case FormTag::LLLL: return "LLLL";
  }
  return "?";
}

std::optional<FormTag> form_from_name(const std::string& s) {
  for (FormTag t : {FormTag::Q2, FormTag::C3, FormTag::Q4, FormTag::LL, FormTag::EL,
                    FormTag::LQ, FormTag::EQ, FormTag::QQ, FormTag::LLL, FormTag::ELL,
                    FormTag::LLQ, FormTag::LLLL}) {
    if (s == form_name(t)) return t;
  }
  return std::nullopt;
}

Integrand normalize(const Integrand& raw) {
  if (raw.cofactor.is_zero())
    fail(ErrorCode::UnsupportedForm, "zero integrand");
  Integrand out = raw;
  for (const PowerFactor& f : out.factors) {
    if (f.base.is_constant())
      fail(ErrorCode::UnsupportedForm, "constant power-factor base");
  }
  if (out.transc && out.transc->arg.degree() != 1)
    fail(ErrorCode::UnsupportedForm, "transcendental argument must have degree 1");

  // Drop vanished exponents, then merge proportional bases until stable.
  auto drop_zero = [&] {
    std::erase_if(out.factors, [](const PowerFactor& f) { return f.exponent.is_zero(); });
  };
  drop_zero();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < out.factors.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < out.factors.size() && !changed; ++j) {
        if (!out.factors[j].base.ratio_to(out.factors[i].base)) continue;
        // Keep the canonically smaller base so (2+2x)^2 (1+x)^n lands on 1+x.
        std::size_t keep = i, drop = j;
        if (out.factors[j].base < out.factors[i].base) std::swap(keep, drop);
        Rat ratio = *out.factors[drop].base.ratio_to(out.factors[keep].base);
        const Rat& e = out.factors[drop].exponent;
        // (r*p)^e = r^e * p^e, valid globally for r > 0 and for integer e.
        std::optional<Rat> scale;
        if (ratio.is_positive() || e.is_integer()) scale = ratio.pow_rat(e);
        if (scale) {
          out.cofactor *= *scale;
          out.factors[keep].exponent += e;
          out.factors.erase(out.factors.begin() + static_cast<std::ptrdiff_t>(drop));
          drop_zero();
          changed = true;
        }
      }
    }
  }

  // A positive-ratio pair that cannot merge rationally is handled by the
  // catalog's shared-root cases when such cases exist; for a plain product of
  // two linear powers none do, so refuse it here.
  if (!out.transc && out.factors.size() == 2 && out.factors[0].base.degree() == 1 &&
      out.factors[1].base.degree() == 1) {
    auto ratio = out.factors[1].base.ratio_to(out.factors[0].base);
    if (ratio && ratio->is_positive())
      fail(ErrorCode::UnsupportedMerge,
           "proportional linear bases with irrational merge scale");
  }

  std::sort(out.factors.begin(), out.factors.end(),
            [](const PowerFactor& lhs, const PowerFactor& rhs) {
              if (lhs.base != rhs.base) return lhs.base < rhs.base;
              return lhs.exponent < rhs.exponent;
            });
  return out;
}

FormTag form_tag_of(const Integrand& i) {
  std::vector<int> degs;
  degs.reserve(i.factors.size());
  for (const PowerFactor& f : i.factors) degs.push_back(f.base.degree());
  // normalize() sorts by degree already; keep this robust for direct callers.
  std::sort(degs.begin(), degs.end());

  if (i.transc) {
    if (degs == std::vector<int>{1}) return FormTag::EL;
    if (degs == std::vector<int>{2}) return FormTag::EQ;
    if (degs == std::vector<int>{1, 1}) return FormTag::ELL;
    fail(ErrorCode::UnsupportedForm,
         "powers accompanying a transcendental factor must have combined degree <= 2");
  }
  if (degs == std::vector<int>{2}) return FormTag::Q2;
  if (degs == std::vector<int>{3}) return FormTag::C3;
  if (degs == std::vector<int>{4}) return FormTag::Q4;
  if (degs == std::vector<int>{1, 1}) return FormTag::LL;
  if (degs == std::vector<int>{1, 2}) return FormTag::LQ;
  if (degs == std::vector<int>{2, 2}) return FormTag::QQ;
  if (degs == std::vector<int>{1, 1, 1}) return FormTag::LLL;
  if (degs == std::vector<int>{1, 1, 2}) return FormTag::LLQ;
  if (degs == std::vector<int>{1, 1, 1, 1}) return FormTag::LLLL;
  fail(ErrorCode::UnsupportedForm, "factor degree multiset outside the supported inventory");
}

int case_cofactor_cap(FormTag tag, const std::string& case_label) {
  switch (tag) {
    case FormTag::Q2: return 0;
    case FormTag::C3: return case_label == "2A" ? 1 : 0;
    case FormTag::Q4:
      if (case_label == "3A") return 2;
      return case_label == "3B" ? 1 : 0;
    case FormTag::LL: return 0;
    case FormTag::EL: return 0;
    case FormTag::LQ: return case_label == "6A" ? 1 : 0;
    case FormTag::EQ: return case_label == "7A" ? 1 : 0;
    case FormTag::QQ:
      if (case_label == "8A") return 2;
      return (case_label == "8B" || case_label == "8C") ? 1 : 0;
    case FormTag::LLL: return case_label == "9A" ? 1 : 0;
    case FormTag::ELL: return case_label == "10A" ? 1 : 0;
    case FormTag::LLQ:
      if (case_label == "11A") return 2;
      return (case_label == "11B" || case_label == "11C" || case_label == "11D") ? 1 : 0;
    case FormTag::LLLL:
      if (case_label == "12A") return 2;
      return case_label == "12B" ? 1 : 0;
  }
  return 0;
}

int form_cofactor_cap(FormTag tag) {
  switch (tag) {
    case FormTag::Q2: return 0;
    case FormTag::C3: return 1;
    case FormTag::EQ: return 1;
    default: return 2;  // a degree-2 case exists or a linear factor absorbs
  }
}

namespace {

struct NamedExpr {
  const char* name;
  const char* text;
};

struct CaseSpec {
  const char* label;
  std::vector<NamedExpr> vanish;   // all must evaluate to zero
  std::vector<NamedExpr> nonzero;  // all must evaluate nonzero
};

// Case conditions per form, checked most degenerate first: the conditions
// of a milder case can also hold on a deeper confluence (both linear roots
// of an LLQ integrand hitting distinct quadratic roots satisfies the single
// linear-quadratic coincidence too), so order decides.
const std::vector<CaseSpec>& cases_of(FormTag tag) {
  static const std::vector<CaseSpec> q2{
      {"1", {}, {{"disc2", "4*a*c - b^2"}}},
  };
  static const std::vector<CaseSpec> c3{
      {"2B", {{"disc3", "ra*rc - rb^2"}}, {{"ra", "ra"}}},
      {"2A", {}, {{"disc3", "ra*rc - rb^2"}}},
  };
  static const std::vector<CaseSpec> q4{
      {"3C-1", {{"triple_a", "6*ra*a - 3*rb*b + rc1*c"}, {"triple_b", "rc1 - rc2"}}, {{"ra", "ra"}}},
      {"3C-2", {{"dd_a", "ra*d - 4*rb*e"}, {"dd_b", "rb*d - 4*rc2*e"}}, {{"ra", "ra"}}},
      {"3B", {{"disc4", "sa*re - 2*sb*rd + sc*rc1"}}, {{"sa", "sa"}}},
      {"3A", {}, {{"disc4", "sa*re - 2*sb*rd + sc*rc1"}}},
  };
  static const std::vector<CaseSpec> ll{
      {"4", {}, {{"res", "a*d - b*c"}}},
  };
  static const std::vector<CaseSpec> el{
      {"5", {}, {}},
  };
  static const std::vector<CaseSpec> lq{
      {"6B-1", {{"res", "ra*a - rb*b"}}, {{"ra", "ra"}}},
      {"6B-2", {{"disc2", "4*c*e - d^2"}}, {{"ra", "ra"}}},
      {"6A", {}, {{"res", "ra*a - rb*b"}, {"disc2", "4*c*e - d^2"}}},
  };
  static const std::vector<CaseSpec> eq{
      {"7B", {{"disc2", "4*c*e - d^2"}}, {}},
      {"7A", {}, {{"disc2", "4*c*e - d^2"}}},
  };
  static const std::vector<CaseSpec> qq{
      {"8D-1", {{"ra", "ra"}, {"rb", "rb"}}, {{"mixed", "2*a*f - b*e + 2*c*d"}}},
      {"8D-2", {{"disc2a", "4*a*c - b^2"}, {"mixed", "2*a*f - b*e + 2*c*d"}},
       {{"disc2b", "4*d*f - e^2"}}},
      {"8D-3", {{"disc2a", "4*a*c - b^2"}, {"disc2b", "4*d*f - e^2"}}, {{"ra", "ra"}}},
      {"8B", {{"res", "ra*rc - rb^2"}}, {{"mixed", "2*a*f - b*e + 2*c*d"}, {"ra", "ra"}}},
      {"8C", {{"disc2a", "4*a*c - b^2"}},
       {{"mixed", "2*a*f - b*e + 2*c*d"}, {"disc2b", "4*d*f - e^2"}}},
      {"8A", {}, {{"res", "ra*rc - rb^2"}, {"disc2a", "4*a*c - b^2"}, {"disc2b", "4*d*f - e^2"}}},
  };
  static const std::vector<CaseSpec> lll{
      {"9B", {{"res12", "a*d - b*c"}}, {{"res13", "a*f - b*e"}}},
      {"9A", {},
       {{"res12", "a*d - b*c"}, {"res13", "a*f - b*e"}, {"res23", "c*f - d*e"}}},
  };
  static const std::vector<CaseSpec> ell{
      {"10B", {{"res", "c*f - d*e"}}, {}},
      {"10A", {}, {{"res", "c*f - d*e"}}},
  };
  static const std::vector<CaseSpec> llq{
      {"11E-1", {{"res12", "a*d - b*c"}, {"res1q", "ra*a - rb*b"}}, {{"ra", "ra"}}},
      {"11E-2", {{"res12", "a*d - b*c"}, {"disc2", "4*e*g - f^2"}}, {{"ra", "ra"}}},
      {"11E-3", {{"re", "re"}, {"rf", "rf"}}, {{"res12", "a*d - b*c"}}},
      {"11E-4", {{"ra", "ra"}, {"rb", "rb"}}, {{"res12", "a*d - b*c"}}},
      {"11B", {{"res12", "a*d - b*c"}}, {{"res1q", "ra*a - rb*b"}, {"disc2", "4*e*g - f^2"}}},
      {"11C", {{"res1q", "ra*a - rb*b"}}, {{"res12", "a*d - b*c"}, {"disc2", "4*e*g - f^2"}}},
      {"11D", {{"disc2", "4*e*g - f^2"}}, {{"ra", "ra"}, {"rc", "rc"}}},
      {"11A", {},
       {{"res12", "a*d - b*c"}, {"res1q", "ra*a - rb*b"}, {"res2q", "rc*c - rd*d"},
        {"disc2", "4*e*g - f^2"}}},
  };
  static const std::vector<CaseSpec> llll{
      {"12C-1", {{"res12", "a*d - b*c"}, {"res13", "a*f - b*e"}}, {{"res14", "a*h - b*g"}}},
      {"12C-2", {{"res12", "a*d - b*c"}, {"res34", "e*h - f*g"}}, {{"res13", "a*f - b*e"}}},
      {"12B", {{"res12", "a*d - b*c"}},
       {{"res13", "a*f - b*e"}, {"res14", "a*h - b*g"}, {"res34", "e*h - f*g"}}},
      {"12A", {},
       {{"res12", "a*d - b*c"}, {"res13", "a*f - b*e"}, {"res14", "a*h - b*g"},
        {"res23", "c*f - d*e"}, {"res24", "c*h - d*g"}, {"res34", "e*h - f*g"}}},
  };
  switch (tag) {
    case FormTag::Q2: return q2;
    case FormTag::C3: return c3;
    case FormTag::Q4: return q4;
    case FormTag::LL: return ll;
    case FormTag::EL: return el;
    case FormTag::LQ: return lq;
    case FormTag::EQ: return eq;
    case FormTag::QQ: return qq;
    case FormTag::LLL: return lll;
    case FormTag::ELL: return ell;
    case FormTag::LLQ: return llq;
    case FormTag::LLLL: return llll;
  }
  fail(ErrorCode::Internal, "bad form tag");
}

ExprPtr cached_template(const char* text) {
  static std::map<const char*, ExprPtr>* cache = new std::map<const char*, ExprPtr>();
  auto it = cache->find(text);
  if (it != cache->end()) return it->second;
  ExprPtr e = parse_template(text);
  (*cache)[text] = e;
  return e;
}

/// Same-degree slots are interchangeable; enumerate assignments in
/// lexicographic order so dispatch is deterministic.
std::vector<std::vector<std::size_t>> slot_assignments(const Integrand& i) {
  std::vector<std::size_t> idx(i.factors.size());
  for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
  std::vector<std::vector<std::size_t>> result;
  // Factors are sorted by degree, so a valid assignment is any permutation
  // that keeps each position's degree; enumerate all and filter.
  std::vector<std::size_t> perm = idx;
  do {
    bool ok = true;
    for (std::size_t k = 0; k < perm.size(); ++k) {
      if (i.factors[perm[k]].base.degree() != i.factors[k].base.degree()) {
        ok = false;
        break;
      }
    }
    if (ok) result.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return result;
}

}  // namespace

std::vector<std::vector<std::size_t>> enumerate_slot_assignments(const Integrand& i) {
  return slot_assignments(i);
}

DegeneracyProfile degeneracy_profile(const Integrand& i, FormTag tag) {
  const int section = section_of_form(tag);
  const auto assignments = slot_assignments(i);
  for (const CaseSpec& cs : cases_of(tag)) {
    for (const auto& perm : assignments) {
      Env env = make_slot_env(i, tag, perm);
      bind_abbrevs(env, section);
      bool ok = true;
      std::vector<std::pair<std::string, Rat>> values;
      for (const auto& [name, text] : section_abbrevs(section))
        values.emplace_back(name, env.vals.at(name).coeff(0));
      for (const NamedExpr& v : cs.vanish) {
        Rat val = eval_scalar(cached_template(v.text), env);
        values.emplace_back(v.name, val);
        if (!val.is_zero()) {
          ok = false;
          break;
        }
      }
      for (const NamedExpr& g : cs.nonzero) {
        if (!ok) break;
        Rat val = eval_scalar(cached_template(g.text), env);
        values.emplace_back(g.name, val);
        if (val.is_zero()) ok = false;
      }
      if (ok) return DegeneracyProfile{cs.label, perm, std::move(values)};
    }
  }
  fail(ErrorCode::UnsupportedDegeneracy,
       std::string("no case of form ") + form_name(tag) +
           " matches the integrand's confluence pattern");
}

FormClass classify(const Integrand& i) {
  FormTag tag = form_tag_of(i);
  if (i.cofactor.degree() > form_cofactor_cap(tag))
    fail(ErrorCode::CofactorTooLarge,
         std::string("cofactor degree ") + std::to_string(i.cofactor.degree()) +
             " exceeds what form " + form_name(tag) + " supports");
  return FormClass{tag, degeneracy_profile(i, tag)};
}

}  // namespace recur
