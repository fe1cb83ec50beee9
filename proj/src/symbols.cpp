#include "recur/symbols.hpp"

#include "recur/errors.hpp"

namespace recur {

int section_of_form(FormTag tag) {
  switch (tag) {
    case FormTag::Q2: return 1;
    case FormTag::C3: return 2;
    case FormTag::Q4: return 3;
    case FormTag::LL: return 4;
    case FormTag::EL: return 5;
    case FormTag::LQ: return 6;
    case FormTag::EQ: return 7;
    case FormTag::QQ: return 8;
    case FormTag::LLL: return 9;
    case FormTag::ELL: return 10;
    case FormTag::LLQ: return 11;
    case FormTag::LLLL: return 12;
  }
  fail(ErrorCode::Internal, "bad form tag");
}

const SlotLayout& slot_layout(FormTag tag) {
  static const SlotLayout q2{{{"a", "b", "c"}}, {"n"}, false};
  static const SlotLayout c3{{{"a", "b", "c", "d"}}, {"n"}, false};
  static const SlotLayout q4{{{"a", "b", "c", "d", "e"}}, {"n"}, false};
  static const SlotLayout ll{{{"a", "b"}, {"c", "d"}}, {"m", "n"}, false};
  static const SlotLayout el{{{"c", "d"}}, {"n"}, true};
  static const SlotLayout lq{{{"a", "b"}, {"c", "d", "e"}}, {"m", "n"}, false};
  static const SlotLayout eq{{{"c", "d", "e"}}, {"n"}, true};
  static const SlotLayout qq{{{"a", "b", "c"}, {"d", "e", "f"}}, {"m", "n"}, false};
  static const SlotLayout lll{{{"a", "b"}, {"c", "d"}, {"e", "f"}}, {"m", "n", "p"}, false};
  static const SlotLayout ell{{{"c", "d"}, {"e", "f"}}, {"m", "n"}, true};
  static const SlotLayout llq{{{"a", "b"}, {"c", "d"}, {"e", "f", "g"}}, {"m", "n", "p"}, false};
  static const SlotLayout llll{
      {{"a", "b"}, {"c", "d"}, {"e", "f"}, {"g", "h"}}, {"m", "n", "p", "q"}, false};
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

const std::vector<std::pair<const char*, const char*>>& section_abbrevs(int section) {
  static const std::vector<std::pair<const char*, const char*>> none{};
  static const std::vector<std::pair<const char*, const char*>> s2{
      {"ra", "2*(3*b*d - c^2)"},
      {"rb", "9*a*d - b*c"},
      {"rc", "2*(3*a*c - b^2)"},
  };
  static const std::vector<std::pair<const char*, const char*>> s3{
      {"ra", "8*c*e - 3*d^2"},
      {"rb", "6*b*e - c*d"},
      {"rc1", "16*a*e - b*d"},
      {"rc2", "4*a*e + 2*b*d - c^2"},
      {"rd", "6*a*d - b*c"},
      {"re", "8*a*c - 3*b^2"},
      {"sa", "ra*rc2 - rb^2"},
      {"sb", "1/2*(ra*rd - rb*rc1)"},
      {"sc", "rb*rd - rc1*rc2"},
      {"sd", "1/2*(rb*re - rc1*rd)"},
      {"se", "rc2*re - rd^2"},
  };
  static const std::vector<std::pair<const char*, const char*>> s6{
      {"ra", "2*a*e - b*d"},
      {"rb", "a*d - 2*b*c"},
  };
  static const std::vector<std::pair<const char*, const char*>> s8{
      {"ra", "b*f - c*e"},
      {"rb", "a*f - c*d"},
      {"rc", "a*e - b*d"},
      {"sa", "ra*b - 2*rb*c"},
      {"sb", "ra*a - rc*c"},
      {"sc", "2*rb*a - rc*b"},
      {"sd", "2*rb*f - ra*e"},
      {"se", "rc*f - ra*d"},
  };
  static const std::vector<std::pair<const char*, const char*>> s9{
      {"ra", "(c*f + d*e)*b - a*d*f"},
      {"rb", "b*c*e"},
  };
  static const std::vector<std::pair<const char*, const char*>> s11{
      {"ra", "2*a*g - b*f"},
      {"rb", "a*f - 2*b*e"},
      {"rc", "2*c*g - d*f"},
      {"rd", "c*f - 2*d*e"},
      {"re", "1/2*(ra*d + rc*b)"},
      {"rf", "1/2*(ra*c + rd*b)"},
      {"rg", "1/2*(rb*c + rd*a)"},
      {"se", "2*rf*g - re*f"},
      {"sf", "rg*g - re*e"},
      {"sg", "rg*f - 2*rf*e"},
  };
  static const std::vector<std::pair<const char*, const char*>> s12{
      {"ra", "(e*h + f*g)*b - a*f*h"},
      {"rb", "b*e*g"},
      {"re", "(a*h + b*g)*f - b*e*h"},
      {"rf", "a*f*g"},
      {"saa", "b*c*f*h + ra*d"},
      {"sab", "a*c*f*h + ra*c + rb*d"},
      {"sbb", "rb*c"},
  };
  switch (section) {
    case 2: return s2;
    case 3: return s3;
    case 6: return s6;
    case 8: return s8;
    case 9: return s9;
    case 11: return s11;
    case 12: return s12;
    default: return none;
  }
}

Env make_slot_env(const Integrand& i, FormTag tag, const std::vector<std::size_t>& slot_of) {
  const SlotLayout& layout = slot_layout(tag);
  if (slot_of.size() != layout.slot_coeffs.size() || i.factors.size() != slot_of.size())
    fail(ErrorCode::Internal, "slot assignment does not match form");
  Env env;
  if (layout.transc) {
    if (!i.transc) fail(ErrorCode::Internal, "transcendental form without factor");
    env.set("a", i.transc->arg.coeff(0));
    env.set("b", i.transc->arg.coeff(1));
  }
  for (std::size_t slot = 0; slot < slot_of.size(); ++slot) {
    const PowerFactor& f = i.factors[slot_of[slot]];
    const auto& names = layout.slot_coeffs[slot];
    if (f.base.degree() != static_cast<int>(names.size()) - 1)
      fail(ErrorCode::Internal, "factor degree does not match slot");
    for (std::size_t k = 0; k < names.size(); ++k) env.set(names[k], f.base.coeff(k));
    env.set(layout.slot_exponents[slot], f.exponent);
  }
  return env;
}

void bind_abbrevs(Env& env, int section) {
  static const auto* cache = [] {
    auto* m = new std::vector<std::vector<std::pair<const char*, ExprPtr>>>(13);
    for (int s = 1; s <= 12; ++s)
      for (const auto& [name, text] : section_abbrevs(s))
        (*m)[static_cast<std::size_t>(s)].emplace_back(name, parse_template(text));
    return m;
  }();
  for (const auto& [name, expr] : (*cache)[static_cast<std::size_t>(section)]) {
    env.set(name, eval(expr, env));
  }
}

}  // namespace recur
