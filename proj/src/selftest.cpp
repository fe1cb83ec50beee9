#include "recur/selftest.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <thread>

#include "recur/errors.hpp"
#include "recur/printer.hpp"
#include "recur/verify.hpp"

namespace recur {

namespace {

using Rng = std::mt19937_64;

Rat rand_rat(Rng& rng, int lo, int hi, int maxden) {
  std::uniform_int_distribution<int> num(lo, hi);
  std::uniform_int_distribution<int> den(1, maxden);
  return Rat(num(rng), den(rng));
}

Rat rand_nonzero(Rng& rng, int lo, int hi, int maxden) {
  for (;;) {
    Rat r = rand_rat(rng, lo, hi, maxden);
    if (!r.is_zero()) return r;
  }
}

/// n distinct rational roots
std::vector<Rat> distinct_roots(Rng& rng, std::size_t n) {
  std::vector<Rat> roots;
  while (roots.size() < n) {
    Rat r = rand_rat(rng, -6, 6, 2);
    bool dup = false;
    for (const Rat& q : roots) dup = dup || q == r;
    if (!dup) roots.push_back(r);
  }
  return roots;
}

Poly linear_with_root(const Rat& root, const Rat& scale) {
  return Poly{-root * scale, scale};  // scale*(x - root)
}

Poly from_roots(const std::vector<Rat>& roots, const Rat& scale) {
  Poly p(scale);
  for (const Rat& r : roots) p *= Poly{-r, Rat(1)};
  return p;
}

Rat rand_exponent(Rng& rng) {
  std::uniform_int_distribution<int> num(-12, 12);
  std::uniform_int_distribution<int> den(1, 4);
  return Rat(num(rng), den(rng));
}

}  // namespace

Integrand sample_integrand_for_case(FormTag form, const std::string& case_label,
                                    CofShape cof, TranscKind t1, std::uint64_t seed) {
  Rng rng(seed);
  auto S = [&] { return rand_nonzero(rng, -5, 5, 2); };

  // Factor bases in slot order, with the case's confluence pattern.
  std::vector<Poly> bases;
  if (case_label == "1") {
    auto r = distinct_roots(rng, 2);
    bases = {from_roots({r[0], r[1]}, S())};
  } else if (case_label == "2A") {
    auto r = distinct_roots(rng, 3);
    bases = {from_roots(r, S())};
  } else if (case_label == "2B") {
    auto r = distinct_roots(rng, 2);
    bases = {from_roots({r[0], r[0], r[1]}, S())};
  } else if (case_label == "3A") {
    auto r = distinct_roots(rng, 4);
    bases = {from_roots(r, S())};
  } else if (case_label == "3B") {
    auto r = distinct_roots(rng, 3);
    bases = {from_roots({r[0], r[0], r[1], r[2]}, S())};
  } else if (case_label == "3C-1") {
    auto r = distinct_roots(rng, 2);
    bases = {from_roots({r[0], r[0], r[0], r[1]}, S())};
  } else if (case_label == "3C-2") {
    auto r = distinct_roots(rng, 2);
    bases = {from_roots({r[0], r[0], r[1], r[1]}, S())};
  } else if (case_label == "4" || case_label == "10A") {
    auto r = distinct_roots(rng, 2);
    bases = {linear_with_root(r[0], S()), linear_with_root(r[1], S())};
  } else if (case_label == "5") {
    bases = {linear_with_root(rand_rat(rng, -6, 6, 2), S())};
  } else if (case_label == "6A") {
    auto r = distinct_roots(rng, 3);
    bases = {linear_with_root(r[0], S()), from_roots({r[1], r[2]}, S())};
  } else if (case_label == "6B-1") {
    auto r = distinct_roots(rng, 2);
    bases = {linear_with_root(r[0], S()), from_roots({r[0], r[1]}, S())};
  } else if (case_label == "6B-2") {
    auto r = distinct_roots(rng, 2);
    bases = {linear_with_root(r[1], S()), from_roots({r[0], r[0]}, S())};
  } else if (case_label == "7A") {
    auto r = distinct_roots(rng, 2);
    bases = {from_roots({r[0], r[1]}, S())};
  } else if (case_label == "7B") {
    auto r = distinct_roots(rng, 1);
    bases = {from_roots({r[0], r[0]}, S())};
  } else if (case_label == "8A") {
    auto r = distinct_roots(rng, 4);
    bases = {from_roots({r[0], r[1]}, S()), from_roots({r[2], r[3]}, S())};
  } else if (case_label == "8B") {
    auto r = distinct_roots(rng, 3);
    bases = {from_roots({r[0], r[1]}, S()), from_roots({r[0], r[2]}, S())};
  } else if (case_label == "8C") {
    auto r = distinct_roots(rng, 3);
    bases = {from_roots({r[0], r[0]}, S()), from_roots({r[1], r[2]}, S())};
  } else if (case_label == "8D-1") {
    auto r = distinct_roots(rng, 2);
    Poly q = from_roots({r[0], r[1]}, S());
    bases = {q, q * S()};
  } else if (case_label == "8D-2") {
    auto r = distinct_roots(rng, 2);
    bases = {from_roots({r[0], r[0]}, S()), from_roots({r[0], r[1]}, S())};
  } else if (case_label == "8D-3") {
    auto r = distinct_roots(rng, 2);
    bases = {from_roots({r[0], r[0]}, S()), from_roots({r[1], r[1]}, S())};
  } else if (case_label == "9A") {
    auto r = distinct_roots(rng, 3);
    bases = {linear_with_root(r[0], S()), linear_with_root(r[1], S()),
             linear_with_root(r[2], S())};
  } else if (case_label == "9B") {
    auto r = distinct_roots(rng, 2);
    bases = {linear_with_root(r[0], S()), linear_with_root(r[0], S()),
             linear_with_root(r[1], S())};
  } else if (case_label == "10B") {
    auto r = distinct_roots(rng, 1);
    bases = {linear_with_root(r[0], S()), linear_with_root(r[0], S())};
  } else if (case_label == "11A") {
    auto r = distinct_roots(rng, 4);
    bases = {linear_with_root(r[0], S()), linear_with_root(r[1], S()),
             from_roots({r[2], r[3]}, S())};
  } else if (case_label == "11B") {
    auto r = distinct_roots(rng, 3);
    bases = {linear_with_root(r[0], S()), linear_with_root(r[0], S()),
             from_roots({r[1], r[2]}, S())};
  } else if (case_label == "11C") {
    auto r = distinct_roots(rng, 3);
    bases = {linear_with_root(r[0], S()), linear_with_root(r[1], S()),
             from_roots({r[0], r[2]}, S())};
  } else if (case_label == "11D") {
    auto r = distinct_roots(rng, 3);
    bases = {linear_with_root(r[0], S()), linear_with_root(r[1], S()),
             from_roots({r[2], r[2]}, S())};
  } else if (case_label == "11E-1") {
    auto r = distinct_roots(rng, 2);
    bases = {linear_with_root(r[0], S()), linear_with_root(r[0], S()),
             from_roots({r[0], r[1]}, S())};
  } else if (case_label == "11E-2") {
    auto r = distinct_roots(rng, 2);
    bases = {linear_with_root(r[0], S()), linear_with_root(r[0], S()),
             from_roots({r[1], r[1]}, S())};
  } else if (case_label == "11E-3") {
    auto r = distinct_roots(rng, 2);
    bases = {linear_with_root(r[0], S()), linear_with_root(r[1], S()),
             from_roots({r[0], r[1]}, S())};
  } else if (case_label == "11E-4") {
    auto r = distinct_roots(rng, 2);
    bases = {linear_with_root(r[0], S()), linear_with_root(r[1], S()),
             from_roots({r[0], r[0]}, S())};
  } else if (case_label == "12A") {
    auto r = distinct_roots(rng, 4);
    bases = {linear_with_root(r[0], S()), linear_with_root(r[1], S()),
             linear_with_root(r[2], S()), linear_with_root(r[3], S())};
  } else if (case_label == "12B") {
    auto r = distinct_roots(rng, 3);
    bases = {linear_with_root(r[0], S()), linear_with_root(r[0], S()),
             linear_with_root(r[1], S()), linear_with_root(r[2], S())};
  } else if (case_label == "12C-1") {
    auto r = distinct_roots(rng, 2);
    bases = {linear_with_root(r[0], S()), linear_with_root(r[0], S()),
             linear_with_root(r[0], S()), linear_with_root(r[1], S())};
  } else if (case_label == "12C-2") {
    auto r = distinct_roots(rng, 2);
    bases = {linear_with_root(r[0], S()), linear_with_root(r[0], S()),
             linear_with_root(r[1], S()), linear_with_root(r[1], S())};
  } else {
    fail(ErrorCode::Internal, "no sample construction for case " + case_label);
  }

  Integrand out;
  for (Poly& b : bases) out.factors.push_back(PowerFactor{std::move(b), rand_exponent(rng)});

  bool transc = form == FormTag::EL || form == FormTag::EQ || form == FormTag::ELL;
  if (transc)
    out.transc = TranscFactor{t1, Poly{rand_rat(rng, -5, 5, 2), rand_nonzero(rng, -5, 5, 2)}};

  switch (cof) {
    case CofShape::None:
      out.cofactor = Poly(rand_nonzero(rng, -5, 5, 2));
      break;
    case CofShape::AB:
      out.cofactor = Poly{rand_rat(rng, -5, 5, 2), rand_rat(rng, -5, 5, 2)};
      break;
    case CofShape::ABC:
      out.cofactor = Poly{rand_rat(rng, -5, 5, 2), rand_rat(rng, -5, 5, 2),
                          rand_rat(rng, -5, 5, 2)};
      break;
  }
  if (out.cofactor.is_zero()) out.cofactor = Poly(Rat(1));
  return out;
}

SelftestReport selftest_catalog(const Catalog& cat, int samples, std::uint64_t seed,
                                const std::vector<std::string>& rule_filter) {
  if (samples < 1) fail(ErrorCode::Internal, "samples must be >= 1");

  std::vector<const Rule*> rules;
  for (const Rule& r : cat.rules()) {
    if (rule_filter.empty() ||
        std::find(rule_filter.begin(), rule_filter.end(), r.id) != rule_filter.end())
      rules.push_back(&r);
  }

  auto check_rule = [&](std::size_t idx) {
    const Rule& rule = *rules[idx];
    RuleReport report;
    report.id = rule.id;
    report.case_label = rule.case_label;
    report.samples = samples;
    report.pass = true;
    std::uint64_t rule_seed = seed * 1000003ULL + idx * 7919ULL;
    std::vector<std::size_t> identity;
    for (std::size_t k = 0; k < rule.shift.size(); ++k) identity.push_back(k);
    for (int s = 0; s < samples && report.pass; ++s) {
      // Rejection sampling over the finite bad set: guards that vanish by
      // accident and exponents that zero the solved-for coefficient.
      RelationInstance inst;
      bool built = false;
      for (int attempt = 0; attempt < 64 && !built; ++attempt) {
        Integrand ig = sample_integrand_for_case(
            rule.form, rule.case_label, rule.cof, rule.t1,
            rule_seed + 1315423911ULL * static_cast<std::uint64_t>(s * 64 + attempt));
        try {
          inst = instantiate(rule, ig, identity);
          if (inst.k1.is_zero()) continue;
          built = true;
        } catch (const Error& e) {
          if (e.code() == ErrorCode::GuardViolated) continue;
          throw;
        }
      }
      if (!built) {
        report.pass = false;
        report.detail = "could not build a valid instantiation";
        break;
      }
      Residual res = relation_residual(inst);
      if (!res.ok()) {
        report.pass = false;
        report.detail = "nonzero residual on " + print_expr(inst.i1);
      }
    }
    return report;
  };

  SelftestReport out;
  out.per_rule.resize(rules.size());
  out.total = static_cast<int>(rules.size());

  // Independent per-rule checks; fan out across the hardware threads.
  unsigned nthreads = std::min<unsigned>(std::thread::hardware_concurrency(),
                                         static_cast<unsigned>(rules.size()));
  if (nthreads <= 1) {
    for (std::size_t i = 0; i < rules.size(); ++i) out.per_rule[i] = check_rule(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nthreads; ++t) {
      pool.emplace_back([&] {
        for (;;) {
          std::size_t i = next.fetch_add(1);
          if (i >= rules.size()) return;
          out.per_rule[i] = check_rule(i);
        }
      });
    }
    for (auto& th : pool) th.join();
  }
  for (const RuleReport& r : out.per_rule)
    if (r.pass) ++out.passed;
  return out;
}

}  // namespace recur
