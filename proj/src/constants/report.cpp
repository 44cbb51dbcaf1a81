#include <functional>
#include <utility>

#include <json.hpp>

#include "zgap/constants.hpp"

namespace zgap::constants {

using numerics::Dir;
using numerics::rb_exp;
using numerics::rb_log;
using numerics::rb_min;
using numerics::rb_pow;

namespace {

RigorousBound I(long long n) { return RigorousBound::integer(n); }

bool intersects(const RigorousBound& a, const RigorousBound& b) {
  return compare(a.lo, b.hi) <= 0 && compare(b.lo, a.hi) <= 0;
}

Status decide(const RigorousBound& computed, const std::optional<RigorousBound>& pub, Direction dir) {
  if (!pub) return Status::NO_PUBLISHED_VALUE;
  bool ok = false;
  switch (dir) {
    case Direction::UPPER: ok = compare(computed.hi, pub->lo) <= 0; break;
    case Direction::LOWER: ok = compare(computed.lo, pub->hi) >= 0; break;
    case Direction::CONTAINS: ok = intersects(computed, *pub); break;
  }
  return ok ? Status::WITHIN_PUBLISHED_BOUND : Status::EXCEEDS;
}

// Published e^v.
RigorousBound pub_exp(const char* v) { return exp_decimal(v); }
RigorousBound pub_dec(const char* v) { return RigorousBound::decimal(v); }

using Maker = std::function<ConstantReport(double lambda)>;

std::vector<std::pair<std::string, Maker>> registry() {
  std::vector<std::pair<std::string, Maker>> r;
  auto add = [&r](std::string name, Maker m) { r.emplace_back(std::move(name), std::move(m)); };
  const RigorousBound eps = standard_eps();
  const RigorousBound x0 = standard_x0();

  add("a0", [](double) {
    return make_report("a0", "eq:mainS a0 = 1.5453", a0(), pub_dec("1.5453"), Direction::CONTAINS);
  });
  add("a1", [](double) {
    return make_report("a1", "eq:a1 a1 = 13 + 26/(10 pi) + 13/(3 pi e)", a1(), std::nullopt, Direction::UPPER);
  });
  add("a2", [x0](double) {
    return make_report("a2", "eq:a2 a2(x0) at x0 = e^20000", a2(x0), std::nullopt, Direction::UPPER);
  });
  add("a3", [x0](double) {
    return make_report("a3", "eq:a3 a3(x0) at x0 = e^20000", a3(x0), std::nullopt, Direction::UPPER);
  });
  add("a4", [x0, eps](double) {
    return make_report("a4", "eq:a4 a4(x0, eps, k) at eps = 1/88, k = 1", a4(x0, eps, 1), std::nullopt,
                       Direction::UPPER);
  });
  add("m0", [](double) {
    return make_report("m0", "eq:MVH m0 = sqrt(1 + (2/3) sqrt(6/5))", m0(), std::nullopt, Direction::UPPER);
  });
  add("L0", [](double) {
    return make_report("L0", "lem:zde L0 = 642.86", L0(), pub_dec("642.86"), Direction::CONTAINS);
  });
  add("K", [](double) {
    return make_report("K", "kor K = 8 pi^2 e^99.8", K(), std::nullopt, Direction::UPPER);
  });
  add("omega0", [](double) {
    return make_report("omega0", "cor:mainValues1 omega0 = e^12.8471", omega0(), pub_exp("12.8471"),
                       Direction::CONTAINS);
  });
  add("Rtilde_sum_k1", [x0, eps](double) {
    return make_report("Rtilde_sum_k1", "eq:Chat sum of R1..R4 at eps = 1/88, k = 1, L = L0",
                       eval_Rtilde(eps, 1, x0, standard_L()).sum(), std::nullopt, Direction::UPPER);
  });
  add("C_k1", [x0, eps](double) {
    return make_report("C_k1", "eq:kk1 C(1/88, 1, e^20000)", eval_C(eps, 1, x0), pub_dec("1.44161e11"),
                       Direction::UPPER);
  });
  add("C_k2", [x0, eps](double) {
    return make_report("C_k2", "eq:kk1 C(1/88, 2, e^20000)", eval_C(eps, 2, x0), pub_dec("2.69927e21"),
                       Direction::UPPER);
  });
  add("Cprime_k1", [x0, eps](double) {
    return make_report("Cprime_k1", "eq:kk2 C'(1/88, 1, e^20000)", eval_C_prime(eps, 1, x0),
                       pub_dec("1.44161e11"), Direction::UPPER);
  });
  add("Cprime_k2", [x0, eps](double) {
    return make_report("Cprime_k2", "eq:kk2 C'(1/88, 2, e^20000)", eval_C_prime(eps, 2, x0),
                       pub_dec("2.69927e21"), Direction::UPPER);
  });
  add("omega0_dominates_C", [x0, eps](double) {
    RigorousBound worst = I(0);
    const RigorousBound w0 = omega0();
    for (int k = 1; k <= 100; ++k) {
      RigorousBound ratio = rb_pow(w0 * I(k), 2LL * k) / eval_C(eps, k, x0);
      worst = k == 1 ? ratio : rb_min(worst, ratio);
    }
    return make_report("omega0_dominates_C", "cor:mainValues1 min over k = 1..100 of (omega0 k)^(2k) / C(1/88, k)",
                       worst, I(1), Direction::LOWER, "ratio must be at least 1");
  });
  add("C1_1", [](double) {
    return make_report("C1_1", "lem:tsang2 C1(1) = 3 pi m0 (1 + sqrt 2)/2", eval_C1(1).exact, std::nullopt,
                       Direction::UPPER);
  });
  add("C1_2", [](double) {
    return make_report("C1_2", "lem:tsang2 C1(2) = 9 pi m0 (1 + sqrt 6)/4", eval_C1(2).exact, std::nullopt,
                       Direction::UPPER);
  });
  add("A_0.7_e", [](double) {
    return make_report("A_0.7_e", "prop:sum A(0.7, e)", eval_A(RigorousBound::decimal("0.7"), I(1)), std::nullopt,
                       Direction::UPPER);
  });

  // Moment-error constants at the gate parameters.
  auto gate_mc = [] {
    const RigorousBound e3 = rational(3, 88);
    const RigorousBound x = standard_x0();
    RigorousBound L = exp_decimal("30.76");
    RigorousBound y = RigorousBound::hull(L.lo, (L + RigorousBound::decimal("0.7")).hi);
    return eval_moment_error_constants_at(e3, I(1), y, ln_T1_threshold(e3, x), x);
  };
  const char* mc_anchor = "thm:difference at eps = 3/88, alpha = 1, log(alpha + h log T) = e^30.76 (+0.7)";
  add("D1", [gate_mc, mc_anchor](double) {
    return make_report("D1", std::string("eq:d1 ") + mc_anchor, gate_mc().D1, std::nullopt, Direction::UPPER);
  });
  add("D2", [gate_mc, mc_anchor](double) {
    return make_report("D2", std::string("eq:d2 ") + mc_anchor, gate_mc().D2, std::nullopt, Direction::UPPER);
  });
  add("E2", [gate_mc, mc_anchor](double) {
    return make_report("E2", std::string("E2 = 2(C + C')(eps/3, 1) ") + mc_anchor, gate_mc().E2, std::nullopt,
                       Direction::UPPER);
  });
  add("F2", [gate_mc, mc_anchor](double) {
    return make_report("F2", std::string("F2 = 8(C + C')(eps/3, 2) ") + mc_anchor, gate_mc().F2, std::nullopt,
                       Direction::UPPER);
  });
  add("C2_gate", [gate_mc, mc_anchor](double) {
    return make_report("C2_gate", std::string("C2 ") + mc_anchor, gate_mc().C2, std::nullopt, Direction::UPPER);
  });
  add("C3_gate", [gate_mc, mc_anchor](double) {
    return make_report("C3_gate", std::string("C3 ") + mc_anchor, gate_mc().C3, std::nullopt, Direction::UPPER);
  });
  add("M2_gate_margin_30.76", [](double) {
    return make_report("M2_gate_margin_30.76", "lager 1 - pi^2 C2 / sqrt(log 2 pi M) at loglog(2 pi M) = 30.76",
                       audit_M2_gate("30.76").margin, I(0), Direction::LOWER, "gate passes iff margin > 0");
  });
  add("M2_gate_margin_30.75", [](double) {
    return make_report("M2_gate_margin_30.75", "lager 1 - pi^2 C2 / sqrt(log 2 pi M) at loglog(2 pi M) = 30.75",
                       audit_M2_gate("30.75").margin, I(0), Direction::UPPER, "gate fails iff margin < 0");
  });
  add("M2", [](double) {
    return make_report("M2", "lager (log 2 pi M / pi^2)(1 - pi^2 C2 / sqrt(log 2 pi M)) at loglog = 30.76",
                       derive_M2_M3("30.76").M2, pub_exp("22.49"), Direction::LOWER,
                       "derived lower bound for J2/T; published M2 = e^22.49");
  });
  add("M3", [](double) {
    return make_report("M3", "thm:difference (3/pi^4) y^2 + C3 y^(3/2), y = log 2 pi M + 0.7",
                       derive_M2_M3("30.76").M3, pub_exp("58.87"), Direction::UPPER,
                       "derived upper bound for J4/T; published M3 = e^58.87");
  });
  add("M1", [](double) {
    GapConstantsReport g = eval_gap_constants(1.0, 0.5);
    return make_report("M1", "umpires M1 = sqrt(M2^3 / M3) with the published M2, M3", g.M1_from_holder,
                       pub_exp("4.3"), Direction::CONTAINS);
  });
  add("M1_from_derived", [](double) {
    MomentBoundsAtGate d = derive_M2_M3("30.76");
    return make_report("M1_from_derived", "umpires sqrt(M2^3 / M3) with the derived M2, M3",
                       numerics::rb_sqrt(d.M2 * d.M2 * d.M2 / d.M3), pub_exp("4.3"), Direction::LOWER,
                       "Hoelder lower bound for J1/T from the derived moment bounds");
  });
  add("c0", [](double) {
    GapConstantsReport g = eval_gap_constants(1.0, 0.5);
    // 397 * 10^(-9.93e12), the admissible lambda - 1 quoted for the gap result.
    RigorousBound example = I(397) * rb_exp(-(RigorousBound::decimal("9.93e12") * rb_log(I(10))));
    return make_report("c0", "thm:Main c0 = pi e^4.3 / e^(e^30.76)", g.c0, example, Direction::LOWER,
                       "must dominate lambda - 1 = 397 * 10^(-9.93e12)");
  });
  add("c1", [](double lambda) {
    GapConstantsReport g = eval_gap_constants(lambda, 0.5);
    return make_report("c1", "thm:Main c1 = (1 + c0 - lambda)^2 / (16 e^99.8)", g.c1, std::nullopt, Direction::UPPER,
                       g.c1_forms_agree ? "agrees with the horn form" : "DISAGREES with the horn form");
  });
  add("c2", [](double lambda) {
    GapConstantsReport g = eval_gap_constants(lambda, 0.5);
    return make_report("c2", "thm:Main c2 = ((1 - 2 c1) mu + 2 lambda c1 - 1)/(2 mu) at mu = 0.5", g.c2, std::nullopt,
                       Direction::UPPER);
  });
  add("kappa", [](double) {
    MultiplicityConstants m = eval_multiplicity_constants();
    return make_report("kappa", "kappa = 2/(3 e omega0)", m.kappa, pub_dec("6.459e-7"), Direction::LOWER);
  });
  add("delta", [](double) {
    MultiplicityConstants m = eval_multiplicity_constants();
    RigorousBound pub = RigorousBound::hull(LogReal::parse("1.0139425", Dir::Down), LogReal::parse("1.0139435", Dir::Up));
    return make_report("delta", "2 e^5 kappa = delta (1 - 1/delta)^2", m.delta, pub, Direction::CONTAINS,
                       "published to six decimals");
  });
  add("density_coefficient_thm51", [](double) {
    MultiplicityConstants m = eval_multiplicity_constants();
    return make_report("density_coefficient_thm51", "thm:mult coefficient 1.01395 >= delta", m.delta,
                       pub_dec("1.01395"), Direction::UPPER);
  });
  add("density_coefficient_thm14", [](double) {
    MultiplicityConstants m = eval_multiplicity_constants();
    return make_report("density_coefficient_thm14", "thm:multMain coefficient 1.014 >= delta", m.delta,
                       pub_dec("1.014"), Direction::UPPER);
  });
  add("ideal_lambda", [](double) {
    double l = solve_ideal_lambda();
    RigorousBound v = RigorousBound::hull(LogReal::from_double(l - 1e-12), LogReal::from_double(l + 1e-12));
    v.rounding_certified = false;
    return make_report("ideal_lambda", "fish lambda = 1 + M1(lambda)/2, M1 = sqrt(log(2 pi lambda)/(3 pi^2))", v,
                       pub_dec("1.1286"), Direction::LOWER, "every lambda below 1.1286 is admissible");
  });
  add("ideal_lambda_literal_fish", [](double) {
    double l = solve_ideal_lambda_literal_fish();
    RigorousBound v = RigorousBound::hull(LogReal::from_double(l - 1e-12), LogReal::from_double(l + 1e-12));
    v.rounding_certified = false;
    return make_report("ideal_lambda_literal_fish",
                       "fish lambda = 1 + M1(lambda)/2, M1 = sqrt(log(1 + 2 pi lambda)/(3 pi^2))", v, std::nullopt,
                       Direction::UPPER, "fixed point of the displayed formula; differs from 1.1286");
  });
  return r;
}

std::string ln_or_inf(const LogReal& v) { return v.sign == 0 ? std::string("-inf") : v.ln_string(30); }

}  // namespace

const char* to_string(Direction d) {
  switch (d) {
    case Direction::UPPER: return "UPPER";
    case Direction::LOWER: return "LOWER";
    default: return "CONTAINS";
  }
}

const char* to_string(Status s) {
  switch (s) {
    case Status::WITHIN_PUBLISHED_BOUND: return "WITHIN_PUBLISHED_BOUND";
    case Status::EXCEEDS: return "EXCEEDS";
    default: return "NO_PUBLISHED_VALUE";
  }
}

ConstantReport make_report(std::string name, std::string anchor, RigorousBound computed,
                           std::optional<RigorousBound> published, Direction dir, std::string note) {
  ConstantReport r;
  r.name = std::move(name);
  r.formula_anchor = std::move(anchor);
  r.status = decide(computed, published, dir);
  r.computed = std::move(computed);
  r.published = std::move(published);
  r.direction = dir;
  r.note = std::move(note);
  return r;
}

std::vector<ConstantReport> all_reports() {
  std::vector<ConstantReport> out;
  for (auto& [name, make] : registry()) out.push_back(make(1.0));
  return out;
}

std::optional<ConstantReport> report_by_name(const std::string& name, double lambda) {
  for (auto& [n, make] : registry()) {
    if (n == name) return make(lambda);
  }
  return std::nullopt;
}

std::vector<std::string> report_names() {
  std::vector<std::string> out;
  for (auto& [n, make] : registry()) out.push_back(n);
  return out;
}

std::string report_to_json_line(const ConstantReport& r) {
  nlohmann::ordered_json j;
  j["name"] = r.name;
  j["formula_anchor"] = r.formula_anchor;
  j["computed_lo_ln"] = ln_or_inf(r.computed.lo);
  j["computed_hi_ln"] = ln_or_inf(r.computed.hi);
  int sign = r.computed.certainly_positive() ? 1 : r.computed.certainly_negative() ? -1 : 0;
  j["computed_sign"] = sign;
  j["computed_lo_sign"] = r.computed.lo.sign;
  j["computed_hi_sign"] = r.computed.hi.sign;
  if (r.published) {
    LogReal mid = numerics::log_add(r.published->lo, r.published->hi);
    mid = numerics::log_div(mid, LogReal::from_double(2.0));
    j["published"] = {{"sign", mid.sign}, {"ln", ln_or_inf(mid)}};
  } else {
    j["published"] = nullptr;
  }
  j["status"] = to_string(r.status);
  j["direction"] = to_string(r.direction);
  j["rounding_certified"] = r.computed.rounding_certified;
  j["note"] = r.note;
  return j.dump();
}

}  // namespace zgap::constants
