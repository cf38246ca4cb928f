#include "seshadri/serialize.hpp"

namespace seshadri::io {

json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return json(v.get_si());
  return json(v.get_str());
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_number_unsigned()) return Integer(j.get<unsigned long>());
  if (j.is_string()) {
    Rational r = Rational::parse(j.get<std::string>());
    if (!r.is_integer()) throw DomainError("expected an integer, got " + r.str());
    return r.num();
  }
  throw DomainError("expected an integer");
}

Rational rational_from_json(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  return Rational(integer_from_json(j));
}

void put_rational(json& obj, const std::string& key, const Rational& v, int digits) {
  obj[key] = v.str();
  obj[key + "_decimal"] = v.to_decimal(digits);
}

json to_json(const bounds::BoundWitness& w) {
  json j;
  j["r"] = integer_json(w.r);
  j["d"] = integer_json(w.d);
  j["m"] = integer_json(w.m);
  j["set"] = bounds::tag_name(w.tag);
  put_rational(j, "value", w.value);
  return j;
}

json to_json(const bounds::SeshadriBound& b) {
  json j;
  j["n"] = integer_json(b.n);
  j["l"] = integer_json(b.l);
  put_rational(j, "value", b.value);
  j["square_case"] = b.square_case;
  j["refined"] = b.refined;
  j["witness"] = b.witness ? to_json(*b.witness) : json(nullptr);
  return j;
}

json to_json(const bounds::CaseBound& c) {
  json j;
  j["case"] = c.tag;
  put_rational(j, "value", c.value);
  j["R"] = integer_json(c.R);
  j["d"] = integer_json(c.d);
  j["in_refined_set"] = c.in_refined_set;
  j["flags"] = c.flags;
  return j;
}

json to_json(const bounds::PellSolution& p) {
  return json{{"r", integer_json(p.r)}, {"d", integer_json(p.d)}, {"rhs", p.rhs}};
}

json to_json(const bounds::ReferenceRow& row) {
  json j;
  j["n"] = integer_json(row.n);
  put_rational(j, "eps", row.eps);
  put_rational(j, "eps_refined", row.eps_refined);
  j["eps_vs_inv_sqrt_n_plus_1"] = row.vs_inv_sqrt_n_plus_1;
  j["n_pm1_square"] = row.n_pm1_square;
  j["refined_improves"] = row.refined_improves;
  j["pell"] = row.pell ? to_json(*row.pell) : json(nullptr);
  if (row.biran) put_rational(j, "biran", *row.biran);
  else j["biran"] = nullptr;
  j["pell_r_le_n"] = row.pell_r_le_n;
  return j;
}

json to_json(const nef::NefCertificate& cert) {
  json j;
  j["n"] = integer_json(cert.divisor.n);
  j["l"] = integer_json(cert.divisor.l);
  j["c0"] = cert.divisor.c0.str();
  j["a0"] = cert.a0.str();
  json e = json::array();
  for (const auto& x : cert.divisor.e) e.push_back(x.str());
  j["e"] = e;
  json mults = json::array();
  for (const auto& m : cert.curve.mults) mults.push_back(integer_json(m));
  j["curve"] = json{{"d", integer_json(cert.curve.d)}, {"mults", mults}};
  json checks = json::object();
  for (std::size_t i = 0; i < cert.checks.size(); ++i) checks[nef::kCheckNames[i]] = cert.checks[i];
  j["checks"] = checks;
  j["valid"] = cert.valid;
  j["provenance"] = cert.provenance;
  j["flags"] = cert.validity_flags;
  if (auto u = cert.uniform_ratio()) put_rational(j, "ratio", *u);
  return j;
}

nef::NefCertificate certificate_from_json(const json& j) {
  for (const char* key : {"n", "l", "c0", "e", "curve"}) {
    if (!j.contains(key)) throw DomainError(std::string("certificate JSON lacks '") + key + "'");
  }
  Integer n = integer_from_json(j.at("n"));
  Integer l = integer_from_json(j.at("l"));
  Rational c0 = rational_from_json(j.at("c0"));
  std::vector<Rational> e;
  for (const auto& x : j.at("e")) e.push_back(rational_from_json(x));
  if (Integer(static_cast<unsigned long>(e.size())) != n) throw DomainError("certificate JSON: e has length != n");
  nef::CurveData curve;
  curve.d = integer_from_json(j.at("curve").at("d"));
  for (const auto& m : j.at("curve").at("mults")) curve.mults.push_back(integer_from_json(m));
  if (curve.d < 1) throw DomainError("certificate JSON: curve degree must be positive");
  std::string prov = j.value("provenance", std::string("json"));
  nef::NefCertificate cert = nef::check_neflemA(c0 / Rational(curve.d), e, curve, l, prov);
  if (j.contains("flags")) {
    for (const auto& f : j.at("flags")) cert.validity_flags.push_back(f.get<std::string>());
  }
  return cert;
}

json to_json(const lp::EffectivityVerdict& v) {
  json j;
  j["empty_certified"] = v.empty_certified;
  put_rational(j, "threshold", v.threshold);
  j["scale_power"] = integer_json(v.scale_power);
  put_rational(j, "test_pairing", v.test_pairing);
  j["best_test_divisor"] = v.best_test_divisor ? to_json(*v.best_test_divisor) : json(nullptr);
  return j;
}

json to_json(const stats::ScanReport& rep) {
  json j;
  j["n"] = integer_json(rep.n);
  j["total_l"] = integer_json(rep.total_l);
  j["holds_count"] = integer_json(rep.holds_count);
  put_rational(j, "percentage", rep.percentage, 1);
  json rows = json::array();
  for (const auto& r : rep.rows) {
    rows.push_back(json{{"l", integer_json(r.l)},
                        {"epsilon", r.eps.str()},
                        {"square_case", r.square_case},
                        {"star", r.star},
                        {"in_I", r.in_I},
                        {"in_J", r.in_J}});
  }
  j["rows"] = rows;
  return j;
}

json to_json(const apps::ThresholdReport& rep) {
  json j;
  j["n"] = integer_json(rep.n);
  j["m"] = integer_json(rep.m);
  put_rational(j, "epsilon", rep.epsilon);
  j["square_case"] = rep.square_case;
  put_rational(j, "effectivity_lb", rep.effectivity_lb);
  put_rational(j, "ampleness_lb", rep.ampleness_lb);
  if (rep.regularity) {
    j["regularity_a"] = integer_json(rep.regularity->a_threshold);
    j["regularity_b"] = rep.regularity->b_threshold ? integer_json(*rep.regularity->b_threshold) : json(nullptr);
    j["regularity_sharp"] = rep.regularity->sharp;
  } else {
    j["regularity_a"] = nullptr;
    j["regularity_b"] = nullptr;
  }
  if (rep.freeness) {
    j["freeness_lb"] = integer_json(rep.freeness->free_lb);
    j["very_ample_lb"] = integer_json(rep.freeness->va_lb);
    j["even_square_override"] = rep.freeness->even_square_override;
  } else {
    j["freeness_lb"] = nullptr;
    j["very_ample_lb"] = nullptr;
  }
  j["notes"] = rep.notes;
  return j;
}

}  // namespace seshadri::io
