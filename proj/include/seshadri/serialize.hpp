#pragma once

// JSON records. Rationals are written as "p/q" strings; reports add a
// "<key>_decimal" rendering next to every exact value.

#include "seshadri/apps.hpp"
#include "seshadri/bounds.hpp"
#include "seshadri/lptest.hpp"
#include "seshadri/nefcert.hpp"
#include "seshadri/stats.hpp"

#include <json.hpp>

namespace seshadri::io {

using json = nlohmann::json;

json integer_json(const Integer& v);
Integer integer_from_json(const json& j);
Rational rational_from_json(const json& j);

void put_rational(json& obj, const std::string& key, const Rational& v, int digits = 6);

json to_json(const bounds::BoundWitness& w);
json to_json(const bounds::SeshadriBound& b);
json to_json(const bounds::CaseBound& c);
json to_json(const bounds::PellSolution& p);
json to_json(const bounds::ReferenceRow& row);

// n, l, c0, a0, e[], curve{d, mults[]}, checks{}, valid, provenance, flags[]
json to_json(const nef::NefCertificate& cert);
// Re-derives every verdict from the stored numbers; stored checks are ignored.
nef::NefCertificate certificate_from_json(const json& j);

json to_json(const lp::EffectivityVerdict& v);
json to_json(const stats::ScanReport& rep);
json to_json(const apps::ThresholdReport& rep);

}  // namespace seshadri::io
