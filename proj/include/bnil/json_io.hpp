#pragma once

// JSON bindings for the domain types (nlohmann ADL conversions).  Matrix
// entries travel as exact "p/q" strings (integers also accepted on input),
// so serialization round-trips bit-exactly; everything is emitted in
// canonical order so identical inputs produce identical bytes.

#include "bnil/census.hpp"
#include "bnil/classify.hpp"
#include "bnil/degeneration.hpp"
#include "bnil/matrix.hpp"
#include "bnil/melnikov.hpp"
#include "bnil/normalform.hpp"
#include "bnil/olp.hpp"
#include "bnil/quiver.hpp"

#include <json.hpp>

namespace bnil {

void to_json(nlohmann::json& j, const Mat<Rational>& m);
void from_json(const nlohmann::json& j, Mat<Rational>& m);

void to_json(nlohmann::json& j, const OrientedLinkPattern& p);
void from_json(const nlohmann::json& j, OrientedLinkPattern& p);

void to_json(nlohmann::json& j, const EnhancedPattern& p);

void to_json(nlohmann::json& j, const Involution& s);
void from_json(const nlohmann::json& j, Involution& s);

void to_json(nlohmann::json& j, const IntersectionProfile& p);
void to_json(nlohmann::json& j, const InvariantProfile& p);
void to_json(nlohmann::json& j, const RankMatrix& r);

void to_json(nlohmann::json& j, const Decomposition& d);

void to_json(nlohmann::json& j, const GenericityReport& r);
void to_json(nlohmann::json& j, const NormalForm& nf);
void from_json(const nlohmann::json& j, SemiinvariantDatum& p);
void to_json(nlohmann::json& j, const SemiinvariantDatum& p);
void to_json(nlohmann::json& j, const WeightVector& w);

void to_json(nlohmann::json& j, const OrbitCensus& c);

}  // namespace bnil
