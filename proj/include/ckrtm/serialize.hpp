#pragma once

#include <json.hpp>

#include <optional>

#include "ckrtm/harmonic.hpp"
#include "ckrtm/hopf.hpp"
#include "ckrtm/mzv.hpp"
#include "ckrtm/verify.hpp"

namespace ckrtm {

using Json = nlohmann::ordered_json;

/// Coefficients are always written as reduced "p/q" strings, q > 0.
Json to_json(const ForestSum& s);
Json to_json(const ForestTensorSum& t);
Json to_json(const WordSum& p);
Json to_json(const WordTensorSum& t);
/// `millis` is emitted as given; pass a pinned report for byte-stable output.
Json to_json(const VerificationReport& r);
/// `residual` is null when no numeric check was requested.
Json to_json(const mzv::Relation& r, const std::optional<mzv::Real>& residual);

ForestSum forest_sum_from_json(const Json& j);
WordSum word_sum_from_json(const Json& j);

}  // namespace ckrtm
