#pragma once

#include "skewquiver/reduce.hpp"

#include <nlohmann/json.hpp>
#include <string>

namespace skq {

using json = nlohmann::json;

/// Accepts 3, "3/4", ["3","4"], {"root":[n,k]} and
/// {"conductor":n,"coeffs":[...]}. Throws ValidationError.
Cyc cyc_from_json(const json &j);
/// {"conductor":n,"coeffs":[["num","den"],...]}; rationals use conductor 1.
json cyc_to_json(const Cyc &c);

/// Reads and validates an instance document. Throws ValidationError with a
/// message naming the offending entry.
Instance instance_from_json(const json &doc);
Instance load_instance(const std::string &path);
json load_json_file(const std::string &path);

/// {"terms":[{"path":[labels],"start":v,"group":ref,"coeff":c}]}; "start"
/// is only needed for lazy paths.
SkewElement element_from_json(const Setting &S, const json &doc);
json element_to_json(const Setting &S, const SkewElement &x);

/// [u, [y...], [arrow ids], v, coeff] per nonzero coordinate; y entries are
/// element indices of the input document.
json intertwiner_to_json(const Setting &S, const Intertwiner &f);
json qg_to_json(const QG &qg);
/// Plain-text report starting with "N vertices, M arrows".
std::string qg_report(const QG &qg);

json comb_to_json(const QG &qg, const PathComb &c);
PathComb comb_from_json(const QG &qg, const json &doc);

std::string quiver_dot(const Setting &S);
std::string qg_dot(const QG &qg);

} // namespace skq
