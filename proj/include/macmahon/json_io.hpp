#ifndef MACMAHON_JSON_IO_HPP
#define MACMAHON_JSON_IO_HPP

#include "macmahon/detectors.hpp"

#include <json.hpp>

#include <string>

namespace macmahon::io {

using json = nlohmann::ordered_json;

// QSeries: {"truncation": N, "coeffs": ["c0", "c1", ...]} with exact "p/q"
// strings.  Lossless round trip.
json series_to_json(const QSeries& s);
QSeries series_from_json(const json& j);

// LinComb: [{"vector": [v1,...], "coeff": "p/q"}, ...] in canonical word order.
json lincomb_to_json(const LinComb& l);
LinComb lincomb_from_json(const json& j);

// Representation: flat {basis-label: "p/q"}.
json representation_to_json(const Representation& rep);

// Detector files carry "kind": "poly" or "const".
json detector_to_json(const PolyDetector& det);
json detector_to_json(const ConstDetector& det);
PolyDetector poly_detector_from_json(const json& j);
ConstDetector const_detector_from_json(const json& j);

json certificate_to_json(const Certificate& cert);

} // namespace macmahon::io

#endif
