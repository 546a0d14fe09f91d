#pragma once

#include <json.hpp>

#include "hypiso/angroup.hpp"
#include "hypiso/classifier.hpp"
#include "hypiso/moebius.hpp"
#include "hypiso/zclass.hpp"

namespace hypiso {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

/// Rounded to 12 significant digits so output is stable across platforms.
double presentation_float(double x);

Json to_json(const Rational& q);
Json to_json(const Polynomial& p);
Json to_json(const RootInterval& iv);
Json to_json(const QMatrix& m);
Json to_json(const IsometryType& t);
Json to_json(const Classification& c);
Json to_json(const ZClassSignature& sig);
Json to_json(const CentralizerDescriptor& d);
Json to_json(const CensusRow& row);
Json to_json(const TraceTestResult& r);
Json to_json(const GaussianRational& z);
Json to_json(const Moebius2& m);
Json to_json(const ANElement& e);

/// Signature, descriptor and genericity flag for one z-class of I(H^n).
Json atlas_entry(const ZClassSignature& sig, std::size_t n);

/// {type, inversion, k, l, m, angles, boost, orientation, char, min}
/// followed by zclass, centralizer, generic and quick_tests.
Json classification_report(const IsometryElement& t);

Json moebius_report(const Moebius2& m, bool h2, bool lift);
Json an_report(const ANElement& e);

}  // namespace hypiso
