#include "hypiso/report.hpp"

#include <cstdio>
#include <cstdlib>

namespace hypiso {

double presentation_float(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const Polynomial& p) {
  Json out = Json::array();
  for (const auto& c : p.coefficients()) out.push_back(to_string(c));
  return out;
}

Json to_json(const RootInterval& iv) { return Json::array({to_string(iv.lo), to_string(iv.hi)}); }

Json to_json(const QMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

Json to_json(const IsometryType& t) { return {{"kind", to_string(t.kind)}, {"inversion", t.inversion}}; }

Json to_json(const Classification& c) {
  Json angles = Json::array();
  for (const auto& a : c.spectrum.angles)
    angles.push_back({{"cos_interval", to_json(a.cos_interval)},
                      {"theta", presentation_float(a.theta)},
                      {"multiplicity", a.multiplicity}});
  Json out;
  out["type"] = to_string(c.type.kind);
  out["inversion"] = c.type.inversion;
  out["k"] = c.k;
  out["l"] = c.l;
  out["m"] = c.m;
  out["angles"] = std::move(angles);
  if (c.spectrum.boost)
    out["boost"] = {{"r", presentation_float(c.spectrum.boost->r)}, {"interval", to_json(c.spectrum.boost->interval)}};
  else
    out["boost"] = nullptr;
  out["orientation"] = c.orientation;
  out["char"] = to_json(c.char_poly);
  out["min"] = to_json(c.min_poly);
  return out;
}

Json to_json(const ZClassSignature& sig) {
  Json out;
  out["type"] = to_string(sig.kind);
  out["l"] = sig.l;
  out["m"] = sig.m;
  out["partition"] = sig.partition;
  if (sig.kind == Kind::Parabolic) out["paper_l"] = sig.paper_l();
  if (sig.kind == Kind::Hyperbolic) {
    const auto key = sig.key();
    out["key"] = {{"l", key.l}, {"m", key.m}};
  }
  return out;
}

Json to_json(const CentralizerDescriptor& d) {
  Json factors = Json::array();
  for (const auto& f : d.factors) factors.push_back({{"group", f.name()}, {"dim", f.dim()}});
  return {{"factors", std::move(factors)}, {"dim", d.dim}, {"abelian", d.abelian()}};
}

Json to_json(const CensusRow& row) {
  return {{"n", row.n}, {"elliptic", row.elliptic}, {"hyperbolic", row.hyperbolic}, {"parabolic", row.parabolic}, {"total", row.total}};
}

Json to_json(const TraceTestResult& r) {
  Json out;
  out["verdict"] = r.verdict == TraceVerdict::Hyperbolic ? "hyperbolic" : "inconclusive";
  if (r.verdict == TraceVerdict::Hyperbolic) out["power"] = r.power;
  else out["power"] = nullptr;
  out["tried"] = r.tried;
  return out;
}

Json to_json(const GaussianRational& z) { return Json::array({to_string(z.re), to_string(z.im)}); }

Json to_json(const Moebius2& m) {
  return Json::array({Json::array({to_json(m.a), to_json(m.b)}), Json::array({to_json(m.c), to_json(m.d)})});
}

Json to_json(const ANElement& e) {
  Json a = Json::array();
  for (const auto& x : e.a()) a.push_back(to_string(x));
  return {{"a", std::move(a)}, {"r", to_string(e.r())}};
}

Json atlas_entry(const ZClassSignature& sig, std::size_t n) {
  Json out = to_json(sig);
  out["centralizer"] = to_json(centralizer_descriptor(sig, n));
  out["generic"] = is_generic(sig, n);
  return out;
}

Json classification_report(const IsometryElement& t) {
  const Classification c = classify(t);
  const ZClassSignature sig = zclass_signature(c);
  Json out;
  out["classification"] = to_json(c);
  out["zclass"] = to_json(sig);
  out["centralizer"] = to_json(centralizer_descriptor(sig, t.n()));
  out["generic"] = is_generic(sig, t.n());
  Json quick;
  quick["trace_test"] = to_json(quick_trace_test(t));
  if (t.n() <= 3) quick["low_dim"] = to_json(low_dim_criterion(t));
  out["quick_tests"] = std::move(quick);
  return out;
}

Json moebius_report(const Moebius2& m, bool h2, bool lift) {
  Json out;
  out["model"] = h2 ? (h2_model(m) == H2Model::UpperHalfPlane ? "h2-half-plane" : "h2-disk") : "h3";
  out["orientation"] = m.orientation == Orientation::Preserving ? "preserving" : "reversing";
  out["c"] = to_json(c_invariant(m));
  if (m.orientation == Orientation::Reversing) {
    const Moebius2 b = square_matrix(m);
    out["B"] = to_json(b);
    out["c_B"] = to_json(c_invariant(b));
  }
  const H3Class tag = h2 ? classify_h2(m) : classify_h3(m);
  out["class"] = to_string(tag);
  const LinearSignature expect = linear_signature(tag);
  out["expected_linear"] = {{"type", to_string(expect.kind)}, {"inversion", expect.inversion}, {"k", expect.k}, {"m", expect.m}};
  if (lift) {
    const IsometryElement t = h2 ? spin_lift_h2(m) : spin_lift(m);
    const Classification c = classify(t);
    out["lift"] = to_json(t.matrix());
    out["lift_classification"] = to_json(c);
    out["cross_check"] = matches(tag, c);
  }
  return out;
}

Json an_report(const ANElement& e) {
  const auto rep = conjugacy_representative(e);
  Json out;
  out["zclass"] = to_string(zclass_of(e));
  out["representative"] = to_json(rep.representative);
  if (rep.witness) {
    Json w = Json::array();
    for (const auto& x : *rep.witness) w.push_back(to_string(x));
    out["witness"] = std::move(w);
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

}  // namespace hypiso
