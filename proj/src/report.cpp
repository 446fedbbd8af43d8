#include "sunit/report.hpp"

#include <limits>

namespace sunit {

namespace {

Json bigint(const BigInt& v) {
  if (v <= std::numeric_limits<std::int64_t>::max()) return static_cast<std::int64_t>(v);
  return v.str();
}

Json failure_json(const HypothesisFailure& f) {
  Json j;
  j["m"] = f.m;
  j["r"] = to_json(f.r_elements);
  j["r_index"] = f.r;
  j["hypothesis"] = f.hypothesis;
  j["relation"] = f.relation.empty() ? Json(nullptr) : to_json(f.relation);
  j["shifted_retries"] = f.retries;
  return j;
}

}  // namespace

Json to_json(const Field& f) {
  Json j;
  j["p"] = f.p();
  j["s"] = f.s();
  if (f.s() > 1) {
    std::vector<Field::Elem> c(f.modulus().begin(), f.modulus().end());
    j["modulus"] = Poly(Field::get(f.p()), c).to_string();
  }
  return j;
}

Json to_json(const IndependenceCertificate& c) {
  Json j;
  j["verdict"] = c.independent() ? "independent" : "dependent";
  j["m"] = c.m;
  if (c.independent()) {
    j["witness"] = c.witness->orders();
    j["det"] = c.witness_det->to_string();
  } else {
    j["relation"] = to_json(c.relation);
  }
  return j;
}

Json to_json(const RfVector& v) {
  Json j = Json::array();
  for (const auto& x : v) j.push_back(x.to_string());
  return j;
}

Json to_json(const Word& w) { return Json(w); }

Json to_json(const SubgroupPresentation& g) {
  Json j;
  j["generators"] = to_json(g.generators);
  Json support = Json::array();
  for (const auto& p : g.support) support.push_back(p.to_string());
  j["support"] = support;
  j["exponent_matrix"] = g.exponent_matrix;
  j["lattice_rank"] = g.lattice_rank();
  return j;
}

Json to_json(const RepSet& r) {
  Json j;
  j["m"] = r.m;
  j["p^m"] = r.modulus;
  j["size"] = r.size();
  Json elems = Json::array();
  for (std::size_t i = 0; i < r.size(); ++i) {
    Json e;
    e["element"] = r.elements[i].to_string();
    e["word"] = r.words[i];
    e["key"] = r.keys[i];
    elems.push_back(e);
  }
  j["elements"] = elems;
  return j;
}

Json to_json(const Factorization& f, const Field& field) {
  Json j;
  j["unit"] = Poly::constant(field, f.unit).to_string();
  Json fs = Json::array();
  for (const auto& [poly, mult] : f.factors) fs.push_back(Json{{"factor", poly.to_string()}, {"multiplicity", mult}});
  j["factors"] = fs;
  return j;
}

Json to_json(const ResidueGroup& r) {
  Json j;
  j["modulus"] = r.modulus.to_string();
  j["size"] = r.size();
  Json elems = Json::array();
  for (std::size_t i = 0; i < r.size(); ++i)
    elems.push_back(Json{{"residue", r.elements[i].to_string()}, {"word", r.words[i]}});
  j["elements"] = elems;
  return j;
}

Json to_json(const ClosureProbe& c) {
  Json j;
  j["modulus"] = c.modulus.to_string();
  j["unit_group_order"] = bigint(c.group_order);
  Json seq = Json::array();
  for (std::size_t n = 0; n < c.values.size(); ++n)
    seq.push_back(Json{{"n", n + 1}, {"exponent_mod_order", bigint(c.exponents[n])}, {"value", c.values[n].to_string()}});
  j["sequence"] = seq;
  j["stabilization_index"] = c.stabilization_index;
  j["stable_value"] = c.stable_value().to_string();
  return j;
}

Json to_json(const std::vector<Solution>& sols) {
  Json j = Json::array();
  for (const auto& s : sols) j.push_back(Json{{"coords", to_json(s.x)}, {"words", s.words}});
  return j;
}

Json solve_report(const Equation& eq, const SubgroupPresentation& g, const CertifiedReport& r,
                  std::optional<double> timing_ms) {
  Json j;
  j["outcome"] = to_string(r.outcome);
  j["m"] = r.m;
  j["equation"] = Json{{"b", to_json(eq.b)}, {"rhs", eq.rhs}};
  j["field"] = to_json(*g.field);
  j["subgroup"] = to_json(g);
  j["repset_size"] = r.repset_size;
  j["solutions"] = to_json(r.solutions);
  j["bound"] = r.bound ? Json(*r.bound) : Json(nullptr);
  Json witnesses = Json::array();
  for (const auto& rec : r.records) {
    Json w;
    w["r"] = to_json(rec.r_elements);
    w["r_index"] = rec.r;
    Json cert;
    cert["br"] = to_json(rec.br);
    if (eq.rhs == 1) {
      Json psi = Json::array();
      for (const auto& c : rec.psi) psi.push_back(to_json(c));
      cert["psi"] = psi;
      cert["in_u"] = rec.in_u;
      cert["candidate"] = rec.candidate ? to_json(*rec.candidate) : Json(nullptr);
      cert["membership"] = rec.membership;
      cert["kept"] = rec.kept;
    }
    w["certificate"] = cert;
    witnesses.push_back(w);
  }
  j["witnesses"] = witnesses;
  j["failure"] = r.failure ? failure_json(*r.failure) : Json(nullptr);
  if (!r.failures.empty()) {
    Json fs = Json::array();
    for (const auto& f : r.failures) fs.push_back(failure_json(f));
    j["failures_by_m"] = fs;
  }
  j["timing_ms"] = timing_ms ? Json(*timing_ms) : Json(nullptr);
  return j;
}

}  // namespace sunit
