#pragma once

#include <optional>

#include <json.hpp>

#include "sunit/factor.hpp"
#include "sunit/local_probe.hpp"
#include "sunit/solver.hpp"

namespace sunit {

using Json = nlohmann::ordered_json;

Json to_json(const Field& f);
Json to_json(const IndependenceCertificate& c);
Json to_json(const RfVector& v);
Json to_json(const Word& w);
Json to_json(const SubgroupPresentation& g);
Json to_json(const RepSet& r);
Json to_json(const Factorization& f, const Field& field);
Json to_json(const ResidueGroup& r);
Json to_json(const ClosureProbe& c);
Json to_json(const std::vector<Solution>& sols);

/// The solve report: {outcome, m, equation, field, solutions, bound,
/// witnesses, ...}. `timing_ms` is null unless given.
Json solve_report(const Equation& eq, const SubgroupPresentation& g, const CertifiedReport& r,
                  std::optional<double> timing_ms);

}  // namespace sunit
