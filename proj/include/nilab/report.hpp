#pragma once

#include "nilab/algebra.hpp"
#include "nilab/check_report.hpp"
#include "nilab/sweep.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace nilab {

using Json = nlohmann::ordered_json;

inline constexpr const char* version = "0.1.0";

// Rationals always travel as "p/q" (or "p") strings so nothing is rounded.
Json to_json(const Rat& q);
Json to_json(const Vec& v);
Json to_json(const Mat& m);
Json to_json(const Element& x);
Json to_json(const CheckReport& report);
Json to_json(const Algebra& g);
Json to_json(const OrbitReport& orbit);

/// partition,dim_delta,s,ind,hypothesis_ok,gamma_nonzero
std::string orbit_csv_header();
std::string to_csv_row(const OrbitReport& orbit);

} // namespace nilab
