#pragma once

#include <string>

#include "zetalab/arith_sieve.hpp"
#include "zetalab/bounds.hpp"
#include "zetalab/contour.hpp"
#include "zetalab/zeta.hpp"

namespace zetalab::cli {

// Schema-stable renderers: fixed key order, every number at 15 significant
// digits, so identical inputs produce identical bytes.

std::string json_eval(const EvalResult& r);
std::string json_quad(const QuadReport& r);
std::string json_reconstruct(const ReconstructReport& r);
std::string json_scan(const ScanReport& r);
std::string json_scan_pair(const char* key1, const ScanReport& r1, const char* key2,
                           const ScanReport& r2);
std::string json_kv(const std::string& key, double value,
                    const std::string& key2 = "", double value2 = 0.0);

std::string csv_table(const ArithTable& t);
std::string csv_pnt(const PntTable& t);

}  // namespace zetalab::cli
