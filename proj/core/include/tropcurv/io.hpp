#pragma once

#include <map>
#include <string>
#include <vector>

#include "tropcurv/amoeba.hpp"
#include "tropcurv/curvature.hpp"
#include "tropcurv/patchwork.hpp"
#include "tropcurv/tropical.hpp"

namespace tropcurv {

/// Shared input document:
///   {"ambient_dim": d, "terms": [{"exponent": [..], "coeff": "p/q", "sign": "+"}]}
/// Signs are optional (default "+"); coefficients accept "p/q", "p" or a
/// plain JSON integer.
struct InputDocument {
  TropicalPolynomial poly;
  SignDistribution signs;
};

/// Throws InputError / DuplicateExponent / DimensionMismatch.
InputDocument parse_input_json(const std::string& text);

/// Reads a file. A subdivision report produced by to_json(DualSubdivision..)
/// is accepted too: the embedded "input" object is used, so downstream
/// reports round-trip byte-identically.
InputDocument load_input(const std::string& path);

std::string input_to_json(const InputDocument& doc);

std::string to_json(const DualSubdivision& s, const InputDocument& original);
std::string to_json(const HypersurfaceComplex& h);
std::string to_json(const RealPart& rp, const HypersurfaceComplex& h);
std::string to_json(const CurvatureReport& r);
std::string to_json(const InequalityReport& r);
std::string to_json(const PartitionReport& r);
std::string to_json(const GaussBonnetReport& r);
std::string to_json(const OrbitReport& r);
std::string to_json(const ConvergenceTable& t);
std::string to_csv(const ConvergenceTable& t);

/// Sphere volume table sigma_m for m <= max_m, used by verification
/// expectations; entries can be overridden from a JSON file of the shape
/// {"sigma": {"2": 12.56637...}} to exercise failure paths.
struct ConstantsTable {
  std::map<int, double> sigma;
  double sigma_of(int m) const;  // throws InputError when missing
};

ConstantsTable default_constants_table(int max_m = 9);
ConstantsTable load_constants_table(const std::string& path);

void write_file(const std::string& path, const std::string& content);

}  // namespace tropcurv
