#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "ctr/cauchy.hpp"
#include "ctr/free_energy.hpp"
#include "ctr/recursion.hpp"
#include "ctr/spectral_curve.hpp"

namespace ctr {

// nlohmann::json keeps object keys sorted, so every payload below is
// canonical: identical values serialize to byte-identical text.
using Json = nlohmann::json;

Json to_json(const Rat& r);
Json to_json(const Poly<Rat>& p);
Json to_json(const RatFunc<Rat>& f);
Json to_json(const MultiPoly<Rat>& p);
Json to_json(const MultiRat<Rat>& f);
Json to_json(const MultiDifferential& md);
Json to_json(const LogValue& v);
Json to_json(const ModelData& md);

Rat rat_from_json(const Json& j);
Poly<Rat> poly_from_json(const Json& j);
RatFunc<Rat> ratfunc_from_json(const Json& j);
MultiPoly<Rat> multipoly_from_json(const Json& j);
MultiRat<Rat> multirat_from_json(const Json& j);
MultiDifferential multidifferential_from_json(const Json& j);

Json report_json(const CheckReport& r);
Json to_json(const CubicStructureReport& r);
Json to_json(const LoopEquationReport& r);
Json to_json(const StructureReport& r);

// Curve spec files: {"x": {"numerator": [...], "denominator": [...]},
// "y": {...}, "o": "...", "label": "..."}; coefficients are exact rational
// strings in ascending degree order.
struct CurveSpec {
    RatFunc<Rat> x, y;
    std::optional<Rat> o;
    std::string label;
};

CurveSpec curve_spec_from_json(const Json& j);
Json to_json(const CurveSpec& s);
CurveSpec load_curve_spec(const std::string& path);  // Error on IO/parse problems
SpectralCurve curve_from_spec(const CurveSpec& s, int order);

// On-disk correlator cache: one file per (fingerprint, n, h), written to a
// temporary name and renamed into place.
std::string cache_file_name(std::uint64_t fingerprint, int n, int h);
std::optional<MultiDifferential> cache_load(const std::string& dir,
                                            std::uint64_t fingerprint, int n, int h);
void cache_store(const std::string& dir, std::uint64_t fingerprint,
                 const MultiDifferential& md);

}  // namespace ctr
