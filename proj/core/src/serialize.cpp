#include "ctr/serialize.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace ctr {

namespace {

// content checksum of a cache payload, so tampered files are rejected with
// the same fingerprint-mismatch diagnostic as files for the wrong curve
std::uint64_t payload_checksum(std::uint64_t fingerprint, const MultiDifferential& md) {
    std::string s = std::to_string(fingerprint) + "|" + std::to_string(md.n) + "|" +
                    std::to_string(md.h) + "|" + md.value.str();
    return fnv1a(s);
}

}  // namespace

Json to_json(const Rat& r) { return r.str(); }

Json to_json(const Poly<Rat>& p) {
    Json a = Json::array();
    for (int i = 0; i <= p.degree(); ++i) a.push_back(p.coeff(i).str());
    if (a.empty()) a.push_back("0");
    return a;
}

Json to_json(const RatFunc<Rat>& f) {
    return Json{{"numerator", to_json(f.num())}, {"denominator", to_json(f.den())}};
}

Json to_json(const MultiPoly<Rat>& p) {
    // terms live in a std::map, so iteration order (and hence the JSON) is
    // canonical for a given value
    Json a = Json::array();
    for (const auto& [e, c] : p.terms())
        a.push_back(Json{{"c", c.str()}, {"e", e}});
    return a;
}

Json to_json(const MultiRat<Rat>& f) {
    Json den = Json::array();
    for (const auto& [fac, e] : f.den())
        den.push_back(Json{{"factor", to_json(fac)}, {"power", e}});
    return Json{{"numerator", to_json(f.num())}, {"denominator", den}};
}

Json to_json(const MultiDifferential& md) {
    return Json{{"n", md.n}, {"h", md.h}, {"value", to_json(md.value)}};
}

Json to_json(const LogValue& v) {
    Json logs = Json::array();
    for (const auto& [c, r] : v.logs)
        logs.push_back(Json{{"coefficient", c.str()}, {"argument", r.str()}});
    return Json{{"rational", v.q0.str()}, {"logs", logs}};
}

Json to_json(const ModelData& md) {
    Json times = Json::array();
    for (const auto& [kj, t] : md.times)
        times.push_back(Json{{"k", kj.first}, {"j", kj.second}, {"value", t.str()}});
    return Json{{"T", md.T.str()},
                {"eta", Json::array({md.eta1.str(), md.eta2.str()})},
                {"t_minus_1", Json::array({md.tm1_1.str(), md.tm1_2.str()})},
                {"epsilon", Json::array({md.eps1.str(), md.eps2.str()})},
                {"times", times}};
}

Rat rat_from_json(const Json& j) { return Rat::parse(j.get<std::string>()); }

Poly<Rat> poly_from_json(const Json& j) {
    std::vector<Rat> c;
    for (const auto& s : j) c.push_back(rat_from_json(s));
    return Poly<Rat>(std::move(c));
}

RatFunc<Rat> ratfunc_from_json(const Json& j) {
    return RatFunc<Rat>(poly_from_json(j.at("numerator")),
                        poly_from_json(j.at("denominator")));
}

MultiPoly<Rat> multipoly_from_json(const Json& j) {
    MultiPoly<Rat> p;
    for (const auto& t : j) {
        MultiPoly<Rat>::Exp e = t.at("e").get<MultiPoly<Rat>::Exp>();
        p += MultiPoly<Rat>::monomial(rat_from_json(t.at("c")), std::move(e));
    }
    return p;
}

MultiRat<Rat> multirat_from_json(const Json& j) {
    std::vector<MultiRat<Rat>::Factor> den;
    for (const auto& f : j.at("denominator"))
        den.push_back({multipoly_from_json(f.at("factor")), f.at("power").get<int>()});
    return MultiRat<Rat>(multipoly_from_json(j.at("numerator")), std::move(den));
}

MultiDifferential multidifferential_from_json(const Json& j) {
    return MultiDifferential{j.at("n").get<int>(), j.at("h").get<int>(),
                             multirat_from_json(j.at("value"))};
}

Json report_json(const CheckReport& r) {
    return Json{{"pass", r.pass}, {"failures", r.failures}};
}

Json to_json(const CubicStructureReport& r) {
    Json j = report_json(r);
    j["three_simple_infinities"] = r.three_simple_infinities;
    j["y2_coefficient_vanishes"] = r.y2_coefficient_vanishes;
    j["sheet_sum_vanishes"] = r.sheet_sum_vanishes;
    j["R"] = to_json(r.rhat);
    j["D"] = to_json(r.d);
    j["R_pole_order"] = r.rhat_pole_order;
    j["D_pole_order"] = r.d_pole_order;
    return j;
}

Json to_json(const LoopEquationReport& r) {
    Json j = report_json(r);
    j["pole_order_at_zero"] = r.pole_order_at_zero;
    j["polynomial_degree"] = r.polynomial_degree;
    return j;
}

Json to_json(const StructureReport& r) {
    return Json{{"pass", r.pass},
                {"failures", r.failures},
                {"max_pole_order", r.max_pole_order}};
}

CurveSpec curve_spec_from_json(const Json& j) {
    CurveSpec s;
    s.x = ratfunc_from_json(j.at("x"));
    s.y = ratfunc_from_json(j.at("y"));
    if (j.contains("o")) s.o = rat_from_json(j.at("o"));
    if (j.contains("label")) s.label = j.at("label").get<std::string>();
    return s;
}

Json to_json(const CurveSpec& s) {
    Json j{{"x", to_json(s.x)}, {"y", to_json(s.y)}};
    if (s.o) j["o"] = s.o->str();
    if (!s.label.empty()) j["label"] = s.label;
    return j;
}

CurveSpec load_curve_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open curve spec file: " + path);
    Json j;
    try {
        in >> j;
        return curve_spec_from_json(j);
    } catch (const Json::exception& e) {
        throw Error("curve spec parse error in " + path + ": " + e.what());
    } catch (const std::invalid_argument& e) {
        throw Error("curve spec parse error in " + path + ": " + e.what());
    }
}

SpectralCurve curve_from_spec(const CurveSpec& s, int order) {
    SpectralCurve c(s.x, s.y, order);
    if (s.o) c.set_base_point(*s.o);
    return c;
}

std::string cache_file_name(std::uint64_t fingerprint, int n, int h) {
    char fp[17];
    std::snprintf(fp, sizeof(fp), "%016llx", static_cast<unsigned long long>(fingerprint));
    return std::string(fp) + "_" + std::to_string(n) + "_" + std::to_string(h) + ".json";
}

std::optional<MultiDifferential> cache_load(const std::string& dir,
                                            std::uint64_t fingerprint, int n, int h) {
    std::filesystem::path p = std::filesystem::path(dir) / cache_file_name(fingerprint, n, h);
    std::ifstream in(p);
    if (!in) return std::nullopt;
    Json j;
    MultiDifferential md;
    try {
        in >> j;
        md = multidifferential_from_json(j.at("payload"));
        if (j.at("fingerprint").get<std::string>() != std::to_string(fingerprint) ||
            md.n != n || md.h != h ||
            j.at("checksum").get<std::string>() !=
                std::to_string(payload_checksum(fingerprint, md)))
            throw CacheMismatch("cache fingerprint mismatch: " + p.string());
    } catch (const CacheMismatch&) {
        throw;
    } catch (const std::exception& e) {
        throw CacheMismatch("cache fingerprint mismatch: " + p.string() + ": " + e.what());
    }
    return md;
}

void cache_store(const std::string& dir, std::uint64_t fingerprint,
                 const MultiDifferential& md) {
    std::filesystem::create_directories(dir);
    std::filesystem::path p =
        std::filesystem::path(dir) / cache_file_name(fingerprint, md.n, md.h);
    Json j{{"fingerprint", std::to_string(fingerprint)},
           {"checksum", std::to_string(payload_checksum(fingerprint, md))},
           {"payload", to_json(md)}};
    std::filesystem::path tmp = p;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        out << j.dump(2) << "\n";
        if (!out) throw Error("cannot write cache file: " + tmp.string());
    }
    std::filesystem::rename(tmp, p);  // atomic publish
}

}  // namespace ctr
