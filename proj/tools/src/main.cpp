// ctr: batch front end over the topological-recursion library.  Reads curve
// spec JSON, prints exact ResultEnvelope JSON on standard output (diagnostics
// on standard error) and maintains the on-disk correlator cache.
//
// Exit codes: 0 success, 1 parse/IO/usage/cache-fingerprint error,
// 2 verification or structure failure, 3 precision exhaustion.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ctr/serialize.hpp"

namespace {

using ctr::Json;

constexpr const char* kVersion = "0.1.0";

struct Common {
    std::string spec_path;
    int order = 16;
    int max_order = 4096;
    int jobs = 1;
    std::string cache_dir;
};

void add_common(CLI::App* sub, Common& c) {
    sub->add_option("spec", c.spec_path, "curve spec JSON file")->required();
    sub->add_option("--order", c.order, "initial series expansion order")
        ->check(CLI::PositiveNumber);
    sub->add_option("--max-order", c.max_order,
                    "cap for the automatic order escalation (exit 3 beyond it)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--jobs", c.jobs, "parallel workers (output is identical for any value)")
        ->check(CLI::PositiveNumber);
    const char* env = std::getenv("CTR_CACHE_DIR");
    if (env) c.cache_dir = env;
    sub->add_option("--cache-dir", c.cache_dir,
                    "correlator cache directory (default: $CTR_CACHE_DIR)");
}

ctr::SpectralCurve build(const Common& c, const ctr::CurveSpec& spec) {
    if (c.order > c.max_order) throw ctr::Error("--order exceeds --max-order");
    ctr::set_max_series_order(c.max_order);
    return ctr::curve_from_spec(spec, c.order);
}

// Pull every cached correlator of this curve into the in-memory cache; the
// recursion is first-write-wins, so preloaded levels are reused as-is.
void preload_cache(const Common& c, ctr::CorrelatorCache& cache) {
    if (c.cache_dir.empty() || !std::filesystem::is_directory(c.cache_dir)) return;
    char prefix[18];
    std::snprintf(prefix, sizeof(prefix), "%016llx_",
                  static_cast<unsigned long long>(cache.fingerprint()));
    for (const auto& entry : std::filesystem::directory_iterator(c.cache_dir)) {
        std::string name = entry.path().filename().string();
        if (name.rfind(prefix, 0) != 0 || entry.path().extension() != ".json") continue;
        std::istringstream tail(name.substr(17));
        int n = 0, h = 0;
        char sep = 0;
        if (!(tail >> n >> sep >> h) || sep != '_') continue;
        auto md = ctr::cache_load(c.cache_dir, cache.fingerprint(), n, h);
        if (md) cache.put(*md);
    }
}

void flush_cache(const Common& c, const ctr::CorrelatorCache& cache) {
    if (c.cache_dir.empty()) return;
    for (const auto& [n, h] : cache.keys()) {
        std::filesystem::path p = std::filesystem::path(c.cache_dir) /
                                  ctr::cache_file_name(cache.fingerprint(), n, h);
        if (std::filesystem::exists(p)) continue;
        ctr::cache_store(c.cache_dir, cache.fingerprint(), *cache.get(n, h));
    }
}

void emit(const std::string& command, const Common& c, Json request, Json payload,
          std::uint64_t fingerprint, std::chrono::steady_clock::time_point t0) {
    request["command"] = command;
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    Json env{{"version", kVersion},
             {"fingerprint", std::to_string(fingerprint)},
             {"request", std::move(request)},
             {"payload", std::move(payload)},
             {"orders", Json{{"requested", c.order}, {"max", c.max_order}}},
             {"timing", Json{{"seconds", secs}}}};
    std::cout << env.dump(2) << "\n";
}

std::string float_render(double v, int digits) {
    std::ostringstream os;
    os.precision(digits);
    os << v;
    return os.str();
}

Json inventory(const ctr::SpectralCurve& curve) {
    Json groups = Json::array();
    for (const auto& g : curve.branch_groups())
        groups.push_back(Json{{"modulus", ctr::to_json(g.modulus)},
                              {"degree", g.modulus.degree()}});
    Json infs = Json::array();
    for (const auto& p : curve.infinities()) {
        Json j{{"at_z_infinity", p.at_z_infinity}, {"ramification", p.ram}};
        if (p.z0) j["z0"] = p.z0->str();
        infs.push_back(std::move(j));
    }
    return Json{{"branch_groups", std::move(groups)}, {"infinities", std::move(infs)}};
}

int cmd_check(const Common& c) {
    auto t0 = std::chrono::steady_clock::now();
    ctr::CurveSpec spec = ctr::load_curve_spec(c.spec_path);
    Json request{{"spec", c.spec_path}};

    ctr::SpectralCurve* built = nullptr;
    ctr::SpectralCurve curve = [&]() -> ctr::SpectralCurve {
        try {
            return build(c, spec);
        } catch (const ctr::Error& e) {
            // admission failure: report it instead of dying, exit 2
            Json payload{{"pass", false},
                         {"failures", Json::array({std::string("admission: ") + e.what()})}};
            emit("check", c, request, payload, 0, t0);
            std::exit(2);
        }
    }();
    built = &curve;

    Json payload = inventory(*built);
    int code = 0;
    if (built->sheet_degree() != 3) {
        payload["notice"] = "sheet degree " + std::to_string(built->sheet_degree()) +
                            ": Cauchy structure checks skipped";
        payload["pass"] = true;
    } else {
        ctr::CubicStructureReport r = ctr::structure_check(*built);
        payload["structure"] = ctr::to_json(r);
        payload["pass"] = r.pass;
        if (!r.pass) code = 2;
    }
    emit("check", c, request, payload, built->fingerprint(), t0);
    return code;
}

int cmd_omega(const Common& c, int n, int h, bool verify) {
    auto t0 = std::chrono::steady_clock::now();
    if (n < 1 || h < 0 || 2 * h + n - 2 < 0)
        throw ctr::Error("omega requires n >= 1 and 2h+n-2 >= 0");
    ctr::CurveSpec spec = ctr::load_curve_spec(c.spec_path);
    ctr::SpectralCurve curve = build(c, spec);

    ctr::CorrelatorCache cache(curve.fingerprint());
    preload_cache(c, cache);
    bool hit = cache.get(n, h).has_value();
    ctr::MultiDifferential md = ctr::omega(curve, n, h, &cache,
                                           ctr::SplittingRule::full, c.jobs);
    flush_cache(c, cache);

    Json request{{"spec", c.spec_path}, {"n", n}, {"h", h}, {"jobs", c.jobs},
                 {"cache_hit", hit}};
    Json payload = ctr::to_json(md);
    int code = 0;
    if (verify) {
        ctr::StructureReport r = ctr::verify_structure(curve, md);
        payload = Json{{"omega", std::move(payload)}, {"verification", ctr::to_json(r)}};
        if (!r.pass) code = 2;
    }
    emit("omega", c, request, payload, curve.fingerprint(), t0);
    return code;
}

int cmd_free_energy(const Common& c, int h, int float_digits) {
    auto t0 = std::chrono::steady_clock::now();
    if (h < 0) throw ctr::Error("free-energy requires h >= 0");
    if (h == 1)
        throw ctr::Error(
            "F^(1) is fixed only up to a constant; its gradient is exact -- "
            "use `ctr verify --suite f1`");
    ctr::CurveSpec spec = ctr::load_curve_spec(c.spec_path);
    ctr::SpectralCurve curve = build(c, spec);
    Json request{{"spec", c.spec_path}, {"h", h}};

    Json payload;
    if (h == 0) {
        ctr::ModelData model = [&] {
            try {
                return ctr::extract_model(curve);
            } catch (const ctr::Error& e) {
                std::cerr << "error: F^(0) requires the Cauchy structure: " << e.what()
                          << "\n";
                std::exit(2);
            }
        }();
        ctr::LogValue v = ctr::free_energy_0(curve, model);
        payload = ctr::to_json(v);
        if (float_digits > 0) payload["float"] = float_render(v.to_double(), float_digits);
    } else {
        ctr::CorrelatorCache cache(curve.fingerprint());
        preload_cache(c, cache);
        ctr::Rat f = ctr::free_energy_h(curve, h, &cache);
        flush_cache(c, cache);
        payload = Json{{"rational", f.str()}};
        if (float_digits > 0) payload["float"] = float_render(f.to_double(), float_digits);
    }
    emit("free-energy", c, request, payload, curve.fingerprint(), t0);
    return 0;
}

int cmd_verify(const Common& c, const std::string& suite, int max_level) {
    auto t0 = std::chrono::steady_clock::now();
    ctr::CurveSpec spec = ctr::load_curve_spec(c.spec_path);
    ctr::SpectralCurve curve = build(c, spec);

    auto want = [&](const char* s) { return suite == "all" || suite == s; };
    bool cauchy = curve.sheet_degree() == 3 && curve.has_cauchy_infinities() &&
                  ctr::structure_check(curve).pass;

    ctr::CorrelatorCache cache(curve.fingerprint());
    preload_cache(c, cache);

    Json results = Json::array();
    bool all_pass = true;
    auto record = [&](const std::string& name, bool pass,
                      const std::vector<std::string>& failures) {
        results.push_back(Json{{"identity", name}, {"pass", pass}, {"failures", failures}});
        if (!pass) all_pass = false;
    };
    auto skip = [&](const char* name) {
        results.push_back(Json{{"suite", name}, {"skipped", true}});
        std::cerr << "notice: suite '" << name
                  << "' requires the Cauchy structure; skipped\n";
    };
    // stable (n,h) grid: 0 < 2h+n-2, 2h+n <= max_level
    std::vector<std::pair<int, int>> levels;
    for (int lvl = 3; lvl <= max_level; ++lvl)
        for (int h = 0; 2 * h <= lvl; ++h)
            if (int n = lvl - 2 * h; n >= 1) levels.push_back({n, h});

    if (want("structure"))
        for (auto [n, h] : levels) {
            ctr::StructureReport r =
                ctr::verify_structure(curve, ctr::omega(curve, n, h, &cache,
                                                        ctr::SplittingRule::full, c.jobs));
            record("structure omega(" + std::to_string(n) + "," + std::to_string(h) + ")",
                   r.pass, r.failures);
        }
    if (want("symmetry"))
        for (auto [n, h] : levels) {
            if (n < 2) continue;
            ctr::MultiDifferential md =
                ctr::omega(curve, n, h, &cache, ctr::SplittingRule::full, c.jobs);
            bool sym = true;
            for (int i = 0; i + 1 < n && sym; ++i) {
                std::vector<int> perm(n);
                for (int k = 0; k < n; ++k) perm[k] = k;
                std::swap(perm[i], perm[i + 1]);
                sym = md.value == md.value.relabeled(perm);
            }
            record("symmetry omega(" + std::to_string(n) + "," + std::to_string(h) + ")",
                   sym, sym ? std::vector<std::string>{}
                            : std::vector<std::string>{"not symmetric under variable swap"});
        }
    if (want("loop")) {
        if (!cauchy) skip("loop");
        else
            for (int h = 1; h <= 2; ++h) {
                ctr::LoopEquationReport r = ctr::loop_equation_check(curve, h, &cache);
                record("loop h=" + std::to_string(h), r.pass, r.failures);
            }
    }
    if (want("dilaton"))
        for (auto [n, h] : levels) {
            ctr::CheckReport r = ctr::dilaton_check(curve, n, h, &cache,
                                                    ctr::SplittingRule::full, c.jobs);
            record("dilaton (" + std::to_string(n) + "," + std::to_string(h) + ")",
                   r.pass, r.failures);
        }
    if (want("scaling"))
        for (int h = 2; 2 * h <= max_level; ++h) {
            ctr::CheckReport r = ctr::homogeneity_check(curve, h, ctr::Rat(2));
            record("scaling h=" + std::to_string(h), r.pass, r.failures);
        }
    if (want("f1")) {
        if (!cauchy) skip("f1");
        else {
            ctr::ModelData model = ctr::extract_model(curve);
            std::vector<ctr::ModuliDirection> dirs = {ctr::ModuliDirection::total_charge(),
                                                      ctr::ModuliDirection::eta(1),
                                                      ctr::ModuliDirection::eta(2)};
            std::set<int> degrees = {1};
            for (const auto& [kj, t] : model.times) degrees.insert(kj.second);
            for (int k : {1, 2})
                for (int j : degrees) dirs.push_back(ctr::ModuliDirection::potential_time(k, j));
            for (const auto& d : dirs) {
                ctr::F1Gradient g = ctr::f1_gradient(curve, d, &cache);
                record("f1 gradient " + d.str(), g.agree,
                       g.agree ? std::vector<std::string>{}
                               : std::vector<std::string>{"via_omega " + g.via_omega.str() +
                                                          " != via_tau " + g.via_tau.str()});
            }
        }
    }
    flush_cache(c, cache);

    Json request{{"spec", c.spec_path}, {"suite", suite}, {"max_level", max_level},
                 {"jobs", c.jobs}};
    Json payload{{"pass", all_pass}, {"results", std::move(results)}};
    emit("verify", c, request, payload, curve.fingerprint(), t0);
    return all_pass ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact topological recursion on genus-zero rational spectral curves"};
    app.set_help_flag("--help", "print usage");
    app.require_subcommand(1);

    Common c_check, c_omega, c_fe, c_verify;
    int n = 1, h = 1, fe_h = 2, float_digits = 0, max_level = 6;
    bool verify_flag = false;
    std::string suite = "all";

    CLI::App* check = app.add_subcommand("check", "admission and Cauchy structure report");
    add_common(check, c_check);

    CLI::App* omega = app.add_subcommand("omega", "correlator omega_n^(h)");
    add_common(omega, c_omega);
    omega->add_option("-n,--n", n, "number of variables")->required();
    omega->add_option("-h,--h", h, "order in the genus expansion")->required();
    omega->add_flag("--verify", verify_flag, "run the structure checks on the result");

    CLI::App* fe = app.add_subcommand("free-energy", "free energy F^(h)");
    add_common(fe, c_fe);
    fe->add_option("-h,--h", fe_h, "order in the genus expansion")->required();
    fe->add_option("--float", float_digits, "render a decimal value at N digits alongside")
        ->check(CLI::PositiveNumber);

    CLI::App* verify = app.add_subcommand("verify", "identity verification suites");
    add_common(verify, c_verify);
    verify->add_option("--suite", suite, "structure|symmetry|loop|dilaton|scaling|f1|all")
        ->check(CLI::IsMember({"structure", "symmetry", "loop", "dilaton", "scaling",
                               "f1", "all"}));
    verify->add_option("--max-level", max_level, "check all (n,h) with 2h+n <= L")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (check->parsed()) return cmd_check(c_check);
        if (omega->parsed()) return cmd_omega(c_omega, n, h, verify_flag);
        if (fe->parsed()) return cmd_free_energy(c_fe, fe_h, float_digits);
        return cmd_verify(c_verify, suite, max_level);
    } catch (const ctr::InsufficientPrecision& e) {
        std::cerr << "error: precision exhausted: " << e.what()
                  << " (raise --max-order)\n";
        return 3;
    } catch (const ctr::CacheMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const ctr::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
