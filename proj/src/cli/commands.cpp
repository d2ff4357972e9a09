#include "steinfix/cli/commands.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "steinfix/rep/heisenberg.hpp"
#include "steinfix/sol/fh.hpp"
#include "steinfix/sol/solver.hpp"

namespace steinfix::cli {

namespace {

using R = ReportWriter;

std::pair<int, int> parse_pair(const std::string& s) {
    if (s == "1,2") return {1, 2};
    if (s == "1,3") return {1, 3};
    if (s == "2,3") return {2, 3};
    throw ConfigError("bad pair '" + s + "'");
}

std::string method_name(rep::AngleReport::Method m) {
    switch (m) {
        case rep::AngleReport::Method::Coset: return "coset";
        case rep::AngleReport::Method::Dense: return "dense";
        case rep::AngleReport::Method::ExplicitIrrep: return "explicit-irrep";
    }
    return "?";
}

std::vector<std::pair<std::string, std::string>> angle_fields(const rep::AngleReport& a) {
    return {{"cosine", R::real(a.cosine)},
            {"angle", R::real(a.angle)},
            {"margin", R::real(a.margin)},
            {"dim_v1", R::integer(a.dim_v1)},
            {"dim_v2", R::integer(a.dim_v2)},
            {"dim_intersection", R::integer(a.dim_intersection)},
            {"degenerate", R::boolean(a.degenerate)},
            {"method", method_name(a.method)}};
}

std::string joined_coords(const geo::Vec& v) {
    std::string out;
    for (int i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += R::real(v(i));
    }
    return out;
}

int cmd_angle(const RunConfig& cfg, R& w) {
    auto pair = parse_pair(cfg.get_str("pair"));
    auto report = rep::steinberg_pair_angle(
        static_cast<int>(cfg.get_int("n")), static_cast<int>(cfg.get_int("k")),
        static_cast<int>(cfg.get_int("p")), pair,
        static_cast<std::size_t>(cfg.get_int("cap")));
    auto fields = angle_fields(report);
    fields.push_back({"pair", cfg.get_str("pair")});
    fields.push_back({"p", cfg.get_str("p")});
    fields.push_back({"n", cfg.get_str("n")});
    fields.push_back({"k", cfg.get_str("k")});
    w.record("ANGLE", std::move(fields));
    return 0;
}

int cmd_heisenberg(const RunConfig& cfg, R& w) {
    const int p = static_cast<int>(cfg.get_int("p"));
    auto group = rep::heisenberg_group(p);
    auto irreps = rep::heisenberg_irreps(group);

    int count_one = 0, count_p = 0;
    double min_angle = kPi;
    double min_cosine = 0.0;
    for (std::size_t i = 0; i < irreps.size(); ++i) {
        auto r = rep::irrep_angle(irreps[i], group.x_subgroup, group.y_subgroup);
        auto fields = angle_fields(r);
        fields.push_back({"index", R::integer(static_cast<long long>(i))});
        fields.push_back({"dim", R::integer(irreps[i].dim())});
        w.record("IRREP", std::move(fields));
        if (irreps[i].dim() == 1) ++count_one;
        if (irreps[i].dim() == p) ++count_p;
        if (i > 0 && r.angle < min_angle) {  // skip the trivial character
            min_angle = r.angle;
            min_cosine = r.cosine;
        }
    }
    auto table_angle = rep::subgroup_angle(*group.table, group.x_subgroup, group.y_subgroup);
    w.record("SUMMARY", {{"p", R::integer(p)},
                         {"irreps", R::integer(static_cast<long long>(irreps.size()))},
                         {"count_dim1", R::integer(count_one)},
                         {"count_dimp", R::integer(count_p)},
                         {"min_angle", R::real(min_angle)},
                         {"min_cosine", R::real(min_cosine)},
                         {"table_angle", R::real(table_angle.angle)},
                         {"table_cosine", R::real(table_angle.cosine)},
                         {"agreement", R::real(std::abs(min_angle - table_angle.angle))}});
    return 0;
}

int cmd_enumerate(const RunConfig& cfg, R& w) {
    auto gens = alg::steinberg_generators(
        static_cast<int>(cfg.get_int("n")), static_cast<int>(cfg.get_int("k")),
        static_cast<int>(cfg.get_int("p")), static_cast<int>(cfg.get_int("D")));
    std::vector<alg::GeneratorSpec> chosen;
    std::string what;
    if (cfg.has("pair")) {
        auto pair = parse_pair(cfg.get_str("pair"));
        chosen = gens.pair(pair.first, pair.second);
        what = "pair " + cfg.get_str("pair");
    } else {
        chosen = gens.family(static_cast<int>(cfg.get_int("subgroup")));
        what = "subgroup " + cfg.get_str("subgroup");
    }
    auto table = alg::bfs_closure(chosen, static_cast<std::size_t>(cfg.get_int("cap")));
    for (int g = 0; g < table.generator_count(); ++g)
        w.record("GENERATOR", {{"index", R::integer(g)},
                               {"label", table.generator(g).label},
                               {"element", R::integer(table.generator_element(g))}});
    long long max_word = 0;
    for (std::size_t id = 0; id < table.size(); ++id)
        max_word = std::max<long long>(max_word,
                                       static_cast<long long>(table.word(static_cast<int>(id)).size()));
    w.record("GROUP", {{"order", R::integer(static_cast<long long>(table.size()))},
                       {"generators", R::integer(table.generator_count())},
                       {"diameter", R::integer(max_word)},
                       {"p", cfg.get_str("p")},
                       {"n", cfg.get_str("n")},
                       {"k", cfg.get_str("k")},
                       {"D", cfg.get_str("D")}});
    return 0;
}

int run_relations(int n, int k, int p, int degree_cap, int maxdeg, R& w) {
    auto pool = alg::coefficient_pool(p, k, degree_cap, maxdeg);
    auto report = alg::verify_steinberg_relations(n, k, p, degree_cap, pool);
    for (int fam = 0; fam < 3; ++fam)
        w.record("RELATIONS", {{"family", R::integer(fam + 1)},
                               {"checked", R::integer(report.checked[fam])},
                               {"violations", R::integer(report.violations[fam])},
                               {"n", R::integer(n)},
                               {"k", R::integer(k)},
                               {"p", R::integer(p)},
                               {"D", R::integer(degree_cap)},
                               {"pool", R::integer(static_cast<long long>(pool.size()))}});
    return report.all_pass() ? 0 : 1;
}

int cmd_relations(const RunConfig& cfg, R& w) {
    return run_relations(static_cast<int>(cfg.get_int("n")), static_cast<int>(cfg.get_int("k")),
                         static_cast<int>(cfg.get_int("p")),
                         static_cast<int>(cfg.get_int("D")),
                         static_cast<int>(cfg.get_int("maxdeg")), w);
}

std::string monitor_kind_name(sol::MonitorRecord::Kind k) {
    switch (k) {
        case sol::MonitorRecord::Kind::Ttt: return "ttt";
        case sol::MonitorRecord::Kind::HBound: return "h-bound";
        case sol::MonitorRecord::Kind::GoodPoint: return "good-point";
    }
    return "?";
}

int cmd_solve(const RunConfig& cfg, R& w) {
    sol::ScenarioParams params;
    params.kind = sol::scenario_kind_from_name(cfg.get_str("scenario"));
    int dim = static_cast<int>(cfg.get_int("dim"));
    params.model = cfg.get_str("model") == "euclidean"
                       ? geo::euclidean(dim)
                       : geo::hyperboloid(dim, cfg.get_real("curvature"));
    params.seed = cfg.seed;
    params.heisenberg_p = static_cast<int>(cfg.get_int("p"));
    params.max_iterations = static_cast<int>(cfg.get_int("max-iter"));
    params.mirror_angle = cfg.get_real("mirror-angle") * kPi / 180.0;
    sol::Scenario scenario = sol::make_scenario(params);

    auto result = sol::minimize_f(scenario);
    for (const auto& m : result.monitors)
        w.record("MONITOR", {{"kind", monitor_kind_name(m.kind)},
                             {"iteration", R::integer(m.iteration)},
                             {"lhs", R::real(m.lhs)},
                             {"rhs", R::real(m.rhs)},
                             {"ok", R::boolean(m.ok)}});

    std::string status = result.status == sol::SolverResult::Status::FixedPoint
                             ? "fixed-point"
                         : result.status == sol::SolverResult::Status::MinimalTriangle
                             ? "minimal-triangle"
                             : "iteration-cap";
    std::vector<std::pair<std::string, std::string>> fields = {
        {"status", status},
        {"f", R::real(result.final_state.f_value)},
        {"iterations", R::integer(result.iterations)},
        {"scenario", cfg.get_str("scenario")},
        {"scale", R::real(scenario.scale)},
        {"tol", R::real(scenario.fixed_point_tol())},
        {"k_size", R::integer(static_cast<long long>(scenario.k_set.size()))}};
    if (result.certificate.available) {
        fields.push_back({"fat", R::boolean(result.certificate.fat)});
        fields.push_back({"angle_sum", R::real(result.certificate.angle_sum)});
        for (int i = 0; i < 3; ++i)
            fields.push_back({"angle" + std::to_string(i), R::real(result.certificate.angles[i])});
    }
    w.record("SOLVE", std::move(fields));

    if (result.fixed_point) {
        double worst = 0.0;
        for (const auto& g : scenario.generators)
            worst = std::max(worst, geo::dist(g.apply(*result.fixed_point), *result.fixed_point));
        std::vector<std::pair<std::string, std::string>> fp = {
            {"displacement", R::real(worst)},
            {"coords", joined_coords(result.fixed_point->coords)}};
        if (scenario.planted_fixed_point)
            fp.push_back({"planted_distance",
                          R::real(geo::dist(*result.fixed_point, *scenario.planted_fixed_point))});
        w.record("FIXEDPOINT", std::move(fp));
    }
    return 0;
}

int cmd_fh_check(const RunConfig& cfg, R& w) {
    const int dim = static_cast<int>(cfg.get_int("dim"));
    const long long trials = cfg.get_int("trials");
    std::mt19937_64 rng(cfg.seed ^ 0xA3C59AC2ull);
    std::normal_distribution<double> g;

    long long violations = 0;
    double min_slack = std::numeric_limits<double>::infinity();
    for (long long t = 0; t < trials; ++t) {
        geo::Vec a(dim), b(dim), c(dim);
        for (int i = 0; i < dim; ++i) {
            a(i) = g(rng);
            b(i) = g(rng);
            c(i) = g(rng);
        }
        auto rec = sol::barycenter_inequality_check(a, b, c);
        if (!rec.ok) ++violations;
        min_slack = std::min(min_slack, rec.min_slack);
    }
    w.record("FHCHECK", {{"dim", R::integer(dim)},
                         {"trials", R::integer(trials)},
                         {"violations", R::integer(violations)},
                         {"min_slack", R::real(min_slack)}});

    geo::Vec e1(2), e2(2), e3(2);
    e1 << 0, 0;
    e2 << 1, 0;
    e3 << 0.5, std::sqrt(3.0) / 2;
    auto eq = sol::barycenter_inequality_check(e1, e2, e3);
    w.record("FHEQ", {{"equilateral_slack", R::real(eq.min_slack)}});
    return violations == 0 ? 0 : 1;
}

int cmd_flatness(const RunConfig& cfg, R& w) {
    const double side = cfg.get_real("side");
    const double curvature = cfg.get_real("curvature");
    geo::Model m = geo::hyperboloid(2, curvature);

    // Equilateral probe with the requested side length.
    double ch = std::cosh(curvature * side), sh = std::sinh(curvature * side);
    double cos_a = (ch * ch - ch) / (sh * sh);
    double apex = std::acos(cos_a);
    geo::ModelPoint x = geo::base_point(m);
    geo::Vec u1 = geo::Vec::Zero(3), u2 = geo::Vec::Zero(3);
    u1(1) = side;
    u2(1) = side * cos_a;
    u2(2) = side * std::sin(apex);
    geo::ModelPoint y = geo::exp_map(x, u1), z = geo::exp_map(x, u2);

    std::vector<double> scales;
    std::stringstream ss(cfg.get_str("scales"));
    std::string token;
    while (std::getline(ss, token, ',')) {
        char* end = nullptr;
        double v = std::strtod(token.c_str(), &end);
        if (end == token.c_str() || *end != '\0' || v <= 0)
            throw ConfigError("key 'scales': bad entry '" + token + "'");
        scales.push_back(v);
    }
    double prev = 0.0;
    for (std::size_t i = 0; i < scales.size(); ++i) {
        double defect = geo::flatness_defect(scales[i], x, y, z);
        std::vector<std::pair<std::string, std::string>> fields = {
            {"lambda", R::real(scales[i])}, {"defect", R::real(defect)}};
        if (i > 0) fields.push_back({"ratio", R::real(defect / prev)});
        w.record("FLATNESS", std::move(fields));
        prev = defect;
    }
    return 0;
}

int verify_geometry(std::uint64_t seed, R& w) {
    std::mt19937_64 rng(seed ^ 0x6E2A4C9Bull);
    std::normal_distribution<double> g;
    auto random_pt = [&](const geo::Model& m) {
        if (m.kind == geo::Model::Kind::Euclidean) {
            geo::Vec v(m.dim);
            for (int i = 0; i < m.dim; ++i) v(i) = 1.5 * g(rng);
            return geo::ModelPoint{m, v};
        }
        geo::Vec t = geo::Vec::Zero(m.ambient_dim());
        for (int i = 1; i <= m.dim; ++i) t(i) = 1.5 * g(rng);
        return geo::exp_map(geo::base_point(m), t);
    };

    int failures = 0;
    for (const auto& m : {geo::euclidean(3), geo::hyperboloid(3, 1.0)}) {
        long long bad = 0;
        double worst = 0.0;
        for (int t = 0; t < 10000; ++t) {
            double d = geo::cat0_defect(random_pt(m), random_pt(m), random_pt(m));
            worst = std::min(worst, d);
            if (d < -1e-12) ++bad;
            if (m.kind == geo::Model::Kind::Euclidean && std::abs(d) > 1e-12) ++bad;
        }
        failures += bad != 0;
        w.record("VERIFY", {{"suite", "geometry"},
                            {"check", m.kind == geo::Model::Kind::Euclidean
                                          ? "cat0-euclidean"
                                          : "cat0-hyperboloid"},
                            {"trials", R::integer(10000)},
                            {"violations", R::integer(bad)},
                            {"min_defect", R::real(worst)}});
    }

    geo::Model h2 = geo::hyperboloid(2, 1.0);
    long long bad_sum = 0;
    double worst_sum = 0.0;
    for (int t = 0; t < 1000; ++t) {
        auto a = random_pt(h2), b = random_pt(h2), c = random_pt(h2);
        if (geo::dist(a, b) < 1e-6 || geo::dist(a, c) < 1e-6 || geo::dist(b, c) < 1e-6)
            continue;
        double sum = geo::angle_at(a, b, c) + geo::angle_at(b, a, c) + geo::angle_at(c, a, b);
        worst_sum = std::max(worst_sum, sum);
        if (sum > kPi + 1e-9) ++bad_sum;
    }
    failures += bad_sum != 0;
    w.record("VERIFY", {{"suite", "geometry"},
                        {"check", "angle-sum"},
                        {"trials", R::integer(1000)},
                        {"violations", R::integer(bad_sum)},
                        {"max_sum", R::real(worst_sum)}});
    return failures == 0 ? 0 : 1;
}

int verify_monitors(std::uint64_t seed, R& w) {
    int exit = 0;
    std::vector<sol::ScenarioParams> configs;
    for (int i = 0; i < 3; ++i) {
        sol::ScenarioParams p;
        p.kind = i == 2 ? sol::ScenarioKind::Stress : sol::ScenarioKind::Mirrors;
        p.model = i == 1 ? geo::euclidean(8) : geo::euclidean(2);
        p.seed = seed + i;
        configs.push_back(p);
    }
    for (const auto& params : configs) {
        sol::Scenario s = sol::make_scenario(params);
        std::mt19937_64 rng(params.seed ^ 0x51AB3ull);
        std::normal_distribution<double> g;
        long long bad = 0;
        long long good_point_hits = 0;
        for (int t = 0; t < 1000; ++t) {
            geo::Vec v(s.model.dim);
            for (int i = 0; i < s.model.dim; ++i) v(i) = 2.0 * g(rng);
            geo::ModelPoint p{s.model, v};
            if (!sol::monitor_ttt(s, p).ok) ++bad;
            if (!sol::monitor_h_bound(s, p).ok) ++bad;
            std::vector<sol::MonitorRecord> sink;
            auto [y, applied] = sol::good_point_step(s, p, rng, &sink);
            if (applied) {
                ++good_point_hits;
                for (const auto& rec : sink)
                    if (!rec.ok) ++bad;
            }
        }
        if (bad) exit = 1;
        w.record("VERIFY", {{"suite", "monitors"},
                            {"scenario", sol::scenario_kind_name(params.kind)},
                            {"trials", R::integer(1000)},
                            {"violations", R::integer(bad)},
                            {"good_point_hits", R::integer(good_point_hits)}});
    }
    return exit;
}

int cmd_verify(const RunConfig& cfg, R& w) {
    const std::string& suite = cfg.get_str("suite");
    int exit = 0;
    if (suite == "relations" || suite == "all") {
        for (auto [n, k] : {std::pair{3, 1}, std::pair{3, 2}, std::pair{4, 1}})
            exit |= run_relations(n, k, 5, 2 * n, 1, w);
    }
    if (suite == "geometry" || suite == "all") exit |= verify_geometry(cfg.seed, w);
    if (suite == "monitors" || suite == "all") exit |= verify_monitors(cfg.seed, w);
    return exit;
}

}  // namespace

int run_command(const RunConfig& cfg, std::ostream& report) {
    ReportWriter w(report);
    int code = 0;
    try {
        if (cfg.command == "angle")
            code = cmd_angle(cfg, w);
        else if (cfg.command == "heisenberg")
            code = cmd_heisenberg(cfg, w);
        else if (cfg.command == "enumerate")
            code = cmd_enumerate(cfg, w);
        else if (cfg.command == "relations")
            code = cmd_relations(cfg, w);
        else if (cfg.command == "solve")
            code = cmd_solve(cfg, w);
        else if (cfg.command == "fh-check")
            code = cmd_fh_check(cfg, w);
        else if (cfg.command == "flatness")
            code = cmd_flatness(cfg, w);
        else if (cfg.command == "verify")
            code = cmd_verify(cfg, w);
        else
            throw ConfigError("unknown command '" + cfg.command + "'");
    } catch (const ConfigError&) {
        throw;  // caller maps configuration problems to exit 2
    } catch (const Error& e) {
        std::string msg = e.what();
        for (char& c : msg)
            if (c == ' ' || c == '\n') c = '_';  // keep the one-record-per-line format
        w.record("ERROR", {{"message", msg}});
        code = 1;
    }
    w.record("RESULT", {{"status", code == 0 ? "ok" : "error"},
                        {"exit", ReportWriter::integer(code)}});
    return code;
}

}  // namespace steinfix::cli
