#include "plabic/cli.hpp"

#include "plabic/io.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>

namespace plabic::cli {

namespace {

enum class LogLevel { quiet, info, debug };

LogLevel log_level() {
    const char* v = std::getenv("PLABIC_LOG");
    if (!v)
        return LogLevel::quiet;
    const std::string s(v);
    if (s == "debug")
        return LogLevel::debug;
    if (s == "info")
        return LogLevel::info;
    return LogLevel::quiet;
}

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Check {
    std::string suite;
    std::string name;
    bool passed = false;
    std::string detail;
};

struct Context {
    std::ostream& out;
    std::ostream& err;
    LogLevel level;

    void log(LogLevel at, const std::string& msg) const {
        if (level >= at)
            err << "[plabic] " << msg << "\n";
    }
};

void require_rec_range(int k, int n) {
    if (n < 4 || n > 12 || k < 2 || k > n - 2)
        throw UsageError("need 2 <= k <= n-2 and 4 <= n <= 12 (got k=" + std::to_string(k) + ", n=" + std::to_string(n) + ")");
}

void require_poset_range(int k, int n) {
    if (n < 2 || n > 16 || k < 1 || k > n - 1)
        throw UsageError("need 1 <= k <= n-1 and n <= 16 (got k=" + std::to_string(k) + ", n=" + std::to_string(n) + ")");
}

std::string perm_string(const std::vector<int>& p) {
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i)
        s += (i ? " " : "") + std::to_string(p[i]);
    return s;
}

RecGraph make_graph(int k, int n, bool dual, bool w0) {
    if (dual && w0)
        throw UsageError("--dual and --w0 are mutually exclusive");
    auto primal = build_rec(k, n);
    if (dual)
        return dualize(primal);
    if (w0)
        return apply_w0(primal);
    return primal;
}

void write_output(const Context& ctx, const std::string& path, const std::string& text) {
    if (path.empty()) {
        ctx.out << text;
        return;
    }
    std::ofstream f(path);
    if (!f)
        throw Error("cannot write " + path);
    f << text;
}

// Climbs within one grid column (x spread <= 1, y non-decreasing), then runs
// along one row (y spread <= 1, x non-decreasing).
bool vertical_then_horizontal(const PlabicGraph& g, const Path& path) {
    std::vector<Point> pts{g.vertex(g.tail(path.front())).pos};
    for (int h : path)
        pts.push_back(g.vertex(g.head(h)).pos);
    auto column_ok = [&](std::size_t a, std::size_t b) {
        Rational lo = pts[a].x, hi = pts[a].x;
        for (std::size_t i = a; i <= b; ++i) {
            lo = std::min(lo, pts[i].x);
            hi = std::max(hi, pts[i].x);
            if (i > a && pts[i].y < pts[i - 1].y)
                return false;
        }
        return hi - lo <= 1;
    };
    auto row_ok = [&](std::size_t a, std::size_t b) {
        Rational lo = pts[a].y, hi = pts[a].y;
        for (std::size_t i = a; i <= b; ++i) {
            lo = std::min(lo, pts[i].y);
            hi = std::max(hi, pts[i].y);
            if (i > a && pts[i].x < pts[i - 1].x)
                return false;
        }
        return hi - lo <= 1;
    };
    for (std::size_t split = 1; split + 1 < pts.size(); ++split)
        if (column_ok(0, split) && row_ok(split, pts.size() - 1))
            return true;
    return false;
}

const std::vector<std::string> kRec47Labels{"167", "127", "123", "267", "237", "234", "367",
                                                "347", "345", "467", "457", "456", "567"};

std::vector<Check> suite_figures(int k, int n) {
    std::vector<Check> cs;
    auto add = [&](std::string name, bool ok, std::string detail) {
        cs.push_back(Check{"figures", std::move(name), ok, std::move(detail)});
    };
    const auto primal = build_rec(k, n);
    const auto dual = dualize(primal);
    const int m = n - k;

    for (const auto* r : {&primal, &dual}) {
        const std::string who(role_name(r->role));
        const int shift = r->role == Role::primal ? m : k;
        const auto pi = trip_permutation(r->graph);
        std::vector<int> expected;
        for (int i = 1; i <= n; ++i)
            expected.push_back((i + shift - 1) % n + 1);
        add(who + "_trip_permutation", pi == expected, perm_string(pi));
        add(who + "_face_count", r->graph.face_count() == k * m + 1, std::to_string(r->graph.face_count()) + " faces");
        const auto want_sources = range_subset(1, shift == m ? m : k);
        add(who + "_sources", r->orientation.sources == want_sources && r->orientation.acyclic,
            "{" + label_string(r->orientation.sources, n) + "}" + (r->orientation.acyclic ? " acyclic" : " cyclic"));
        const auto ctx = make_context(*r);
        const auto want_empty = r->role == Role::primal ? range_subset(k + 1, n) : range_subset(n - k + 1, n);
        add(who + "_empty_face", ctx.empty_label == want_empty, label_string(ctx.empty_label, n));
    }
    bool complements = true;
    for (int f = 0; f < primal.graph.face_count(); ++f)
        complements = complements && dual.labels[f] == complement(primal.labels[f], n);
    add("dual_labels_are_complements", complements, std::to_string(primal.graph.face_count()) + " faces compared");

    if (k == 4 && n == 7) {
        std::multiset<std::string> got, want(kRec47Labels.begin(), kRec47Labels.end());
        for (const auto& l : primal.labels)
            got.insert(label_string(l, n));
        std::size_t matched = 0;
        for (const auto& l : kRec47Labels)
            matched += got.count(l) ? 1 : 0;
        add("rec47_labels", got == want, std::to_string(matched) + " of 13 labels matched");
        FlowEngine engine(dual);
        const auto path = minimal_path(engine, 3, 6);
        add("dual_min_path_3_6", path && vertical_then_horizontal(dual.graph, *path),
            path ? std::to_string(path->size()) + " steps" : "no coordinatewise-minimal path");
    }
    return cs;
}

std::vector<Check> suite_plucker(int k, int n, std::uint64_t seed, const std::string& mode) {
    std::vector<Check> cs;
    const auto primal = build_rec(k, n);
    const bool symbolic = mode == "symbolic" || (mode == "auto" && n <= 5);
    for (const auto& r : {primal, dualize(primal)}) {
        const auto rep = pluecker_check(r, symbolic ? PlueckerMode::symbolic : PlueckerMode::numeric, seed);
        std::string detail = std::string(symbolic ? "symbolic" : "numeric seed " + std::to_string(seed)) + ", " +
                             std::to_string(rep.relations_checked) + " relations";
        if (!symbolic)
            detail += ", " + std::to_string(rep.values_checked) + " values" + (rep.all_positive ? " positive" : " NOT positive");
        if (!rep.failures.empty())
            detail += "; first failure: " + rep.failures.front();
        cs.push_back(Check{"plucker", std::string(role_name(r.role)) + "_relations", rep.passed(), detail});
    }
    return cs;
}

std::vector<Check> suite_stanley(int k, int n) {
    const auto g = grid_poset(k, n);
    std::vector<Check> cs;
    for (int r : {1, 2, 3}) {
        const auto o = lattice_points(order_polytope_H(g.poset, r)).size();
        const auto c = lattice_points(chain_polytope_H(g.poset, r)).size();
        cs.push_back(Check{"stanley", "ehrhart_r" + std::to_string(r), o == c,
                           "order " + std::to_string(o) + ", chain " + std::to_string(c)});
    }
    return cs;
}

std::vector<Check> suite_minkowski(int k, int n) {
    const auto g = grid_poset(k, n);
    std::vector<Check> cs;
    for (bool chain : {false, true}) {
        auto h = [&](int r) { return chain ? chain_polytope_H(g.poset, r) : order_polytope_H(g.poset, r); };
        const auto s1 = lattice_points(h(1));
        const auto s2 = lattice_points(h(2));
        const auto sum = minkowski_sum(s1, s1);
        cs.push_back(Check{"minkowski", chain ? "chain_idp" : "order_idp", same_points(sum, s2),
                           std::to_string(sum.size()) + " sums vs " + std::to_string(s2.size()) + " points at r=2"});
    }
    const auto ctx = make_context(dualize(build_rec(k, n)));
    const auto level2 = no_level_r(ctx, 2).size();
    const auto fflv2 = lattice_points(chain_polytope_H(g.poset, 2)).size();
    cs.push_back(Check{"minkowski", "dual_level2_count", level2 == fflv2,
                       std::to_string(level2) + " level-2 points vs " + std::to_string(fflv2) + " FFLV points"});
    return cs;
}

std::vector<Check> suite_fflv(const Context& ctx, int k, int n, const std::string& out_path) {
    const auto cert = certify_fflv(k, n);
    const std::string path =
        out_path.empty() ? "fflv_certificate_k" + std::to_string(k) + "_n" + std::to_string(n) + ".json" : out_path;
    std::ofstream f(path);
    if (!f)
        throw Error("cannot write " + path);
    f << certificate_to_json(cert).dump(2) << "\n";
    ctx.log(LogLevel::info, "certificate written to " + path);
    std::vector<Check> cs;
    for (const auto& c : cert.checks)
        cs.push_back(Check{"fflv", c.name, c.passed, c.detail});
    cs.push_back(Check{"fflv", "certificate_file", true, path});
    return cs;
}

std::vector<Check> suite_gt(int k, int n) {
    const auto ev = gt_evidence(k, n);
    std::vector<Check> cs;
    auto add = [&](std::string name, bool ok, std::string detail) {
        cs.push_back(Check{"gt", std::move(name), ok, std::move(detail)});
    };
    add("points", ev.no_points == ev.gt_points, std::to_string(ev.no_points) + " / " + std::to_string(ev.gt_points));
    add("vertices", ev.no_vertices == ev.gt_vertices,
        std::to_string(ev.no_vertices) + " / " + std::to_string(ev.gt_vertices));
    for (std::size_t i = 0; i < ev.levels.size(); ++i) {
        std::string d = "minkowski " + std::to_string(ev.no_minkowski[i]) + " / order " + std::to_string(ev.gt_ehrhart[i]);
        bool ok = ev.no_minkowski[i] == ev.gt_ehrhart[i];
        if (!ev.no_hull.empty()) {
            d += " / hull " + std::to_string(ev.no_hull[i]);
            ok = ok && ev.no_hull[i] == ev.gt_ehrhart[i];
        }
        add("ehrhart_r" + std::to_string(ev.levels[i]), ok, d);
    }
    if (ev.no_facets)
        add("facets", *ev.no_facets == *ev.gt_facets,
            std::to_string(*ev.no_facets) + " / " + std::to_string(*ev.gt_facets));
    else
        add("facets_skipped", true, ev.notice);
    return cs;
}

std::vector<Check> suite_w0(const Context& ctx, int k, int n) {
    const auto cert = w0_check(k, n);
    for (const auto& c : cert.checks)
        ctx.out << "  info w0/" << c.name << ": " << (c.passed ? "holds" : "fails") << " (" << c.detail << ")\n";
    ctx.out << "  info w0: relabelled graph " << (cert.certified() ? "is" : "is not") << " certified against FFLV^1_{"
            << n - k << "," << n << "}\n";
    // The remark is reported, not asserted; only the point counts are checked.
    const auto g = grid_poset(n - k, n);
    const auto points = make_context(apply_w0(build_rec(k, n))).polynomials.size();
    const auto anti = antichains(g.poset).size();
    return {Check{"w0", "point_counts", points == anti,
                  std::to_string(points) + " valuation points, " + std::to_string(anti) + " antichains"}};
}

Json failure_report(const std::vector<Check>& checks) {
    Json j;
    j["status"] = "failed";
    Json fs = Json::array();
    for (const auto& c : checks)
        if (!c.passed)
            fs.push_back(Json{{"suite", c.suite}, {"check", c.name}, {"detail", c.detail}});
    j["failures"] = std::move(fs);
    return j;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    const Context ctx{out, err, log_level()};
    CLI::App app{"Rec-plabic graphs, flow polynomials, Newton-Okounkov points and FFLV/GT polytopes"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Expand all help");

    int k = 0, n = 0, r = 1, level = 1;
    bool dual = false, w0 = false, points = false, hrep = false, as_json = false;
    std::string emit = "json", out_path, J, type, suite, format = "csv", mode = "auto";
    std::uint64_t seed = 0;

    auto add_kn = [&](CLI::App* sub) {
        sub->add_option("--k", k, "k")->required();
        sub->add_option("--n", n, "n")->required();
    };

    auto* rec = app.add_subcommand("rec", "Build rec(k,n) and emit it");
    add_kn(rec);
    rec->add_flag("--dual", dual, "Dual graph");
    rec->add_flag("--w0", w0, "Relabel faces by i -> n+1-i");
    rec->add_option("--emit", emit, "Output format")->check(CLI::IsMember({"json", "dot", "svg", "tikz"}));
    rec->add_option("--out", out_path, "Output file (default stdout)");

    auto* trips = app.add_subcommand("trips", "Trips and the trip permutation");
    add_kn(trips);
    trips->add_flag("--dual", dual, "Dual graph");

    auto* faces = app.add_subcommand("faces", "Face labels and centroids");
    add_kn(faces);
    faces->add_flag("--dual", dual, "Dual graph");
    faces->add_flag("--w0", w0, "Relabel faces by i -> n+1-i");

    auto* plucker = app.add_subcommand("plucker", "Flow polynomial P_J");
    add_kn(plucker);
    plucker->add_option("--J", J, "Comma-separated subset")->required();
    plucker->add_flag("--dual", dual, "Dual graph");
    plucker->add_flag("--json", as_json, "JSON output");

    auto* nobody = app.add_subcommand("no-body", "Valuation points at level R");
    add_kn(nobody);
    nobody->add_option("--level", level, "Level R >= 1")->check(CLI::PositiveNumber);
    nobody->add_flag("--dual", dual, "Dual graph");
    nobody->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    auto* poset = app.add_subcommand("poset", "Order or chain polytope of P_{k,n}");
    add_kn(poset);
    poset->add_option("--type", type, "order or chain")->required()->check(CLI::IsMember({"order", "chain"}));
    poset->add_option("--r", r, "Dilation")->check(CLI::NonNegativeNumber);
    auto* points_flag = poset->add_flag("--points", points, "Lattice points as CSV");
    poset->add_flag("--hrep", hrep, "Inequalities as JSON (default)")->excludes(points_flag);

    auto* verify = app.add_subcommand("verify", "Run verification suites");
    add_kn(verify);
    verify->add_option("--suite", suite, "Suite")
        ->required()
        ->check(CLI::IsMember({"figures", "plucker", "stanley", "minkowski", "fflv", "gt", "w0", "all"}));
    verify->add_option("--seed", seed, "Seed for numeric Pluecker checks (default 0)");
    verify->add_option("--mode", mode, "Pluecker mode")->check(CLI::IsMember({"auto", "symbolic", "numeric"}));
    verify->add_option("--out", out_path, "Certificate path for the fflv suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    const auto started = std::chrono::steady_clock::now();
    try {
        if (*rec) {
            require_rec_range(k, n);
            const auto g = make_graph(k, n, dual, w0);
            std::string text;
            if (emit == "json")
                text = graph_to_json(g).dump(2) + "\n";
            else if (emit == "dot")
                text = to_dot(g);
            else if (emit == "svg")
                text = to_svg(g);
            else
                text = to_tikz(g);
            write_output(ctx, out_path, text);
        } else if (*trips) {
            require_rec_range(k, n);
            const auto g = make_graph(k, n, dual, false);
            for (int i = 1; i <= n; ++i) {
                const auto t = trip(g.graph, i);
                out << "trip " << i << " -> " << t.end << " (" << t.steps.size() << " steps)\n";
            }
            out << "permutation: " << perm_string(trip_permutation(g.graph)) << "\n";
        } else if (*faces) {
            require_rec_range(k, n);
            const auto g = make_graph(k, n, dual, w0);
            for (int f = 0; f < g.graph.face_count(); ++f) {
                const auto c = g.graph.face_centroid(f);
                out << "face " << f << " label " << label_string(g.labels[f], n) << " centroid (" << to_string(c.x)
                    << ", " << to_string(c.y) << ")\n";
            }
            out << g.graph.face_count() << " faces\n";
        } else if (*plucker) {
            require_rec_range(k, n);
            const auto g = make_graph(k, n, dual, false);
            Subset s;
            try {
                s = parse_label(J, n);
            } catch (const Error& e) {
                throw UsageError(std::string("bad --J: ") + e.what());
            }
            if (s.size() != g.orientation.sources.size())
                throw UsageError("--J needs " + std::to_string(g.orientation.sources.size()) + " elements");
            FlowEngine engine(g);
            const auto p = engine.polynomial(s);
            if (as_json)
                out << polynomial_to_json(p, engine.basis()).dump(2) << "\n";
            else
                out << polynomial_string(p, engine.basis()) << "\n";
        } else if (*nobody) {
            require_rec_range(k, n);
            const auto vctx = make_context(make_graph(k, n, dual, false));
            const auto set = no_level_r(vctx, level);
            ctx.log(LogLevel::info, std::to_string(set.size()) + " points at level " + std::to_string(level));
            out << (format == "json" ? point_set_to_json(set).dump(2) + "\n" : point_set_csv(set));
        } else if (*poset) {
            require_poset_range(k, n);
            const auto g = grid_poset(k, n);
            const auto h = type == "order" ? order_polytope_H(g.poset, r) : chain_polytope_H(g.poset, r);
            if (points)
                out << point_set_csv(lattice_points(h));
            else
                out << hrep_to_json(h).dump(2) << "\n";
        } else if (*verify) {
            require_rec_range(k, n);
            std::vector<Check> checks;
            auto run_suite = [&](const std::string& name, const std::function<std::vector<Check>()>& fn) {
                if (suite != name && suite != "all")
                    return;
                const auto t0 = std::chrono::steady_clock::now();
                auto cs = fn();
                const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
                ctx.log(LogLevel::info, "suite " + name + " took " + std::to_string(secs) + " s");
                for (auto& c : cs) {
                    out << (c.passed ? "[ok]   " : "[FAIL] ") << c.suite << "/" << c.name << ": " << c.detail << "\n";
                    checks.push_back(std::move(c));
                }
            };
            run_suite("figures", [&] { return suite_figures(k, n); });
            run_suite("plucker", [&] { return suite_plucker(k, n, seed, mode); });
            run_suite("stanley", [&] { return suite_stanley(k, n); });
            run_suite("minkowski", [&] { return suite_minkowski(k, n); });
            run_suite("fflv", [&] { return suite_fflv(ctx, k, n, out_path); });
            run_suite("gt", [&] { return suite_gt(k, n); });
            run_suite("w0", [&] { return suite_w0(ctx, k, n); });
            const bool ok = std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
            if (!ok) {
                out << failure_report(checks).dump() << "\n";
                return 1;
            }
            out << "all " << checks.size() << " checks passed\n";
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const ParameterError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    ctx.log(LogLevel::debug,
            "done in " + std::to_string(std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count()) +
                " s");
    return 0;
}

} // namespace plabic::cli
