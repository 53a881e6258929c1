// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.
//
//   acceptance --cli build/sconv --golden tests/golden

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gen.hpp"
#include "oracle.hpp"
#include "sconv/commands.hpp"
#include "sconv/errors.hpp"
#include "sconv/io.hpp"
#include "sconv/replay.hpp"
#include "sconv/spherical.hpp"

namespace {

using sconv::Gauge;
using sconv::Rat;
using sconv::RatVec;
using sconv::io::json;
namespace fs = std::filesystem;
namespace replay = sconv::replay;

// Pinned tolerances.
constexpr double kStarTolerance = 1e-9;        // criterion 2, (ix) on convex gauges
static_assert(sconv::kStarTolerance == kStarTolerance);
constexpr double kRecombineTolerance = 1e-9;   // criterion 6, Euclidean recombination
constexpr double kGaugeTolerance = 1e-12;      // criterion 10

// Counted replays of every certificate the suite produces (criterion 1).
struct Tally {
    std::size_t checked = 0;
    std::vector<std::string> failures;
};
Tally g_tally;

bool replayed(const replay::Verdict& v, const std::string& what) {
    ++g_tally.checked;
    if (!v.ok) g_tally.failures.push_back(what + ": " + v.reason);
    return v.ok;
}

bool replayed(const json& doc, const std::string& what) { return replayed(sconv::io::replay_document(doc), what); }

// Collects the first few failure messages of one criterion.
class Outcome {
public:
    void fail(const std::string& why) {
        ++failures_;
        if (notes_.size() < 5) notes_.push_back(why);
    }
    void require(bool ok, const std::string& why) {
        if (!ok) fail(why);
    }
    void count(std::size_t n = 1) { instances_ += n; }

    bool passed() const { return failures_ == 0; }
    std::size_t instances() const { return instances_; }
    std::string summary() const {
        std::string s;
        for (const auto& n : notes_) s += "\n    " + n;
        return s;
    }

private:
    std::size_t failures_ = 0;
    std::size_t instances_ = 0;
    std::vector<std::string> notes_;
};

std::vector<sconv::ConeVRep> cones_of(const std::vector<sconv::SphericalSet>& sets) {
    std::vector<sconv::ConeVRep> out;
    for (const auto& s : sets) out.push_back(s.cone());
    return out;
}

std::string tag(const char* what, std::size_t i) { return std::string(what) + " #" + std::to_string(i); }

// 2. Characterization suite over all gauge kinds.
Outcome prop1_instances() {
    Outcome o;
    gen::Rng rng(2002);
    for (std::size_t i = 0; i < 240; ++i) {
        const auto kind = gen::all_kinds()[i % 4];
        const std::size_t n = 2 + (i / 4) % 4;
        const auto k = static_cast<std::size_t>(gen::integer(rng, 2, 8));
        const auto s = sconv::make_set(gen::gauge(rng, n, kind), gen::hull_addible_rays(rng, n, k));
        const auto r = sconv::prop1_suite(s, 10, i);
        o.count();
        o.require(r.passed, tag("prop1", i) + ": " + (r.failures.empty() ? "" : r.failures.front()));
        o.require(r.star_checked == s.gauge().is_convex(), tag("prop1 star gating", i));
        o.require(r.checks_sum == 10 && r.checks_hull == 10, tag("prop1 check counts", i));
    }
    return o;
}

// 3. Radon partitions against exhaustive enumeration.
Outcome radon_instances() {
    Outcome o;
    gen::Rng rng(3003);
    for (std::size_t i = 0; i < 150; ++i) {
        const std::size_t n = 2 + i % 3;
        const auto k = static_cast<std::size_t>(gen::integer(rng, static_cast<long>(n) + 1, std::min<long>(8, n + 4)));
        const auto rays = gen::hull_addible_rays(rng, n, k);
        const auto g = gen::gauge(rng, n, gen::all_kinds()[i % 4]);
        const auto r = sconv::radon_partition(g, rays);
        o.count();
        o.require(replayed(replay::radon(rays, r), tag("radon", i)), tag("radon replay", i));
        if (k <= 6) {
            const auto all = oracle::naive_radon(rays);
            const bool listed = std::any_of(all.begin(), all.end(), [&](const oracle::RadonTriple& t) {
                return t.part1 == r.part1 && t.part2 == r.part2;
            });
            o.require(listed, tag("radon partition missing from enumeration", i));
        }
    }
    return o;
}

// 4. Helly positive case.
Outcome helly_positive() {
    Outcome o;
    gen::Rng rng(4004);
    // n = 2: random arcs, kept when the exact hypothesis checks pass.
    std::size_t found2 = 0;
    for (std::size_t attempt = 0; found2 < 30 && attempt < 5000; ++attempt) {
        const auto m = static_cast<std::size_t>(gen::integer(rng, 3, 5));
        std::vector<sconv::SphericalSet> sets;
        for (std::size_t j = 0; j < m; ++j)
            sets.push_back(sconv::make_set(Gauge::euclidean(2), gen::hull_addible_rays(rng, 2, 2, 6)));
        const auto rep = sconv::helly_verify(sets, 0, attempt);
        if (!rep.hypotheses_hold) continue;
        ++found2;
        o.count();
        for (const auto& c : rep.coverages) o.require(c.coverage.exact, tag("planar coverage not exact", attempt));
        o.require(rep.common.has_value(), tag("helly n=2 without common ray", attempt));
        o.require(replayed(replay::helly(cones_of(sets), rep), tag("helly n=2", attempt)), tag("helly replay", attempt));
    }
    o.require(found2 == 30, "too few planar Helly families accepted");

    // n = 3: generators c + d_i scattered around a common ray inside one open half-space.
    for (std::size_t f = 0; f < 25; ++f) {
        const RatVec w = gen::int_vec(rng, 3, 4);
        RatVec c = gen::int_vec(rng, 3, 6);
        if (sconv::dot(c, w) <= 0) c = -c;
        if (sconv::dot(c, w) == 0) c = w;
        const auto m = static_cast<std::size_t>(gen::integer(rng, 4, 5));
        std::vector<sconv::SphericalSet> sets;
        while (sets.size() < m) {
            std::vector<RatVec> gs;
            RatVec drift(3);
            for (int t = 0; t < 2; ++t) {
                const RatVec d = gen::vec(rng, 3, 3, 2);
                gs.push_back(Rat(4) * c + d);
                drift += d;
            }
            gs.push_back(Rat(4) * c - drift);  // mean of the three is 4c
            if (std::all_of(gs.begin(), gs.end(), [&](const RatVec& g) { return sconv::dot(g, w) > 0; }))
                sets.push_back(sconv::make_set(Gauge::euclidean(3), gs));
        }
        const auto rep = sconv::helly_verify(sets, 1000, f);
        o.count();
        o.require(rep.hypotheses_hold, tag("constructed n=3 family fails the hypotheses", f));
        o.require(rep.common.has_value(), tag("helly n=3 without common ray", f));
        o.require(replayed(replay::helly(cones_of(sets), rep), tag("helly n=3", f)), tag("helly replay", f));
    }
    return o;
}

// 5. The Qi counterexample family.
Outcome qi_family() {
    Outcome o;
    gen::Rng rng(5005);
    for (std::size_t f = 0; f < 12; ++f) {
        const std::size_t n = 2 + f % 3;
        const auto us = gen::simplex_around_origin(rng, n);
        const auto lb = sconv::barycentric_origin(us);
        if (!lb) {
            o.fail(tag("no barycentric weights", f));
            continue;
        }
        o.count();
        o.require(replayed(replay::barycentric(us, *lb), tag("barycentric", f)), tag("barycentric replay", f));
        for (std::size_t t = 0; t < 1000; ++t) {
            const RatVec x = gen::vec(rng, n, 50, 9);
            const auto d = sconv::qi_decomposition(us, *lb, x);
            if (!replayed(replay::qi(us, *lb, x, d), tag("qi", f))) o.fail(tag("qi replay", f));
        }
        std::vector<sconv::ConeVRep> qs;
        std::vector<sconv::SphericalSet> sets;
        for (std::size_t i = 0; i <= n; ++i) {
            qs.push_back(sconv::qi_cone(us, i));
            sets.push_back(sconv::make_set(Gauge::euclidean(n), qs.back().generators()));
        }
        // The n-subfamily without Q_j contains u_j.
        for (std::size_t j = 0; j <= n; ++j)
            for (std::size_t i = 0; i <= n; ++i) {
                if (i == j) continue;
                const auto c = sconv::membership(qs[i], us[j]);
                o.require(c && replayed(replay::membership(qs[i].generators(), us[j], *c), tag("qi ray", f)),
                          tag("u_j missing from Q_i", f));
            }
        const auto rep = sconv::helly_verify(sets, 200, f);
        o.require(rep.intersection_hypothesis, tag("Qi intersections", f));
        o.require(!rep.union_hypothesis, tag("Qi union hypothesis not reported failing", f));
        std::vector<std::size_t> all(n + 1);
        std::iota(all.begin(), all.end(), std::size_t{0});
        o.require(std::find(rep.covering_subfamilies.begin(), rep.covering_subfamilies.end(), all) !=
                      rep.covering_subfamilies.end(),
                  tag("covering family not named", f));
        o.require(!rep.common, tag("Qi family produced a common ray", f));
        o.require(replayed(replay::helly(qs, rep), tag("qi helly", f)), tag("qi helly replay", f));
    }
    return o;
}

// 6. Spherical Carathéodory.
Outcome caratheodory_instances() {
    Outcome o;
    gen::Rng rng(6006);
    for (std::size_t i = 0; i < 220; ++i) {
        const std::size_t n = 2 + i % 3;
        const auto kind = gen::all_kinds()[i % 4];
        const auto k = static_cast<std::size_t>(gen::integer(rng, 1, 8));
        const auto s = sconv::make_set(gen::gauge(rng, n, kind), gen::hull_addible_rays(rng, n, k));
        const RatVec x = oracle::sample_sco(s, 1, i).front();
        const auto r = sconv::spherical_caratheodory(s, x);
        o.count();
        o.require(r.indices.size() <= n, tag("support too large", i));
        o.require(replayed(replay::conic_decomposition(s.rays(), x, r.indices, r.coeffs), tag("caratheodory", i)),
                  tag("caratheodory replay", i));
        const auto all = oracle::naive_caratheodory(s.cone(), x);
        o.require(std::any_of(all.begin(), all.end(),
                              [&](const oracle::Support& t) { return t.indices == r.indices && t.coeffs == r.coeffs; }),
                  tag("support not among the enumerated ones", i));
        if (kind == sconv::GaugeKind::Euclidean) {
            std::vector<double> sum(n, 0.0);
            for (std::size_t p = 0; p < r.points.size(); ++p)
                for (std::size_t j = 0; j < n; ++j) sum[j] += r.weights[p] * r.points[p].coords()[j];
            const auto lhs = sconv::project(s.gauge(), std::span<const double>(sum));
            const auto rhs = sconv::project(s.gauge(), x);
            for (std::size_t j = 0; j < n; ++j)
                o.require(std::abs(lhs->coords()[j] - rhs->coords()[j]) <= kRecombineTolerance,
                          tag("recombination off", i));
        }
    }
    return o;
}

// 7. Minkowski.
Outcome minkowski_instances() {
    Outcome o;
    gen::Rng rng(7007);
    for (std::size_t i = 0; i < 220; ++i) {
        const std::size_t n = 2 + i % 3;
        auto rays = gen::hull_addible_rays(rng, n, static_cast<std::size_t>(gen::integer(rng, 1, 7)));
        if (i % 2 == 0) rays.push_back(rays.front() + rays.back());
        if (i % 3 == 0) rays.push_back(Rat(3) * rays.front());
        const auto s = sconv::make_set(gen::gauge(rng, n, gen::all_kinds()[i % 4]), rays);
        const auto m = sconv::minkowski_check(s);
        const auto e = sconv::sext(s);
        o.count();
        o.require(!e.rays.empty() && !m.extreme.empty(), tag("sext empty", i));
        o.require(replayed(replay::minkowski(s.rays(), m), tag("minkowski", i)), tag("minkowski replay", i));
        o.require(replayed(replay::extreme_rays(s.rays(), e.certificate), tag("extreme", i)), tag("extreme replay", i));
    }
    return o;
}

// 8. Separation.
Outcome separation_instances() {
    Outcome o;
    gen::Rng rng(8008);
    for (std::size_t i = 0; i < 200; ++i) {
        const std::size_t n = 2 + i % 4;
        const auto s = sconv::make_set(gen::gauge(rng, n, gen::all_kinds()[i % 4]),
                                       gen::hull_addible_rays(rng, n, static_cast<std::size_t>(gen::integer(rng, 1, 8))));
        const auto members = oracle::sample_sco(s, 25, i);
        for (bool closed : {false, true}) {
            const auto c = sconv::separating_hemisphere(s, closed);
            o.count();
            o.require(c.alpha > 0, tag("margin not positive", i));
            o.require(replayed(replay::separation(s.rays(), c), tag("separation", i)), tag("separation replay", i));
            for (const auto& x : members) o.require(sconv::dot(x, c.u) > 0, tag("member outside hemisphere", i));
        }
    }
    return o;
}

// 9. Exact outputs do not depend on the gauge.
Outcome gauge_independence() {
    Outcome o;
    gen::Rng rng(9009);
    const std::array<json, 3> gauges{json::parse(R"("euclidean")"), json::parse(R"({"kind": "pnorm", "p": 3})"),
                                     json::parse(R"({"kind": "quasinorm", "p": "1/2"})")};
    auto strip = [](json j) {
        j.erase("gauge");
        j.erase("presentation");
        return j.dump();
    };
    for (std::size_t i = 0; i < 50; ++i) {
        const std::size_t n = 2 + i % 3;
        const auto rays = gen::hull_addible_rays(rng, n, static_cast<std::size_t>(gen::integer(rng, n + 1, 6)));
        json base{{"rays", sconv::io::to_json(std::span<const RatVec>(rays))}};
        const RatVec inside = rays[0] + rays[1];
        base["x"] = sconv::io::to_json(inside);
        json outside = base;
        outside["x"] = sconv::io::to_json(-inside);
        const std::vector<std::pair<std::string, json>> runs{{"radon", base},        {"sco-member", base},
                                                             {"sco-member", outside}, {"caratheodory", base},
                                                             {"extreme", base},       {"minkowski", base},
                                                             {"separate", base}};
        o.count();
        for (const auto& [cmd, in] : runs) {
            std::string first;
            for (std::size_t g = 0; g < gauges.size(); ++g) {
                json doc = in;
                doc["gauge"] = gauges[g];
                json out;
                try {
                    out = sconv::commands::run(cmd, doc, {}).output;
                } catch (const std::exception& e) {
                    throw std::runtime_error(cmd + " on " + doc.dump() + ": " + e.what());
                }
                replayed(out, tag(cmd.c_str(), i));
                const auto s = strip(out);
                if (g == 0)
                    first = s;
                else
                    o.require(s == first, tag(cmd.c_str(), i) + " differs under " + gauges[g].dump());
            }
        }
    }
    return o;
}

// 10. Gauge numerics.
Outcome gauge_numerics() {
    Outcome o;
    gen::Rng rng(10010);
    for (auto kind : gen::all_kinds()) {
        for (std::size_t t = 0; t < 1000; ++t) {
            const std::size_t n = 2 + t % 4;
            const Gauge g = gen::gauge(rng, n, kind);
            std::vector<double> x(n);
            for (auto& v : x) v = gen::uniform(rng, -100.0, 100.0);
            const double s = std::exp(gen::uniform(rng, -5.0, 5.0));
            std::vector<double> sx(x);
            for (auto& v : sx) v *= s;
            const double phi = g.evaluate(std::span<const double>(x));
            o.count();
            o.require(std::abs(g.evaluate(std::span<const double>(sx)) - s * phi) <= kGaugeTolerance * s * phi,
                      std::string("homogeneity ") + sconv::to_string(kind));
            const auto p = sconv::project(g, std::span<const double>(x));
            const auto pp = sconv::project(g, std::span<const double>(p->coords()));
            const auto ps = sconv::project(g, std::span<const double>(sx));
            for (std::size_t j = 0; j < n; ++j) {
                o.require(std::abs(pp->coords()[j] - p->coords()[j]) <= kGaugeTolerance,
                          std::string("idempotence ") + sconv::to_string(kind));
                o.require(std::abs(ps->coords()[j] - p->coords()[j]) <= kGaugeTolerance,
                          std::string("scale invariance ") + sconv::to_string(kind));
            }
        }
    }
    return o;
}

struct Proc {
    int code;
    std::string out;
};

Proc shell(const std::string& cmd) {
    Proc p{-1, {}};
    FILE* f = popen(cmd.c_str(), "r");
    if (!f) return p;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), f)) > 0) p.out.append(buf.data(), got);
    const int st = pclose(f);
    p.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::string shell_arg(const fs::path& p) { return "'" + p.string() + "'"; }

// 11. CLI golden files and determinism.
Outcome cli_golden(const std::string& cli, const fs::path& dir) {
    Outcome o;
    std::vector<fs::path> cases;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.path().extension() == ".cmd") cases.push_back(e.path());
    std::sort(cases.begin(), cases.end());
    o.require(!cases.empty(), "no golden cases in " + dir.string());
    const fs::path tmp = fs::temp_directory_path() / "sconv_acceptance_replay.json";
    for (const auto& c : cases) {
        const auto stem = c.stem().string();
        std::string args = slurp(c);
        while (!args.empty() && std::isspace(static_cast<unsigned char>(args.back()))) args.pop_back();
        const std::string cmd = shell_arg(cli) + " " + args + " " + shell_arg(dir / (stem + ".json")) + " 2>/dev/null";
        const auto a = shell(cmd);
        const auto b = shell(cmd);
        o.count();
        o.require(a.out == b.out && a.code == b.code, stem + ": output differs between runs");
        o.require(a.out == slurp(dir / (stem + ".expected")), stem + ": output differs from golden");
        o.require(std::to_string(a.code) == [&] {
            auto s = slurp(dir / (stem + ".code"));
            while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
            return s;
        }(), stem + ": exit code differs from golden");
        // Round trip through verify --replay for every certificate.
        if (a.code == 0 && args.rfind("verify", 0) != 0) {
            std::ofstream(tmp) << a.out;
            const auto v = shell(shell_arg(cli) + " verify --replay " + shell_arg(tmp));
            const bool ok = v.code == 0 && json::parse(v.out).value("valid", false);
            ++g_tally.checked;
            if (!ok) g_tally.failures.push_back(stem + ": CLI replay failed");
            o.require(ok, stem + ": verify --replay rejected the certificate");
        }
    }
    fs::remove(tmp);
    const auto unknown = shell(shell_arg(cli) + " frobnicate - </dev/null 2>/dev/null");
    o.require(unknown.code == 2, "unknown subcommand did not exit 2");
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sconv acceptance suite"};
    std::string cli, golden;
    app.add_option("--cli", cli, "Path to the sconv executable")->required();
    app.add_option("--golden", golden, "Directory of golden CLI cases")->required();
    CLI11_PARSE(app, argc, argv);

    struct Row {
        int id;
        const char* name;
        std::function<Outcome()> run;
        Outcome result{};
        double seconds = 0;
    };
    std::vector<Row> rows{
        {2, "characterization suite, 4 gauge kinds", prop1_instances},
        {3, "Radon partitions vs enumeration", radon_instances},
        {4, "Helly positive families", helly_positive},
        {5, "Qi union-hypothesis counterexample", qi_family},
        {6, "Caratheodory supports", caratheodory_instances},
        {7, "Minkowski with dual certificates", minkowski_instances},
        {8, "separating hemispheres", separation_instances},
        {9, "gauge independence of exact outputs", gauge_independence},
        {10, "gauge layer numerics", gauge_numerics},
        {11, "CLI golden files and determinism", [&] { return cli_golden(cli, golden); }},
    };
    const auto start = std::chrono::steady_clock::now();
    for (auto& r : rows) {
        const auto t0 = std::chrono::steady_clock::now();
        try {
            r.result = r.run();
        } catch (const std::exception& e) {
            r.result.fail(std::string("threw: ") + e.what());
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }

    Outcome replay_all;
    replay_all.count(g_tally.checked);
    replay_all.require(g_tally.checked > 0, "no certificates were replayed");
    for (const auto& f : g_tally.failures) replay_all.fail(f);
    rows.insert(rows.begin(), Row{1, "certificate replay", nullptr, replay_all, 0});

    bool all = true;
    for (const auto& r : rows) {
        all = all && r.result.passed();
        std::printf("criterion %2d %s  %-40s %6zu instances  %6.2fs%s\n", r.id, r.result.passed() ? "PASS" : "FAIL",
                    r.name, r.result.instances(), r.seconds, r.result.summary().c_str());
    }
    const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("total %.2fs\n", total);
    return all ? 0 : 1;
}
