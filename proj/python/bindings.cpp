#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sconv/commands.hpp"
#include "sconv/errors.hpp"

namespace py = pybind11;

namespace {

using sconv::io::json;

// Rationals cross the boundary as "p/q" strings; the Python wrapper
// turns them into fractions.Fraction.
using RayList = std::vector<std::vector<std::string>>;

std::vector<sconv::RatVec> to_rays(const RayList& rays) {
    std::vector<sconv::RatVec> out;
    for (const auto& r : rays) {
        std::vector<sconv::Rat> v;
        for (const auto& s : r) v.push_back(sconv::parse_rat(s));
        out.emplace_back(std::move(v));
    }
    return out;
}

std::vector<std::string> to_strings(const sconv::RatVec& v) {
    std::vector<std::string> out;
    for (const auto& x : v) out.push_back(sconv::to_string(x));
    return out;
}

std::vector<std::string> to_strings(const std::vector<sconv::Rat>& v) {
    std::vector<std::string> out;
    for (const auto& x : v) out.push_back(sconv::to_string(x));
    return out;
}

py::tuple run_command(const std::string& command, const std::string& input, int float_digits, std::uint64_t seed,
                      std::size_t samples, bool closed, const std::string& suite, bool replay) {
    sconv::commands::Options o;
    o.float_digits = float_digits;
    o.seed = seed;
    o.samples = samples;
    o.closed = closed;
    o.suite = suite;
    o.replay = replay;
    json in;
    try {
        in = json::parse(input);
    } catch (const json::exception& e) {
        throw sconv::ParseError(e.what());
    }
    try {
        auto r = sconv::commands::run(command, in, o);
        return py::make_tuple(r.output.dump(), r.exit_code);
    } catch (const sconv::ParseError& e) {
        return py::make_tuple(sconv::commands::error_document(command, e).dump(), 2);
    } catch (const sconv::Error& e) {
        return py::make_tuple(sconv::commands::error_document(command, e).dump(), 1);
    }
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact spherical convexity core";

    py::register_exception<sconv::Error>(m, "SconvError");

    m.def("commands", &sconv::commands::names);
    m.def("run_command", &run_command, py::arg("command"), py::arg("input"), py::arg("float_digits") = 12,
          py::arg("seed") = 0, py::arg("samples") = 1000, py::arg("closed") = false, py::arg("suite") = "",
          py::arg("replay") = false);

    m.def("hull_addible", [](const RayList& rays) {
        auto h = sconv::hull_addible(to_rays(rays));
        py::dict d;
        d["hull_addible"] = h.hull_addible;
        if (h.u) d["u"] = to_strings(*h.u);
        if (h.lambda) d["lambda"] = to_strings(*h.lambda);
        return d;
    });

    m.def("radon_partition", [](const RayList& rays) {
        auto rs = to_rays(rays);
        auto c = sconv::radon_partition(sconv::Gauge::euclidean(rs.at(0).size()), rs);
        py::dict d;
        d["part1"] = c.part1;
        d["part2"] = c.part2;
        d["witness"] = to_strings(c.witness);
        return d;
    });

    m.def("separating_hemisphere", [](const RayList& rays, bool closed) {
        auto rs = to_rays(rays);
        auto s = sconv::make_set(sconv::Gauge::euclidean(rs.at(0).size()), rs);
        auto c = sconv::separating_hemisphere(s, closed);
        py::dict d;
        d["u"] = to_strings(c.u);
        d["alpha"] = sconv::to_string(c.alpha);
        return d;
    }, py::arg("rays"), py::arg("closed") = false);

    m.def("evaluate", [](const std::string& kind, std::vector<double> x, double p) {
        const auto n = x.size();
        sconv::Gauge g = kind == "euclidean" ? sconv::Gauge::euclidean(n)
                         : kind == "pnorm"   ? sconv::Gauge::pnorm(n, p)
                         : kind == "quasinorm" ? sconv::Gauge::quasinorm(n, p)
                                               : throw sconv::ArgumentError("unsupported gauge kind " + kind);
        return g.evaluate(std::span<const double>(x));
    }, py::arg("kind"), py::arg("x"), py::arg("p") = 2.0);
}
