#include "butterfly/json_io.hpp"

#include <cmath>
#include <limits>

namespace butterfly {

namespace {

Json finite_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

double number_or(const Json& j, double fallback) { return j.is_null() ? fallback : j.get<double>(); }

}  // namespace

Json to_json(const GapRecord& r) {
  return Json{{"p", r.flux.p()},
              {"q", r.flux.q()},
              {"j", r.j},
              {"k", r.k()},
              {"central_closed", r.central_closed()},
              {"rho", r.rho()},
              {"e_lo", finite_or_null(r.interval.lo)},
              {"e_hi", finite_or_null(r.interval.hi)}};
}

GapRecord gap_record_from_json(const Json& j) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  GapRecord r;
  r.flux = RationalFlux(j.at("p").get<std::int64_t>(), j.at("q").get<std::int64_t>());
  r.j = j.at("j").get<std::int64_t>();
  r.label = {j.at("k").get<std::int64_t>(), j.at("central_closed").get<bool>()};
  r.interval = {number_or(j.at("e_lo"), -inf), number_or(j.at("e_hi"), inf)};
  return r;
}

Json to_json(const Spectrum& s) {
  Json bands = Json::array();
  for (const Band& b : s.bands()) bands.push_back(Json::array({b.lo, b.hi}));
  Json gaps = Json::array();
  for (const GapRecord& r : label_spectrum(s)) gaps.push_back(to_json(r));
  return Json{{"p", s.flux().p()}, {"q", s.flux().q()}, {"bands", bands}, {"gaps", gaps}};
}

Spectrum spectrum_from_json(const Json& j) {
  const RationalFlux flux(j.at("p").get<std::int64_t>(), j.at("q").get<std::int64_t>());
  std::vector<Band> bands;
  for (const Json& b : j.at("bands")) bands.push_back({b.at(0).get<double>(), b.at(1).get<double>()});
  return Spectrum(flux, std::move(bands));
}

Json sidecar_json(const Render& render) {
  Json columns = Json::array();
  for (const ColumnGeometry& c : render.columns) {
    if (!c.flux) continue;
    Json gaps = Json::array();
    for (const GapRecord& r : c.gaps) gaps.push_back(to_json(r));
    columns.push_back(Json{{"x", c.x}, {"p", c.flux->p()}, {"q", c.flux->q()}, {"gaps", gaps}});
  }
  return Json{{"columns", columns}};
}

Json to_json(const CoexistenceReport& report) {
  Json entries = Json::array();
  for (const CoexistenceEntry& e : report.entries) {
    Json row{{"n", e.n}, {"l", e.l}, {"p_n", e.p_n}, {"q_n", e.q_n}, {"label", e.label}};
    if (e.skipped) {
      row["dist"] = nullptr;
      row["bound"] = nullptr;
      row["pass"] = nullptr;
      row["skipped"] = true;
    } else {
      row["dist"] = e.dist;
      row["bound"] = e.bound;
      row["pass"] = e.pass;
    }
    entries.push_back(std::move(row));
  }
  return Json{{"point", Json{{"phi", report.point.phi}, {"e", report.point.energy}}},
              {"k", report.k},
              {"p", report.flux.p()},
              {"q", report.flux.q()},
              {"side", report.side == BoundarySide::Right ? "right" : "left"},
              {"entries", entries},
              {"monotone", report.monotone},
              {"pass", report.pass}};
}

Json to_json(const NonCoexistenceReport& r) {
  return Json{{"k", r.k},
              {"kprime", r.kprime},
              {"p", r.flux.p()},
              {"q", r.flux.q()},
              {"floor", r.floor},
              {"min_dist", finite_or_null(r.min_dist)},
              {"min_energy_dist", finite_or_null(r.min_energy_dist)},
              {"samples", r.samples},
              {"pass", r.pass}};
}

}  // namespace butterfly
