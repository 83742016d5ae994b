#ifndef MIXEDTORI_REPORT_HPP
#define MIXEDTORI_REPORT_HPP

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "mixedtori/analysis.hpp"
#include "mixedtori/criteria.hpp"

namespace mixedtori {

using Json = nlohmann::json;

/// x rounded to 12 significant digits, so that shortest round-trip printing
/// never shows more than 12.
inline double round12(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

namespace detail {

inline Json point_json(const LatticePoint& p) { return Json::array({p.x, p.y}); }

inline Json complex_json(Complex z) { return Json::array({round12(z.real()), round12(z.imag())}); }

inline Json config_json(const Config& c) {
  return {{"tol_zero", c.tol_zero},
          {"tol_unit", c.tol_unit},
          {"tol_residual", c.tol_residual},
          {"tol_vanish", c.tol_vanish},
          {"tol_inconclusive", c.tol_inconclusive},
          {"tol_root", c.tol_root},
          {"tol_sign", c.tol_sign},
          {"tol_degenerate", c.tol_degenerate},
          {"grid", c.grid},
          {"angle_samples", c.angle_samples},
          {"max_angle_rejections", c.max_angle_rejections},
          {"oracle_samples", c.oracle_samples},
          {"oracle_samples_max", c.oracle_samples_max},
          {"spot_check_angles", c.spot_check_angles},
          {"companion_max_degree", c.companion_max_degree}};
}

inline Json error_json(const ErrorRecord& e) {
  Json j = {{"kind", std::string(to_string(e.kind))}, {"message", e.message}};
  if (e.position) j["position"] = *e.position;
  if (!e.expected.empty()) j["expected"] = e.expected;
  if (e.vertex) j["vertex"] = *e.vertex;
  if (e.angle) j["angle"] = round12(*e.angle);
  if (!e.side.empty()) j["side"] = e.side;
  return j;
}

inline Json hypotheses_json(const HypothesisReport& h) {
  Json vertices = Json::array();
  for (const auto& vc : h.vertices) {
    Json v = {{"index", vc.index},
              {"vertex", point_json(vc.vertex)},
              {"status", std::string(to_string(vc.status))},
              {"min_modulus", round12(vc.min_modulus)}};
    if (vc.witness) v["witness"] = {{"phi", round12(vc.witness->first)}, {"t", round12(vc.witness->second)}};
    vertices.push_back(v);
  }
  Json faces = Json::array();
  for (const auto& fc : h.faces) {
    Json f = {{"index", fc.index},
              {"status", std::string(to_string(fc.status))},
              {"zeros_examined", fc.zeros_examined}};
    if (fc.witness) f["witness"] = {{"u", complex_json(fc.witness->first)}, {"t", round12(fc.witness->second)}};
    faces.push_back(f);
  }
  return {{"convenient", h.convenient},
          {"gamma_nice", h.gamma_nice},
          {"nondegeneracy", h.nondegeneracy_asserted ? "asserted (spot-checked)" : "violated"},
          {"vertices", vertices},
          {"faces", faces}};
}

inline Json entries_json(const std::vector<TableEntry>& entries) {
  Json out = Json::array();
  for (const auto& e : entries) {
    Json angles = Json::array();
    for (double a : e.angles) angles.push_back(round12(a));
    out.push_back({{"ms", e.ms},
                   {"method", std::string(to_string(e.method))},
                   {"angles", angles},
                   {"rejected", e.rejected}});
  }
  return out;
}

inline Json outcome_json(const CriterionOutcome& o) {
  Json evidence = Json::array();
  for (const auto& w : o.evidence) {
    Json ineqs = Json::array();
    for (const auto& q : w.inequalities) {
      ineqs.push_back({{"quantity", q.quantity.name()}, {"value", q.value}, {"bound", q.bound}});
    }
    evidence.push_back({{"torus", w.torus}, {"inequalities", ineqs}});
  }
  Json j = {{"id", std::string(to_string(o.id))},
            {"fired", o.fired},
            {"essential_tori", Json(std::vector<int>(o.essential_tori.begin(), o.essential_tori.end()))},
            {"evidence", evidence},
            {"caveats", o.caveats}};
  if (!o.reason.empty()) j["reason"] = o.reason;
  return j;
}

inline Json verdict_json(const Verdict& v) {
  Json tori = Json::object();
  for (const auto& [i, e] : v.tori) tori[std::to_string(i)] = std::string(to_string(e));
  Json outcomes = Json::array();
  for (const auto& o : v.outcomes) outcomes.push_back(outcome_json(o));
  return {{"tori", tori},
          {"non_hyperbolic", v.non_hyperbolic ? "yes" : "unknown"},
          {"reducible_or_toroidal", v.reducible_or_toroidal ? "yes" : "unknown"},
          {"criteria", outcomes},
          {"caveats", v.caveats}};
}

}  // namespace detail

/// The structured report as a JSON value (keys sorted by construction).
inline Json report_json(const Analysis& a) {
  Json j;
  j["schema"] = kSchema;
  j["version"] = kVersion;
  j["input"] = {{"text", a.input}};
  if (a.poly) j["input"]["normalized"] = to_string(*a.poly);
  j["config"] = detail::config_json(a.cfg);
  j["exit_code"] = exit_code(a);

  Json support = Json::array();
  for (const auto& p : a.support_points) support.push_back(detail::point_json(p));
  j["support"] = support;

  if (a.boundary) {
    Json vertices = Json::array();
    for (const auto& v : a.boundary->vertices) vertices.push_back(detail::point_json(v));
    Json faces = Json::array();
    for (std::size_t k = 0; k < a.boundary->faces.size(); ++k) {
      const auto& f = a.boundary->faces[k];
      Json pts = Json::array();
      for (const auto& p : f.points) pts.push_back(detail::point_json(p));
      const auto [w1, w2] = f.normal();
      faces.push_back({{"index", k + 1}, {"left", detail::point_json(f.left)},
                       {"right", detail::point_json(f.right)}, {"points", pts},
                       {"normal", Json::array({w1, w2})}});
    }
    j["boundary"] = {{"vertices", vertices}, {"faces", faces}, {"convenient", is_convenient(*a.boundary)}};
  } else {
    j["boundary"] = nullptr;
  }

  j["hypotheses"] = a.hypotheses ? detail::hypotheses_json(*a.hypotheses) : Json(nullptr);
  if (a.table) {
    j["table"] = {{"ms_t", a.table->ms_t},
                  {"ms_phi", a.table->ms_phi},
                  {"t_entries", detail::entries_json(a.table->t_entries)},
                  {"phi_entries", detail::entries_json(a.table->phi_entries)}};
  } else {
    j["table"] = nullptr;
  }
  if (a.profile) {
    const auto& p = *a.profile;
    j["winding"] = {{"w", p.w},
                    {"wprime", p.wprime},
                    {"w_in", p.w_in},
                    {"w_out", p.w_out},
                    {"certified_nonempty",
                     std::vector<int>(p.certified_nonempty.begin(), p.certified_nonempty.end())}};
  } else {
    j["winding"] = nullptr;
  }
  j["verdict"] = a.verdict ? detail::verdict_json(*a.verdict) : Json(nullptr);
  j["error"] = a.error ? detail::error_json(*a.error) : Json(nullptr);
  return j;
}

inline std::string structured_report(const Analysis& a) { return report_json(a).dump(2) + "\n"; }

namespace detail {

template <class T>
std::string join(const std::vector<T>& xs, std::string_view sep = ", ") {
  std::ostringstream os;
  for (std::size_t k = 0; k < xs.size(); ++k) os << (k ? sep : "") << xs[k];
  return os.str();
}

inline std::string point_str(const LatticePoint& p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

}  // namespace detail

/// Human-readable summary.
inline std::string text_report(const Analysis& a) {
  std::ostringstream os;
  os << "mixedtori " << kVersion << "\n";
  os << "input:       " << a.input << "\n";
  if (a.poly) os << "normalized:  " << to_string(*a.poly) << "\n";
  if (a.boundary) {
    const auto& b = *a.boundary;
    std::vector<std::string> vs;
    for (const auto& v : b.vertices) vs.push_back(detail::point_str(v));
    os << "vertices:    " << detail::join(vs) << "\n";
    os << "faces:       N = " << b.face_count() << "\n";
    for (std::size_t k = 0; k < b.faces.size(); ++k) {
      std::vector<std::string> ps;
      for (const auto& p : b.faces[k].points) ps.push_back(detail::point_str(p));
      os << "  face " << k + 1 << ": " << detail::join(ps, " ") << "\n";
    }
  }
  if (a.hypotheses) {
    const auto& h = *a.hypotheses;
    os << "hypotheses:\n";
    for (const auto& vc : h.vertices) {
      os << "  vertex " << vc.index << " " << detail::point_str(vc.vertex) << ": " << to_string(vc.status);
      if (vc.witness) os << " (zero near phi=" << vc.witness->first << ", t=" << vc.witness->second << ")";
      os << "\n";
    }
    for (const auto& fc : h.faces) {
      os << "  face " << fc.index << ": " << to_string(fc.status) << " (" << fc.zeros_examined
         << " zeros examined)\n";
    }
  }
  if (a.table) {
    os << "ms_t:        [" << detail::join(a.table->ms_t) << "]\n";
    os << "ms_phi:      [" << detail::join(a.table->ms_phi) << "]\n";
  }
  if (a.profile) {
    os << "w:           [" << detail::join(a.profile->w) << "]\n";
    os << "w':          [" << detail::join(a.profile->wprime) << "]\n";
    const std::vector<int> I(a.profile->certified_nonempty.begin(), a.profile->certified_nonempty.end());
    os << "certified I: {" << detail::join(I) << "}\n";
  }
  if (a.verdict) {
    const auto& v = *a.verdict;
    os << "criteria:\n";
    for (const auto& o : v.outcomes) {
      os << "  " << to_string(o.id) << ": " << (o.fired ? "fired" : "not fired");
      if (!o.reason.empty()) os << " (" << o.reason << ")";
      os << "\n";
      for (const auto& w : o.evidence) {
        std::vector<std::string> qs;
        for (const auto& q : w.inequalities) qs.push_back(q.str());
        os << "    " << (w.torus > 0 ? "torus " + std::to_string(w.torus) + ": " : "") << detail::join(qs, "; ")
           << "\n";
      }
    }
    os << "verdict:\n";
    if (v.tori.empty()) os << "  no internal tori\n";
    for (const auto& [i, e] : v.tori) os << "  torus " << i << ": " << to_string(e) << "\n";
    os << "  non-hyperbolic: " << (v.non_hyperbolic ? "yes" : "unknown") << "\n";
    os << "  reducible or toroidal: " << (v.reducible_or_toroidal ? "yes" : "unknown") << "\n";
    for (const auto& c : v.caveats) os << "  caveat: " << c << "\n";
  }
  if (a.error) {
    os << "error: " << to_string(a.error->kind) << ": " << a.error->message << "\n";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Newton polygon figure

/// SVG of the support, the boundary chain and the shaded region above it.
inline std::string render_polygon_svg(const NewtonBoundary& b, const PointSet& support_points) {
  constexpr int unit = 40, margin = 40;
  std::int64_t max_x = 1, max_y = 1;
  for (const auto& p : support_points) {
    max_x = std::max(max_x, p.x);
    max_y = std::max(max_y, p.y);
  }
  max_x += 1;
  max_y += 1;
  const std::int64_t width = 2 * margin + unit * max_x;
  const std::int64_t height = 2 * margin + unit * max_y;
  auto sx = [&](std::int64_t x) { return margin + unit * x; };
  auto sy = [&](std::int64_t y) { return height - margin - unit * y; };
  auto pt = [&](std::int64_t x, std::int64_t y) { return std::to_string(sx(x)) + "," + std::to_string(sy(y)); };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\""
     << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";

  if (!b.vertices.empty()) {
    os << "<polygon class=\"gamma-plus\" fill=\"#dde6f3\" stroke=\"none\" points=\"";
    os << pt(b.vertices.front().x, max_y);
    for (const auto& v : b.vertices) os << " " << pt(v.x, v.y);
    os << " " << pt(max_x, b.vertices.back().y) << " " << pt(max_x, max_y) << "\"/>\n";
  }

  os << "<line class=\"axis\" x1=\"" << sx(0) << "\" y1=\"" << sy(0) << "\" x2=\"" << sx(max_x)
     << "\" y2=\"" << sy(0) << "\" stroke=\"black\"/>\n";
  os << "<line class=\"axis\" x1=\"" << sx(0) << "\" y1=\"" << sy(0) << "\" x2=\"" << sx(0)
     << "\" y2=\"" << sy(max_y) << "\" stroke=\"black\"/>\n";
  for (std::int64_t x = 1; x < max_x; ++x) {
    os << "<text class=\"tick\" x=\"" << sx(x) << "\" y=\"" << sy(0) + 16
       << "\" font-size=\"11\" text-anchor=\"middle\">" << x << "</text>\n";
  }
  for (std::int64_t y = 1; y < max_y; ++y) {
    os << "<text class=\"tick\" x=\"" << sx(0) - 8 << "\" y=\"" << sy(y) + 4
       << "\" font-size=\"11\" text-anchor=\"end\">" << y << "</text>\n";
  }

  if (b.vertices.size() >= 2) {
    os << "<polyline class=\"boundary\" fill=\"none\" stroke=\"#1f4e99\" stroke-width=\"2\" points=\"";
    for (std::size_t k = 0; k < b.vertices.size(); ++k) os << (k ? " " : "") << pt(b.vertices[k].x, b.vertices[k].y);
    os << "\"/>\n";
  }

  for (const auto& p : support_points) {
    os << "<circle class=\"support\" cx=\"" << sx(p.x) << "\" cy=\"" << sy(p.y) << "\" r=\"4\" fill=\"black\"/>\n";
  }

  for (std::size_t k = 0; k < b.faces.size(); ++k) {
    const auto& f = b.faces[k];
    const std::int64_t mx = (sx(f.left.x) + sx(f.right.x)) / 2 + 8;
    const std::int64_t my = (sy(f.left.y) + sy(f.right.y)) / 2 + 14;
    os << "<text class=\"face-label\" x=\"" << mx << "\" y=\"" << my << "\" font-size=\"13\">Δ"
       << "<tspan baseline-shift=\"super\" font-size=\"9\">1</tspan>"
       << "<tspan baseline-shift=\"sub\" font-size=\"9\">" << k + 1 << "</tspan></text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Nested link spec documents
//
//   n=<int>
//   wrap=<int> winding=<int> knot=<bool> trivial=<bool|unknown>
//   ...
//
// Blank lines and lines starting with '#' are ignored. knot defaults to true
// and trivial to unknown.

namespace detail {

inline Error spec_error(int line, const std::string& msg) {
  return Error(ErrorKind::InvalidSpec, "line " + std::to_string(line) + ": " + msg);
}

inline int spec_int(const std::string& v, int line) {
  char* end = nullptr;
  const long x = std::strtol(v.c_str(), &end, 10);
  if (v.empty() || *end != '\0') throw spec_error(line, "expected an integer, got '" + v + "'");
  return static_cast<int>(x);
}

inline bool spec_bool(const std::string& v, int line) {
  if (v == "true") return true;
  if (v == "false") return false;
  throw spec_error(line, "expected true or false, got '" + v + "'");
}

}  // namespace detail

inline NestedLinkSpec parse_nested_spec(std::string_view text) {
  NestedLinkSpec spec;
  bool have_n = false;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream tokens(line);
    std::string tok;
    if (!(tokens >> tok) || tok[0] == '#') continue;
    if (!have_n) {
      if (tok.rfind("n=", 0) != 0) throw detail::spec_error(lineno, "expected n=<int> first");
      spec.n = detail::spec_int(tok.substr(2), lineno);
      have_n = true;
      if (tokens >> tok) throw detail::spec_error(lineno, "unexpected '" + tok + "'");
      continue;
    }
    NestedComponent c;
    bool have_wrap = false, have_winding = false;
    do {
      const auto eq = tok.find('=');
      if (eq == std::string::npos) throw detail::spec_error(lineno, "expected key=value, got '" + tok + "'");
      const std::string key = tok.substr(0, eq), value = tok.substr(eq + 1);
      if (key == "wrap") {
        c.wrap = detail::spec_int(value, lineno);
        have_wrap = true;
      } else if (key == "winding") {
        c.winding = detail::spec_int(value, lineno);
        have_winding = true;
      } else if (key == "knot") {
        c.is_knot = detail::spec_bool(value, lineno);
      } else if (key == "trivial") {
        if (value != "unknown") c.is_trivial_knot = detail::spec_bool(value, lineno);
      } else {
        throw detail::spec_error(lineno, "unknown key '" + key + "'");
      }
    } while (tokens >> tok);
    if (!have_wrap || !have_winding) throw detail::spec_error(lineno, "wrap and winding are required");
    spec.components.push_back(c);
  }
  if (!have_n) throw Error(ErrorKind::InvalidSpec, "missing n=<int>");
  validate(spec);
  return spec;
}

}  // namespace mixedtori

#endif  // MIXEDTORI_REPORT_HPP
