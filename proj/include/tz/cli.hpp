#pragma once

/// Command-line front end: `count`, `render` and `verify`.
///
/// Exit codes: 0 success, 1 internal inconsistency or failed verification,
/// 2 bad arguments. JSON and tables go to `out`, diagnostics to `err`.

#include <fstream>
#include <iostream>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>

#include "tz/render.hpp"
#include "tz/report.hpp"

namespace tz::cli {

inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;
inline constexpr int kUsage = 2;

inline std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = text.find(sep, start);
    out.emplace_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

inline std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

/// "h,v,b" in any order; "" or "none" for no tangency.
inline std::vector<BoundaryEdge> parse_edges(std::string_view text) {
  std::vector<BoundaryEdge> out;
  const auto t = trim(text);
  if (t.empty() || t == "none") return out;
  for (const auto& tok : split(t, ',')) {
    const auto name = trim(tok);
    if (name == "h") out.push_back(BoundaryEdge::Hypotenuse);
    else if (name == "v") out.push_back(BoundaryEdge::Vertical);
    else if (name == "b") out.push_back(BoundaryEdge::Bottom);
    else throw std::invalid_argument("unknown edge '" + name + "', expected h, v or b");
  }
  return out;
}

inline int parse_int(std::string_view s) {
  const auto t = trim(s);
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(t, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (t.empty() || used != t.size()) throw std::invalid_argument("not an integer: '" + t + "'");
  return value;
}

/// "x,y;x,y" -> marked points, each assigned to the edge whose interior
/// contains it.
inline MarkedConfig parse_marked(int degree, std::string_view text) {
  const NewtonTriangle t(degree);
  std::vector<MarkedPoint> marked;
  const auto body = trim(text);
  if (!body.empty()) {
    for (const auto& tok : split(body, ';')) {
      const auto xy = split(trim(tok), ',');
      if (xy.size() != 2) throw std::invalid_argument("marked point '" + tok + "' is not of the form x,y");
      const LatticePoint p{parse_int(xy[0]), parse_int(xy[1])};
      bool placed = false;
      for (auto e : kAllEdges) {
        if (t.in_edge_interior(p, e)) {
          marked.push_back({e, p});
          placed = true;
          break;
        }
      }
      if (!placed) {
        std::ostringstream msg;
        msg << "marked point " << p << " is not interior to an edge of the degree " << degree
            << " triangle";
        throw std::invalid_argument(msg.str());
      }
    }
  }
  return MarkedConfig(degree, std::move(marked));
}

/// none | ronga | theorem | explicit "-+,++,..."
inline std::optional<SignSequence> resolve_signs(int degree, const std::vector<BoundaryEdge>& edges,
                                                 std::string_view choice) {
  const auto c = trim(choice);
  if (c.empty() || c == "none") return std::nullopt;
  if (c == "ronga") {
    if (edges.size() != 1) throw std::invalid_argument("--signs ronga needs exactly one edge");
    return ronga_sign_sequence(degree, edges.front());
  }
  if (c == "theorem") {
    if (edges.size() != 2) throw std::invalid_argument("--signs theorem needs exactly two edges");
    return theorem_sign_sequence(degree);
  }
  return parse_sign_sequence(c);
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zeuthen numbers from tropical lattice paths", "tz"};
  app.require_subcommand(1);

  int degree = 0;
  std::string edges_text;
  std::string signs_text = "none";
  bool per_path = false;
  auto* count = app.add_subcommand("count", "count curves through points tangent to lines");
  count->add_option("--degree", degree, "curve degree d >= 2")->required();
  count->add_option("--edges", edges_text, "tangency edges, comma list of h,v,b")->required();
  count->add_option("--signs", signs_text, "none, ronga, theorem or an explicit sequence like -+,++");
  count->add_flag("--per-path", per_path, "include paths and side multiplicities");

  std::string marked_text;
  std::string format = "svg";
  std::string out_file;
  int scale = 60;
  auto* render_cmd = app.add_subcommand("render", "draw a maximal path and its subdivision");
  render_cmd->add_option("--degree", degree, "curve degree d >= 2")->required();
  render_cmd->add_option("--marked", marked_text, "marked points \"x,y;x,y\"");
  render_cmd->add_option("--format", format, "svg or ascii")->check(CLI::IsMember({"svg", "ascii"}));
  render_cmd->add_option("--out", out_file, "output file (default: standard output)");
  render_cmd->add_option("--scale", scale, "pixels per lattice unit (svg)")->check(CLI::PositiveNumber);

  int max_degree = 8;
  auto* verify = app.add_subcommand("verify", "check the one- and two-line counts for d = 2..D");
  verify->add_option("--max-degree", max_degree, "largest degree D")->check(CLI::Range(2, 64));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "tz: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (count->parsed()) {
      const auto edges = parse_edges(edges_text);
      const auto signs = resolve_signs(degree, edges, signs_text);
      const auto report = signs ? real_count(degree, edges, *signs) : complex_count(degree, edges);
      out << to_json(report, per_path).dump(2) << '\n';
      return kOk;
    }
    if (render_cmd->parsed()) {
      const PathPicture pic(parse_marked(degree, marked_text));
      RenderSpec spec;
      spec.format = format == "ascii" ? RenderFormat::Ascii : RenderFormat::Svg;
      spec.scale = scale;
      const auto text = render(pic, spec);
      if (out_file.empty()) {
        out << text;
      } else {
        std::ofstream file(out_file, std::ios::binary);
        if (!file) {
          err << "tz: cannot write " << out_file << '\n';
          return kFailure;
        }
        file << text;
      }
      return kOk;
    }
    if (verify->parsed()) {
      out << kVerifyHeader << '\n';
      for (int d = 2; d <= max_degree; ++d) {
        const auto row = verify_row(d);
        out << to_csv(row) << '\n';
        if (!row.ok()) {
          err << "tz: mismatch at degree " << d << ": " << to_csv(row) << '\n';
          return kFailure;
        }
      }
      return kOk;
    }
  } catch (const InconsistencyError& e) {
    err << "tz: internal inconsistency: " << e.what() << '\n';
    return kFailure;
  } catch (const std::invalid_argument& e) {
    err << "tz: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "tz: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

inline int run(int argc, char** argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  return run(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

}  // namespace tz::cli
