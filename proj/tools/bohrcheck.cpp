// Copyright 2026 The bohrcheck Authors
// SPDX-License-Identifier: Apache-2.0
//
// bohrcheck: radii, certification campaigns and sharpness scans from the
// command line. Exit status 0 on pass, 1 on failure, 2 on usage errors.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bohr/error.hpp"
#include "bohr/functionals.hpp"
#include "bohr/harness.hpp"
#include "bohr/multidim.hpp"
#include "bohr/radius.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

bool is_usage_error(bohr::ErrorKind kind) {
  switch (kind) {
    case bohr::ErrorKind::UnknownTheorem:
    case bohr::ErrorKind::ParameterOutOfRange:
    case bohr::ErrorKind::ShapeMismatch:
    case bohr::ErrorKind::OddGapRequired:
    case bohr::ErrorKind::RadiusOutOfRange:
    case bohr::ErrorKind::RadiusOutOfWindow:
    case bohr::ErrorKind::ToleranceTooSmall:
      return true;
    default:
      return false;
  }
}

bohr::RadiusId radius_id_or_throw(const std::string& name) {
  auto id = bohr::radius_id_for(name);
  if (!id) bohr::raise(bohr::ErrorKind::UnknownTheorem, "no radius equation for '" + name + "'");
  return *id;
}

struct RadiusArgs {
  std::string theorem;
  int p = 1;
  int m = 0;
  double a0 = 0.0;
  double s = 1.0;
  double tol = bohr::kDefaultRadiusTolerance;
};

int run_radius(const RadiusArgs& args) {
  bohr::RadiusSpec spec{radius_id_or_throw(args.theorem), args.p, args.m, args.a0, args.s};
  const double radius = bohr::solve_radius(spec, args.tol);
  std::cout << fmt(radius) << '\n';
  return kExitPass;
}

struct VerifyArgs {
  std::string config_path;
  std::vector<std::string> theorems;
  std::vector<std::string> shapes;
  std::vector<std::string> t_values;
  int samples = 100;
  std::uint64_t seed = 1;
  double r_start = 0.0;
  double r_stop = 0.95;
  double r_step = 0.005;
  double tolerance = 1e-9;
  double s = 1.0;
  std::string output;
  std::string format = "json";
};

bohr::CampaignConfig config_from_args(const VerifyArgs& args) {
  bohr::CampaignConfig config;
  config.theorems = args.theorems;
  if (!args.shapes.empty()) {
    config.shapes.clear();
    for (const auto& text : args.shapes) {
      bohr::Shape shape;
      char comma = 0;
      std::istringstream in(text);
      if (!(in >> shape.m >> comma >> shape.p) || comma != ',' || !in.eof())
        bohr::raise(bohr::ErrorKind::ParameterOutOfRange, "shapes are written m,p");
      config.shapes.push_back(shape);
    }
  }
  if (!args.t_values.empty()) {
    config.t_values.clear();
    for (const auto& text : args.t_values)
      config.t_values.push_back(text == "inf" ? bohr::kInfiniteExponent : std::stod(text));
  }
  config.samples = args.samples;
  config.seed = args.seed;
  config.r_start = args.r_start;
  config.r_stop = args.r_stop;
  config.r_step = args.r_step;
  config.tolerance = args.tolerance;
  config.s = args.s;
  config.output = args.output;
  config.format = bohr::parse_report_format(args.format);
  return config;
}

int run_verify(const VerifyArgs& args) {
  bohr::CampaignConfig config;
  if (!args.config_path.empty()) {
    std::ifstream in(args.config_path);
    if (!in) bohr::raise(bohr::ErrorKind::ParameterOutOfRange,
                         "cannot read config '" + args.config_path + "'");
    std::stringstream text;
    text << in.rdbuf();
    config = bohr::config_from_json(text.str());
  } else {
    config = config_from_args(args);
  }
  const auto report = bohr::run_campaign(config, &std::cerr);
  if (config.output.empty()) {
    std::cout << bohr::format_report(report, config.format);
    if (config.format == bohr::ReportFormat::Json) std::cout << '\n';
  } else {
    bohr::emit_report(report, config.format, config.output);
  }
  return report.passed() ? kExitPass : kExitFail;
}

struct SharpnessArgs {
  std::string theorem;
  int p = 1;
  int m = 0;
  double r = 0.5;
  int a_steps = 2000;
  double s = 1.0;
};

int run_sharpness(const SharpnessArgs& args) {
  const auto id = bohr::parse_theorem(args.theorem);
  const auto grid = bohr::default_a_grid(args.a_steps);
  const double best = bohr::sharpness_scan(id, args.p, args.m, args.r, grid, {{"s", args.s}});
  std::cout << fmt(best) << '\n';
  return best > 1.0 ? kExitPass : kExitFail;
}

struct TableArgs {
  std::string theorem;
  int p_max = 3;
  std::string format = "text";
};

int run_table(const TableArgs& args) {
  const auto rows = bohr::radius_table(radius_id_or_throw(args.theorem), args.p_max);
  if (args.format == "json") {
    auto out = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
      nlohmann::ordered_json obj;
      obj["p"] = row.p;
      obj["m"] = row.m;
      obj["radius"] = row.radius;
      obj["radius_closed_form"] = row.closed_form ? nlohmann::ordered_json(*row.closed_form)
                                                  : nlohmann::ordered_json(nullptr);
      out.push_back(std::move(obj));
    }
    std::cout << out.dump(2) << '\n';
  } else if (args.format == "csv") {
    std::cout << "p,m,radius,radius_closed_form\n";
    for (const auto& row : rows) {
      std::cout << row.p << ',' << row.m << ',' << fmt(row.radius) << ','
                << (row.closed_form ? fmt(*row.closed_form) : "") << '\n';
    }
  } else if (args.format == "text") {
    for (const auto& row : rows) {
      std::printf("p=%-3d m=%-3d %.15g\n", row.p, row.m, row.radius);
    }
  } else {
    bohr::raise(bohr::ErrorKind::ParameterOutOfRange, "table format is text, csv or json");
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bohr-type inequality checker"};
  app.require_subcommand(1);

  RadiusArgs radius;
  auto* radius_cmd = app.add_subcommand("radius", "Solve a sharp-radius equation");
  radius_cmd->add_option("--theorem", radius.theorem, "Radius id or campaign id")->required();
  radius_cmd->add_option("--p", radius.p, "Gap p");
  radius_cmd->add_option("--m", radius.m, "Offset m");
  radius_cmd->add_option("--a0", radius.a0, "|f(0)| for Thm31");
  radius_cmd->add_option("--s", radius.s, "Exponent s for Thm31");
  radius_cmd->add_option("--tol", radius.tol, "Bisection tolerance");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run a certification campaign");
  verify_cmd->add_option("--config", verify.config_path, "Campaign config (flat JSON)");
  verify_cmd->add_option("--theorem", verify.theorems, "Campaign ids");
  verify_cmd->add_option("--shape", verify.shapes, "Shapes as m,p");
  verify_cmd->add_option("--t", verify.t_values, "l_t exponents (inf for the polydisk)");
  verify_cmd->add_option("--samples", verify.samples);
  verify_cmd->add_option("--seed", verify.seed);
  verify_cmd->add_option("--r-start", verify.r_start);
  verify_cmd->add_option("--r-stop", verify.r_stop);
  verify_cmd->add_option("--r-step", verify.r_step);
  verify_cmd->add_option("--tolerance", verify.tolerance);
  verify_cmd->add_option("--s", verify.s);
  verify_cmd->add_option("--output", verify.output, "Report path; stdout when omitted");
  verify_cmd->add_option("--format", verify.format, "json or csv");

  SharpnessArgs sharp;
  auto* sharp_cmd = app.add_subcommand("sharpness", "Max extremal lhs over the a-grid");
  sharp_cmd->add_option("--theorem", sharp.theorem)->required();
  sharp_cmd->add_option("--p", sharp.p);
  sharp_cmd->add_option("--m", sharp.m);
  sharp_cmd->add_option("--r", sharp.r)->required();
  sharp_cmd->add_option("--a-steps", sharp.a_steps);
  sharp_cmd->add_option("--s", sharp.s);

  TableArgs table;
  auto* table_cmd = app.add_subcommand("table", "Radii over the (p,m) triangle");
  table_cmd->add_option("--theorem", table.theorem)->required();
  table_cmd->add_option("--p-max", table.p_max);
  table_cmd->add_option("--format", table.format, "text, csv or json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*radius_cmd) return run_radius(radius);
    if (*verify_cmd) return run_verify(verify);
    if (*sharp_cmd) return run_sharpness(sharp);
    return run_table(table);
  } catch (const bohr::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return is_usage_error(e.kind()) ? kExitUsage : kExitFail;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
