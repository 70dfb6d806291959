// Copyright 2026 The bohrcheck Authors
// SPDX-License-Identifier: Apache-2.0

#include "bohr/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "bohr/error.hpp"
#include "bohr/functionals.hpp"
#include "bohr/multidim.hpp"
#include "bohr/schur.hpp"

namespace bohr {

namespace {

using ordered_json = nlohmann::ordered_json;

enum class Kind {
  ThmB, LemmaD, ThmC, ThmC34, Thm31, Thm32, Cor33, Thm34, Thm41, Cor43,
  BombieriUpper, BBUpper, VecThm34, VecThm41, VecCor42, VecCor43, Lemma21,
};

struct KindName {
  Kind kind;
  const char* name;
};

constexpr KindName kKinds[] = {
    {Kind::ThmB, "ThmB"},           {Kind::LemmaD, "LemmaD"},
    {Kind::ThmC, "ThmC"},           {Kind::ThmC34, "ThmC34"},
    {Kind::Thm31, "Thm31"},         {Kind::Thm32, "Thm32"},
    {Kind::Cor33, "Cor33"},         {Kind::Thm34, "Thm34"},
    {Kind::Thm41, "Thm41"},         {Kind::Cor43, "Cor43"},
    {Kind::BombieriUpper, "BombieriUpper"}, {Kind::BBUpper, "BBUpper"},
    {Kind::VecThm34, "VecThm34"},   {Kind::VecThm41, "VecThm41"},
    {Kind::VecCor42, "VecCor42"},   {Kind::VecCor43, "VecCor43"},
    {Kind::Lemma21, "Lemma21"},
};

// Grid points stop this far below the radius.
constexpr double kRadiusGap = 1e-3;
// Sharpness scans run this far above it.
constexpr double kScanOffset = 0.01;
constexpr double kGridSlack = 1e-12;
// Per-direction seed stride (odd 64-bit constant).
constexpr std::uint64_t kDirectionStride = 0x9E3779B97F4A7C15ULL;

Kind parse_kind(std::string_view name) {
  for (const auto& entry : kKinds) {
    if (name == entry.name) return entry.kind;
  }
  raise(ErrorKind::UnknownTheorem, "unknown campaign theorem '" + std::string(name) + "'");
}

bool is_vector(Kind kind) {
  return kind == Kind::VecThm34 || kind == Kind::VecThm41 || kind == Kind::VecCor42 ||
         kind == Kind::VecCor43 || kind == Kind::Lemma21;
}

bool needs_odd_gap(Kind kind) {
  return kind == Kind::ThmC || kind == Kind::Thm41 || kind == Kind::Cor43 ||
         kind == Kind::VecThm41 || kind == Kind::VecCor43;
}

// The grid shapes a theorem admits; fixed-shape theorems run once.
std::vector<Shape> shapes_for(Kind kind, const std::vector<Shape>& grid) {
  switch (kind) {
    case Kind::ThmB:
    case Kind::Thm31:
    case Kind::Cor33:
    case Kind::BombieriUpper:
    case Kind::BBUpper:
      return {{0, 1}};
    case Kind::VecCor42:
      return {{1, 1}};
    default:
      break;
  }
  std::vector<Shape> out;
  for (Shape shape : grid) {
    if (kind == Kind::LemmaD) shape.m = 0;
    if (needs_odd_gap(kind) && shape.p % 2 == 0) continue;
    if (is_vector(kind) && shape.m < 1) continue;
    if (std::find(out.begin(), out.end(), shape) == out.end()) out.push_back(shape);
  }
  return out;
}

std::optional<RadiusSpec> radius_spec(Kind kind, Shape shape) {
  switch (kind) {
    case Kind::ThmC:
    case Kind::ThmC34:
    case Kind::Thm34:
    case Kind::Thm41:
    case Kind::VecThm34:
    case Kind::VecThm41:
      return RadiusSpec{RadiusId::ThmC34, shape.p, shape.m};
    case Kind::Thm32:
      return RadiusSpec{RadiusId::Thm32, shape.p, shape.m};
    case Kind::Cor33:
    case Kind::VecCor42:
      return RadiusSpec{RadiusId::Thm32, 1, 0};
    case Kind::Cor43:
    case Kind::VecCor43:
      return RadiusSpec{RadiusId::Cor43, shape.p, shape.m};
    default:
      return std::nullopt;
  }
}

std::optional<Theorem> scan_theorem(Kind kind) {
  switch (kind) {
    case Kind::Thm31: return Theorem::Thm31;
    case Kind::Thm32: return Theorem::Thm32;
    case Kind::Cor33: return Theorem::Cor33;
    case Kind::ThmC: return Theorem::ThmC;
    case Kind::ThmC34:
    case Kind::Thm34:
    case Kind::VecThm34: return Theorem::Thm34;
    case Kind::Thm41:
    case Kind::VecThm41: return Theorem::Thm41;
    case Kind::VecCor42: return Theorem::Cor42;
    case Kind::Cor43:
    case Kind::VecCor43: return Theorem::Cor43;
    default: return std::nullopt;
  }
}

Theorem vector_theorem(Kind kind) {
  switch (kind) {
    case Kind::VecThm34: return Theorem::Thm34;
    case Kind::VecThm41: return Theorem::Thm41;
    case Kind::VecCor42: return Theorem::Cor42;
    case Kind::VecCor43: return Theorem::Cor43;
    default: return Theorem::Lemma21;
  }
}

std::vector<double> radius_grid(const CampaignConfig& config, double lo, double hi,
                                bool open_low) {
  std::vector<double> grid;
  for (long i = 0;; ++i) {
    const double r = config.r_start + static_cast<double>(i) * config.r_step;
    if (r > hi + kGridSlack) break;
    if (r < lo - kGridSlack || (open_low && r <= lo)) continue;
    grid.push_back(r);
  }
  return grid;
}

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

double thm31_sample_radius(double a0, double s) {
  return *closed_form_radius(RadiusSpec{RadiusId::Thm31, 1, 0, a0, s});
}

struct Job {
  Kind kind;
  std::string name;
  Shape shape;
  std::optional<double> t;
};

class JobRunner {
 public:
  JobRunner(const CampaignConfig& config, Job job) : config_(config), job_(std::move(job)) {
    opts_.tolerance = config.tolerance;
    extras_["s"] = config.s;
  }

  ReportRow run() {
    ReportRow row;
    row.theorem = job_.name;
    row.p = job_.shape.p;
    row.m = job_.shape.m;
    row.t = job_.t;
    row.samples = config_.samples;

    double lo = config_.r_start;
    double hi = config_.r_stop;
    bool open_low = false;
    if (auto spec = radius_spec(job_.kind, job_.shape)) {
      row.radius = bisect_radius(*spec);
      row.radius_closed_form = closed_form_radius(*spec);
    } else if (job_.kind == Kind::Thm31) {
      row.radius = thm31_uniform_radius(config_.s);
      row.radius_closed_form = row.radius;
    }
    if (job_.kind == Kind::Thm31) {
      hi = std::min(hi, 0.5 - kRadiusGap);
    } else if (row.radius) {
      hi = std::min(hi, *row.radius - kRadiusGap);
    }
    if (job_.kind == Kind::BombieriUpper) {
      lo = std::max(lo, 1.0 / 3.0);
      hi = std::min(hi, std::numbers::sqrt2 / 2.0);
    } else if (job_.kind == Kind::BBUpper) {
      lo = std::max(lo, std::numbers::sqrt2 / 2.0);
      open_low = true;
    }
    grid_ = radius_grid(config_, lo, hi, open_low);
    row.grid_points = static_cast<int>(grid_.size());

    order_ = config_.order;
    if (!grid_.empty())
      order_ = std::max(order_, required_order(grid_.back(), opts_.truncation_tol));
    order_ = std::max(order_, static_cast<std::size_t>(2 * job_.shape.p + job_.shape.m));

    if (is_vector(job_.kind)) build_directions();

    if (!grid_.empty()) {
      double worst = std::numeric_limits<double>::infinity();
      for (int i = 0; i < config_.samples; ++i) worst = std::min(worst, sample_margin(i));
      if (std::isfinite(worst)) row.min_margin = worst;
    }

    if (auto id = scan_theorem(job_.kind); id && row.radius && *row.radius + kScanOffset < 1.0) {
      const auto a_grid = default_a_grid(config_.a_steps);
      row.sharpness_max = sharpness_scan(*id, job_.shape.p, job_.shape.m,
                                         *row.radius + kScanOffset, a_grid, extras_, opts_);
    }

    row.pass = (!row.min_margin || *row.min_margin >= -config_.tolerance) &&
               (!row.sharpness_max || *row.sharpness_max > 1.0);
    return row;
  }

 private:
  TruncatedSeries sample(int i, std::size_t offset, int p) const {
    const std::size_t up = static_cast<std::size_t>(p);
    const std::size_t inner = order_ > offset ? ceil_div(order_ - offset, up) : 0;
    const auto seed = config_.seed ^ static_cast<std::uint64_t>(i);
    return monomial_lift(sample_schur(seed, config_.depth, inner), static_cast<int>(offset), p);
  }

  void build_directions() {
    directions_.clear();
    const double t = *job_.t;
    directions_.push_back(Direction::basis(config_.dimension, 0, t));
    for (int d = 1; d <= config_.directions; ++d) {
      const auto seed = config_.seed ^ (kDirectionStride * static_cast<std::uint64_t>(d));
      directions_.push_back(Direction::random(seed, config_.dimension, t));
    }
  }

  double sample_margin(int i) const {
    const int m = job_.shape.m;
    const int p = job_.shape.p;
    double worst = std::numeric_limits<double>::infinity();
    auto each_r = [&](auto&& margin_at) {
      for (double r : grid_) worst = std::min(worst, margin_at(r));
    };

    switch (job_.kind) {
      case Kind::ThmB: {
        const auto profile = LacunaryProfile::from_series(sample(i, 0, 1), 0, 1);
        each_r([&](double r) { return refined_thmB(profile, r, opts_).margin; });
        break;
      }
      case Kind::LemmaD: {
        const auto profile = LacunaryProfile::from_series(sample(i, 0, p), 0, p);
        each_r([&](double r) {
          const auto checks = lemmaD_bounds(profile, r, opts_);
          return std::min(checks.odd.margin, checks.even.margin);
        });
        break;
      }
      case Kind::Thm31: {
        const auto profile = LacunaryProfile::from_series(sample(i, 0, 1), 0, 1);
        const double cutoff = thm31_sample_radius(profile.origin_value(), config_.s) - kRadiusGap;
        each_r([&](double r) {
          if (r > cutoff) return std::numeric_limits<double>::infinity();
          return evaluate_theorem(Theorem::Thm31, profile, r, extras_, opts_).margin;
        });
        break;
      }
      case Kind::Thm32:
      case Kind::Cor33: {
        const int mm = job_.kind == Kind::Cor33 ? 0 : m;
        const int pp = job_.kind == Kind::Cor33 ? 1 : p;
        const auto f = sample(i, static_cast<std::size_t>(pp + mm), pp);
        const auto profile = LacunaryProfile::from_series(f, mm, pp);
        each_r([&](double r) {
          return evaluate_theorem(Theorem::Thm32, profile, r, extras_, opts_).margin;
        });
        break;
      }
      case Kind::ThmC:
      case Kind::ThmC34:
      case Kind::Thm34:
      case Kind::Thm41:
      case Kind::Cor43:
      case Kind::BombieriUpper:
      case Kind::BBUpper: {
        const auto profile =
            LacunaryProfile::from_series(sample(i, static_cast<std::size_t>(m), p), m, p);
        std::vector<Theorem> ids;
        switch (job_.kind) {
          case Kind::ThmC: ids = {Theorem::ThmC}; break;
          case Kind::ThmC34:
            ids = {Theorem::Thm34};
            if (p % 2 == 1) ids.push_back(Theorem::ThmC);
            break;
          case Kind::Thm34: ids = {Theorem::Thm34}; break;
          case Kind::Thm41: ids = {Theorem::Thm41}; break;
          case Kind::Cor43: ids = {Theorem::Cor43}; break;
          case Kind::BombieriUpper: ids = {Theorem::BombieriUpper}; break;
          default: ids = {Theorem::BBUpper}; break;
        }
        each_r([&](double r) {
          double margin = std::numeric_limits<double>::infinity();
          for (auto id : ids)
            margin = std::min(margin, evaluate_theorem(id, profile, r, extras_, opts_).margin);
          return margin;
        });
        break;
      }
      default: {
        const auto& z0 = directions_[static_cast<std::size_t>(i) % directions_.size()];
        const double scale = lt_norm(z0.z0(), kInfiniteExponent);
        MapSpec map;
        map.kind = MapKind::GeneralZG;
        map.m = m;
        map.p = p;
        map.g = (1.0 / scale) * sample(i, static_cast<std::size_t>(m - 1), p);
        const auto slice = slice_from_direction(map, z0, order_);
        const auto id = vector_theorem(job_.kind);
        each_r([&](double r) { return vector_check(id, slice, r, opts_).margin; });
        break;
      }
    }
    return worst;
  }

  const CampaignConfig& config_;
  Job job_;
  EvalOptions opts_;
  Extras extras_;
  std::vector<double> grid_;
  std::size_t order_ = 0;
  std::vector<Direction> directions_;
};

std::string format_number(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

std::string format_optional(const std::optional<double>& x) {
  return x ? format_number(*x) : std::string();
}

ordered_json optional_json(const std::optional<double>& x) {
  if (!x) return nullptr;
  if (std::isinf(*x)) return *x > 0 ? "inf" : "-inf";
  return *x;
}

std::optional<double> optional_from_json(const nlohmann::json& j) {
  if (j.is_null()) return std::nullopt;
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    raise(ErrorKind::ParameterOutOfRange, "expected a number, got '" + s + "'");
  }
  return j.get<double>();
}

double exponent_from_json(const nlohmann::json& j) {
  auto t = optional_from_json(j);
  if (!t) raise(ErrorKind::ParameterOutOfRange, "t values must not be null");
  return *t;
}

}  // namespace

ReportFormat parse_report_format(std::string_view name) {
  if (name == "json") return ReportFormat::Json;
  if (name == "csv") return ReportFormat::Csv;
  raise(ErrorKind::ParameterOutOfRange, "unknown report format '" + std::string(name) + "'");
}

const std::vector<std::string>& campaign_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& entry : kKinds) out.emplace_back(entry.name);
    return out;
  }();
  return ids;
}

std::optional<RadiusId> radius_id_for(std::string_view id) {
  for (auto rid : {RadiusId::ThmC34, RadiusId::Thm31, RadiusId::Thm32, RadiusId::Cor43,
                   RadiusId::ClassicBohr, RadiusId::Alternating}) {
    if (to_string(rid) == id) return rid;
  }
  for (const auto& entry : kKinds) {
    if (id != entry.name) continue;
    if (entry.kind == Kind::Thm31) return RadiusId::Thm31;
    if (auto spec = radius_spec(entry.kind, Shape{0, 1})) return spec->id;
  }
  return std::nullopt;
}

void validate(const CampaignConfig& config) {
  for (const auto& name : config.theorems) parse_kind(name);
  for (const auto& shape : config.shapes) {
    if (shape.p < 1 || shape.m < 0 || shape.m > shape.p)
      raise(ErrorKind::ParameterOutOfRange, "shapes need p >= 1 and 0 <= m <= p");
  }
  for (double t : config.t_values) {
    if (!(t >= 1.0)) raise(ErrorKind::ParameterOutOfRange, "t values must be >= 1");
  }
  if (config.samples < 1) raise(ErrorKind::ParameterOutOfRange, "samples must be >= 1");
  if (!(config.r_step > 0.0)) raise(ErrorKind::ParameterOutOfRange, "r_step must be positive");
  if (!(config.r_start >= 0.0 && config.r_start <= config.r_stop))
    raise(ErrorKind::ParameterOutOfRange, "r grid needs 0 <= r_start <= r_stop");
  if (!(config.r_stop <= 0.99)) raise(ErrorKind::ParameterOutOfRange, "r_stop must be <= 0.99");
  if (!(config.tolerance >= 0.0)) raise(ErrorKind::ParameterOutOfRange, "tolerance must be >= 0");
  if (!(config.s > 0.0)) raise(ErrorKind::ParameterOutOfRange, "s must be positive");
  if (config.directions < 0) raise(ErrorKind::ParameterOutOfRange, "directions must be >= 0");
  if (config.dimension < 1) raise(ErrorKind::ParameterOutOfRange, "dimension must be >= 1");
  if (config.a_steps < 1) raise(ErrorKind::ParameterOutOfRange, "a_steps must be >= 1");
  if (config.order < 1) raise(ErrorKind::ParameterOutOfRange, "order must be >= 1");
}

CampaignConfig config_from_json(std::string_view text) {
  CampaignConfig config;
  try {
    const auto j = nlohmann::json::parse(text);
    if (!j.is_object()) raise(ErrorKind::ParameterOutOfRange, "config must be a JSON object");
    for (const auto& [key, value] : j.items()) {
      if (key == "theorems") {
        config.theorems = value.get<std::vector<std::string>>();
      } else if (key == "shapes") {
        config.shapes.clear();
        for (const auto& pair : value) {
          const auto mp = pair.get<std::vector<int>>();
          if (mp.size() != 2) raise(ErrorKind::ParameterOutOfRange, "shapes are [m, p] pairs");
          config.shapes.push_back(Shape{mp[0], mp[1]});
        }
      } else if (key == "t_values") {
        config.t_values.clear();
        for (const auto& t : value) config.t_values.push_back(exponent_from_json(t));
      } else if (key == "samples") {
        config.samples = value.get<int>();
      } else if (key == "seed") {
        config.seed = value.get<std::uint64_t>();
      } else if (key == "depth") {
        config.depth = value.get<std::size_t>();
      } else if (key == "order") {
        config.order = value.get<std::size_t>();
      } else if (key == "r_start") {
        config.r_start = value.get<double>();
      } else if (key == "r_stop") {
        config.r_stop = value.get<double>();
      } else if (key == "r_step") {
        config.r_step = value.get<double>();
      } else if (key == "tolerance") {
        config.tolerance = value.get<double>();
      } else if (key == "s") {
        config.s = value.get<double>();
      } else if (key == "directions") {
        config.directions = value.get<int>();
      } else if (key == "dimension") {
        config.dimension = value.get<std::size_t>();
      } else if (key == "a_steps") {
        config.a_steps = value.get<int>();
      } else if (key == "output") {
        config.output = value.get<std::string>();
      } else if (key == "format") {
        config.format = parse_report_format(value.get<std::string>());
      } else {
        raise(ErrorKind::ParameterOutOfRange, "unknown config key '" + key + "'");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    raise(ErrorKind::ParameterOutOfRange, std::string("bad config: ") + e.what());
  }
  validate(config);
  return config;
}

bool Report::passed() const {
  return std::all_of(rows.begin(), rows.end(), [](const ReportRow& row) { return row.pass; });
}

Report run_campaign(const CampaignConfig& config, std::ostream* progress) {
  validate(config);
  Report report;
  for (const auto& name : config.theorems) {
    const Kind kind = parse_kind(name);
    std::vector<std::optional<double>> ts{std::nullopt};
    if (is_vector(kind)) ts.assign(config.t_values.begin(), config.t_values.end());
    for (const Shape& shape : shapes_for(kind, config.shapes)) {
      for (const auto& t : ts) {
        try {
          auto row = JobRunner(config, Job{kind, name, shape, t}).run();
          if (progress) {
            *progress << name << " m=" << shape.m << " p=" << shape.p;
            if (t) *progress << " t=" << format_number(*t);
            *progress << ": " << (row.pass ? "pass" : "FAIL") << '\n';
          }
          report.rows.push_back(std::move(row));
        } catch (const Error& e) {
          raise(e.kind(), std::string(e.what()) + " [theorem=" + name + ", p=" +
                              std::to_string(shape.p) + ", m=" + std::to_string(shape.m) +
                              ", seed=" + std::to_string(config.seed) + "]");
        }
      }
    }
  }
  return report;
}

std::string format_report(const Report& report, ReportFormat format) {
  if (format == ReportFormat::Json) {
    auto out = ordered_json::array();
    for (const auto& row : report.rows) {
      ordered_json obj;
      obj["theorem"] = row.theorem;
      obj["p"] = row.p;
      obj["m"] = row.m;
      obj["t"] = optional_json(row.t);
      obj["radius"] = optional_json(row.radius);
      obj["radius_closed_form"] = optional_json(row.radius_closed_form);
      obj["samples"] = row.samples;
      obj["grid_points"] = row.grid_points;
      obj["min_margin"] = optional_json(row.min_margin);
      obj["sharpness_max"] = optional_json(row.sharpness_max);
      obj["pass"] = row.pass;
      out.push_back(std::move(obj));
    }
    return out.dump(2);
  }

  std::ostringstream os;
  os << "theorem,p,m,t,radius,radius_closed_form,samples,grid_points,min_margin,"
        "sharpness_max,pass\n";
  for (const auto& row : report.rows) {
    os << row.theorem << ',' << row.p << ',' << row.m << ',' << format_optional(row.t) << ','
       << format_optional(row.radius) << ',' << format_optional(row.radius_closed_form) << ','
       << row.samples << ',' << row.grid_points << ',' << format_optional(row.min_margin) << ','
       << format_optional(row.sharpness_max) << ',' << (row.pass ? "true" : "false") << '\n';
  }
  return os.str();
}

Report report_from_json(std::string_view text) {
  Report report;
  try {
    const auto j = nlohmann::json::parse(text);
    if (!j.is_array()) raise(ErrorKind::ParameterOutOfRange, "report must be a JSON array");
    for (const auto& obj : j) {
      ReportRow row;
      row.theorem = obj.at("theorem").get<std::string>();
      row.p = obj.at("p").get<int>();
      row.m = obj.at("m").get<int>();
      row.t = optional_from_json(obj.at("t"));
      row.radius = optional_from_json(obj.at("radius"));
      row.radius_closed_form = optional_from_json(obj.at("radius_closed_form"));
      row.samples = obj.at("samples").get<int>();
      row.grid_points = obj.at("grid_points").get<int>();
      row.min_margin = optional_from_json(obj.at("min_margin"));
      row.sharpness_max = optional_from_json(obj.at("sharpness_max"));
      row.pass = obj.at("pass").get<bool>();
      report.rows.push_back(std::move(row));
    }
  } catch (const nlohmann::json::exception& e) {
    raise(ErrorKind::ParameterOutOfRange, std::string("bad report: ") + e.what());
  }
  return report;
}

void emit_report(const Report& report, ReportFormat format, const std::string& path) {
  std::string text = format_report(report, format);
  if (format == ReportFormat::Json) text += '\n';
  std::ofstream out(path, std::ios::binary);
  if (!out) raise(ErrorKind::IoError, "cannot open '" + path + "' for writing");
  out << text;
  out.flush();
  if (!out) raise(ErrorKind::IoError, "failed writing '" + path + "'");
}

std::vector<RadiusTableRow> radius_table(RadiusId id, int p_max, double tol) {
  if (p_max < 1) raise(ErrorKind::ParameterOutOfRange, "p_max must be >= 1");
  std::vector<RadiusTableRow> rows;
  for (int p = 1; p <= p_max; ++p) {
    for (int m = 0; m <= p; ++m) {
      RadiusSpec spec{id, p, m};
      rows.push_back(RadiusTableRow{p, m, bisect_radius(spec, tol), closed_form_radius(spec)});
    }
  }
  return rows;
}

}  // namespace bohr
