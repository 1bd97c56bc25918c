#include "silence/io.hpp"

#include <charconv>
#include <type_traits>
#include <cmath>

namespace silence {

Density density_from_json(const nlohmann::json& config) {
  if (!config.is_object()) throw InvalidParameter("density config must be a JSON object");
  for (const auto& [key, value] : config.items()) {
    if (key != "kind" && key != "params") {
      throw InvalidParameter("unknown density config key '" + key + "'");
    }
  }
  auto kind = config.find("kind");
  if (kind == config.end() || !kind->is_string()) {
    throw InvalidParameter("density config needs a string 'kind'");
  }
  DensityParams params;
  if (auto p = config.find("params"); p != config.end()) {
    if (!p->is_object()) throw InvalidParameter("'params' must be an object");
    for (const auto& [name, value] : p->items()) {
      if (!value.is_number()) {
        throw InvalidParameter("parameter '" + name + "' must be a number");
      }
      params[name] = value.get<double>();
    }
  }
  return make_density(kind->get<std::string>(), params);
}

Density density_from_json_text(std::string_view text) {
  nlohmann::json config;
  try {
    config = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidParameter(std::string("malformed density JSON: ") + e.what());
  }
  return density_from_json(config);
}

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (value == 0.0) return "0";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 15);
  return std::string(buf, end);
}

namespace {

template <class... T>
void row(std::ostream& out, const T&... fields) {
  bool first = true;
  auto put = [&](const auto& f) {
    if (!first) out << ',';
    first = false;
    if constexpr (std::is_arithmetic_v<std::decay_t<decltype(f)>>) {
      out << format_number(static_cast<double>(f));
    } else {
      out << f;
    }
  };
  (put(fields), ...);
  out << '\n';
}

}  // namespace

void write_scan_csv(std::ostream& out, const std::vector<ScanEntry>& scan) {
  out << "a,b,mass,cond_mean,cond_median,midpoint,cond_variance,cond_mad\n";
  for (const ScanEntry& e : scan) {
    const ConditionalSummary& s = e.stats;
    row(out, s.interval.lo, s.interval.hi, s.mass, s.cond_mean, s.cond_median, s.midpoint,
        s.cond_variance, s.cond_mad);
  }
}

void write_trace_csv(std::ostream& out, const CenteringTrace& trace) {
  out << "iter,lo,hi,estimate,mass,cond_distortion\n";
  for (const SilenceDesign& s : trace.steps) {
    row(out, std::to_string(s.iterations), s.interval.lo, s.interval.hi, s.estimate, s.mass,
        s.cond_distortion);
  }
}

void write_family_csv(std::ostream& out, const FamilySweep& sweep) {
  out << "density,eta,family,lo,hi,cond_variance\n";
  std::size_t per_eta = kAllFamilies.size();
  for (std::size_t i = 0; i < sweep.rows.size(); ++i) {
    const FamilyRow& r = sweep.rows[i];
    if (r.interval) {
      row(out, sweep.density, r.eta, std::string(to_string(r.family)), r.interval->lo,
          r.interval->hi, *r.cond_variance);
    } else {
      row(out, sweep.density, r.eta, std::string(to_string(r.family)), "absent", "absent",
          "absent");
    }
    if ((i + 1) % per_eta == 0) {
      const SilenceDesign& opt = sweep.optimal[i / per_eta];
      row(out, sweep.density, r.eta, "optimal", opt.interval.lo, opt.interval.hi,
          opt.cond_distortion);
    }
  }
}

void write_curve_csv(std::ostream& out, const FamilySweep& sweep) {
  out << "density,eta,a,cond_variance\n";
  for (const CurvePoint& p : sweep.curves) row(out, sweep.density, p.eta, p.a, p.cond_variance);
}

void write_fig6_csv(std::ostream& out, const Fig6Curves& curves) {
  out << "source,k,rate,distortion\n";
  for (const auto* curve :
       {&curves.gauss_bound, &curves.exact_uniform, &curves.exact_gaussian, &curves.periodic}) {
    for (const RateDistortionPoint& p : *curve) {
      row(out, std::string(to_string(p.source)), p.k, p.rate, p.distortion);
    }
  }
}

nlohmann::json to_json(const SimReport& report) {
  return {{"n_ticks", report.n_ticks},
          {"seed", report.seed},
          {"empirical_rate", report.empirical_rate},
          {"empirical_mse", report.empirical_mse},
          {"empirical_mae", report.empirical_mae},
          {"standard_errors",
           {{"rate", report.standard_errors.rate},
            {"mse", report.standard_errors.mse},
            {"mae", report.standard_errors.mae}}}};
}

nlohmann::json to_json(const SilenceDesign& design) {
  return {{"lo", design.interval.lo},
          {"hi", design.interval.hi},
          {"estimate", design.estimate},
          {"mass", design.mass},
          {"distortion", to_string(design.distortion_kind)},
          {"cond_distortion", design.cond_distortion}};
}

}  // namespace silence
