#include "hopenergy/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hopenergy/errors.hpp"

namespace hopenergy {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

Field num(std::string name, double value) { return {std::move(name), value}; }
Field integer(std::string name, std::int64_t value) {
  return {std::move(name), value};
}
Field text(std::string name, std::string value) {
  return {std::move(name), std::move(value)};
}
Field flag(std::string name, bool value) { return {std::move(name), value}; }

std::string burst_mode_name(BurstMode mode) {
  return mode == BurstMode::kCompOpt ? "comp_opt" : "sum_opt";
}

std::vector<Field> scenario_echo(const ScenarioParams& params) {
  std::vector<Field> echo = {
      num("alpha", params.alpha),
      num("sigma2", params.noise_power),
      num("eta1", params.eta1),
      text("model", model_name(params.model)),
      text("network", network_name(params.network)),
  };
  if (const auto* linear = std::get_if<LinearComplexity>(&params.model)) {
    echo.push_back(num("snr_gap_db", linear->snr_gap_db));
  } else {
    const auto& exp = std::get<ExponentialComplexity>(params.model);
    echo.push_back(num("c1", exp.c1));
    echo.push_back(num("c2", exp.c2));
    echo.push_back(num("c3", exp.c3));
  }
  return echo;
}

// Evaluates f, mapping overflow to NaN and raising `overflowed`.
template <class F>
double guarded(F&& f, bool& overflowed) {
  try {
    return f();
  } catch (const OverflowError&) {
    overflowed = true;
    return kNaN;
  }
}

bool beyond_plot(double value) {
  return std::isnan(value) || value > kPaperPlotCeiling;
}

}  // namespace

std::vector<Field> SweepRecord::table_fields() const {
  std::vector<Field> fields = keys;
  fields.push_back(independent);
  fields.insert(fields.end(), outputs.begin(), outputs.end());
  return fields;
}

std::vector<Field> SweepRecord::all_fields() const {
  std::vector<Field> fields = table_fields();
  fields.insert(fields.end(), parameters.begin(), parameters.end());
  return fields;
}

const FieldValue* SweepRecord::find(std::string_view name) const {
  if (independent.name == name) return &independent.value;
  for (const auto* group : {&keys, &outputs, &parameters}) {
    for (const auto& field : *group) {
      if (field.name == name) return &field.value;
    }
  }
  return nullptr;
}

double SweepRecord::number(std::string_view name) const {
  const FieldValue* value = find(name);
  if (value == nullptr) {
    throw DomainError("record has no field '" + std::string(name) + "'");
  }
  if (const auto* d = std::get_if<double>(value)) return *d;
  if (const auto* i = std::get_if<std::int64_t>(value)) {
    return static_cast<double>(*i);
  }
  throw DomainError("field '" + std::string(name) + "' is not numeric");
}

std::vector<double> delta_grid(double start, double step) {
  if (!(start > 0.0) || start > 1.0 || !(step > 0.0)) {
    throw DomainError("delta grid needs start in (0, 1] and step > 0");
  }
  std::vector<double> grid;
  // Index-based so the points match start + k step exactly.
  for (long k = 0;; ++k) {
    const double value = start + static_cast<double>(k) * step;
    if (value > 1.0 + 1e-12) break;
    grid.push_back(std::min(value, 1.0));
  }
  return grid;
}

std::vector<double> reference_rate_grid() {
  std::vector<double> rates = {0.0001};
  for (int k = 1; k <= 14; ++k) rates.push_back(0.5 * k);
  return rates;
}

std::string model_name(const ComplexityModel& model) {
  return is_linear(model) ? "linear" : "exp";
}

std::string network_name(NetworkKind kind) {
  return kind == NetworkKind::kWireless ? "wireless" : "fixed";
}

std::vector<SweepRecord> reproduce_fig2(const std::vector<double>& alphas,
                                        int divisor, double reference_power) {
  if (alphas.empty()) throw DomainError("fig2: alpha list is empty");
  if (divisor < 1) throw DomainError("fig2: divisor must be >= 1");
  std::vector<SweepRecord> records;
  for (double alpha : alphas) {
    const double p0 = source_power(divisor - 1, alpha, reference_power);
    const auto powers = recursive_powers(
        p0, alpha, static_cast<std::size_t>(divisor) + 1);
    for (std::size_t node = 0; node < powers.size(); ++node) {
      records.push_back({
          "fig2",
          {num("alpha", alpha)},
          integer("node", static_cast<std::int64_t>(node)),
          {num("power_db", power_db(powers[node] / reference_power))},
          {integer("divisor", divisor), num("p_ref", reference_power)},
      });
    }
  }
  return records;
}

std::vector<SweepRecord> reproduce_fig3_fig4(
    const std::vector<int>& relay_counts, double reference_rate, double alpha,
    const std::vector<double>& delta_ts, const ComplexityModel& model) {
  ScenarioParams params;
  params.reference_rate = reference_rate;
  params.alpha = alpha;
  params.model = model;
  const double p_ref = params.reference_power();
  std::vector<SweepRecord> records;
  for (int n : relay_counts) {
    const PowerAllocation alloc = recursive_allocation(n, alpha, p_ref);
    for (double dt : delta_ts) {
      const BurstFactor burst(dt);
      bool overflow = false;
      const double exact = guarded(
          [&] { return e_tx_norm_exact(alloc, burst, p_ref, 1.0); }, overflow);
      const double fixed = guarded(
          [&] { return e_tx_norm_fixed(n, alpha, burst, p_ref, 1.0); },
          overflow);
      const double comp = guarded(
          [&] { return e_c_norm(n, burst, reference_rate, model); }, overflow);
      const bool clipped =
          beyond_plot(exact) || beyond_plot(fixed) || beyond_plot(comp);
      records.push_back({
          "fig3_fig4",
          {integer("relay_count", n)},
          num("delta_t", dt),
          {num("e_tx_exact", exact), num("e_tx_fixed", fixed),
           num("e_c_norm", comp), flag("overflow", overflow),
           flag("clipped_in_paper", clipped)},
          {num("reference_rate", reference_rate), num("alpha", alpha),
           num("sigma2", 1.0), num("p_ref", p_ref),
           text("model", model_name(model))},
      });
    }
  }
  return records;
}

std::vector<SweepRecord> tradeoff_records(const ScenarioParams& params,
                                          int n_first, int n_last) {
  const auto points = tradeoff_curve(params, n_first, n_last);
  const double dt =
      optimal_burst_factor_comp(params.reference_rate, params.model).value();
  std::vector<SweepRecord> records;
  for (const auto& point : points) {
    records.push_back({
        "tradeoff",
        {num("reference_rate", params.reference_rate),
         text("network", network_name(params.network))},
        integer("relay_count", point.relay_count),
        {num("e_tx_norm", point.e_tx_norm), num("e_c_norm", point.e_c_norm),
         num("delta_t", dt)},
        scenario_echo(params),
    });
  }
  return records;
}

std::vector<SweepRecord> reproduce_fig5(const std::vector<double>& rates,
                                        int n_first, int n_last, double alpha,
                                        const ComplexityModel& model) {
  std::vector<SweepRecord> records;
  for (double rate : rates) {
    for (NetworkKind kind : {NetworkKind::kWireless, NetworkKind::kFixed}) {
      ScenarioParams params;
      params.reference_rate = rate;
      params.alpha = alpha;
      params.model = model;
      params.network = kind;
      for (auto& record : tradeoff_records(params, n_first, n_last)) {
        record.scenario_id = "fig5";
        records.push_back(std::move(record));
      }
    }
  }
  return records;
}

SweepRecord optimization_record(const ScenarioParams& params, int n_max,
                                BurstMode mode) {
  const OptimizationResult result = optimal_relay_count(params, n_max, mode);
  auto echo = scenario_echo(params);
  echo.push_back(integer("n_max", n_max));
  echo.push_back(text("burst_mode", burst_mode_name(mode)));
  echo.push_back(integer("candidates_examined", result.candidates_examined));
  return {
      "optimize_n",
      {},
      num("reference_rate", params.reference_rate),
      {integer("best_n", result.best_n),
       num("e_sum_norm", result.breakdown.e_sum_norm),
       num("e_tx_norm", result.breakdown.e_tx_norm),
       num("e_c_norm", result.breakdown.e_c_norm),
       num("delta_t", result.best_delta_t), num("eta", result.breakdown.eta)},
      std::move(echo),
  };
}

std::vector<SweepRecord> reproduce_fig6(const Fig6Config& config) {
  std::vector<SweepRecord> records;
  for (double eta_db : config.eta1_db) {
    for (const auto& model : config.models) {
      for (NetworkKind kind : config.networks) {
        for (double rate : config.rates) {
          ScenarioParams params;
          params.reference_rate = rate;
          params.alpha = config.alpha;
          params.noise_power = config.noise_power;
          params.eta1 = std::pow(10.0, eta_db / 10.0);
          params.model = model;
          params.network = kind;
          SweepRecord record =
              optimization_record(params, config.n_max, config.burst_mode);
          record.scenario_id = "fig6";
          record.keys = {num("eta1_db", eta_db),
                         text("model", model_name(model)),
                         text("network", network_name(kind))};
          records.push_back(std::move(record));
        }
      }
    }
  }
  return records;
}

std::vector<SweepRecord> energy_sweep(const ScenarioParams& params,
                                      const std::vector<int>& relay_counts,
                                      const std::vector<double>& delta_ts) {
  std::vector<SweepRecord> records;
  auto echo = scenario_echo(params);
  echo.insert(echo.begin(), num("reference_rate", params.reference_rate));
  for (int n : relay_counts) {
    for (double dt : delta_ts) {
      const EnergyBreakdown b = evaluate_breakdown(n, BurstFactor(dt), params);
      records.push_back({
          "energy_sweep",
          {integer("relay_count", n)},
          num("delta_t", dt),
          {num("e_tx_norm", b.e_tx_norm), num("e_c_norm", b.e_c_norm),
           num("e_sum_norm", b.e_sum_norm), num("eta", b.eta)},
          echo,
      });
    }
  }
  return records;
}

std::vector<SweepRecord> power_assignment(int relay_count, double alpha,
                                          double reference_power,
                                          AllocationKind kind) {
  const PowerAllocation alloc =
      kind == AllocationKind::kRecursive
          ? recursive_allocation(relay_count, alpha, reference_power)
          : equal_allocation(relay_count, alpha, reference_power);
  const std::string kind_name =
      kind == AllocationKind::kRecursive ? "recursive" : "equal";
  std::vector<SweepRecord> records;
  for (std::size_t node = 0; node < alloc.powers.size(); ++node) {
    const double p = alloc.powers[node];
    records.push_back({
        "power_assign",
        {},
        integer("node", static_cast<std::int64_t>(node)),
        {num("power", p), num("power_db", power_db(p / reference_power))},
        {integer("relay_count", relay_count), num("alpha", alpha),
         num("p_ref", reference_power), text("kind", kind_name)},
    });
  }
  return records;
}

}  // namespace hopenergy
