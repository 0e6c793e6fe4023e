#include "hopenergy/cli.hpp"

#include <CLI11.hpp>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>

#include "hopenergy/errors.hpp"

namespace hopenergy::cli {

namespace {

using nlohmann::ordered_json;

struct CommonOptions {
  double alpha = 3.0;
  double sigma2 = 1.0;
  std::optional<double> pref;
  std::optional<double> rref;
  double eta1_db = 0.0;
  std::string model = "exp";
  double snr_gap_db = 5.0;
  std::string network = "wireless";
  int nmax = kDefaultMaxRelays;
  std::string format = "csv";
  std::string out_path;
  int precision = kDefaultCsvPrecision;
};

void add_common(CLI::App& app, CommonOptions& opts) {
  app.add_option("--alpha", opts.alpha, "Path loss exponent")
      ->capture_default_str();
  app.add_option("--sigma2", opts.sigma2, "Noise power (linear)")
      ->capture_default_str();
  auto* pref = app.add_option("--pref", opts.pref,
                              "Reference power (linear, default 1)");
  auto* rref =
      app.add_option("--rref", opts.rref, "Reference rate in bits/symbol");
  pref->excludes(rref);
  rref->excludes(pref);
  app.add_option("--eta1-db", opts.eta1_db,
                 "Computation/transmission energy ratio at R_ref = 1, in dB")
      ->capture_default_str();
  app.add_option("--model", opts.model, "Complexity model")
      ->check(CLI::IsMember({"exp", "linear"}))
      ->capture_default_str();
  app.add_option("--snr-gap-db", opts.snr_gap_db,
                 "SNR gap of the linear model in dB")
      ->capture_default_str();
  app.add_option("--network", opts.network, "Network kind")
      ->check(CLI::IsMember({"wireless", "fixed"}))
      ->capture_default_str();
  app.add_option("--nmax", opts.nmax, "Largest relay count searched")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  app.add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--out", opts.out_path, "Output file (default stdout)");
  app.add_option("--precision", opts.precision,
                 "Significant digits in CSV output")
      ->check(CLI::Range(6, 17))
      ->capture_default_str();
}

double reference_power(const CommonOptions& opts) {
  if (opts.rref) return opts.sigma2 * required_snr(*opts.rref);
  return opts.pref.value_or(1.0);
}

double reference_rate(const CommonOptions& opts) {
  if (opts.rref) return *opts.rref;
  if (!(opts.sigma2 > 0.0)) throw DomainError("--sigma2 must be > 0");
  return capacity(opts.pref.value_or(1.0) / opts.sigma2);
}

ComplexityModel make_model(const CommonOptions& opts) {
  if (opts.model == "linear") return LinearComplexity{opts.snr_gap_db};
  return ExponentialComplexity{};
}

ScenarioParams make_params(const CommonOptions& opts) {
  ScenarioParams params;
  params.reference_rate = reference_rate(opts);
  params.alpha = opts.alpha;
  params.noise_power = opts.sigma2;
  params.eta1 = std::pow(10.0, opts.eta1_db / 10.0);
  params.model = make_model(opts);
  params.network =
      opts.network == "fixed" ? NetworkKind::kFixed : NetworkKind::kWireless;
  validate(params.model);
  return params;
}

void emit(const std::vector<SweepRecord>& records, const CommonOptions& opts,
          std::ostream& out, bool single_object = false) {
  std::ofstream file;
  std::ostream* sink = &out;
  if (!opts.out_path.empty()) {
    file.open(opts.out_path, std::ios::binary);
    if (!file) throw DomainError("cannot open output file " + opts.out_path);
    sink = &file;
  }
  if (opts.format == "json") {
    const ordered_json doc = single_object && records.size() == 1
                                 ? record_to_json(records.front())
                                 : records_to_json(records);
    *sink << doc.dump(2) << '\n';
  } else {
    write_csv(records, *sink, opts.precision);
  }
}

std::vector<double> parse_alpha_list(const std::vector<double>& alphas) {
  if (alphas.empty()) throw DomainError("--alphas must not be empty");
  return alphas;
}

}  // namespace

std::string format_number(double value, int precision) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  std::array<char, 64> buffer{};
  const auto [end, ec] =
      std::to_chars(buffer.data(), buffer.data() + buffer.size(), value,
                    std::chars_format::general, precision);
  if (ec != std::errc()) throw NumericalError("number formatting failed");
  return std::string(buffer.data(), end);
}

namespace {

std::string format_value(const FieldValue& value, int precision) {
  return std::visit(
      [&](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) {
          return format_number(v, precision);
        } else if constexpr (std::is_same_v<T, bool>) {
          return v ? "true" : "false";
        } else if constexpr (std::is_same_v<T, std::string>) {
          return v;
        } else {
          return std::to_string(v);
        }
      },
      value);
}

ordered_json value_to_json(const FieldValue& value) {
  return std::visit(
      [](const auto& v) -> ordered_json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) {
          if (!std::isfinite(v)) return nullptr;
        }
        return v;
      },
      value);
}

}  // namespace

void write_csv(const std::vector<SweepRecord>& records, std::ostream& out,
               int precision) {
  if (records.empty()) return;
  const auto header = records.front().table_fields();
  for (std::size_t i = 0; i < header.size(); ++i) {
    out << (i ? "," : "") << header[i].name;
  }
  out << '\n';
  for (const auto& record : records) {
    const auto fields = record.table_fields();
    for (std::size_t i = 0; i < fields.size(); ++i) {
      out << (i ? "," : "") << format_value(fields[i].value, precision);
    }
    out << '\n';
  }
}

ordered_json record_to_json(const SweepRecord& record) {
  ordered_json obj;
  obj["scenario_id"] = record.scenario_id;
  for (const auto& field : record.all_fields()) {
    obj[field.name] = value_to_json(field.value);
  }
  return obj;
}

ordered_json records_to_json(const std::vector<SweepRecord>& records) {
  ordered_json arr = ordered_json::array();
  for (const auto& record : records) arr.push_back(record_to_json(record));
  return arr;
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Transmission/computation energy of multi-hop DF networks",
               "hopenergy"};
  app.require_subcommand(1);

  CommonOptions opts;

  auto* power = app.add_subcommand("power-assign", "Per-node transmit powers");
  add_common(*power, opts);
  int power_n = 4;
  std::string power_kind = "recursive";
  power->add_option("--n", power_n, "Relay count")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  power->add_option("--kind", power_kind, "Allocation kind")
      ->check(CLI::IsMember({"recursive", "equal"}))
      ->capture_default_str();

  auto* sweep =
      app.add_subcommand("energy-sweep", "Energy breakdown over N and delta_t");
  add_common(*sweep, opts);
  std::vector<int> sweep_n = {0, 1};
  std::vector<double> sweep_dt;
  double dt_start = 0.0001;
  double dt_step = 0.01;
  sweep->add_option("--n", sweep_n, "Relay counts")->delimiter(',');
  sweep->add_option("--delta-t", sweep_dt, "Burst factors (overrides grid)")
      ->delimiter(',');
  sweep->add_option("--delta-start", dt_start, "Grid start")
      ->capture_default_str();
  sweep->add_option("--delta-step", dt_step, "Grid step")
      ->capture_default_str();

  auto* tradeoff =
      app.add_subcommand("tradeoff", "Transmission/computation tradeoff curve");
  add_common(*tradeoff, opts);
  int n_first = 1;
  int n_last = 30;
  tradeoff->add_option("--n-min", n_first, "First relay count")
      ->capture_default_str();
  tradeoff->add_option("--n-max", n_last, "Last relay count")
      ->capture_default_str();

  auto* optimize =
      app.add_subcommand("optimize-n", "Relay count minimizing the sum energy");
  add_common(*optimize, opts);
  std::string burst_mode = "comp_opt";
  optimize->add_option("--burst-mode", burst_mode, "Burst factor choice")
      ->check(CLI::IsMember({"comp_opt", "sum_opt"}))
      ->capture_default_str();

  auto* reproduce = app.add_subcommand("reproduce", "Figure sweeps");
  add_common(*reproduce, opts);
  std::string figure;
  int divisor = 5;
  std::vector<double> alphas = {3.0, 4.0, 5.0};
  reproduce->add_option("figure", figure, "fig2 | fig3 | fig4 | fig5 | fig6")
      ->required()
      ->check(CLI::IsMember({"fig2", "fig3", "fig4", "fig5", "fig6"}));
  reproduce->add_option("--divisor", divisor, "fig2: N+1 of the source power")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  reproduce->add_option("--alphas", alphas, "fig2: path loss exponents")
      ->delimiter(',');

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kExitUsage;
  }

  try {
    if (*power) {
      emit(power_assignment(power_n, opts.alpha, reference_power(opts),
                            power_kind == "equal" ? AllocationKind::kEqual
                                                  : AllocationKind::kRecursive),
           opts, out);
    } else if (*sweep) {
      const ScenarioParams params = make_params(opts);
      const auto grid =
          sweep_dt.empty() ? delta_grid(dt_start, dt_step) : sweep_dt;
      emit(energy_sweep(params, sweep_n, grid), opts, out);
    } else if (*tradeoff) {
      emit(tradeoff_records(make_params(opts), n_first, n_last), opts, out);
    } else if (*optimize) {
      const auto mode =
          burst_mode == "sum_opt" ? BurstMode::kSumOpt : BurstMode::kCompOpt;
      emit({optimization_record(make_params(opts), opts.nmax, mode)}, opts,
           out, /*single_object=*/true);
    } else if (*reproduce) {
      std::vector<SweepRecord> records;
      if (figure == "fig2") {
        records = reproduce_fig2(parse_alpha_list(alphas), divisor,
                                 reference_power(opts));
      } else if (figure == "fig3" || figure == "fig4") {
        const ScenarioParams params = make_params(opts);
        records = reproduce_fig3_fig4({0, 1}, params.reference_rate,
                                      params.alpha, delta_grid(0.0001, 0.01),
                                      params.model);
      } else if (figure == "fig5") {
        records = reproduce_fig5({0.1, 2.0}, 1, 30, opts.alpha);
      } else {
        Fig6Config config;
        config.alpha = opts.alpha;
        config.noise_power = opts.sigma2;
        config.n_max = opts.nmax;
        config.models = {ExponentialComplexity{},
                         LinearComplexity{opts.snr_gap_db}};
        records = reproduce_fig6(config);
      }
      emit(records, opts, out);
    }
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const DomainError& e) {
    err << "invalid argument: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace hopenergy::cli
