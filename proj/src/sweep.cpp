#include "rainbowdkp/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "rainbowdkp/errors.hpp"
#include "rainbowdkp/wavefunction.hpp"

namespace rdkp {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

std::string fmt_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string fmt_short(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(trim(item));
  return out;
}

double parse_real(const std::string& key, const std::string& s) {
  try {
    size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("config: field '" + key + "': bad real value '" + s + "'");
  }
}

int parse_int(const std::string& key, const std::string& s) {
  try {
    size_t pos = 0;
    const int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("config: field '" + key + "': bad integer value '" + s + "'");
  }
}

std::vector<double> omega_values(const SweepConfig& cfg) {
  std::vector<double> w(cfg.omega_steps);
  if (cfg.omega_steps == 1) {
    w[0] = cfg.omega_min;
    return w;
  }
  if (cfg.omega_scale == OmegaScale::Linear) {
    const double step = (cfg.omega_max - cfg.omega_min) / (cfg.omega_steps - 1);
    for (int i = 0; i < cfg.omega_steps; ++i) w[i] = cfg.omega_min + i * step;
  } else {
    const double lmin = std::log(cfg.omega_min);
    const double step = (std::log(cfg.omega_max) - lmin) / (cfg.omega_steps - 1);
    for (int i = 0; i < cfg.omega_steps; ++i) w[i] = std::exp(lmin + i * step);
  }
  w.back() = cfg.omega_max;
  return w;
}

std::vector<Branch> branch_list(BranchSelection sel) {
  switch (sel) {
    case BranchSelection::Both: return {Branch::Minus, Branch::Plus};
    case BranchSelection::PlusOnly: return {Branch::Plus};
    case BranchSelection::MinusOnly: return {Branch::Minus};
  }
  return {};
}

// Head tuple = everything but omega and branch, in input order.
struct Head {
  double epsilon, alpha, mass;
  int n, m;
};

std::vector<Head> head_tuples(const SweepConfig& cfg) {
  std::vector<Head> heads;
  for (double eps : cfg.epsilon)
    for (double a : cfg.alpha)
      for (double M : cfg.mass_ratio)
        for (int n : cfg.n)
          for (int m : cfg.m) heads.push_back(Head{eps, a, M, n, m});
  return heads;
}

std::string series_label(const SweepConfig& cfg, const Head& h, Branch b, bool with_branch,
                         double omega = kNan) {
  std::string label;
  const auto add = [&label](const std::string& part) {
    if (!label.empty()) label += " ";
    label += part;
  };
  if (cfg.epsilon.size() > 1) add("eps=" + fmt_short(h.epsilon));
  if (cfg.alpha.size() > 1) add("alpha=" + fmt_short(h.alpha));
  if (cfg.mass_ratio.size() > 1) add("M=" + fmt_short(h.mass));
  if (cfg.n.size() > 1) add("n=" + std::to_string(h.n));
  if (cfg.m.size() > 1) add("m=" + std::to_string(h.m));
  if (!std::isnan(omega) && cfg.omega_steps > 1) add("omega=" + fmt_short(omega));
  if (with_branch) add(branch_name(b));
  if (label.empty()) label = "series";
  return label;
}

void check_self_consistency(Scenario s, const ModelParams& p, const QuantumNumbers& q,
                            double energy) {
  const double target = kappa_sq_target(p, q);
  const double kappa = kappa_sq_at(s, p, energy);
  if (std::fabs(kappa - target) > 1e-10 * std::max(1.0, std::fabs(target)))
    throw Error("sweep: emitted energy violates the kappa^2 self-consistency invariant "
                "(kappa^2 = " + fmt_real(kappa) + ", target = " + fmt_real(target) + ")");
}

void parallel_for(int jobs, int threads, const std::function<void(int)>& body) {
  if (threads == 0) threads = static_cast<int>(std::thread::hardware_concurrency());
  if (threads < 1) threads = 1;
  threads = std::min(threads, jobs);
  if (threads <= 1) {
    for (int i = 0; i < jobs; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (;;) {
        const int i = next.fetch_add(1);
        if (i >= jobs) return;
        try {
          body(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
          return;
        }
      }
    });
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace

void validate(const SweepConfig& cfg) {
  if (cfg.epsilon.empty()) throw ConfigError("config: field 'epsilon' must not be empty");
  if (cfg.alpha.empty()) throw ConfigError("config: field 'alpha' must not be empty");
  if (cfg.mass_ratio.empty()) throw ConfigError("config: field 'mass_ratio' must not be empty");
  if (cfg.n.empty()) throw ConfigError("config: field 'n' must not be empty");
  if (cfg.m.empty()) throw ConfigError("config: field 'm' must not be empty");
  for (double e : cfg.epsilon)
    if (!(e >= 0.0)) throw ConfigError("config: field 'epsilon' must be >= 0");
  for (double a : cfg.alpha)
    if (!(a > 0.0 && a <= 1.0)) throw ConfigError("config: field 'alpha' must be in (0,1]");
  for (double M : cfg.mass_ratio)
    if (!(M > 0.0)) throw ConfigError("config: field 'mass_ratio' must be > 0");
  for (int n : cfg.n)
    if (n < 0) throw ConfigError("config: field 'n' must be >= 0");
  if (cfg.omega_steps < 1) throw ConfigError("config: field 'omega_steps' must be >= 1");
  if (!(cfg.omega_min > 0.0)) throw ConfigError("config: field 'omega_min' must be > 0");
  if (!(cfg.omega_max >= cfg.omega_min))
    throw ConfigError("config: field 'omega_max' must be >= omega_min");
  if (cfg.omega_steps > 1 && !(cfg.omega_max > cfg.omega_min))
    throw ConfigError("config: fields 'omega_min'/'omega_max' give an empty range");
  if (cfg.profile_points < 64)
    throw ConfigError("config: profile resolution must be at least 64 points");
}

SweepConfig parse_config(const std::string& text) {
  SweepConfig cfg;
  std::map<std::string, bool> seen;
  bool have_scenario = false, have_min = false, have_max = false, have_steps = false,
       have_output = false;

  std::stringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config line " + std::to_string(lineno) + ": expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (value.empty())
      throw ConfigError("config: field '" + key + "': empty value");
    if (seen[key]) throw ConfigError("config: duplicate key '" + key + "'");
    seen[key] = true;

    if (key == "scenario") {
      cfg.scenario = scenario_from_name(value);
      have_scenario = true;
    } else if (key == "epsilon") {
      cfg.epsilon.clear();
      for (const auto& v : split_list(value)) cfg.epsilon.push_back(parse_real(key, v));
    } else if (key == "alpha") {
      cfg.alpha.clear();
      for (const auto& v : split_list(value)) cfg.alpha.push_back(parse_real(key, v));
    } else if (key == "mass_ratio") {
      cfg.mass_ratio.clear();
      for (const auto& v : split_list(value)) cfg.mass_ratio.push_back(parse_real(key, v));
    } else if (key == "omega_min") {
      cfg.omega_min = parse_real(key, value);
      have_min = true;
    } else if (key == "omega_max") {
      cfg.omega_max = parse_real(key, value);
      have_max = true;
    } else if (key == "omega_steps") {
      cfg.omega_steps = parse_int(key, value);
      have_steps = true;
    } else if (key == "omega_scale") {
      if (value == "linear")
        cfg.omega_scale = OmegaScale::Linear;
      else if (value == "log")
        cfg.omega_scale = OmegaScale::Log;
      else
        throw ConfigError("config: field 'omega_scale' must be linear or log, got '" + value +
                          "'");
    } else if (key == "n") {
      cfg.n.clear();
      for (const auto& v : split_list(value)) cfg.n.push_back(parse_int(key, v));
    } else if (key == "m") {
      cfg.m.clear();
      for (const auto& v : split_list(value)) cfg.m.push_back(parse_int(key, v));
    } else if (key == "output") {
      if (value == "energies")
        cfg.output = SweepOutput::Energies;
      else if (value == "gap")
        cfg.output = SweepOutput::Gap;
      else if (value == "current-profile")
        cfg.output = SweepOutput::CurrentProfile;
      else
        throw ConfigError("config: field 'output' must be energies, gap or current-profile, "
                          "got '" + value + "'");
      have_output = true;
    } else {
      throw ConfigError("config: unknown key '" + key + "'");
    }
  }
  if (!have_scenario) throw ConfigError("config: missing required key 'scenario'");
  if (!have_min) throw ConfigError("config: missing required key 'omega_min'");
  if (!have_max) throw ConfigError("config: missing required key 'omega_max'");
  if (!have_steps) throw ConfigError("config: missing required key 'omega_steps'");
  if (!have_output) throw ConfigError("config: missing required key 'output'");

  // file-level range rules
  if (cfg.omega_steps < 2) throw ConfigError("config: field 'omega_steps' must be >= 2");
  if (!(cfg.omega_max > cfg.omega_min))
    throw ConfigError("config: fields 'omega_min'/'omega_max' give an empty range");
  if (cfg.omega_scale == OmegaScale::Log && !(cfg.omega_min > 0.0))
    throw ConfigError("config: field 'omega_min' must be > 0 for log scale");

  cfg.branches = cfg.output == SweepOutput::CurrentProfile ? BranchSelection::PlusOnly
                                                           : BranchSelection::Both;
  validate(cfg);
  return cfg;
}

SweepConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

SweepResult run_sweep(const SweepConfig& cfg, int threads) {
  validate(cfg);
  const std::vector<double> omegas = omega_values(cfg);
  const std::vector<Head> heads = head_tuples(cfg);
  const std::vector<Branch> branches = branch_list(cfg.branches);

  SweepResult out;
  out.title = std::string(scenario_name(cfg.scenario)) + " sweep";

  const auto make_params = [&](const Head& h, double w) {
    return ModelParams{h.mass, w, h.epsilon, h.alpha};
  };

  if (cfg.output == SweepOutput::Energies) {
    out.table.columns = {"scenario", "n", "m", "alpha", "epsilon",
                         "mass_ratio", "omega_ratio", "branch", "energy_ratio", "physical"};
    out.x_label = "omega/E_P";
    out.y_label = "E/E_P";
    const int nb = static_cast<int>(branches.size());
    const int nw = static_cast<int>(omegas.size());
    const int jobs = static_cast<int>(heads.size()) * nw * nb;
    std::vector<SpectrumResult> results(jobs);
    parallel_for(jobs, threads, [&](int idx) {
      const int bi = idx % nb;
      const int wi = (idx / nb) % nw;
      const int hi = idx / (nb * nw);
      results[idx] = energy_closed(cfg.scenario, make_params(heads[hi], omegas[wi]),
                                   QuantumNumbers{heads[hi].n, heads[hi].m}, branches[bi]);
    });
    // series per (head, branch), rows in input order
    std::map<std::pair<int, int>, int> series_index;
    int idx = 0;
    for (size_t hi = 0; hi < heads.size(); ++hi)
      for (size_t wi = 0; wi < omegas.size(); ++wi)
        for (size_t bi = 0; bi < branches.size(); ++bi, ++idx) {
          const Head& h = heads[hi];
          const SpectrumResult& res = results[idx];
          if (res.physical)
            check_self_consistency(cfg.scenario, make_params(h, omegas[wi]),
                                   QuantumNumbers{h.n, h.m}, res.energy_ratio);
          std::vector<Field> row;
          row.emplace_back(std::string(scenario_name(cfg.scenario)));
          row.emplace_back(static_cast<long>(h.n));
          row.emplace_back(static_cast<long>(h.m));
          row.emplace_back(h.alpha);
          row.emplace_back(h.epsilon);
          row.emplace_back(h.mass);
          row.emplace_back(omegas[wi]);
          row.emplace_back(std::string(branch_name(branches[bi])));
          if (res.physical)
            row.emplace_back(res.energy_ratio);
          else
            row.emplace_back(std::monostate{});
          row.emplace_back(res.physical);
          out.table.rows.push_back(std::move(row));

          const auto key = std::make_pair(static_cast<int>(hi), static_cast<int>(bi));
          auto it = series_index.find(key);
          if (it == series_index.end()) {
            it = series_index.emplace(key, static_cast<int>(out.series.size())).first;
            out.series.push_back(Series{series_label(cfg, h, branches[bi], true), {}});
          }
          out.series[it->second].points.emplace_back(
              omegas[wi], res.physical ? res.energy_ratio : kNan);
        }
    return out;
  }

  if (cfg.output == SweepOutput::Gap) {
    out.table.columns = {"scenario", "n", "m", "alpha", "epsilon",
                         "mass_ratio", "omega_ratio", "gap_width", "physical"};
    out.x_label = "omega/E_P";
    out.y_label = "(E_plus - E_minus)/E_P";
    const int nw = static_cast<int>(omegas.size());
    const int jobs = static_cast<int>(heads.size()) * nw;
    std::vector<std::pair<SpectrumResult, SpectrumResult>> results(jobs);
    parallel_for(jobs, threads, [&](int idx) {
      const int wi = idx % nw;
      const int hi = idx / nw;
      const ModelParams p = make_params(heads[hi], omegas[wi]);
      const QuantumNumbers q{heads[hi].n, heads[hi].m};
      results[idx] = {energy_closed(cfg.scenario, p, q, Branch::Plus),
                      energy_closed(cfg.scenario, p, q, Branch::Minus)};
    });
    int idx = 0;
    for (size_t hi = 0; hi < heads.size(); ++hi) {
      out.series.push_back(Series{series_label(cfg, heads[hi], Branch::Plus, false), {}});
      for (size_t wi = 0; wi < omegas.size(); ++wi, ++idx) {
        const Head& h = heads[hi];
        const auto& [ep, em] = results[idx];
        const bool physical = ep.physical && em.physical;
        const double gap = physical ? ep.energy_ratio - em.energy_ratio : kNan;
        std::vector<Field> row;
        row.emplace_back(std::string(scenario_name(cfg.scenario)));
        row.emplace_back(static_cast<long>(h.n));
        row.emplace_back(static_cast<long>(h.m));
        row.emplace_back(h.alpha);
        row.emplace_back(h.epsilon);
        row.emplace_back(h.mass);
        row.emplace_back(omegas[wi]);
        if (physical)
          row.emplace_back(gap);
        else
          row.emplace_back(std::monostate{});
        row.emplace_back(physical);
        out.table.rows.push_back(std::move(row));
        out.series.back().points.emplace_back(omegas[wi], gap);
      }
    }
    return out;
  }

  // current profile
  out.table.columns = {"scenario", "n", "m", "alpha", "epsilon",
                       "mass_ratio", "omega_ratio", "branch", "r", "jt"};
  out.x_label = "r [1/E_P]";
  out.y_label = "J^t";
  const Branch branch = branches.front();
  const int nw = static_cast<int>(omegas.size());
  const int jobs = static_cast<int>(heads.size()) * nw;
  std::vector<std::vector<std::pair<double, double>>> profiles(jobs);
  parallel_for(jobs, threads, [&](int idx) {
    const int wi = idx % nw;
    const int hi = idx / nw;
    const ModelParams p = make_params(heads[hi], omegas[wi]);
    const QuantumNumbers q{heads[hi].n, heads[hi].m};
    const SpectrumResult e = energy_closed(cfg.scenario, p, q, branch);
    if (!e.physical)
      throw UnphysicalError("current-profile: state unphysical at omega = " +
                            fmt_short(omegas[wi]));
    check_self_consistency(cfg.scenario, p, q, e.energy_ratio);
    const RadialGrid grid(default_r_max(p, q), cfg.profile_points);
    const DKPSpinor spinor = build_spinor(p, q, e, grid, cfg.scenario);
    auto& prof = profiles[idx];
    prof.reserve(grid.points);
    for (int i = 1; i <= grid.points; ++i) {
      const double r = grid.node(i);
      prof.emplace_back(r, current_jt(spinor, r));
    }
  });
  int idx = 0;
  for (size_t hi = 0; hi < heads.size(); ++hi)
    for (size_t wi = 0; wi < omegas.size(); ++wi, ++idx) {
      const Head& h = heads[hi];
      out.series.push_back(
          Series{series_label(cfg, h, branch, false, omegas[wi]), profiles[idx]});
      for (const auto& [r, jt] : profiles[idx]) {
        std::vector<Field> row;
        row.emplace_back(std::string(scenario_name(cfg.scenario)));
        row.emplace_back(static_cast<long>(h.n));
        row.emplace_back(static_cast<long>(h.m));
        row.emplace_back(h.alpha);
        row.emplace_back(h.epsilon);
        row.emplace_back(h.mass);
        row.emplace_back(omegas[wi]);
        row.emplace_back(std::string(branch_name(branch)));
        row.emplace_back(r);
        row.emplace_back(jt);
        out.table.rows.push_back(std::move(row));
      }
    }
  return out;
}

namespace {

std::string field_to_csv(const Field& f) {
  if (std::holds_alternative<std::monostate>(f)) return "";
  if (const auto* s = std::get_if<std::string>(&f)) return *s;
  if (const auto* i = std::get_if<long>(&f)) return std::to_string(*i);
  if (const auto* d = std::get_if<double>(&f)) return fmt_real(*d);
  return std::get<bool>(f) ? "true" : "false";
}

nlohmann::ordered_json table_to_json(const Table& table) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj;
    for (size_t c = 0; c < table.columns.size(); ++c) {
      const Field& f = row[c];
      if (std::holds_alternative<std::monostate>(f))
        obj[table.columns[c]] = nullptr;
      else if (const auto* s = std::get_if<std::string>(&f))
        obj[table.columns[c]] = *s;
      else if (const auto* i = std::get_if<long>(&f))
        obj[table.columns[c]] = *i;
      else if (const auto* d = std::get_if<double>(&f))
        obj[table.columns[c]] = *d;
      else
        obj[table.columns[c]] = std::get<bool>(f);
    }
    arr.push_back(std::move(obj));
  }
  return arr;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw IoError("write failed for '" + path + "'");
}

}  // namespace

std::string table_to_csv(const Table& table) {
  std::string text;
  for (size_t c = 0; c < table.columns.size(); ++c) {
    if (c) text += ',';
    text += table.columns[c];
  }
  text += '\n';
  for (const auto& row : table.rows) {
    for (size_t c = 0; c < row.size(); ++c) {
      if (c) text += ',';
      text += field_to_csv(row[c]);
    }
    text += '\n';
  }
  return text;
}

std::string table_to_json_text(const Table& table) { return table_to_json(table).dump(1) + "\n"; }

void emit_csv(const Table& table, const std::string& path) {
  write_text_file(path, table_to_csv(table));
}

void emit_json(const Table& table, const std::string& path) {
  write_text_file(path, table_to_json_text(table));
}

std::string render_svg(const SweepResult& result) {
  constexpr int kWidth = 780, kHeight = 520;
  constexpr double kLeft = 80, kRight = 210, kTop = 40, kBottom = 60;
  static const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                   "#ff7f0e", "#8c564b", "#17becf", "#e377c2",
                                   "#7f7f7f", "#bcbd22", "#aec7e8", "#98df8a"};
  constexpr int kPaletteSize = 12;

  double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
  bool have = false;
  for (const auto& s : result.series)
    for (const auto& [x, y] : s.points) {
      if (std::isnan(y)) continue;
      if (!have) {
        xmin = xmax = x;
        ymin = ymax = y;
        have = true;
      } else {
        xmin = std::min(xmin, x);
        xmax = std::max(xmax, x);
        ymin = std::min(ymin, y);
        ymax = std::max(ymax, y);
      }
    }
  if (!have) { xmin = ymin = 0; xmax = ymax = 1; }
  if (xmax == xmin) { xmax += 1; xmin -= 1; }
  if (ymax == ymin) { ymax += 1; ymin -= 1; }
  const double ypad = 0.05 * (ymax - ymin);
  ymin -= ypad;
  ymax += ypad;

  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  const auto px = [&](double x) { return kLeft + (x - xmin) / (xmax - xmin) * plot_w; };
  const auto py = [&](double y) { return kTop + (ymax - y) / (ymax - ymin) * plot_h; };
  const auto coord = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return std::string(buf);
  };

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         std::to_string(kWidth) + "\" height=\"" + std::to_string(kHeight) + "\" viewBox=\"0 0 " +
         std::to_string(kWidth) + " " + std::to_string(kHeight) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "<text x=\"" + coord(kLeft + plot_w / 2) + "\" y=\"20\" text-anchor=\"middle\" "
         "font-family=\"sans-serif\" font-size=\"15\">" + result.title + "</text>\n";

  // axes and ticks
  svg += "<g stroke=\"black\" stroke-width=\"1\" fill=\"none\">\n";
  svg += "<path d=\"M" + coord(kLeft) + " " + coord(kTop) + " L" + coord(kLeft) + " " +
         coord(kTop + plot_h) + " L" + coord(kLeft + plot_w) + " " + coord(kTop + plot_h) +
         "\"/>\n";
  svg += "</g>\n";
  svg += "<g font-family=\"sans-serif\" font-size=\"11\" fill=\"black\">\n";
  for (int t = 0; t <= 5; ++t) {
    const double xv = xmin + t * (xmax - xmin) / 5;
    const double yv = ymin + t * (ymax - ymin) / 5;
    svg += "<line x1=\"" + coord(px(xv)) + "\" y1=\"" + coord(kTop + plot_h) + "\" x2=\"" +
           coord(px(xv)) + "\" y2=\"" + coord(kTop + plot_h + 5) +
           "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    svg += "<text x=\"" + coord(px(xv)) + "\" y=\"" + coord(kTop + plot_h + 18) +
           "\" text-anchor=\"middle\">" + fmt_short(xv) + "</text>\n";
    svg += "<line x1=\"" + coord(kLeft - 5) + "\" y1=\"" + coord(py(yv)) + "\" x2=\"" +
           coord(kLeft) + "\" y2=\"" + coord(py(yv)) +
           "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    svg += "<text x=\"" + coord(kLeft - 8) + "\" y=\"" + coord(py(yv) + 4) +
           "\" text-anchor=\"end\">" + fmt_short(yv) + "</text>\n";
  }
  if (ymin < 0.0 && ymax > 0.0)
    svg += "<line x1=\"" + coord(kLeft) + "\" y1=\"" + coord(py(0)) + "\" x2=\"" +
           coord(kLeft + plot_w) + "\" y2=\"" + coord(py(0)) +
           "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
  svg += "<text x=\"" + coord(kLeft + plot_w / 2) + "\" y=\"" + coord(kHeight - 12) +
         "\" text-anchor=\"middle\" font-size=\"13\">" + result.x_label + "</text>\n";
  svg += "<text x=\"18\" y=\"" + coord(kTop + plot_h / 2) +
         "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 18 " +
         coord(kTop + plot_h / 2) + ")\">" + result.y_label + "</text>\n";
  svg += "</g>\n";

  // one polyline run per series, split where points are omitted
  int color_idx = 0;
  double legend_y = kTop + 10;
  for (const auto& s : result.series) {
    const char* color = kPalette[color_idx % kPaletteSize];
    std::string points;
    const auto flush = [&]() {
      if (points.empty()) return;
      svg += "<polyline fill=\"none\" stroke=\"" + std::string(color) +
             "\" stroke-width=\"1.5\" points=\"" + points + "\"/>\n";
      points.clear();
    };
    for (const auto& [x, y] : s.points) {
      if (std::isnan(y)) {
        flush();
        continue;
      }
      if (!points.empty()) points += " ";
      points += coord(px(x)) + "," + coord(py(y));
    }
    flush();
    svg += "<text x=\"" + coord(kWidth - kRight + 16) + "\" y=\"" + coord(legend_y) +
           "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"" + color + "\">" + s.label +
           "</text>\n";
    legend_y += 16;
    ++color_idx;
  }
  svg += "</svg>\n";
  return svg;
}

void emit_svg(const SweepResult& result, const std::string& path) {
  write_text_file(path, render_svg(result));
}

FigurePreset figure_preset(int id) {
  const std::vector<double> alpha_set{0.3, 0.5, 0.9};
  SweepConfig cfg;
  cfg.n = {1};
  cfg.m = {1};
  switch (id) {
    case 1:
      cfg.scenario = Scenario::Case1;
      cfg.epsilon = {0.5};
      cfg.alpha = alpha_set;
      cfg.mass_ratio = {0.1, 0.8};
      cfg.omega_min = 0.01;
      cfg.omega_max = 5.0;
      cfg.omega_steps = 120;
      cfg.output = SweepOutput::Energies;
      cfg.branches = BranchSelection::Both;
      return FigurePreset{1, "Energy branches vs omega (case 1)", cfg};
    case 2:
      cfg.scenario = Scenario::Case1;
      cfg.epsilon = {1.0};
      cfg.alpha = alpha_set;
      cfg.mass_ratio = {0.2, 0.8};
      cfg.omega_min = 5.0;
      cfg.omega_max = 5.0;
      cfg.omega_steps = 1;
      cfg.output = SweepOutput::CurrentProfile;
      cfg.branches = BranchSelection::PlusOnly;
      return FigurePreset{2, "Probability density vs radius (case 1)", cfg};
    case 3:
      cfg.scenario = Scenario::Case2;
      cfg.epsilon = {0.2};
      cfg.alpha = alpha_set;
      cfg.mass_ratio = {0.8};
      cfg.omega_min = 0.01;
      cfg.omega_max = 10.0;
      cfg.omega_steps = 120;
      cfg.output = SweepOutput::Energies;
      cfg.branches = BranchSelection::Both;
      return FigurePreset{3, "Energy branches vs omega (case 2)", cfg};
    case 4:
      cfg.scenario = Scenario::Case2;
      cfg.epsilon = {1.0};
      cfg.alpha = {0.3};
      cfg.mass_ratio = {0.8};
      cfg.omega_min = 1.0;
      cfg.omega_max = 5.0;
      cfg.omega_steps = 3;
      cfg.output = SweepOutput::CurrentProfile;
      cfg.branches = BranchSelection::PlusOnly;
      return FigurePreset{4, "Probability density vs radius (case 2)", cfg};
    case 5:
      cfg.scenario = Scenario::Case3;
      cfg.epsilon = {0.5};
      cfg.alpha = alpha_set;
      cfg.mass_ratio = {0.8};
      cfg.omega_min = 0.01;
      cfg.omega_max = 5.0;
      cfg.omega_steps = 120;
      cfg.output = SweepOutput::Energies;
      cfg.branches = BranchSelection::PlusOnly;
      return FigurePreset{5, "Positive energy branch vs omega (case 3)", cfg};
    case 6:
      cfg.scenario = Scenario::Case3;
      cfg.epsilon = {0.5};
      cfg.alpha = alpha_set;
      cfg.mass_ratio = {0.8};
      cfg.omega_min = 0.005;
      cfg.omega_max = 1.0;
      cfg.omega_steps = 199;
      cfg.output = SweepOutput::Energies;
      cfg.branches = BranchSelection::MinusOnly;
      return FigurePreset{6, "Negative energy branch vs omega (case 3)", cfg};
    default:
      throw RangeError("figure_preset: id must be in 1..6, got " + std::to_string(id));
  }
}

namespace {

// Extracts (omega, energy, physical) triples per (alpha, mass, branch)
// group from an energies table, preserving row order.
struct EnergyGroup {
  double alpha, mass, epsilon;
  int n, m;
  std::string branch;
  std::vector<double> omega, energy;
  std::vector<bool> physical;
};

std::vector<EnergyGroup> energy_groups(const Table& t) {
  std::vector<EnergyGroup> groups;
  const auto col = [&](const std::string& name) {
    for (size_t c = 0; c < t.columns.size(); ++c)
      if (t.columns[c] == name) return static_cast<int>(c);
    throw Error("figure checks: table lacks column " + name);
  };
  const int c_alpha = col("alpha"), c_mass = col("mass_ratio"), c_branch = col("branch");
  const int c_eps = col("epsilon"), c_n = col("n"), c_m = col("m");
  const int c_omega = col("omega_ratio"), c_energy = col("energy_ratio"),
            c_phys = col("physical");
  for (const auto& row : t.rows) {
    const double a = std::get<double>(row[c_alpha]);
    const double M = std::get<double>(row[c_mass]);
    const std::string b = std::get<std::string>(row[c_branch]);
    EnergyGroup* g = nullptr;
    for (auto& cand : groups)
      if (cand.alpha == a && cand.mass == M && cand.branch == b) g = &cand;
    if (!g) {
      groups.push_back(EnergyGroup{a, M, std::get<double>(row[c_eps]),
                                   static_cast<int>(std::get<long>(row[c_n])),
                                   static_cast<int>(std::get<long>(row[c_m])),
                                   b, {}, {}, {}});
      g = &groups.back();
    }
    g->omega.push_back(std::get<double>(row[c_omega]));
    const bool phys = std::get<bool>(row[c_phys]);
    g->physical.push_back(phys);
    g->energy.push_back(phys ? std::get<double>(row[c_energy]) : kNan);
  }
  return groups;
}

}  // namespace

std::vector<FigureCheck> figure_checks(int id, const SweepResult& result) {
  std::vector<FigureCheck> checks;
  const auto add = [&checks](const std::string& name, bool pass, const std::string& detail) {
    checks.push_back(FigureCheck{name, pass, detail});
  };

  if (id == 2 || id == 4) return checks;
  const auto groups = energy_groups(result.table);

  if (id == 1) {
    // gap width strictly decreasing in alpha at every sampled omega
    bool pass = true;
    std::string detail;
    std::vector<double> alphas;
    for (const auto& g : groups)
      if (std::find(alphas.begin(), alphas.end(), g.alpha) == alphas.end())
        alphas.push_back(g.alpha);
    std::sort(alphas.begin(), alphas.end());
    const auto find_group = [&](double a, double M, const char* b) -> const EnergyGroup* {
      for (const auto& g : groups)
        if (g.alpha == a && g.mass == M && g.branch == b) return &g;
      return nullptr;
    };
    std::vector<double> masses;
    for (const auto& g : groups)
      if (std::find(masses.begin(), masses.end(), g.mass) == masses.end())
        masses.push_back(g.mass);
    for (double M : masses) {
      for (size_t ai = 0; ai + 1 < alphas.size() && pass; ++ai) {
        const auto* lo_p = find_group(alphas[ai], M, "plus");
        const auto* lo_m = find_group(alphas[ai], M, "minus");
        const auto* hi_p = find_group(alphas[ai + 1], M, "plus");
        const auto* hi_m = find_group(alphas[ai + 1], M, "minus");
        if (!lo_p || !lo_m || !hi_p || !hi_m) { pass = false; detail = "missing series"; break; }
        for (size_t k = 0; k < lo_p->omega.size(); ++k) {
          const double gap_lo = lo_p->energy[k] - lo_m->energy[k];   // smaller alpha
          const double gap_hi = hi_p->energy[k] - hi_m->energy[k];   // larger alpha
          if (!(gap_lo > gap_hi)) {
            pass = false;
            detail = "gap(alpha=" + fmt_short(alphas[ai]) + ") <= gap(alpha=" +
                     fmt_short(alphas[ai + 1]) + ") at omega=" + fmt_short(lo_p->omega[k]);
            break;
          }
        }
      }
    }
    add("fig1/gap-monotone-in-alpha", pass, detail);
  } else if (id == 3) {
    bool sym = true, sat = true;
    std::string detail_sym, detail_sat;
    for (const auto& g : groups) {
      if (g.branch != "plus") continue;
      const EnergyGroup* minus = nullptr;
      for (const auto& h : groups)
        if (h.alpha == g.alpha && h.mass == g.mass && h.branch == "minus") minus = &h;
      if (!minus) { sym = false; detail_sym = "missing minus series"; break; }
      for (size_t k = 0; k < g.energy.size(); ++k)
        if (g.energy[k] != -minus->energy[k]) {
          sym = false;
          detail_sym = "E+ != -E- at omega=" + fmt_short(g.omega[k]);
        }
      // plateau at 1/sqrt(eps): nondecreasing |E| ending within 5%
      const double limit = 1.0 / std::sqrt(g.epsilon);
      for (size_t k = 1; k < g.energy.size(); ++k)
        if (g.energy[k] < g.energy[k - 1]) { sat = false; detail_sat = "|E| not nondecreasing"; }
      const double final_err = std::fabs(g.energy.back() - limit) / limit;
      if (final_err > 0.05) {
        sat = false;
        detail_sat = "|E(omega_max)| off the 1/sqrt(eps) plateau by " + fmt_short(final_err);
      }
    }
    add("fig3/plus-minus-symmetry", sym, detail_sym);
    add("fig3/saturation-to-inverse-sqrt-eps", sat, detail_sat);
  } else if (id == 5) {
    bool pass = true;
    std::string detail;
    for (const auto& g : groups) {
      for (size_t k = 1; k < g.energy.size() && pass; ++k)
        if (!(g.energy[k] > g.energy[k - 1])) {
          pass = false;
          detail = "not increasing at omega=" + fmt_short(g.omega[k]);
        }
      for (size_t k = 1; k + 1 < g.energy.size() && pass; ++k) {
        const double dd = g.energy[k + 1] - 2.0 * g.energy[k] + g.energy[k - 1];
        if (!(dd < 1e-9)) {
          pass = false;
          detail = "not concave at omega=" + fmt_short(g.omega[k]);
        }
      }
    }
    add("fig5/plus-branch-increasing-concave", pass, detail);
  } else if (id == 6) {
    bool pass = true;
    std::string detail;
    for (const auto& g : groups) {
      const ModelParams p{g.mass, 1.0, g.epsilon, g.alpha};
      const CutoffResult cut = cutoff_omega_case3(p, QuantumNumbers{g.n, g.m});
      size_t flip = g.physical.size();
      for (size_t k = 0; k < g.physical.size(); ++k)
        if (!g.physical[k]) {
          flip = k;
          break;
        }
      if (flip == g.physical.size()) {
        pass = false;
        detail = "alpha=" + fmt_short(g.alpha) + ": no unphysical points sampled";
        continue;
      }
      for (size_t k = flip; k < g.physical.size(); ++k)
        if (g.physical[k]) {
          pass = false;
          detail = "alpha=" + fmt_short(g.alpha) + ": physical point beyond the cutoff";
        }
      if (g.omega[flip] < cut.omega_c - 1e-12 ||
          (flip > 0 && g.omega[flip - 1] > cut.omega_c + 1e-12)) {
        pass = false;
        detail = "alpha=" + fmt_short(g.alpha) + ": flip not at omega_c=" +
                 fmt_short(cut.omega_c);
      }
      // |E| must grow toward the cutoff
      if (flip >= 3) {
        const double e1 = std::fabs(g.energy[flip - 3]);
        const double e2 = std::fabs(g.energy[flip - 2]);
        const double e3 = std::fabs(g.energy[flip - 1]);
        if (!(e3 > e2 && e2 > e1)) {
          pass = false;
          detail = "alpha=" + fmt_short(g.alpha) + ": |E| not growing toward the cutoff";
        }
      }
    }
    add("fig6/minus-branch-cutoff-divergence", pass, detail);
  }
  return checks;
}

std::vector<FigureCheck> write_figure(int id, const std::string& out_dir, int threads) {
  const FigurePreset preset = figure_preset(id);
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create output directory '" + out_dir + "'");
  SweepResult result = run_sweep(preset.config, threads);
  result.title = preset.title;
  const std::string base = out_dir + "/fig" + std::to_string(id);
  emit_csv(result.table, base + ".csv");
  emit_svg(result, base + ".svg");
  return figure_checks(id, result);
}

}  // namespace rdkp
