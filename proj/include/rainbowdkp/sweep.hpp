#ifndef RAINBOWDKP_SWEEP_HPP
#define RAINBOWDKP_SWEEP_HPP

#include <string>
#include <variant>
#include <vector>

#include "rainbowdkp/spectrum.hpp"

namespace rdkp {

enum class SweepOutput { Energies, Gap, CurrentProfile };
enum class OmegaScale { Linear, Log };

// Which branches a sweep evaluates.  The config file does not choose this:
// energy/gap tables always carry both branches, current profiles use Plus;
// figure presets override it internally.
enum class BranchSelection { Both, PlusOnly, MinusOnly };

struct SweepConfig {
  Scenario scenario = Scenario::Identity;
  std::vector<double> epsilon{0.0};
  std::vector<double> alpha{1.0};
  std::vector<double> mass_ratio{1.0};
  std::vector<int> n{0};
  std::vector<int> m{0};
  double omega_min = 0.0;
  double omega_max = 0.0;
  int omega_steps = 0;
  OmegaScale omega_scale = OmegaScale::Linear;
  SweepOutput output = SweepOutput::Energies;
  BranchSelection branches = BranchSelection::Both;
  int profile_points = 400;  // radial samples per tuple for current profiles
};

// Structural validation used by run_sweep (ranges, non-empty lists,
// steps >= 1).  Throws ConfigError naming the offending field.
void validate(const SweepConfig& cfg);

// Line-oriented `key = value` format, '#' comments, comma-separated lists.
// Keys: scenario, epsilon, alpha, mass_ratio, omega_min, omega_max,
// omega_steps, omega_scale, n, m, output.  Config files additionally
// require omega_steps >= 2 and omega_min < omega_max.
SweepConfig parse_config(const std::string& text);
SweepConfig load_config(const std::string& path);

// One table cell: empty, string, integer, real or boolean.
using Field = std::variant<std::monostate, std::string, long, double, bool>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Field>> rows;
};

// A plottable series; a NaN ordinate marks an omitted (unphysical) point.
struct Series {
  std::string label;
  std::vector<std::pair<double, double>> points;
};

struct SweepResult {
  Table table;
  std::vector<Series> series;
  std::string x_label;
  std::string y_label;
  std::string title;
};

// Evaluates the sweep.  Rows appear in deterministic input order
// regardless of `threads` (0 = one worker per hardware thread).  Every
// emitted physical energy is re-checked against the spectrum
// self-consistency invariant at 1e-10.
SweepResult run_sweep(const SweepConfig& cfg, int threads = 1);

// Emitters.  CSV: exact header row, '.' decimal point, 17 significant
// digits, LF line endings.  JSON: array of row objects with the same keys.
// SVG: self-contained 1.1 polyline plot, one polyline run per series
// (split where points are omitted).
std::string table_to_csv(const Table& table);
std::string table_to_json_text(const Table& table);
std::string render_svg(const SweepResult& result);
void emit_csv(const Table& table, const std::string& path);
void emit_json(const Table& table, const std::string& path);
void emit_svg(const SweepResult& result, const std::string& path);

// The six bundled figure presets: energy branches and density profiles
// of the three scenarios over standard parameter sets (alpha in
// {0.3, 0.5, 0.9} where a set is not pinned; omega ranges chosen to span
// the features).
struct FigurePreset {
  int id;
  std::string title;
  SweepConfig config;
};

FigurePreset figure_preset(int id);  // id in 1..6, RangeError otherwise

struct FigureCheck {
  std::string name;
  bool pass;
  std::string detail;
};

// Qualitative checks attached to figures 1, 3, 5 and 6 (none for 2 and 4):
// 1 - gap width monotone in alpha at every sampled omega;
// 3 - exact plus/minus symmetry and saturation toward 1/sqrt(eps);
// 5 - Plus branch increasing and concave in omega;
// 6 - Minus branch loses physicality exactly at the cutoff frequency,
//     with |E| growing toward it.
std::vector<FigureCheck> figure_checks(int id, const SweepResult& result);

// Runs the preset, writes figK.csv / figK.svg into out_dir, evaluates the
// attached checks.
std::vector<FigureCheck> write_figure(int id, const std::string& out_dir, int threads = 1);

}  // namespace rdkp

#endif
