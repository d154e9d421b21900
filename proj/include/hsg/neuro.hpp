#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "hsg/report.hpp"
#include "hsg/shape.hpp"

namespace hsg::sim {

struct Point3 {
  double x = 0;
  double y = 0;
  double z = 0;
};

struct ChannelSpec {
  std::string name;
  double min = 0.0;
  double max = 1.0;
  std::string unit = "model-units";
};

// Named real channels; bounds live in the owning world's channel table.
struct Carrier {
  std::map<std::string, double> values;

  double at(const std::string &channel) const;
};

// Delayed fuzzy-threshold neuron: φ = clamp01(W·input + c) into [0,1]^m,
// then a single threshold gate firing amplitude a when ⟨w, φ⟩ ≥ θ, baseline
// b₀ otherwise, delivered Δ ≥ 1 ticks later. A neuron that fired stays
// silent for `refractory` ticks afterwards.
struct NeuronFunction {
  std::vector<std::string> input_channels;  // W column labels
  std::vector<std::vector<double>> weight;  // m rows × columns
  std::vector<double> offset;               // length m
  std::vector<double> gate_weight;          // w, length m
  double threshold = 0.5;
  double amplitude = 1.0;
  double baseline = 0.0;
  int delay = 1;
  int refractory = 1;
  std::string output_channel = "potential";
};

struct NeuronOutput {
  std::vector<double> phi; // in [0,1]^m always
  bool fired = false;
  double value = 0.0; // amplitude or baseline
  long long at_tick = 0;
};

NeuronOutput eval_neuron(const NeuronFunction &n, const Carrier &input,
                         long long t);

struct BodyPoint {
  std::string id;
  Point3 position;
  NeuronFunction neuron;
  Carrier state;
};

struct NF0Body {
  std::vector<BodyPoint> points;

  const BodyPoint *find(const std::string &id) const;
};

// F_N: default decorations (identity receptive map on one potential channel,
// θ = 0.5, a = 1, b₀ = 0, Δ = 1) over zeroed carriers.
NF0Body free_body(const std::vector<std::pair<std::string, Point3>> &points);

// U_N: the underlying point set.
std::vector<std::string> underlying_points(const NF0Body &body);

struct BodyHomOptions {
  std::size_t max_points = 3;
};

// |Hom(F_N(P), B)| = |Hom(P, U_N(B))| under the artifact's morphisms
// (arbitrary functions of point sets), counted by explicit enumeration.
Report check_body_adjunction(const std::vector<std::string> &point_set,
                             const NF0Body &body,
                             const BodyHomOptions &opts = {});

enum class ReconcilePolicy { sum_clamp, last_writer, max_value };

struct NeuralFiberConfig {
  bool enabled = true;
  double default_synapse_weight = 1.0;
  // explicit directed synapses override/extend the shape's 1-simplices;
  // self-loops must be declared here
  std::vector<std::tuple<std::string, std::string, double>> synapses;
};

struct LearningFiberConfig {
  bool enabled = false;
  double rate = 0.1;  // η
  double w_max = 2.0;
};

struct ModulatorFiberConfig {
  bool enabled = false;
  int delay = 2;
  int window = 2;
  double gain = 0.0;
  std::string channel = "potential";
};

// The fibered world: a shared time-indexed material base, a neural fiber
// over the body's points with synapse weights on the shape's 1-simplices,
// an optional Hebbian learning fiber and an optional scalar modulator fiber.
struct World {
  NF0Body body;
  SimplicialShape shape;
  std::vector<ChannelSpec> channels{{"potential", 0.0, 1.0, "model-units"}};
  NeuralFiberConfig neural;
  LearningFiberConfig learning;
  ModulatorFiberConfig modulator;
  ReconcilePolicy policy = ReconcilePolicy::sum_clamp;
  std::uint64_t seed = 0;

  long long clock = 0;
  // material base: frozen history of carriers per (point, tick ≤ clock)
  std::map<std::pair<std::string, long long>, Carrier> base;
  // current synapse weights, directed
  std::map<std::pair<std::string, std::string>, double> synapse_weight;
  std::map<std::string, long long> last_fired;
  // morphism applications per (point, tick): firings, weight updates,
  // modulator writes
  std::map<std::pair<std::string, long long>, long long> events;

  struct PendingWrite {
    std::string source; // writer tag, deterministic
    double value;
  };
  std::map<std::tuple<std::string, long long, std::string>,
           std::vector<PendingWrite>>
      pending;

  const ChannelSpec *channel(const std::string &name) const;
};

// Initializes tick-0 base entries and the synapse table from the shape.
World make_world(NF0Body body, SimplicialShape shape,
                 NeuralFiberConfig neural = {}, LearningFiberConfig learning = {},
                 ModulatorFiberConfig modulator = {},
                 ReconcilePolicy policy = ReconcilePolicy::sum_clamp,
                 std::uint64_t seed = 0);

// One synchronous tick: every fiber reads base values at ticks ≤ clock,
// schedules its writes at clock + Δ, writes are reconciled by the declared
// policy, and the clock advances. Pure: returns the successor world.
World step_world(const World &w);

World run_world(World w, long long ticks);

struct ActivityDensity {
  std::map<std::string, long long> per_point;
  std::map<std::pair<std::string, long long>, long long> per_point_tick;
  long long total = 0;
  double total_density = 0.0; // total / window length
  std::map<std::string, double> density_per_point;
};

ActivityDensity activity_density(const World &w, long long from, long long to);

struct Perturbation {
  std::string point;
  long long tick = 0;
  std::string channel = "potential";
  double magnitude = 0.0;
};

struct DivergenceReport {
  bool diverged = false;
  std::string point;
  long long tick = 0;
  std::string channel;
  int min_delay = 1;
};

// Runs baseline and perturbed simulations to the horizon and reports the
// earliest base divergence outside the perturbed point. Divergence can never
// precede s + min Δ.
DivergenceReport causality_probe(const World &w, const Perturbation &p,
                                 long long horizon);

} // namespace hsg::sim
