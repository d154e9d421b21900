#include "hsg/neuro.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "hsg/error.hpp"

namespace hsg::sim {

double Carrier::at(const std::string &channel) const {
  auto it = values.find(channel);
  if (it == values.end())
    fail(ErrorCode::malformed_input, "carrier has no channel " + channel);
  return it->second;
}

NeuronOutput eval_neuron(const NeuronFunction &n, const Carrier &input,
                         long long t) {
  if (n.delay < 1)
    fail(ErrorCode::malformed_input, "neuron delay must be ≥ 1");
  const std::size_t m = n.weight.size();
  if (n.offset.size() != m || n.gate_weight.size() != m)
    fail(ErrorCode::malformed_input, "neuron stage sizes disagree");

  std::vector<double> in;
  for (const auto &ch : n.input_channels)
    in.push_back(input.at(ch)); // throws on channel mismatch

  NeuronOutput out;
  out.phi.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (n.weight[i].size() != in.size())
      fail(ErrorCode::malformed_input, "neuron weight row size mismatch");
    double acc = n.offset[i];
    for (std::size_t j = 0; j < in.size(); ++j)
      acc += n.weight[i][j] * in[j];
    out.phi[i] = std::clamp(acc, 0.0, 1.0);
  }
  double gate = 0.0;
  for (std::size_t i = 0; i < m; ++i)
    gate += n.gate_weight[i] * out.phi[i];
  out.fired = gate >= n.threshold;
  out.value = out.fired ? n.amplitude : n.baseline;
  out.at_tick = t + n.delay;
  return out;
}

const BodyPoint *NF0Body::find(const std::string &id) const {
  for (const auto &p : points)
    if (p.id == id)
      return &p;
  return nullptr;
}

NF0Body free_body(const std::vector<std::pair<std::string, Point3>> &points) {
  NF0Body body;
  std::set<std::string> seen;
  for (const auto &[id, pos] : points) {
    if (!seen.insert(id).second)
      fail(ErrorCode::malformed_input, "free_body: duplicate point id " + id);
    if (!std::isfinite(pos.x) || !std::isfinite(pos.y) || !std::isfinite(pos.z))
      fail(ErrorCode::malformed_input, "free_body: non-finite coordinates");
    BodyPoint p;
    p.id = id;
    p.position = pos;
    p.neuron.input_channels = {"potential"};
    p.neuron.weight = {{1.0}};
    p.neuron.offset = {0.0};
    p.neuron.gate_weight = {1.0};
    p.state.values["potential"] = 0.0;
    body.points.push_back(std::move(p));
  }
  return body;
}

std::vector<std::string> underlying_points(const NF0Body &body) {
  std::vector<std::string> out;
  for (const auto &p : body.points)
    out.push_back(p.id);
  return out;
}

Report check_body_adjunction(const std::vector<std::string> &point_set,
                             const NF0Body &body, const BodyHomOptions &opts) {
  if (point_set.size() > opts.max_points ||
      body.points.size() > opts.max_points)
    fail(ErrorCode::capacity, "check_body_adjunction: fixture above cap");
  Report report;

  const NF0Body free = [&] {
    std::vector<std::pair<std::string, Point3>> pts;
    for (const auto &id : point_set)
      pts.emplace_back(id, Point3{});
    return free_body(pts);
  }();

  // count all functions between the two finite point sets, explicitly
  auto count_functions = [](std::size_t dom, std::size_t cod) {
    if (dom == 0)
      return 1l; // the empty map
    long count = 0;
    std::vector<std::size_t> choice(dom, 0);
    while (true) {
      ++count;
      std::size_t i = 0;
      while (i < dom) {
        if (++choice[i] < cod)
          break;
        choice[i] = 0;
        ++i;
      }
      if (i == dom)
        break;
    }
    return cod == 0 ? 0l : count;
  };

  const long left =
      count_functions(free.points.size(), body.points.size());
  const long right =
      count_functions(point_set.size(), underlying_points(body).size());
  if (left != right)
    report.add("body-hom",
               "|Hom(F_N(P), B)| = " + std::to_string(left) +
                   " but |Hom(P, U_N(B))| = " + std::to_string(right),
               "body-adjunction");

  // unit fragment: U_N ∘ F_N is the identity on point sets
  if (underlying_points(free) != point_set)
    report.add("body-unit", "U_N(F_N(P)) differs from P", "body-adjunction");
  return report;
}

// --- world --------------------------------------------------------------------

const ChannelSpec *World::channel(const std::string &name) const {
  for (const auto &c : channels)
    if (c.name == name)
      return &c;
  return nullptr;
}

World make_world(NF0Body body, SimplicialShape shape, NeuralFiberConfig neural,
                 LearningFiberConfig learning, ModulatorFiberConfig modulator,
                 ReconcilePolicy policy, std::uint64_t seed) {
  World w;
  w.body = std::move(body);
  w.shape = std::move(shape);
  w.neural = std::move(neural);
  w.learning = learning;
  w.modulator = modulator;
  w.policy = policy;
  w.seed = seed;

  for (const auto &p : w.body.points)
    if (!w.shape.vertices.empty() && !w.shape.has_simplex({p.id}))
      fail(ErrorCode::malformed_input,
           "world: point " + p.id + " is not a vertex of the shape");

  // synapses: both orientations of every 1-simplex, then explicit entries
  for (const auto &s : w.shape.simplices)
    if (s.size() == 2) {
      w.synapse_weight[{s[0], s[1]}] = w.neural.default_synapse_weight;
      w.synapse_weight[{s[1], s[0]}] = w.neural.default_synapse_weight;
    }
  for (const auto &[from, to, weight] : w.neural.synapses) {
    if (!w.body.find(from) || !w.body.find(to))
      fail(ErrorCode::malformed_input,
           "world: synapse references unknown point " + from + " -> " + to);
    w.synapse_weight[{from, to}] = weight;
  }

  for (const auto &p : w.body.points) {
    Carrier c = p.state;
    for (const auto &spec : w.channels)
      if (!c.values.count(spec.name))
        c.values[spec.name] = 0.0;
    w.base[{p.id, 0}] = std::move(c);
  }
  return w;
}

namespace {

double reconcile(const World &w, const std::string &channel, double persisted,
                 const std::vector<World::PendingWrite> &writes) {
  const ChannelSpec *spec = w.channel(channel);
  const double lo = spec ? spec->min : 0.0;
  const double hi = spec ? spec->max : 1.0;
  if (writes.empty())
    return std::clamp(persisted, lo, hi);
  switch (w.policy) {
  case ReconcilePolicy::sum_clamp: {
    double acc = persisted;
    for (const auto &write : writes)
      acc += write.value;
    return std::clamp(acc, lo, hi);
  }
  case ReconcilePolicy::last_writer:
    return std::clamp(writes.back().value, lo, hi);
  case ReconcilePolicy::max_value: {
    double best = writes.front().value;
    for (const auto &write : writes)
      best = std::max(best, write.value);
    return std::clamp(best, lo, hi);
  }
  }
  return std::clamp(persisted, lo, hi);
}

} // namespace

World step_world(const World &w) {
  World out = w;
  const long long t = out.clock;

  std::map<std::string, bool> fired_now;

  // neural fiber: evaluate each point against the frozen base at tick t
  if (out.neural.enabled) {
    for (const auto &p : out.body.points) {
      auto it = out.base.find({p.id, t});
      if (it == out.base.end())
        fail(ErrorCode::internal, "world: missing base entry at tick " +
                                      std::to_string(t));
      NeuronOutput o = eval_neuron(p.neuron, it->second, t);
      bool silent = false;
      auto lf = out.last_fired.find(p.id);
      if (lf != out.last_fired.end() &&
          t - lf->second <= static_cast<long long>(p.neuron.refractory))
        silent = true;
      const bool fires = o.fired && !silent;
      fired_now[p.id] = fires;
      if (!fires)
        continue;
      out.last_fired[p.id] = t;
      out.events[{p.id, t}] += 1;
      for (const auto &[edge, weight] : out.synapse_weight) {
        if (edge.first != p.id)
          continue;
        out.pending[{edge.second, o.at_tick, p.neuron.output_channel}]
            .push_back({"neural:" + p.id, weight * o.value});
      }
    }
  }

  // learning fiber: co-firing strengthens each directed synapse; events are
  // counted once per underlying 1-simplex, at each endpoint
  if (out.learning.enabled) {
    for (auto &[edge, weight] : out.synapse_weight) {
      const bool co = fired_now.count(edge.first) && fired_now[edge.first] &&
                      fired_now.count(edge.second) && fired_now[edge.second];
      if (!co)
        continue;
      weight = std::clamp(weight + out.learning.rate, 0.0, out.learning.w_max);
      if (edge.first <= edge.second) {
        out.events[{edge.first, t}] += 1;
        if (edge.second != edge.first)
          out.events[{edge.second, t}] += 1;
      }
    }
  }

  // modulator fiber: windowed average scaled by the gain, delivered later
  if (out.modulator.enabled) {
    for (const auto &p : out.body.points) {
      double acc = 0.0;
      long long n = 0;
      for (long long s = std::max(0ll, t - out.modulator.window + 1); s <= t;
           ++s) {
        auto it = out.base.find({p.id, s});
        if (it == out.base.end())
          continue;
        acc += it->second.at(out.modulator.channel);
        ++n;
      }
      const double contribution = (n > 0) ? out.modulator.gain * acc /
                                                static_cast<double>(n)
                                          : 0.0;
      out.pending[{p.id, t + out.modulator.delay, out.modulator.channel}]
          .push_back({"modulator:" + p.id, contribution});
      out.events[{p.id, t}] += 1;
    }
  }

  // materialize tick t+1: persistence (with post-fire reset of the output
  // channel) plus reconciled writes
  for (const auto &p : out.body.points) {
    Carrier next = out.base.at({p.id, t});
    if (fired_now.count(p.id) && fired_now[p.id])
      next.values[p.neuron.output_channel] = 0.0;
    for (auto &[channel, value] : next.values) {
      std::vector<World::PendingWrite> writes;
      auto it = out.pending.find({p.id, t + 1, channel});
      if (it != out.pending.end())
        writes = it->second;
      value = reconcile(out, channel, value, writes);
      out.pending.erase({p.id, t + 1, channel});
    }
    out.base[{p.id, t + 1}] = std::move(next);
  }

  out.clock = t + 1;
  return out;
}

World run_world(World w, long long ticks) {
  for (long long i = 0; i < ticks; ++i)
    w = step_world(w);
  return w;
}

ActivityDensity activity_density(const World &w, long long from, long long to) {
  if (from < 0 || to > w.clock || from > to)
    fail(ErrorCode::precondition, "activity window outside recorded history");
  ActivityDensity out;
  const long long len = to - from + 1;
  for (const auto &p : w.body.points)
    out.per_point[p.id] = 0;
  for (const auto &[key, count] : w.events) {
    if (key.second < from || key.second > to)
      continue;
    out.per_point[key.first] += count;
    out.per_point_tick[key] = count;
    out.total += count;
  }
  for (const auto &[id, count] : out.per_point)
    out.density_per_point[id] =
        static_cast<double>(count) / static_cast<double>(len);
  out.total_density = static_cast<double>(out.total) / static_cast<double>(len);
  return out;
}

DivergenceReport causality_probe(const World &w, const Perturbation &p,
                                 long long horizon) {
  if (p.tick > horizon)
    fail(ErrorCode::precondition, "perturbation after the horizon");
  if (!w.body.find(p.point))
    fail(ErrorCode::not_found, "unknown point " + p.point);

  int min_delay = 0;
  for (const auto &point : w.body.points)
    min_delay = (min_delay == 0)
                    ? point.neuron.delay
                    : std::min(min_delay, point.neuron.delay);
  if (min_delay == 0)
    min_delay = 1;

  auto run = [&](bool perturbed) {
    World sim = w;
    for (long long t = 0; t <= horizon; ++t) {
      if (perturbed && t == p.tick) {
        auto it = sim.base.find({p.point, t});
        if (it == sim.base.end())
          fail(ErrorCode::internal, "missing base entry for perturbation");
        it->second.values[p.channel] += p.magnitude;
      }
      if (t < horizon)
        sim = step_world(sim);
    }
    return sim;
  };

  const World baseline = run(false);
  const World diverged = run(true);

  DivergenceReport report;
  report.min_delay = min_delay;
  for (long long t = 0; t <= horizon && !report.diverged; ++t)
    for (const auto &point : w.body.points) {
      if (point.id == p.point)
        continue; // the injected signal itself is not propagation
      const Carrier &a = baseline.base.at({point.id, t});
      const Carrier &b = diverged.base.at({point.id, t});
      for (const auto &[channel, value] : a.values)
        if (value != b.values.at(channel)) {
          report.diverged = true;
          report.point = point.id;
          report.tick = t;
          report.channel = channel;
          break;
        }
      if (report.diverged)
        break;
    }
  return report;
}

} // namespace hsg::sim
