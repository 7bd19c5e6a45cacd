#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "shapgap/errors.hpp"
#include "shapgap/rng.hpp"
#include "shapgap/textio.hpp"

namespace shapgap::config {

enum class ParamKind { Continuous, Choice };
enum class ParamScale { Linear, Log };

struct HyperparameterSpec {
  std::string name;
  ParamKind kind = ParamKind::Continuous;
  ParamScale scale = ParamScale::Linear;
  double low = 0.0;
  double high = 0.0;
  std::vector<double> choices;  // choice kind only, strictly increasing

  void validate() const {
    if (kind == ParamKind::Continuous) {
      if (!(low < high))
        throw ValidationError("hyperparameter '" + name + "': low must be < high");
      if (scale == ParamScale::Log && !(low > 0.0))
        throw ValidationError("hyperparameter '" + name + "': log scale requires low > 0");
    } else {
      if (choices.size() < 2)
        throw ValidationError("hyperparameter '" + name + "': choice set needs >= 2 entries");
      for (std::size_t i = 1; i < choices.size(); ++i)
        if (!(choices[i - 1] < choices[i]))
          throw ValidationError("hyperparameter '" + name + "': choices must be strictly increasing");
    }
  }
};

inline constexpr int kSlotsPerAlgorithm = 4;

struct AlgorithmSpec {
  int algorithm_id = -1;
  std::string name;
  std::array<HyperparameterSpec, kSlotsPerAlgorithm> hyperparameters;

  void validate() const {
    if (algorithm_id < 0 || algorithm_id > 3)
      throw ValidationError("algorithm '" + name + "': id must be in 0..3");
    if (hyperparameters[0].name != "learning_rate")
      throw ValidationError("algorithm '" + name + "': slot 1 must be learning_rate");
    if (hyperparameters[1].name != "gamma")
      throw ValidationError("algorithm '" + name + "': slot 2 must be gamma");
    for (const auto& hp : hyperparameters) hp.validate();
  }
};

struct ConfigurationSpace {
  int schema_version = 1;
  std::vector<AlgorithmSpec> algorithms;

  void validate() const {
    bool seen[4] = {false, false, false, false};
    for (const auto& a : algorithms) {
      a.validate();
      if (seen[a.algorithm_id])
        throw ValidationError("duplicate algorithm_id " + std::to_string(a.algorithm_id));
      seen[a.algorithm_id] = true;
    }
    if (algorithms.size() != 4 || !(seen[0] && seen[1] && seen[2] && seen[3]))
      throw ValidationError("algorithm_id set must be {0,1,2,3}");
  }

  const AlgorithmSpec& algorithm(int id) const {
    for (const auto& a : algorithms)
      if (a.algorithm_id == id) return a;
    throw ValidationError("unknown algorithm_id " + std::to_string(id));
  }
};

struct Configuration {
  int algorithm_id = -1;
  std::array<double, kSlotsPerAlgorithm> values{};

  bool operator==(const Configuration&) const = default;
};

// [algorithm_code, z1..z4]; z-slots normalized to [0,1].
using FeatureVector = std::array<double, 5>;

inline const std::array<std::string, 5>& global_feature_names() {
  static const std::array<std::string, 5> names = {
      "algorithm", "learning_rate", "gamma", "hp3", "hp4"};
  return names;
}

// ---- bundled default (the standard four-algorithm space) ----

inline ConfigurationSpace default_space() {
  auto cont = [](std::string name, ParamScale scale, double lo, double hi) {
    HyperparameterSpec hp;
    hp.name = std::move(name);
    hp.kind = ParamKind::Continuous;
    hp.scale = scale;
    hp.low = lo;
    hp.high = hi;
    return hp;
  };
  auto choice = [](std::string name, std::vector<double> choices) {
    HyperparameterSpec hp;
    hp.name = std::move(name);
    hp.kind = ParamKind::Choice;
    hp.choices = std::move(choices);
    hp.low = hp.choices.front();
    hp.high = hp.choices.back();
    return hp;
  };

  ConfigurationSpace space;
  space.schema_version = 1;
  space.algorithms.resize(4);

  auto lr = cont("learning_rate", ParamScale::Log, 0.0001, 0.01);
  auto gamma = cont("gamma", ParamScale::Log, 0.8, 0.999);

  space.algorithms[0] = AlgorithmSpec{
      0, "ppo_lite", {lr, gamma, cont("clip_range", ParamScale::Linear, 0.1, 0.3),
                      choice("n_steps", {128, 512, 1024, 2048})}};
  space.algorithms[1] = AlgorithmSpec{
      1, "a2c_lite", {lr, gamma, cont("gae_lambda", ParamScale::Linear, 0.9, 0.99),
                      cont("vf_coef", ParamScale::Linear, 0.25, 1.0)}};
  space.algorithms[2] = AlgorithmSpec{
      2, "ddpg_lite", {lr, gamma, cont("tau", ParamScale::Linear, 0.001, 0.01),
                       choice("buffer_size", {1e4, 1e5, 1e6})}};
  space.algorithms[3] = AlgorithmSpec{
      3, "sac_lite", {lr, gamma, cont("tau", ParamScale::Linear, 0.001, 0.01),
                      cont("ent_coef", ParamScale::Linear, 0.01, 0.2)}};
  space.validate();
  return space;
}

// ---- file I/O ----

inline nlohmann::json space_to_json(const ConfigurationSpace& space) {
  nlohmann::json doc;
  doc["schema_version"] = space.schema_version;
  doc["algorithms"] = nlohmann::json::array();
  for (const auto& a : space.algorithms) {
    nlohmann::json ja;
    ja["id"] = a.algorithm_id;
    ja["name"] = a.name;
    ja["hyperparameters"] = nlohmann::json::array();
    for (const auto& hp : a.hyperparameters) {
      nlohmann::json jh;
      jh["name"] = hp.name;
      if (hp.kind == ParamKind::Choice) {
        jh["kind"] = "choice";
        jh["choices"] = hp.choices;
      } else {
        jh["kind"] = "continuous";
        jh["scale"] = hp.scale == ParamScale::Log ? "log" : "linear";
        jh["low"] = hp.low;
        jh["high"] = hp.high;
      }
      ja["hyperparameters"].push_back(std::move(jh));
    }
    doc["algorithms"].push_back(std::move(ja));
  }
  return doc;
}

inline ConfigurationSpace space_from_json(const nlohmann::json& doc) {
  ConfigurationSpace space;
  try {
    space.schema_version = doc.at("schema_version").get<int>();
    for (const auto& ja : doc.at("algorithms")) {
      AlgorithmSpec a;
      a.algorithm_id = ja.at("id").get<int>();
      a.name = ja.at("name").get<std::string>();
      const auto& hps = ja.at("hyperparameters");
      if (hps.size() != kSlotsPerAlgorithm)
        throw ValidationError("algorithm '" + a.name + "': expected exactly 4 hyperparameters");
      for (int s = 0; s < kSlotsPerAlgorithm; ++s) {
        const auto& jh = hps[s];
        HyperparameterSpec hp;
        hp.name = jh.at("name").get<std::string>();
        const auto kind = jh.at("kind").get<std::string>();
        if (kind == "choice") {
          hp.kind = ParamKind::Choice;
          hp.choices = jh.at("choices").get<std::vector<double>>();
          if (!hp.choices.empty()) {
            hp.low = hp.choices.front();
            hp.high = hp.choices.back();
          }
        } else if (kind == "continuous") {
          hp.kind = ParamKind::Continuous;
          const auto scale = jh.at("scale").get<std::string>();
          if (scale == "log")
            hp.scale = ParamScale::Log;
          else if (scale == "linear")
            hp.scale = ParamScale::Linear;
          else
            throw ValidationError("hyperparameter '" + hp.name + "': unknown scale '" + scale + "'");
          hp.low = jh.at("low").get<double>();
          hp.high = jh.at("high").get<double>();
        } else {
          throw ValidationError("hyperparameter '" + hp.name + "': unknown kind '" + kind + "'");
        }
        a.hyperparameters[s] = std::move(hp);
      }
      space.algorithms.push_back(std::move(a));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("configuration space: ") + e.what());
  }
  space.validate();
  return space;
}

inline ConfigurationSpace load_space(const std::string& path) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError("cannot parse configuration space '" + path + "': " + e.what());
  }
  return space_from_json(doc);
}

// ---- sampling / encoding ----

inline double sample_slot(const HyperparameterSpec& hp, Rng& rng) {
  const double u = rng.uniform();
  if (hp.kind == ParamKind::Choice) {
    auto idx = static_cast<std::size_t>(u * static_cast<double>(hp.choices.size()));
    if (idx >= hp.choices.size()) idx = hp.choices.size() - 1;
    return hp.choices[idx];
  }
  if (hp.scale == ParamScale::Log)
    return std::exp(std::log(hp.low) + u * (std::log(hp.high) - std::log(hp.low)));
  return hp.low + u * (hp.high - hp.low);
}

inline Configuration sample(const ConfigurationSpace& space, int algorithm_id, Rng& rng) {
  const auto& alg = space.algorithm(algorithm_id);
  Configuration c;
  c.algorithm_id = algorithm_id;
  for (int s = 0; s < kSlotsPerAlgorithm; ++s)
    c.values[s] = sample_slot(alg.hyperparameters[s], rng);
  return c;
}

inline std::size_t choice_index(const HyperparameterSpec& hp, double value,
                                const std::string& context) {
  for (std::size_t i = 0; i < hp.choices.size(); ++i) {
    const double c = hp.choices[i];
    if (value == c || std::abs(value - c) <= 1e-9 * std::max(std::abs(c), 1.0)) return i;
  }
  throw ValidationError(context + ": value " + fmt_g17(value) + " is not a listed choice of '" +
                        hp.name + "'");
}

inline double encode_slot(const HyperparameterSpec& hp, double value) {
  if (hp.kind == ParamKind::Choice) {
    const auto idx = choice_index(hp, value, "encode");
    return static_cast<double>(idx) / static_cast<double>(hp.choices.size() - 1);
  }
  if (!(value >= hp.low && value <= hp.high))
    throw ValidationError("encode: '" + hp.name + "' value " + fmt_g17(value) +
                          " outside [" + fmt_g17(hp.low) + ", " + fmt_g17(hp.high) + "]");
  if (hp.scale == ParamScale::Log)
    return (std::log(value) - std::log(hp.low)) / (std::log(hp.high) - std::log(hp.low));
  return (value - hp.low) / (hp.high - hp.low);
}

inline double decode_slot(const HyperparameterSpec& hp, double z) {
  if (hp.kind == ParamKind::Choice) {
    // snap to nearest index
    const double scaled = z * static_cast<double>(hp.choices.size() - 1);
    auto idx = static_cast<std::size_t>(std::llround(scaled));
    if (idx >= hp.choices.size()) idx = hp.choices.size() - 1;
    return hp.choices[idx];
  }
  if (hp.scale == ParamScale::Log)
    return std::exp(std::log(hp.low) + z * (std::log(hp.high) - std::log(hp.low)));
  return hp.low + z * (hp.high - hp.low);
}

inline FeatureVector encode(const Configuration& c, const ConfigurationSpace& space) {
  const auto& alg = space.algorithm(c.algorithm_id);
  FeatureVector fv{};
  fv[0] = static_cast<double>(c.algorithm_id);
  for (int s = 0; s < kSlotsPerAlgorithm; ++s)
    fv[s + 1] = encode_slot(alg.hyperparameters[s], c.values[s]);
  return fv;
}

inline Configuration decode(const FeatureVector& fv, const ConfigurationSpace& space) {
  const double code = fv[0];
  if (!(code == 0.0 || code == 1.0 || code == 2.0 || code == 3.0))
    throw ValidationError("decode: algorithm_code must be one of {0,1,2,3}");
  const auto& alg = space.algorithm(static_cast<int>(code));
  Configuration c;
  c.algorithm_id = alg.algorithm_id;
  for (int s = 0; s < kSlotsPerAlgorithm; ++s)
    c.values[s] = decode_slot(alg.hyperparameters[s], fv[s + 1]);
  return c;
}

}  // namespace shapgap::config
