#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "wsnloc/experiment.hpp"

namespace wsnloc {

using nlohmann::json;

namespace {

using Keys = std::set<std::string, std::less<>>;

void reject_unknown_keys(const json& obj, const Keys& allowed, const std::string& where) {
  for (const auto& [key, _] : obj.items()) {
    if (!allowed.contains(key)) {
      throw ConfigValidationError(where.empty() ? key : where + "." + key, "unknown key");
    }
  }
}

const json& require_object(const json& v, const std::string& field) {
  if (!v.is_object()) throw ConfigValidationError(field, "expected an object");
  return v;
}

double get_number(const json& v, const std::string& field) {
  if (!v.is_number()) throw ConfigValidationError(field, "expected a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw ConfigValidationError(field, "must be finite");
  return d;
}

std::uint64_t get_unsigned(const json& v, const std::string& field) {
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  if (v.is_number_integer()) {
    throw ConfigValidationError(field, "must be non-negative");
  }
  throw ConfigValidationError(field, "expected an integer");
}

std::string get_string(const json& v, const std::string& field) {
  if (!v.is_string()) throw ConfigValidationError(field, "expected a string");
  return v.get<std::string>();
}

AnchorLayout parse_layout(const json& v, const std::string& field) {
  require_object(v, field);
  if (!v.contains("kind")) throw ConfigValidationError(field + ".kind", "missing");
  const std::string kind = get_string(v.at("kind"), field + ".kind");
  if (kind == "random") {
    reject_unknown_keys(v, {"kind"}, field);
    return RandomLayout{};
  }
  if (kind == "grid") {
    reject_unknown_keys(v, {"kind"}, field);
    return GridLayout{};
  }
  if (kind == "phi_chain_spiral") {
    reject_unknown_keys(v, {"kind", "d1"}, field);
    PhiChainLayout l;
    if (v.contains("d1")) l.d1 = get_number(v.at("d1"), field + ".d1");
    return l;
  }
  if (kind == "golden_angle_sunflower") {
    reject_unknown_keys(v, {"kind", "scale_c"}, field);
    SunflowerLayout l;
    if (v.contains("scale_c")) l.scale_c = get_number(v.at("scale_c"), field + ".scale_c");
    return l;
  }
  throw ConfigValidationError(field + ".kind", "unknown layout kind '" + kind + "'");
}

json layout_to_json(const AnchorLayout& layout) {
  json j{{"kind", layout_kind_name(layout)}};
  if (const auto* chain = std::get_if<PhiChainLayout>(&layout)) j["d1"] = chain->d1;
  if (const auto* sun = std::get_if<SunflowerLayout>(&layout); sun && sun->scale_c) {
    j["scale_c"] = *sun->scale_c;
  }
  return j;
}

void parse_multipliers(const json& v, std::array<double, 3>& out, const std::string& field) {
  require_object(v, field);
  for (const auto& [key, value] : v.items()) {
    Algorithm a;
    try {
      a = parse_algorithm(key);
    } catch (const std::invalid_argument&) {
      throw ConfigValidationError(field + "." + key, "unknown algorithm");
    }
    out[static_cast<std::size_t>(a)] = get_number(value, field + "." + key);
  }
}

void parse_energy(const json& v, EnergyParams& e) {
  require_object(v, "energy");
  reject_unknown_keys(v, {"e_tx", "e_rx", "tx_multiplier", "rx_multiplier"}, "energy");
  if (v.contains("e_tx")) e.e_tx_uj = get_number(v.at("e_tx"), "energy.e_tx");
  if (v.contains("e_rx")) e.e_rx_uj = get_number(v.at("e_rx"), "energy.e_rx");
  if (v.contains("tx_multiplier")) {
    parse_multipliers(v.at("tx_multiplier"), e.tx_multiplier, "energy.tx_multiplier");
  }
  if (v.contains("rx_multiplier")) {
    parse_multipliers(v.at("rx_multiplier"), e.rx_multiplier, "energy.rx_multiplier");
  }
}

void require_positive(double v, const std::string& field) {
  if (!(std::isfinite(v) && v > 0.0)) throw ConfigValidationError(field, "must be > 0");
}

}  // namespace

double ExperimentConfig::comm_range(Algorithm a) const {
  return algorithm_ranges(base_range_r, baseline_range).at(a);
}

void ExperimentConfig::validate() const {
  require_positive(field.width, "field.width");
  require_positive(field.height, "field.height");
  if (n_unknowns < 1) throw ConfigValidationError("n_unknowns", "must be >= 1");
  if (n_anchors < 3) throw ConfigValidationError("n_anchors", "must be >= 3");
  require_positive(base_range_r, "base_range_r");
  if (trials < 1) throw ConfigValidationError("trials", "must be >= 1");
  if (algorithms.empty()) throw ConfigValidationError("algorithms", "must not be empty");
  std::set<Algorithm> seen;
  for (Algorithm a : algorithms) {
    if (!seen.insert(a).second) {
      throw ConfigValidationError("algorithms",
                                  "duplicate entry '" + std::string(config_key(a)) + "'");
    }
  }
  for (Algorithm a : kAllAlgorithms) {
    const std::string f = "anchor_layout." + std::string(config_key(a));
    if (const auto* chain = std::get_if<PhiChainLayout>(&layout(a))) {
      require_positive(chain->d1, f + ".d1");
    }
    if (const auto* sun = std::get_if<SunflowerLayout>(&layout(a)); sun && sun->scale_c) {
      require_positive(*sun->scale_c, f + ".scale_c");
    }
  }
  require_positive(energy.e_tx_uj, "energy.e_tx");
  require_positive(energy.e_rx_uj, "energy.e_rx");
  for (Algorithm a : kAllAlgorithms) {
    require_positive(energy.tx(a), "energy.tx_multiplier." + std::string(config_key(a)));
    require_positive(energy.rx(a), "energy.rx_multiplier." + std::string(config_key(a)));
  }
}

ExperimentConfig parse_config(std::string_view json_text) {
  json root;
  try {
    root = json::parse(json_text.begin(), json_text.end());
  } catch (const json::parse_error& e) {
    throw ConfigParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!root.is_object()) throw ConfigParseError("configuration must be a JSON object");

  reject_unknown_keys(root,
                      {"field", "n_unknowns", "n_anchors", "base_range_r", "anchor_layout",
                       "baseline_range", "dvhop_hop_size", "energy", "trials", "master_seed",
                       "algorithms"},
                      "");

  ExperimentConfig cfg;
  if (root.contains("field")) {
    const json& f = require_object(root.at("field"), "field");
    reject_unknown_keys(f, {"width", "height"}, "field");
    // Assign members directly so validate() reports the field name.
    if (f.contains("width")) cfg.field.width = get_number(f.at("width"), "field.width");
    if (f.contains("height")) cfg.field.height = get_number(f.at("height"), "field.height");
  }
  if (root.contains("n_unknowns")) cfg.n_unknowns = get_unsigned(root.at("n_unknowns"), "n_unknowns");
  if (root.contains("n_anchors")) cfg.n_anchors = get_unsigned(root.at("n_anchors"), "n_anchors");
  if (root.contains("base_range_r")) {
    cfg.base_range_r = get_number(root.at("base_range_r"), "base_range_r");
  }
  if (root.contains("anchor_layout")) {
    const json& l = require_object(root.at("anchor_layout"), "anchor_layout");
    for (const auto& [key, value] : l.items()) {
      Algorithm a;
      try {
        a = parse_algorithm(key);
      } catch (const std::invalid_argument&) {
        throw ConfigValidationError("anchor_layout." + key, "unknown algorithm");
      }
      cfg.anchor_layout[static_cast<std::size_t>(a)] = parse_layout(value, "anchor_layout." + key);
    }
  }
  if (root.contains("baseline_range")) {
    const std::string v = get_string(root.at("baseline_range"), "baseline_range");
    if (v == "phi_scaled") {
      cfg.baseline_range = BaselineRange::PhiScaled;
    } else if (v == "base_r") {
      cfg.baseline_range = BaselineRange::BaseR;
    } else {
      throw ConfigValidationError("baseline_range", "expected 'phi_scaled' or 'base_r'");
    }
  }
  if (root.contains("dvhop_hop_size")) {
    const std::string v = get_string(root.at("dvhop_hop_size"), "dvhop_hop_size");
    if (v == "global") {
      cfg.dvhop_hop_size = HopSizeMode::Global;
    } else if (v == "per_anchor_nearest") {
      cfg.dvhop_hop_size = HopSizeMode::PerAnchorNearest;
    } else {
      throw ConfigValidationError("dvhop_hop_size", "expected 'global' or 'per_anchor_nearest'");
    }
  }
  if (root.contains("energy")) parse_energy(root.at("energy"), cfg.energy);
  if (root.contains("trials")) cfg.trials = get_unsigned(root.at("trials"), "trials");
  if (root.contains("master_seed")) cfg.master_seed = get_unsigned(root.at("master_seed"), "master_seed");
  if (root.contains("algorithms")) {
    const json& list = root.at("algorithms");
    if (!list.is_array()) throw ConfigValidationError("algorithms", "expected an array");
    cfg.algorithms.clear();
    for (const auto& item : list) {
      const std::string name = get_string(item, "algorithms");
      try {
        cfg.algorithms.push_back(parse_algorithm(name));
      } catch (const std::invalid_argument&) {
        throw ConfigValidationError("algorithms", "unknown algorithm '" + name + "'");
      }
    }
  }
  cfg.validate();
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(path, "cannot open configuration file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string config_to_json(const ExperimentConfig& c) {
  json layouts = json::object();
  json tx = json::object();
  json rx = json::object();
  for (Algorithm a : kAllAlgorithms) {
    const std::string key(config_key(a));
    layouts[key] = layout_to_json(c.layout(a));
    tx[key] = c.energy.tx(a);
    rx[key] = c.energy.rx(a);
  }
  json algos = json::array();
  for (Algorithm a : c.algorithms) algos.push_back(std::string(config_key(a)));

  json j{{"field", {{"width", c.field.width}, {"height", c.field.height}}},
         {"n_unknowns", c.n_unknowns},
         {"n_anchors", c.n_anchors},
         {"base_range_r", c.base_range_r},
         {"anchor_layout", layouts},
         {"baseline_range", c.baseline_range == BaselineRange::PhiScaled ? "phi_scaled" : "base_r"},
         {"dvhop_hop_size",
          c.dvhop_hop_size == HopSizeMode::Global ? "global" : "per_anchor_nearest"},
         {"energy", {{"e_tx", c.energy.e_tx_uj}, {"e_rx", c.energy.e_rx_uj},
                     {"tx_multiplier", tx}, {"rx_multiplier", rx}}},
         {"trials", c.trials},
         {"master_seed", c.master_seed},
         {"algorithms", algos}};
  return j.dump(2) + "\n";
}

}  // namespace wsnloc
