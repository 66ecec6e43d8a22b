#include "hamex/config.hpp"

#include "hamex/graph.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <istream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace hamex {

std::size_t SolverConfig::medium_high(std::size_t n) const {
  return static_cast<std::size_t>(
      std::pow(static_cast<double>(n), medium_high_exponent));
}

std::size_t SolverConfig::target_paths(std::size_t n) const {
  return std::max<std::size_t>(
      1, static_cast<std::size_t>(std::pow(static_cast<double>(n), theta)));
}

std::size_t SolverConfig::linking_width(std::size_t n) const {
  return std::max<std::size_t>(
      2, static_cast<std::size_t>(
             std::pow(static_cast<double>(n), link_exponent)));
}

SolverConfig load_config(std::istream& in) {
  SolverConfig cfg;
  std::map<std::string, std::function<void(const std::string&)>> setters;
  auto real = [](double& field) {
    return [&field](const std::string& s) { field = std::stod(s); };
  };
  auto count = [](std::size_t& field) {
    return [&field](const std::string& s) { field = std::stoull(s); };
  };
  setters["C"] = real(cfg.C);
  setters["C_prime"] = real(cfg.C_prime);
  setters["small_set_divisor"] = real(cfg.small_set_divisor);
  setters["expand_fraction_divisor"] = real(cfg.expand_fraction_divisor);
  setters["reach_floor_divisor"] = real(cfg.reach_floor_divisor);
  setters["expands_into_floor"] = count(cfg.expands_into_floor);
  setters["theta"] = real(cfg.theta);
  setters["medium_low"] = count(cfg.medium_low);
  setters["medium_high_exponent"] = real(cfg.medium_high_exponent);
  setters["mass_fraction"] = real(cfg.mass_fraction);
  setters["interior_mass_divisor"] = real(cfg.interior_mass_divisor);
  setters["depth_cap"] = count(cfg.depth_cap);
  setters["link_exponent"] = real(cfg.link_exponent);
  setters["gadget_marked"] = count(cfg.gadget_marked);
  setters["gadget_path_len"] = count(cfg.gadget_path_len);
  setters["cert_len_low"] = count(cfg.cert_len_low);
  setters["cert_len_high"] = count(cfg.cert_len_high);
  setters["connector_len"] = count(cfg.connector_len);
  setters["ext_degree"] = count(cfg.ext_degree);
  setters["ext_margin"] = count(cfg.ext_margin);
  setters["embed_retries"] = count(cfg.embed_retries);
  setters["exact_cap"] = count(cfg.exact_cap);
  setters["s_max"] = count(cfg.s_max);
  setters["sample_count"] = count(cfg.sample_count);
  setters["dense_eigen_cap"] = count(cfg.dense_eigen_cap);
  setters["power_tol"] = real(cfg.power_tol);
  setters["power_iter_cap"] = count(cfg.power_iter_cap);
  setters["fallback_first_threshold"] = count(cfg.fallback_first_threshold);
  setters["posa_restarts"] = count(cfg.posa_restarts);
  setters["posa_round_budget"] = count(cfg.posa_round_budget);
  setters["seed"] = [&cfg](const std::string& s) { cfg.seed = std::stoull(s); };

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto eq = line.find('=');
    if (eq == std::string::npos) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      throw InvalidInput("config line " + std::to_string(lineno) +
                               ": expected key=value");
    }
    auto trim = [](std::string s) {
      auto a = s.find_first_not_of(" \t\r");
      auto b = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    std::string key = trim(line.substr(0, eq));
    std::string val = trim(line.substr(eq + 1));
    auto it = setters.find(key);
    if (it == setters.end()) {
      throw InvalidInput("config line " + std::to_string(lineno) +
                               ": unknown key \"" + key + "\"");
    }
    it->second(val);
  }
  return cfg;
}

SolverConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open config " + path);
  return load_config(in);
}

}  // namespace hamex
