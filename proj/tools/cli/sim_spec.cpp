#include "sim_spec.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "dimfree/errors.hpp"
#include "dimfree/matrix_io.hpp"
#include "dimfree/weights.hpp"

namespace dimfree::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& v) {
  std::vector<std::string> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

double to_real(const std::string& key, const std::string& v) {
  std::size_t used = 0;
  double d = 0.0;
  try {
    d = std::stod(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != v.size() || !std::isfinite(d)) throw ParseError("'" + key + "' needs a number, got '" + v + "'", 0);
  return d;
}

bool to_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw ParseError("'" + key + "' needs true or false, got '" + v + "'", 0);
}

}  // namespace

SimFile parse_sim_spec(const std::string& text, const std::string& base_dir) {
  static const char* known[] = {"structure", "M", "B", "C", "x0", "horizon", "T", "dt", "u", "eta",
                                "control_period", "disturbance_period", "weighted", "output"};
  std::map<std::string, std::string> kv;
  std::stringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ParseError("line " + std::to_string(lineno) + ": expected key = value", 1);
    }
    const std::string key = trim(line.substr(0, eq));
    bool ok = false;
    for (const char* k : known) ok = ok || key == k;
    if (!ok) throw ParseError("line " + std::to_string(lineno) + ": unknown key '" + key + "'", 1);
    if (kv.count(key)) throw ParseError("line " + std::to_string(lineno) + ": duplicate key '" + key + "'", 1);
    kv[key] = trim(line.substr(eq + 1));
  }

  auto path = [&](const std::string& p) {
    const std::filesystem::path fp(p);
    return fp.is_absolute() || base_dir.empty() ? p : (std::filesystem::path(base_dir) / fp).string();
  };
  auto mats = [&](const char* key) {
    std::vector<Mat> out;
    if (auto it = kv.find(key); it != kv.end())
      for (const auto& f : split_list(it->second)) out.push_back(read_matrix(path(f)));
    return out;
  };
  auto vecs = [&](const char* key) {
    std::vector<HVec> out;
    for (const Mat& m : mats(key)) {
      if (m.cols() != 1) throw ShapeError(std::string(key) + " entries must be column vectors, got " + to_string(shape_of(m)));
      out.push_back(as_hvec(m));
    }
    return out;
  };

  SimFile sim;
  SystemSpec& s = sim.system;
  if (!kv.count("structure")) throw ParseError("missing 'structure'", 0);
  s.structure = parse_structure(kv["structure"]);
  s.M = mats("M");
  if (s.M.empty()) throw ParseError("missing 'M'", 0);
  s.B = mats("B");
  s.C = mats("C");
  const auto x0 = vecs("x0");
  if (x0.size() != 1) throw ParseError("'x0' needs exactly one vector file", 0);
  s.x0 = x0.front();
  sim.u = vecs("u");
  sim.eta = vecs("eta");
  if (kv.count("weighted")) s.weighted = to_bool("weighted", kv["weighted"]);
  if (kv.count("output")) sim.output = path(kv["output"]);

  const bool has_h = kv.count("horizon") > 0, has_T = kv.count("T") > 0;
  if (has_h == has_T) throw ParseError("give either 'horizon' (discrete) or 'T' and 'dt' (continuous)", 0);
  if (has_h) {
    const double h = to_real("horizon", kv["horizon"]);
    if (h < 0 || h != std::floor(h)) throw ParseError("'horizon' needs a non-negative integer", 0);
    s.horizon = static_cast<Index>(h);
  } else {
    sim.continuous = true;
    s.T = to_real("T", kv["T"]);
    if (!kv.count("dt")) throw ParseError("continuous runs need 'dt'", 0);
    s.dt = to_real("dt", kv["dt"]);
    if (kv.count("control_period")) sim.control_period = to_real("control_period", kv["control_period"]);
    if (kv.count("disturbance_period"))
      sim.disturbance_period = to_real("disturbance_period", kv["disturbance_period"]);
  }
  return sim;
}

SimFile read_sim_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open simulation spec '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_sim_spec(ss.str(), std::filesystem::path(path).parent_path().string());
}

Trajectory run_simulation(const SimFile& sim) {
  if (!sim.continuous) {
    DiscreteSignal u, eta;
    if (!sim.u.empty()) u = [&](Index k) { return sim.u[static_cast<std::size_t>(k) % sim.u.size()]; };
    if (!sim.eta.empty()) eta = [&](Index k) { return sim.eta[static_cast<std::size_t>(k) % sim.eta.size()]; };
    return simulate_discrete(sim.system, u, eta);
  }
  // Piecewise constant in time; a zero period holds the first entry.
  auto piecewise = [](const std::vector<HVec>& seq, double period) -> ContinuousSignal {
    if (seq.empty()) return {};
    return [&seq, period](double t) {
      if (period <= 0.0) return seq.front();
      const auto k = static_cast<std::size_t>(std::floor(t / period + 1e-12));
      return seq[k % seq.size()];
    };
  };
  return simulate_continuous(sim.system, piecewise(sim.u, sim.control_period),
                             piecewise(sim.eta, sim.disturbance_period));
}

}  // namespace dimfree::cli
