#include <algorithm>
#include <charconv>
#include <optional>
#include <sstream>

#include <nlohmann/json.hpp>

#include "orientx/errors.hpp"
#include "orientx/io.hpp"

namespace orientx {

using nlohmann::json;

namespace {

enum class Layout { uniaxial2d, uniaxial3d, biaxial };

const std::vector<std::string>& columns(Layout k) {
  static const std::vector<std::string> c2{"x", "y", "phi"};
  static const std::vector<std::string> c3{"x", "y", "z", "theta", "phi"};
  static const std::vector<std::string> cb{"x", "y", "z", "theta", "phi", "chi"};
  switch (k) {
    case Layout::uniaxial2d:
      return c2;
    case Layout::uniaxial3d:
      return c3;
    default:
      return cb;
  }
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(trim(cell));
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

Layout layout_from_header(const std::vector<std::string>& header, const std::string& where) {
  for (Layout k : {Layout::uniaxial2d, Layout::uniaxial3d, Layout::biaxial}) {
    if (header == columns(k)) return k;
  }
  throw ParseError(where + ": expected columns x,y,phi or x,y,z,theta,phi or x,y,z,theta,phi,chi");
}

ParticleSnapshot make_snapshot(Layout k) {
  switch (k) {
    case Layout::uniaxial2d:
      return ParticleSnapshot(2, false);
    case Layout::uniaxial3d:
      return ParticleSnapshot(3, false);
    default:
      return ParticleSnapshot(3, true);
  }
}

// values in column order
void add_record(ParticleSnapshot& s, Layout k, const std::vector<double>& v, const std::string& where) {
  try {
    if (k == Layout::uniaxial2d) {
      s.add(Eigen::Vector2d(v[0], v[1]), unit_vector_2d(PolarAngle2D(v[2])));
    } else if (k == Layout::uniaxial3d) {
      s.add(Eigen::Vector3d(v[0], v[1], v[2]), unit_vector_3d(SphericalAngles(v[3], v[4])));
    } else {
      s.add(Eigen::Vector3d(v[0], v[1], v[2]), rotation_matrix_3d(EulerAngles(v[3], v[4], v[5])));
    }
  } catch (const DomainError& e) {
    throw DomainError(where + ": " + e.what());
  }
}

double parse_number(const std::string& cell, const std::string& where) {
  double v = 0.0;
  const char* first = cell.data();
  const char* last = cell.data() + cell.size();
  if (!cell.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || cell.empty()) {
    throw ParseError(where + ": '" + cell + "' is not a number");
  }
  return v;
}

}  // namespace

ParticleSnapshot parse_snapshot_csv(const std::string& text) {
  std::stringstream in(text);
  std::string line;
  int lineno = 0;
  std::optional<Layout> layout;
  std::optional<ParticleSnapshot> snap;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const std::string where = "line " + std::to_string(lineno);
    const auto cells = split(t);
    if (!layout) {
      layout = layout_from_header(cells, where);
      snap.emplace(make_snapshot(*layout));
      continue;
    }
    if (cells.size() != columns(*layout).size()) {
      throw ParseError(where + ": expected " + std::to_string(columns(*layout).size()) + " values");
    }
    std::vector<double> v;
    for (const auto& c : cells) v.push_back(parse_number(c, where));
    add_record(*snap, *layout, v, where);
  }
  if (!snap) throw ParseError("snapshot CSV has no header");
  return *snap;
}

ParticleSnapshot parse_snapshot_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("particles") || !doc["particles"].is_array()) {
    throw ParseError("snapshot JSON needs a 'particles' array");
  }
  const auto& particles = doc["particles"];
  if (particles.empty()) throw ParseError("snapshot JSON has no particles (layout cannot be inferred)");
  std::optional<Layout> layout;
  std::optional<ParticleSnapshot> snap;
  std::size_t n = 0;
  for (const auto& p : particles) {
    const std::string where = "particles[" + std::to_string(n++) + "]";
    if (!p.is_object()) throw ParseError(where + " must be an object");
    std::vector<std::string> keys;
    for (const auto& [key, _] : p.items()) keys.push_back(key);
    std::optional<Layout> found;
    for (Layout k : {Layout::uniaxial2d, Layout::uniaxial3d, Layout::biaxial}) {
      auto cols = columns(k);
      auto sorted_keys = keys;
      std::sort(cols.begin(), cols.end());
      std::sort(sorted_keys.begin(), sorted_keys.end());
      if (cols == sorted_keys) found = k;
    }
    if (!found) throw ParseError(where + ": keys must be x,y,phi or x,y,z,theta,phi or x,y,z,theta,phi,chi");
    if (!layout) {
      layout = found;
      snap.emplace(make_snapshot(*layout));
    } else if (*layout != *found) {
      throw ParseError(where + ": particle layout differs from the first particle");
    }
    std::vector<double> v;
    for (const auto& c : columns(*layout)) {
      if (!p[c].is_number()) throw ParseError(where + "." + c + " must be a number");
      v.push_back(p[c].get<double>());
    }
    add_record(*snap, *layout, v, where);
  }
  return *snap;
}

ParticleSnapshot read_snapshot(const std::string& path) {
  const std::string text = read_text(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return parse_snapshot_json(text);
  return parse_snapshot_csv(text);
}

namespace {

json tensor_json(const RealTensor& t) {
  json values = json::array();
  for (double v : t.data()) values.push_back(v);
  return json{{"shape", std::vector<int>(static_cast<std::size_t>(t.rank()), t.dim())}, {"values", values}};
}

json summary_json(const OrderParameterSummary& s) {
  json out{{"rho_total", s.rho_total}, {"P", tensor_json(s.P)}, {"Q", tensor_json(s.Q)}};
  if (!s.biaxial) {
    const NematicAnalysis a = nematic_analysis(s.Q);
    out["nematic"] = json{{"eigenvalues", std::vector<double>(a.eigenvalues.data(), a.eigenvalues.data() + a.eigenvalues.size())},
                          {"director", std::vector<double>(a.director.data(), a.director.data() + a.director.size())},
                          {"degenerate", a.degenerate}};
  }
  return out;
}

}  // namespace

std::string summary_to_json(const OrderParameterSummary& s, bool head_tail) {
  json doc{{"dimension", s.dim}, {"biaxial", s.biaxial}, {"head_tail", head_tail && !s.biaxial},
           {"summary", summary_json(s)}};
  return doc.dump(2) + "\n";
}

std::string field_to_json(const OrderParameterField& f, bool head_tail) {
  const int d = static_cast<int>(f.grid.cells.size());
  json cells = json::array();
  for (std::size_t k = 0; k < f.cells.size(); ++k) {
    std::vector<int> index(static_cast<std::size_t>(d));
    std::size_t rest = k;
    for (int a = d - 1; a >= 0; --a) {
      const auto n = static_cast<std::size_t>(f.grid.cells[static_cast<std::size_t>(a)]);
      index[static_cast<std::size_t>(a)] = static_cast<int>(rest % n);
      rest /= n;
    }
    json c = summary_json(f.cells[k]);
    c["cell"] = index;
    cells.push_back(std::move(c));
  }
  const bool biaxial = !f.cells.empty() && f.cells.front().biaxial;
  json doc{{"dimension", d},
           {"biaxial", biaxial},
           {"head_tail", head_tail && !biaxial},
           {"grid",
            {{"origin", std::vector<double>(f.grid.origin.data(), f.grid.origin.data() + f.grid.origin.size())},
             {"size", std::vector<double>(f.grid.size.data(), f.grid.size.data() + f.grid.size.size())},
             {"cells", f.grid.cells}}},
           {"cell_volume", f.cell_volume},
           {"cells", std::move(cells)}};
  return doc.dump(2) + "\n";
}

}  // namespace orientx
