#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "orientx/errors.hpp"
#include "orientx/io.hpp"

namespace orientx {

using nlohmann::json;

namespace {

constexpr const char* kConvention = "gray-gubbins-passive";

struct FamilyName {
  Family family;
  const char* name;
};

constexpr FamilyName kFamilies[] = {
    {Family::circular, "circular"},       {Family::spherical, "spherical"},
    {Family::wigner, "wigner"},           {Family::cartesian2d, "cartesian2d"},
    {Family::cartesian3d, "cartesian3d"}, {Family::cartesian_biaxial, "cartesian_biaxial"},
};

json entry(std::vector<int> index, Complex v) {
  return json{{"index", std::move(index)}, {"re", v.real()}, {"im", v.imag()}};
}

void add_tensor_entries(json& entries, int l, const ComplexTensor& t) {
  for_each_index(t.dim(), t.rank(), [&](std::span<const int> idx) {
    std::vector<int> index{l};
    for (int i : idx) {
      index.push_back(i + 1);
    }
    entries.push_back(entry(std::move(index), t(idx)));
  });
}

[[noreturn]] void parse_fail(const std::string& what) { throw ParseError(what); }

}  // namespace

std::string family_name(Family f) {
  for (const auto& fn : kFamilies) {
    if (fn.family == f) return fn.name;
  }
  return "?";
}

Family parse_family(const std::string& name) {
  for (const auto& fn : kFamilies) {
    if (name == fn.name) return fn.family;
  }
  parse_fail("unknown family '" + name +
             "' (expected circular, spherical, wigner, cartesian2d, cartesian3d or cartesian_biaxial)");
}

Family family_of(const AnyCoeffs& c) {
  switch (c.index()) {
    case 0:
      return Family::circular;
    case 1:
      return Family::spherical;
    case 2:
      return Family::wigner;
    case 3:
      return std::get<CartesianCoeffsUniaxial>(c).dim == 2 ? Family::cartesian2d : Family::cartesian3d;
    default:
      return Family::cartesian_biaxial;
  }
}

int max_order_of(const AnyCoeffs& c) {
  return std::visit(
      [](const auto& v) {
        if constexpr (requires { v.max_order(); }) {
          return v.max_order();
        } else {
          return v.max_order;
        }
      },
      c);
}

std::string coefficients_to_json(const AnyCoeffs& c, const std::string& generator) {
  json entries = json::array();
  bool real = false;
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        real = v.real;
        if constexpr (std::is_same_v<T, CircularCoeffs>) {
          for (int k = -v.max_order(); k <= v.max_order(); ++k) entries.push_back(entry({k}, v.at(k)));
        } else if constexpr (std::is_same_v<T, SphericalCoeffs>) {
          for (int l = 0; l <= v.max_order(); ++l)
            for (int m = -l; m <= l; ++m) entries.push_back(entry({l, m}, v.at(l, m)));
        } else if constexpr (std::is_same_v<T, WignerCoeffs>) {
          for (int l = 0; l <= v.max_order(); ++l)
            for (int m = -l; m <= l; ++m)
              for (int n = -l; n <= l; ++n) entries.push_back(entry({l, m, n}, v.at(l, m, n)));
        } else {
          for (int l = 0; l <= v.max_order; ++l) add_tensor_entries(entries, l, v.orders[static_cast<std::size_t>(l)]);
        }
      },
      c);
  json doc{{"family", family_name(family_of(c))},
           {"max_order", max_order_of(c)},
           {"real", real},
           {"generator", generator},
           {"convention", kConvention},
           {"entries", std::move(entries)}};
  return doc.dump(2) + "\n";
}

namespace {

int json_int(const json& v, const std::string& where) {
  if (!v.is_number_integer()) parse_fail(where + " must be an integer");
  return v.get<int>();
}

double json_number(const json& v, const std::string& where) {
  if (!v.is_number()) parse_fail(where + " must be a number");
  return v.get<double>();
}

bool in_range(int v, int lo, int hi) { return v >= lo && v <= hi; }

}  // namespace

AnyCoeffs coefficients_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    parse_fail(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) parse_fail("coefficient file must be a JSON object");
  for (const char* key : {"family", "max_order", "real", "entries"}) {
    if (!doc.contains(key)) parse_fail(std::string("missing field '") + key + "'");
  }
  if (!doc["family"].is_string()) parse_fail("field 'family' must be a string");
  const Family family = parse_family(doc["family"].get<std::string>());
  const int L = json_int(doc["max_order"], "field 'max_order'");
  if (L < 0) throw DomainError("field 'max_order' must be non-negative");
  if (!doc["real"].is_boolean()) parse_fail("field 'real' must be a boolean");
  const bool real = doc["real"].get<bool>();
  if (doc.contains("convention") && doc["convention"] != kConvention) {
    parse_fail(std::string("field 'convention' must be '") + kConvention + "'");
  }
  if (!doc["entries"].is_array()) parse_fail("field 'entries' must be an array");

  AnyCoeffs out;
  switch (family) {
    case Family::circular:
      out = CircularCoeffs(L);
      break;
    case Family::spherical:
      out = SphericalCoeffs(L);
      break;
    case Family::wigner:
      out = WignerCoeffs(L);
      break;
    case Family::cartesian2d:
      out = CartesianCoeffsUniaxial(2, L);
      break;
    case Family::cartesian3d:
      out = CartesianCoeffsUniaxial(3, L);
      break;
    case Family::cartesian_biaxial:
      out = CartesianCoeffsBiaxial(L);
      break;
  }

  std::set<std::vector<int>> seen;
  std::size_t count = 0;
  for (const auto& e : doc["entries"]) {
    const std::string where = "entries[" + std::to_string(count++) + "]";
    if (!e.is_object() || !e.contains("index") || !e.contains("re")) parse_fail(where + " needs 'index' and 're'");
    if (!e["index"].is_array()) parse_fail(where + ".index must be an array");
    std::vector<int> index;
    for (const auto& v : e["index"]) index.push_back(json_int(v, where + ".index"));
    const double re = json_number(e["re"], where + ".re");
    const double im = e.contains("im") ? json_number(e["im"], where + ".im") : 0.0;
    const Complex value(re, im);
    if (!seen.insert(index).second) parse_fail(where + ": duplicate index");
    auto bad_index = [&]() { parse_fail(where + ".index out of range for family " + family_name(family)); };
    std::visit(
        [&](auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, CircularCoeffs>) {
            if (index.size() != 1 || !in_range(index[0], -L, L)) bad_index();
            v.at(index[0]) = value;
          } else if constexpr (std::is_same_v<T, SphericalCoeffs>) {
            if (index.size() != 2 || !in_range(index[0], 0, L) || !in_range(index[1], -index[0], index[0]))
              bad_index();
            v.at(index[0], index[1]) = value;
          } else if constexpr (std::is_same_v<T, WignerCoeffs>) {
            if (index.size() != 3 || !in_range(index[0], 0, L) || !in_range(index[1], -index[0], index[0]) ||
                !in_range(index[2], -index[0], index[0]))
              bad_index();
            v.at(index[0], index[1], index[2]) = value;
          } else {
            if (index.empty() || !in_range(index[0], 0, L)) bad_index();
            const int l = index[0];
            auto& t = v.orders[static_cast<std::size_t>(l)];
            if (static_cast<int>(index.size()) != 1 + t.rank()) bad_index();
            std::vector<int> idx(index.begin() + 1, index.end());
            for (auto& i : idx) {
              if (!in_range(i, 1, t.dim())) bad_index();
              --i;
            }
            t(idx) = value;
          }
        },
        out);
  }
  std::visit(
      [&](auto& v) {
        v.real = real;
        if (real) {
          const double defect = reality_defect(v);
          if (defect > 1e-10) {
            std::ostringstream msg;
            msg << "coefficients tagged real violate the reality relation by " << defect;
            throw InvariantError(msg.str());
          }
        }
      },
      out);
  return out;
}

void write_text_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp" + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw DomainError("cannot open '" + tmp.string() + "' for writing");
    out << content;
    out.flush();
    if (!out) {
      out.close();
      std::error_code ec;
      fs::remove(tmp, ec);
      throw DomainError("failed writing '" + tmp.string() + "'");
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw DomainError("cannot move output into place at '" + path + "'");
  }
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_coefficients(const std::string& path, const AnyCoeffs& c, const std::string& generator) {
  write_text_atomic(path, coefficients_to_json(c, generator));
}

AnyCoeffs read_coefficients(const std::string& path) { return coefficients_from_json(read_text(path)); }

}  // namespace orientx
