// Copyright 2026 The Fourier Characterization Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fourier/json_io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace fourier::io {

namespace {

std::string indexed(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

const char* type_name(const Json& j) { return j.type_name(); }

Json group_to_json(const Group& g) {
  Json arr = Json::array();
  for (auto f : g.factors()) arr.push_back(f);
  return arr;
}

Group group_from_json(const Json& j, const std::string& path) {
  const Json& arr = array_from_json(j, path);
  if (arr.empty()) throw SchemaError(path, "group needs at least one factor");
  std::vector<std::int64_t> factors;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const auto n = integer_from_json(arr[i], indexed(path, i));
    if (n < 1) throw SchemaError(indexed(path, i), "modulus must be >= 1");
    factors.push_back(n);
  }
  return Group(std::move(factors));
}

std::vector<Complex> complex_list(const Json& j, const std::string& path) {
  const Json& arr = array_from_json(j, path);
  std::vector<Complex> out;
  out.reserve(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) {
    out.push_back(complex_from_json(arr[i], indexed(path, i)));
  }
  return out;
}

Json complex_list_to_json(std::span<const Complex> v) {
  Json arr = Json::array();
  for (const Complex& z : v) arr.push_back(complex_to_json(z));
  return arr;
}

Json with_schema(bool top_level) {
  Json j = Json::object();
  if (top_level) j["schema"] = kSchemaVersion;
  return j;
}

}  // namespace

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError("$", std::string("malformed JSON: ") + e.what());
  }
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("IoError", "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void write_file(const std::string& path, const Json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("IoError", "cannot write " + path);
  out << dump(j);
  if (!out) throw Error("IoError", "write failed for " + path);
}

ObjectReader::ObjectReader(const Json& j, std::string path, std::vector<std::string> allowed,
                           bool top_level)
    : j_(j), path_(std::move(path)) {
  if (!j_.is_object()) {
    throw SchemaError(path_, std::string("expected object, got ") + type_name(j_));
  }
  if (top_level) {
    if (!j_.contains("schema")) throw SchemaError(path_ + ".schema", "missing field");
    if (integer_from_json(j_["schema"], path_ + ".schema") != kSchemaVersion) {
      throw SchemaError(path_ + ".schema", "unsupported version");
    }
  }
  for (const auto& [key, value] : j_.items()) {
    if (key == "schema") continue;
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw SchemaError(path_ + "." + key, "unknown field");
    }
  }
}

bool ObjectReader::has(const std::string& key) const { return j_.contains(key); }

const Json& ObjectReader::get(const std::string& key) const {
  if (!j_.contains(key)) throw SchemaError(child(key), "missing field");
  return j_[key];
}

std::int64_t ObjectReader::integer(const std::string& key) const {
  return integer_from_json(get(key), child(key));
}

double ObjectReader::real(const std::string& key) const {
  return real_from_json(get(key), child(key));
}

bool ObjectReader::boolean(const std::string& key) const {
  const Json& v = get(key);
  if (!v.is_boolean()) throw SchemaError(child(key), "expected boolean");
  return v.get<bool>();
}

std::string ObjectReader::string(const std::string& key) const {
  const Json& v = get(key);
  if (!v.is_string()) throw SchemaError(child(key), "expected string");
  return v.get<std::string>();
}

std::int64_t integer_from_json(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) {
    throw SchemaError(path, std::string("expected integer, got ") + type_name(j));
  }
  return j.get<std::int64_t>();
}

double real_from_json(const Json& j, const std::string& path) {
  if (!j.is_number()) throw SchemaError(path, std::string("expected number, got ") + type_name(j));
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw SchemaError(path, "non-finite number");
  return v;
}

const Json& array_from_json(const Json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path, std::string("expected array, got ") + type_name(j));
  return j;
}

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j, const std::string& path) {
  const Json& arr = array_from_json(j, path);
  if (arr.size() != 2) throw SchemaError(path, "complex value must be [re, im]");
  return {real_from_json(arr[0], indexed(path, 0)), real_from_json(arr[1], indexed(path, 1))};
}

Json to_json(const Signal& s, bool top_level) {
  Json j = with_schema(top_level);
  j["group"] = group_to_json(s.group());
  j["values"] = complex_list_to_json(s.values());
  return j;
}

Signal signal_from_json(const Json& j, const std::string& path, bool top_level) {
  const ObjectReader r(j, path, {"group", "values"}, top_level);
  const Group g = group_from_json(r.get("group"), r.child("group"));
  auto values = complex_list(r.get("values"), r.child("values"));
  if (values.size() != g.order()) {
    throw SchemaError(r.child("values"), "expected " + std::to_string(g.order()) +
                                             " values, got " + std::to_string(values.size()));
  }
  return Signal(g, std::move(values));
}

Json to_json(const Operator& t, bool top_level) {
  const Matrix& m = t.table();
  Json j = with_schema(top_level);
  j["group"] = group_to_json(t.group());
  Json cols = Json::array();
  for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(complex_list_to_json(m.column(c)));
  j["columns"] = std::move(cols);
  return j;
}

Operator operator_from_json(const Json& j, const std::string& path, bool top_level) {
  const ObjectReader r(j, path, {"group", "columns", "builtin"}, top_level);
  const Group g = group_from_json(r.get("group"), r.child("group"));
  if (r.has("builtin")) {
    if (r.has("columns")) throw SchemaError(r.child("columns"), "not allowed with builtin");
    return builtin_operator(g, r.get("builtin"), r.child("builtin"));
  }
  const std::string cpath = r.child("columns");
  const Json& cols = array_from_json(r.get("columns"), cpath);
  const std::size_t n = g.order();
  if (cols.size() != n) {
    throw SchemaError(cpath, "expected " + std::to_string(n) + " columns, got " +
                                 std::to_string(cols.size()));
  }
  Matrix m(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    const auto col = complex_list(cols[c], indexed(cpath, c));
    if (col.size() != n) {
      throw SchemaError(indexed(cpath, c), "expected " + std::to_string(n) + " entries, got " +
                                               std::to_string(col.size()));
    }
    for (std::size_t row = 0; row < n; ++row) m(row, c) = col[row];
  }
  return Operator::dense(g, std::move(m));
}

Operator builtin_operator(const Group& group, const Json& desc, const std::string& path) {
  const ObjectReader r(desc, path, {"name", "c", "factor", "eta", "conjugate"}, false);
  const std::string name = r.string("name");
  auto no_params = [&](std::initializer_list<const char*> keys) {
    for (const char* k : keys) {
      if (r.has(k)) throw SchemaError(r.child(k), "not a parameter of " + name);
    }
  };
  try {
    if (name == "identity" || name == "dft" || name == "idft" || name == "unitary-dft") {
      no_params({"c", "factor", "eta", "conjugate"});
      if (name == "identity") return identity_operator(group);
      if (name == "dft") return dft_operator(group);
      if (name == "idft") return idft_operator(group);
      return unitary_dft_operator(group);
    }
    if (name == "scale") {
      no_params({"factor", "eta", "conjugate"});
      const Complex c = complex_from_json(r.get("c"), r.child("c"));
      return Operator::blackbox(
          group, [c](const Signal& a) { return fourier::scale(a, c); }, true);
    }
    if (name == "dilate") {
      no_params({"c", "eta", "conjugate"});
      const std::int64_t factor = r.integer("factor");
      const std::int64_t n = group.require_cyclic("dilate");
      return Operator::blackbox(
          group,
          [factor, n](const Signal& a) {
            std::vector<Complex> v(a.size());
            for (std::int64_t j = 0; j < n; ++j) v[static_cast<std::size_t>(j)] = a.at(factor * j);
            return Signal(a.group(), std::move(v));
          },
          true);
    }
    if (name == "exchange" || name == "fourier-exchange") {
      no_params({"c", "factor"});
      const std::int64_t eta = r.integer("eta");
      const bool conj = r.has("conjugate") && r.boolean("conjugate");
      return name == "exchange" ? exchange_map(group, eta, conj)
                                : fourier_exchange_map(group, eta, conj);
    }
  } catch (const ArgumentError& e) {
    throw SchemaError(path, e.what());
  }
  throw SchemaError(r.child("name"), "unknown builtin '" + name + "'");
}

Json to_json(const Witness& w) {
  Json j = Json::object();
  j["description"] = w.description;
  Json inputs = Json::array();
  for (const Signal& s : w.inputs) inputs.push_back(to_json(s, false));
  j["inputs"] = std::move(inputs);
  j["lhs"] = complex_list_to_json(w.lhs);
  j["rhs"] = complex_list_to_json(w.rhs);
  return j;
}

Json to_json(const AxiomReport& r) {
  Json j = Json::object();
  j["passed"] = r.passed;
  j["max_residual"] = r.max_residual;
  j["tolerance"] = r.tolerance;
  j["witness"] = r.witness ? to_json(*r.witness) : Json(nullptr);
  j["notes"] = r.notes;
  return j;
}

Json to_json(const ConvClassification& c) {
  Json j = Json::object();
  j["support"] = c.support;
  Json sigma = Json::array();
  for (const auto& [eta, s] : c.sigma) sigma.push_back(Json::array({eta, s}));
  j["sigma"] = std::move(sigma);
  j["residual"] = c.residual;
  return j;
}

Json to_json(const ExchangeClassification& c) {
  Json j = Json::object();
  j["eta"] = c.eta;
  j["conjugate"] = c.conjugate;
  j["variant"] = to_string(c.variant);
  j["residual"] = c.residual;
  return j;
}

Json to_json(const IntertwinerClassification& c) {
  Json j = Json::object();
  j["k0"] = c.k0;
  j["m0"] = c.m0;
  j["m1"] = c.m1;
  j["c"] = complex_to_json(c.c);
  j["residual"] = c.residual;
  return j;
}

Json to_json(const PhaseFunction& phi) { return Json(phi.turns()); }

PhaseFunction phase_function_from_json(const Json& j, const std::string& path) {
  const Json& arr = array_from_json(j, path);
  std::vector<double> turns;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    turns.push_back(real_from_json(arr[i], indexed(path, i)));
  }
  return PhaseFunction::from_turns(turns);
}

Json to_json(const torus::KernelFamily& fam, bool top_level) {
  Json j = with_schema(top_level);
  j["M"] = fam.grid_size;
  j["N"] = fam.window;
  Json kernels = Json::array();
  for (std::int64_t xi = -fam.window; xi <= fam.window; ++xi) {
    kernels.push_back(Json::array({xi, complex_list_to_json(fam.at(xi))}));
  }
  j["kernels"] = std::move(kernels);
  return j;
}

torus::KernelFamily kernel_family_from_json(const Json& j, const std::string& path,
                                            bool top_level) {
  const ObjectReader r(j, path, {"M", "N", "kernels"}, top_level);
  const std::int64_t m = r.integer("M");
  const std::int64_t n = r.integer("N");
  if (m < 2) throw SchemaError(r.child("M"), "grid size must be >= 2");
  if (n < 0) throw SchemaError(r.child("N"), "window must be >= 0");
  torus::KernelFamily fam;
  fam.grid_size = static_cast<std::size_t>(m);
  fam.window = n;
  fam.kernels.assign(static_cast<std::size_t>(2 * n + 1), {});
  std::vector<bool> seen(fam.kernels.size(), false);

  const std::string kpath = r.child("kernels");
  const Json& arr = array_from_json(r.get("kernels"), kpath);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string epath = indexed(kpath, i);
    const Json& entry = array_from_json(arr[i], epath);
    if (entry.size() != 2) throw SchemaError(epath, "kernel entry must be [xi, values]");
    const std::int64_t xi = integer_from_json(entry[0], indexed(epath, 0));
    if (xi < -n || xi > n) throw SchemaError(indexed(epath, 0), "frequency outside window");
    const auto slot = static_cast<std::size_t>(xi + n);
    if (seen[slot]) throw SchemaError(indexed(epath, 0), "duplicate frequency");
    auto values = complex_list(entry[1], indexed(epath, 1));
    if (values.size() != fam.grid_size) {
      throw SchemaError(indexed(epath, 1), "expected " + std::to_string(m) + " samples");
    }
    fam.kernels[slot] = std::move(values);
    seen[slot] = true;
  }
  // frequencies left out have the zero kernel
  for (std::size_t s = 0; s < seen.size(); ++s) {
    if (!seen[s]) fam.kernels[s].assign(fam.grid_size, 0.0);
  }
  return fam;
}

Json to_json(const torus::TorusClassification& c) {
  Json j = Json::object();
  j["support"] = c.support;
  Json phi = Json::array();
  for (const auto& [xi, p] : c.freq_map) phi.push_back(Json::array({xi, p}));
  j["phi"] = std::move(phi);
  j["residual"] = c.residual;
  return j;
}

Json to_json(const twisted::PhaseSpaceFunction& f, bool top_level) {
  Json j = with_schema(top_level);
  j["L"] = f.grid().half_width();
  j["S"] = f.grid().side();
  Json rows = Json::array();
  for (std::size_t i = 0; i < f.grid().side(); ++i) {
    rows.push_back(complex_list_to_json(f.values().row(i)));
  }
  j["values"] = std::move(rows);
  return j;
}

twisted::PhaseSpaceFunction phase_space_from_json(const Json& j, const std::string& path,
                                                  bool top_level) {
  const ObjectReader r(j, path, {"L", "S", "values"}, top_level);
  const double l = r.real("L");
  const std::int64_t s = r.integer("S");
  if (!(l > 0.0)) throw SchemaError(r.child("L"), "half width must be positive");
  if (s < 2 || s % 2 != 0) throw SchemaError(r.child("S"), "side count must be even and >= 2");
  const auto side = static_cast<std::size_t>(s);
  const std::string vpath = r.child("values");
  const Json& rows = array_from_json(r.get("values"), vpath);
  if (rows.size() != side) throw SchemaError(vpath, "expected " + std::to_string(s) + " rows");
  Matrix m(side, side);
  for (std::size_t i = 0; i < side; ++i) {
    const auto row = complex_list(rows[i], indexed(vpath, i));
    if (row.size() != side) {
      throw SchemaError(indexed(vpath, i), "expected " + std::to_string(s) + " entries");
    }
    for (std::size_t k = 0; k < side; ++k) m(i, k) = row[k];
  }
  return twisted::PhaseSpaceFunction(twisted::PlaneGrid(l, side), std::move(m));
}

Json to_json(const twisted::HomomorphismReport& r) {
  Json j = Json::object();
  j["relative_error"] = r.relative_error;
  Json diag = Json::object();
  diag["f_boundary"] = r.f_boundary;
  diag["g_boundary"] = r.g_boundary;
  j["truncation_diagnostic"] = std::move(diag);
  return j;
}

}  // namespace fourier::io
