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

#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fourier/axioms.hpp"
#include "fourier/conv_classifier.hpp"
#include "fourier/error.hpp"
#include "fourier/exchange_classifier.hpp"
#include "fourier/intertwiner.hpp"
#include "fourier/operator.hpp"
#include "fourier/signal.hpp"
#include "fourier/torus_kernel.hpp"
#include "fourier/twisted.hpp"

namespace fourier::io {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// A document that does not match its schema. `path` locates the offending
/// field, e.g. "$.columns[2][0]".
class SchemaError : public Error {
 public:
  SchemaError(std::string path, const std::string& message)
      : Error("SchemaError", path + ": " + message), path_(std::move(path)) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

Json parse(const std::string& text);
Json read_file(const std::string& path);
/// Two-space indented, trailing newline.
std::string dump(const Json& j);
void write_file(const std::string& path, const Json& j);

/// Top-level documents carry "schema": 1. Readers given top_level = true
/// require it; nested objects may omit it.
Json complex_to_json(Complex z);
Complex complex_from_json(const Json& j, const std::string& path);

Json to_json(const Signal& s, bool top_level = true);
Signal signal_from_json(const Json& j, const std::string& path = "$", bool top_level = true);

/// Dense operators only. Column k is the image of delta_k.
Json to_json(const Operator& t, bool top_level = true);
/// Accepts the dense form {"group", "columns"} and the builtin form
/// {"group", "builtin": {"name": ...}} for maps that have no table.
Operator operator_from_json(const Json& j, const std::string& path = "$",
                            bool top_level = true);

/// Builtin maps: identity, dft, idft, unitary-dft, scale{c}, dilate{factor},
/// exchange{eta, conjugate}, fourier-exchange{eta, conjugate}.
Operator builtin_operator(const Group& group, const Json& desc, const std::string& path);

Json to_json(const Witness& w);
Json to_json(const AxiomReport& r);
Json to_json(const ConvClassification& c);
Json to_json(const ExchangeClassification& c);
Json to_json(const IntertwinerClassification& c);

Json to_json(const PhaseFunction& phi);
PhaseFunction phase_function_from_json(const Json& j, const std::string& path);

Json to_json(const torus::KernelFamily& fam, bool top_level = true);
torus::KernelFamily kernel_family_from_json(const Json& j, const std::string& path = "$",
                                            bool top_level = true);
Json to_json(const torus::TorusClassification& c);

Json to_json(const twisted::PhaseSpaceFunction& f, bool top_level = true);
twisted::PhaseSpaceFunction phase_space_from_json(const Json& j, const std::string& path = "$",
                                                  bool top_level = true);
Json to_json(const twisted::HomomorphismReport& r);

/// Field access with path-carrying errors; `allowed` lists every permitted key
/// and unknown keys are rejected.
class ObjectReader {
 public:
  ObjectReader(const Json& j, std::string path, std::vector<std::string> allowed,
               bool top_level);

  bool has(const std::string& key) const;
  const Json& get(const std::string& key) const;
  std::string child(const std::string& key) const { return path_ + "." + key; }

  std::int64_t integer(const std::string& key) const;
  double real(const std::string& key) const;
  bool boolean(const std::string& key) const;
  std::string string(const std::string& key) const;

 private:
  const Json& j_;
  std::string path_;
};

std::int64_t integer_from_json(const Json& j, const std::string& path);
double real_from_json(const Json& j, const std::string& path);
const Json& array_from_json(const Json& j, const std::string& path);

}  // namespace fourier::io
