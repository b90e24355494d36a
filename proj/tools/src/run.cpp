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

#include "fourier_cli/run.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <map>
#include <utility>

#include "fourier/axioms.hpp"
#include "fourier/conv_classifier.hpp"
#include "fourier/exchange_classifier.hpp"
#include "fourier/intertwiner.hpp"
#include "fourier/torus_kernel.hpp"
#include "fourier/twisted.hpp"

namespace fourier::cli {

namespace {

using io::Json;

constexpr std::array<std::pair<Command, const char*>, 7> kCommands{{
    {Command::kClassifyConv, "classify-conv"},
    {Command::kClassifyExchange, "classify-exchange"},
    {Command::kClassifyIntertwiner, "classify-intertwiner"},
    {Command::kClassifyTorus, "classify-torus"},
    {Command::kVerifyTwisted, "verify-twisted"},
    {Command::kCheckAxioms, "check-axioms"},
    {Command::kConstruct, "construct"},
}};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

// Thrown for bad flags; reported with exit code 2.
struct UsageError : Error {
  explicit UsageError(const std::string& details) : Error("UsageError", details) {}
};

Json load_input(const RunConfig& c) {
  if (c.input.empty()) throw UsageError(std::string(to_string(c.command)) + " needs --input");
  return io::read_file(c.input);
}

Operator load_operator(const RunConfig& c) {
  Operator t = io::operator_from_json(load_input(c));
  if (c.n && static_cast<std::int64_t>(t.group().order()) != *c.n) {
    throw UsageError("--n " + std::to_string(*c.n) + " does not match the operator's group");
  }
  return t;
}

Operator dense_operator(const RunConfig& c) {
  Operator t = load_operator(c);
  if (t.is_dense()) return t;
  if (!t.is_linear()) throw UsageError("this command needs a linear operator");
  return Operator::dense(t.group(), t.materialize());
}

// Rescales by 1/sqrt(n) so that the DFT squares to the reflection.
Operator maybe_unitary(const RunConfig& c, Operator t) {
  if (!c.unitary) return t;
  const Complex s = 1.0 / std::sqrt(static_cast<double>(t.group().order()));
  if (t.is_dense()) {
    Matrix m = t.table();
    Matrix scaled(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t k = 0; k < m.cols(); ++k) scaled(r, k) = m(r, k) * s;
    }
    return Operator::dense(t.group(), std::move(scaled));
  }
  const bool linear = t.is_linear();
  return Operator::blackbox(
      t.group(), [t = std::move(t), s](const Signal& a) { return scale(t(a), s); }, linear);
}

struct Outcome {
  bool ok = true;
  Json result;
  Json witness;       // null unless a check failed
  std::string error;  // set when a classifier rejected the input
  std::string summary;
};

Outcome axiom_outcome(const AxiomReport& r, const std::string& name) {
  Outcome o;
  o.ok = r.passed;
  o.result = io::to_json(r);
  o.summary = name + (r.passed ? " holds" : " violated") + ", max residual " + fmt(r.max_residual);
  if (r.witness) o.summary += " (" + r.witness->description + ")";
  return o;
}

Outcome classify_conv_cmd(const RunConfig& c) {
  const Operator t = dense_operator(c);
  try {
    const ConvClassification cls = classify_conv(t, c.tol);
    return {true, io::to_json(cls), nullptr, "",
            "support " + std::to_string(cls.support.size()) + "/" +
                std::to_string(t.group().order()) + ", residual " + fmt(cls.residual)};
  } catch (const ClassificationError& e) {
    if (e.kind() != "AxiomViolation") throw;
    const AxiomReport r = check_conv_homomorphism(t, BasisMode{}, c.tol);
    Outcome o;
    o.ok = false;
    o.witness = r.witness ? io::to_json(*r.witness) : Json(nullptr);
    o.error = e.what();
    return o;
  }
}

Outcome classify_exchange_cmd(const RunConfig& c) {
  const Operator t = load_operator(c);
  const ExchangeOptions opts{.tol = c.tol, .seed = c.seed};
  const ExchangeClassification cls =
      c.fourier ? classify_fourier_exchange(t, opts) : classify_exchange(t, opts);
  Json result = io::to_json(cls);
  result["notes"] = cls.notes;
  return {true, std::move(result), nullptr, "",
          std::string(to_string(cls.variant)) + " eta=" + std::to_string(cls.eta) +
              (cls.conjugate ? " conjugate" : "") + ", residual " + fmt(cls.residual)};
}

Outcome classify_intertwiner_cmd(const RunConfig& c) {
  const IntertwinerClassification cls = classify_intertwiner(dense_operator(c), c.tol);
  return {true, io::to_json(cls), nullptr, "",
          "k0=" + std::to_string(cls.k0) + " m0=" + std::to_string(cls.m0) +
              " m1=" + std::to_string(cls.m1) + " c=" + fourier::to_string(cls.c)};
}

Outcome classify_torus_cmd(const RunConfig& c) {
  const torus::KernelFamily fam = io::kernel_family_from_json(load_input(c));
  const torus::TorusClassification cls = torus::classify_torus_operator(
      torus::table_from_kernels(fam), torus::TorusGrid(fam.grid_size), c.tol, c.seed);
  return {true, io::to_json(cls), nullptr, "",
          "support " + std::to_string(cls.support.size()) + "/" +
              std::to_string(2 * fam.window + 1) + ", residual " + fmt(cls.residual)};
}

Outcome verify_twisted_cmd(const RunConfig& c) {
  std::optional<twisted::PhaseSpaceFunction> f, g;
  if (c.input.empty()) {
    if (c.grid_s < 2) throw UsageError("--grid-S must be >= 2");
    const twisted::PlaneGrid grid(c.grid_l, static_cast<std::size_t>(c.grid_s));
    f = twisted::gaussian(grid);
    g = twisted::gaussian(grid);
  } else {
    const Json doc = load_input(c);
    const io::ObjectReader r(doc, "$", {"f", "g"}, true);
    f = io::phase_space_from_json(r.get("f"), r.child("f"), false);
    g = io::phase_space_from_json(r.get("g"), r.child("g"), false);
  }
  const twisted::HomomorphismReport rep = twisted::verify_rho_homomorphism(*f, *g);
  Outcome o;
  o.ok = rep.relative_error <= c.max_error;
  o.result = io::to_json(rep);
  o.result["max_error"] = c.max_error;
  o.summary = "relative error " + fmt(rep.relative_error) + (o.ok ? " <= " : " > ") +
              fmt(c.max_error) + " at S=" + std::to_string(f->grid().side());
  return o;
}

Outcome check_axioms_cmd(const RunConfig& c) {
  if (c.axiom == "intertwining") {
    const Json doc = load_input(c);
    const io::ObjectReader r(doc, "$", {"operator", "phi", "psi"}, true);
    const Operator t = io::operator_from_json(r.get("operator"), r.child("operator"), false);
    const PhaseFunction phi = io::phase_function_from_json(r.get("phi"), r.child("phi"));
    const PhaseFunction psi = io::phase_function_from_json(r.get("psi"), r.child("psi"));
    const Operator dense = t.is_dense() ? t : Operator::dense(t.group(), t.materialize());
    return axiom_outcome(check_intertwining(dense, phi, psi, c.tol), "intertwining");
  }
  const Operator t = maybe_unitary(c, load_operator(c));
  if (c.axiom == "conv") {
    CheckMode mode = BasisMode{};
    if (c.mode == "sampled") {
      mode = SampledMode{c.samples, c.seed};
    } else if (c.mode != "basis") {
      throw UsageError("--mode must be basis or sampled");
    }
    return axiom_outcome(check_conv_homomorphism(t, mode, c.tol), "convolution homomorphism");
  }
  if (c.axiom == "exchange") {
    return axiom_outcome(check_exchange_axioms(t, c.samples, c.seed, c.tol), "exchange axioms");
  }
  if (c.axiom == "involution") {
    return axiom_outcome(check_involution_symmetry(t, c.tol, c.samples, c.seed),
                         "involution symmetry");
  }
  throw UsageError("--axiom must be conv, exchange, involution or intertwining");
}

// construct writes an operator document, not a report.
Json construct_doc(const RunConfig& c, std::string& summary) {
  const Json doc = load_input(c);
  const io::ObjectReader r(
      doc, "$", {"kind", "group", "sigma", "k0", "m0", "m1", "c", "eta", "conjugate"}, true);
  const std::string kind = r.string("kind");
  const Json& gj = r.get("group");
  const Json& garr = io::array_from_json(gj, r.child("group"));
  if (garr.size() != 1) throw io::SchemaError(r.child("group"), "expected a single modulus");
  const std::int64_t n = io::integer_from_json(garr[0], r.child("group") + "[0]");
  if (n < 1) throw io::SchemaError(r.child("group") + "[0]", "modulus must be >= 1");
  const Group g = Group::cyclic(n);
  summary = kind + " on Z/" + std::to_string(n);

  if (kind == "conv") {
    std::map<std::int64_t, std::int64_t> sigma;
    const std::string spath = r.child("sigma");
    const Json& arr = io::array_from_json(r.get("sigma"), spath);
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string epath = spath + "[" + std::to_string(i) + "]";
      const Json& pair = io::array_from_json(arr[i], epath);
      if (pair.size() != 2) throw io::SchemaError(epath, "expected [eta, sigma]");
      sigma[io::integer_from_json(pair[0], epath + "[0]")] =
          io::integer_from_json(pair[1], epath + "[1]");
    }
    return io::to_json(construct_conv(g, sigma));
  }
  if (kind == "intertwiner") {
    const Complex scale = io::complex_from_json(r.get("c"), r.child("c"));
    return io::to_json(construct_intertwiner(g, r.integer("k0"), r.integer("m0"),
                                             r.integer("m1"), scale));
  }
  if (kind == "exchange" || kind == "fourier-exchange") {
    const std::int64_t eta = r.integer("eta");
    const bool conj = r.has("conjugate") && r.boolean("conjugate");
    const Operator t = kind == "exchange" ? exchange_map(g, eta, conj)
                                          : fourier_exchange_map(g, eta, conj);
    if (t.is_linear()) return io::to_json(Operator::dense(g, t.materialize()));
    Json out;
    out["schema"] = io::kSchemaVersion;
    out["group"] = Json::array({n});
    out["builtin"] = Json{{"name", kind}, {"eta", eta}, {"conjugate", conj}};
    return out;
  }
  if (kind == "dft") return io::to_json(dft_operator(g));
  if (kind == "unitary-dft") return io::to_json(unitary_dft_operator(g));
  if (kind == "identity") return io::to_json(identity_operator(g));
  throw io::SchemaError(r.child("kind"), "unknown kind '" + kind + "'");
}

Outcome dispatch(const RunConfig& c) {
  switch (c.command) {
    case Command::kClassifyConv: return classify_conv_cmd(c);
    case Command::kClassifyExchange: return classify_exchange_cmd(c);
    case Command::kClassifyIntertwiner: return classify_intertwiner_cmd(c);
    case Command::kClassifyTorus: return classify_torus_cmd(c);
    case Command::kVerifyTwisted: return verify_twisted_cmd(c);
    case Command::kCheckAxioms: return check_axioms_cmd(c);
    case Command::kConstruct: break;
  }
  throw UsageError("unreachable");
}

void validate(const RunConfig& c) {
  if (!(c.tol > 0.0)) throw UsageError("--tol must be positive");
  if (c.n && *c.n < 1) throw UsageError("--n must be >= 1");
  if (c.samples < 1) throw UsageError("--samples must be >= 1");
}

}  // namespace

const char* to_string(Command c) {
  for (const auto& [cmd, name] : kCommands) {
    if (cmd == c) return name;
  }
  return "?";
}

std::optional<Command> parse_command(const std::string& name) {
  for (const auto& [cmd, n] : kCommands) {
    if (name == n) return cmd;
  }
  return std::nullopt;
}

io::Json to_json(const RunConfig& c) {
  Json j = Json::object();
  j["command"] = to_string(c.command);
  j["input"] = c.input.empty() ? Json(nullptr) : Json(c.input);
  j["output"] = c.output.empty() ? Json(nullptr) : Json(c.output);
  j["n"] = c.n ? Json(*c.n) : Json(nullptr);
  j["tol"] = c.tol;
  j["seed"] = c.seed;
  j["unitary"] = c.unitary;
  j["mode"] = c.mode;
  j["samples"] = c.samples;
  j["grid_S"] = c.grid_s;
  j["grid_L"] = c.grid_l;
  j["axiom"] = c.axiom;
  j["fourier"] = c.fourier;
  j["max_error"] = c.max_error;
  return j;
}

RunResult execute(const RunConfig& config) {
  RunResult out;
  const std::string name = to_string(config.command);
  Json& rep = out.report;
  rep["schema"] = io::kSchemaVersion;
  rep["command"] = name;
  rep["config"] = to_json(config);

  auto fail = [&](int code, const std::string& status, const std::string& error) {
    out.exit_code = code;
    rep["status"] = status;
    rep["error"] = error;
    out.summary = name + ": " + status + ": " + error;
  };

  try {
    validate(config);
    if (config.command == Command::kConstruct) {
      std::string what;
      out.report = construct_doc(config, what);
      out.summary = name + ": built " + what;
      return out;
    }
    Outcome o = dispatch(config);
    if (!o.error.empty()) {
      fail(1, "rejected", o.error);
      rep["witness"] = std::move(o.witness);
      return out;
    }
    out.exit_code = o.ok ? 0 : 1;
    rep["status"] = o.ok ? "ok" : "violation";
    rep["result"] = std::move(o.result);
    out.summary = name + ": " + (o.ok ? "ok" : "violation") + ", " + o.summary;
  } catch (const ClassificationError& e) {
    fail(1, "rejected", e.what());
  } catch (const Error& e) {
    fail(2, "input-error", e.what());
  } catch (const std::exception& e) {
    fail(2, "input-error", std::string("InternalError(") + e.what() + ")");
  }
  return out;
}

int run(const RunConfig& config) {
  RunResult r = execute(config);
  const std::string text = io::dump(r.report);
  if (config.output.empty()) {
    std::cout << text;
  } else {
    try {
      io::write_file(config.output, r.report);
    } catch (const Error& e) {
      std::cerr << e.what() << "\n";
      return 2;
    }
  }
  std::cerr << r.summary << "\n";
  return r.exit_code;
}

}  // namespace fourier::cli
