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

// Regenerates the JSON fixtures under tests/fixtures.
//   make-fixtures <dir>

#include <iostream>
#include <string>

#include "fourier/json_io.hpp"

namespace io = fourier::io;
using fourier::Group;

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make-fixtures <dir>\n";
    return 2;
  }
  const std::string dir = argv[1];
  auto put = [&](const std::string& name, const io::Json& j) {
    io::write_file(dir + "/" + name, j);
    std::cout << name << "\n";
  };

  put("dft8.json", io::to_json(fourier::dft_operator(Group::cyclic(8))));
  put("identity4.json", io::to_json(fourier::identity_operator(Group::cyclic(4))));
  put("intertwiner8.json", io::to_json(fourier::construct_intertwiner(
                               Group::cyclic(8), 3, 1, 2, fourier::Complex(0.5, 0.25))));

  io::Json conj;
  conj["schema"] = io::kSchemaVersion;
  conj["group"] = io::Json::array({5});
  conj["builtin"] = io::Json{{"name", "fourier-exchange"}, {"eta", 1}, {"conjugate", true}};
  put("conj_dft5.json", conj);

  const fourier::torus::TorusGrid tg(32);
  put("fourier_coefficients_m32.json",
      io::to_json(fourier::torus::extract_kernels(
          fourier::torus::fourier_coefficient_table(4, tg), tg)));

  // L = 6 keeps the S = 64 grid clear of the aliasing in the kernel's q-sum
  const fourier::twisted::PlaneGrid pg(6.0, 64);
  const auto gauss = fourier::twisted::gaussian(pg);
  io::Json pair;
  pair["schema"] = io::kSchemaVersion;
  pair["f"] = io::to_json(gauss, false);
  pair["g"] = io::to_json(gauss, false);
  put("gaussian_s64.json", pair);

  io::Json expected;
  expected["schema"] = io::kSchemaVersion;
  expected["relative_error"] =
      fourier::twisted::verify_rho_homomorphism(gauss, gauss).relative_error;
  put("gaussian_s64.expected.json", expected);

  io::Json request;
  request["schema"] = io::kSchemaVersion;
  request["kind"] = "conv";
  request["group"] = io::Json::array({6});
  request["sigma"] = io::Json::array({io::Json::array({0, 0}), io::Json::array({2, 4}),
                                   io::Json::array({3, 3}), io::Json::array({5, 4})});
  put("construct_conv6.json", request);
  return 0;
}
