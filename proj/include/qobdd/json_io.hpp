// Copyright 2026 The qobdd Authors
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

// JSON forms of polynomials, good sets, programs and reports. Big integers
// travel as decimal strings; complex numbers as [re, im] pairs.

#include <json.hpp>
#include <string>
#include <vector>

#include "qobdd/harness.hpp"

namespace qobdd {

using Json = nlohmann::json;

inline BigInt bigint_from_json(const Json &j) {
  if (j.is_string()) return parse_bigint(j.get<std::string>());
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  throw InvalidArgument("expected an integer or decimal string");
}

inline Json to_json(const LinearPolynomial &p) {
  Json coeffs = Json::array();
  for (const auto &c : p.coefficients()) coeffs.push_back(c.str());
  return {{"m", p.modulus().str()}, {"n", p.arity()}, {"coeffs", coeffs}};
}

inline LinearPolynomial linear_from_json(const Json &j) {
  const auto n = j.at("n").get<std::size_t>();
  const auto &coeffs = j.at("coeffs");
  if (coeffs.size() != n + 1) throw InvalidArgument("\"coeffs\" must hold n+1 entries");
  std::vector<BigInt> values;
  for (const auto &c : coeffs) values.push_back(bigint_from_json(c));
  return LinearPolynomial(Modulus(bigint_from_json(j.at("m"))), std::move(values));
}

inline Json to_json(const Characteristic &chi) {
  Json out = Json::array();
  for (const auto &g : chi.polynomials()) out.push_back(to_json(g));
  return out;
}

inline Characteristic characteristic_from_json(const Json &j) {
  if (!j.is_array()) throw InvalidArgument("characteristic must be a JSON array");
  std::vector<LinearPolynomial> polys;
  for (const auto &p : j) polys.push_back(linear_from_json(p));
  return Characteristic(std::move(polys));
}

inline Json to_json(const MultilinearPolynomial &p) {
  Json monomials = Json::array();
  for (const auto &m : p.monomials()) monomials.push_back({{"coeff", m.coefficient.str()}, {"vars", m.vars}});
  return {{"m", p.modulus().str()}, {"n", p.arity()}, {"monomials", monomials}};
}

inline MultilinearPolynomial multilinear_from_json(const Json &j) {
  std::vector<Monomial> monomials;
  for (const auto &m : j.at("monomials")) {
    monomials.push_back({bigint_from_json(m.at("coeff")), m.at("vars").get<std::vector<std::size_t>>()});
  }
  return MultilinearPolynomial(Modulus(bigint_from_json(j.at("m"))), j.at("n").get<std::size_t>(),
                               std::move(monomials));
}

/// {"n": 3, "products": [[1, -2], [3]]}: literal +j is x_j, -j is not x_j.
inline SOPFormula sop_from_json(const Json &j) {
  std::vector<std::vector<Literal>> products;
  for (const auto &product : j.at("products")) {
    std::vector<Literal> literals;
    for (const auto &lit : product) {
      const auto v = lit.get<std::int64_t>();
      if (v == 0) throw InvalidArgument("literal 0 is not a variable");
      literals.push_back({static_cast<std::size_t>(v < 0 ? -v : v), v < 0 ? Polarity::kNegated : Polarity::kPositive});
    }
    products.push_back(std::move(literals));
  }
  return SOPFormula(j.at("n").get<std::size_t>(), std::move(products));
}

inline Json to_json(const SOPFormula &sop) {
  Json products = Json::array();
  for (const auto &product : sop.products()) {
    Json lits = Json::array();
    for (const auto &l : product) {
      const auto v = static_cast<std::int64_t>(l.variable);
      lits.push_back(l.polarity == Polarity::kNegated ? -v : v);
    }
    products.push_back(lits);
  }
  return {{"n", sop.arity()}, {"products", products}};
}

inline Json to_json(const GoodSet &set) {
  Json params = Json::array();
  for (const auto &k : set.parameters()) params.push_back(k.str());
  return {{"m", set.modulus().str()}, {"epsilon", set.epsilon()}, {"t", set.size()}, {"params", params}};
}

inline GoodSet good_set_from_json(const Json &j) {
  std::vector<BigInt> params;
  for (const auto &k : j.at("params")) params.push_back(bigint_from_json(k));
  return GoodSet(Modulus(bigint_from_json(j.at("m"))), j.at("epsilon").get<double>(), std::move(params));
}

inline Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

inline Complex complex_from_json(const Json &j) {
  if (!j.is_array() || j.size() != 2) throw InvalidArgument("complex value must be [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

/// Dense: one array per row, one [re, im] pair per entry.
inline Json to_json(const UnitaryMatrix &m) {
  const std::size_t d = m.dimension();
  const auto dense = m.dense();
  Json rows = Json::array();
  for (std::size_t r = 0; r < d; ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < d; ++c) row.push_back(complex_to_json(dense[r * d + c]));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline UnitaryMatrix matrix_from_json(const Json &j) {
  const std::size_t d = j.size();
  std::vector<Complex> values;
  values.reserve(d * d);
  for (const auto &row : j) {
    if (row.size() != d) throw InvalidArgument("matrix rows must have length equal to the row count");
    for (const auto &z : row) values.push_back(complex_from_json(z));
  }
  return UnitaryMatrix::from_dense(d, values);
}

inline Json to_json(const QuantumBranchingProgram &q) {
  Json instructions = Json::array();
  for (const auto &ins : q.instructions()) {
    instructions.push_back({{"variable", ins.variable}, {"on_zero", to_json(ins.on_zero)}, {"on_one", to_json(ins.on_one)}});
  }
  Json initial = Json::array();
  for (const auto &a : q.initial_state().amplitudes()) initial.push_back(complex_to_json(a));
  return {{"dimension", q.dimension()},
          {"arity", q.arity()},
          {"pre", q.pre_transform() ? to_json(*q.pre_transform()) : Json(nullptr)},
          {"instructions", instructions},
          {"post", q.post_transform() ? to_json(*q.post_transform()) : Json(nullptr)},
          {"initial", initial},
          {"accepting", q.accepting_states()}};
}

inline QuantumBranchingProgram program_from_json(const Json &j) {
  auto optional_matrix = [&](const char *key) -> std::optional<UnitaryMatrix> {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return matrix_from_json(j.at(key));
  };
  std::vector<Instruction> instructions;
  for (const auto &ins : j.at("instructions")) {
    instructions.push_back({ins.at("variable").get<std::size_t>(), matrix_from_json(ins.at("on_zero")),
                            matrix_from_json(ins.at("on_one"))});
  }
  std::vector<Complex> initial;
  for (const auto &a : j.at("initial")) initial.push_back(complex_from_json(a));
  return QuantumBranchingProgram(j.at("dimension").get<std::size_t>(), j.at("arity").get<std::size_t>(),
                                 optional_matrix("pre"), std::move(instructions), optional_matrix("post"),
                                 StateVector(std::move(initial)), j.at("accepting").get<std::vector<std::size_t>>());
}

inline Json to_json(const ProgramMetrics &m) {
  return {{"width", m.width}, {"length", m.length}, {"qubits", m.qubits}};
}

inline Json optional_to_json(const std::optional<double> &v) { return v ? Json(*v) : Json(nullptr); }

inline Json to_json(const VerificationReport &r) {
  Json mode;
  if (std::holds_alternative<Exhaustive>(r.mode)) {
    mode = {{"kind", "exhaustive"}};
  } else {
    const auto &s = std::get<Sampled>(r.mode);
    mode = {{"kind", "sampled"}, {"samples", s.count}, {"seed", s.seed}};
  }
  Json out = {{"function", r.function_name},
              {"n", r.arity},
              {"epsilon", r.epsilon},
              {"t", r.t},
              {"mode", mode},
              {"min_accept_on_ones", optional_to_json(r.stats.min_accept_on_ones)},
              {"max_accept_on_zeros", optional_to_json(r.stats.max_accept_on_zeros)},
              {"bound", r.bound},
              {"counts",
               {{"visited", r.stats.visited},
                {"ones", r.stats.ones},
                {"zeros", r.stats.zeros},
                {"filtered_out", r.stats.filtered_out}}},
              {"max_closed_form_gap", r.stats.max_reference_gap},
              {"pass", r.pass},
              {"metrics", to_json(r.metrics)}};
  if (r.good_set) {
    out["good_set"] = {{"seed", r.good_set->seed}, {"check", to_string(r.good_set->check)}};
  }
  return out;
}

inline Json to_json(const std::vector<WidthRow> &rows) {
  Json out = Json::array();
  for (const auto &r : rows) {
    out.push_back({{"function", r.function_name},
                   {"width", r.metrics.width},
                   {"qubits", r.metrics.qubits},
                   {"length", r.metrics.length},
                   {"deterministic_obdd_width", r.deterministic_bound}});
  }
  return out;
}

inline Json to_json(const SingleCompilation &c) {
  return {{"kind", "single"}, {"polynomial", to_json(c.polynomial)}, {"good_set", to_json(c.good_set)},
          {"program", to_json(c.program)}};
}

inline Json to_json(const GeneralCompilation &c) {
  return {{"kind", "general"}, {"characteristic", to_json(c.characteristic)}, {"good_set", to_json(c.good_set)},
          {"program", to_json(c.program)}};
}

}  // namespace qobdd
