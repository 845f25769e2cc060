// Copyright 2026 The ctsynth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <utility>

#include "ctsynth/diagonal.hpp"
#include "ctsynth/numtheory.hpp"
#include "ctsynth/pipeline.hpp"
#include "ctsynth/synth.hpp"

namespace py = pybind11;
using namespace ctsynth;

namespace {

mpz_class to_mpz(const py::int_& x) {
  std::string digits = py::str(py::handle(x));
  return mpz_class(digits);
}

py::int_ to_py(const mpz_class& x) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(x.get_str().c_str(), nullptr, 10));
}

ZRoot2 to_zroot2(const std::pair<py::int_, py::int_>& x) { return ZRoot2(to_mpz(x.first), to_mpz(x.second)); }

py::tuple to_py(const ZRoot2& x) { return py::make_tuple(to_py(x.a()), to_py(x.b())); }

long precision_for(const Real& eps, long precision_bits) {
  return precision_bits > 0 ? precision_bits : default_precision_bits(eps);
}

UnitaryTarget target(const std::string& ar, const std::string& ai, const std::string& br, const std::string& bi,
                     long prec) {
  return UnitaryTarget::from_components(Real::parse(ar, prec), Real::parse(ai, prec), Real::parse(br, prec),
                                        Real::parse(bi, prec));
}

py::dict t_counts(const TCounts& t) {
  py::dict d;
  d["left"] = t.left;
  d["middle"] = t.middle;
  d["right"] = t.right;
  d["total"] = t.total;
  return d;
}

py::object unitary(const std::optional<ExactUnitary>& u) {
  if (!u) return py::none();
  py::dict d;
  py::list xs;
  for (const ZRoot2& x : u->x) xs.append(to_py(x));
  d["x"] = xs;
  d["k"] = u->k;
  return d;
}

py::dict approximate_py(const std::string& ar, const std::string& ai, const std::string& br, const std::string& bi,
                        const std::string& epsilon, std::optional<std::string> eps0,
                        std::optional<std::string> eps_tilde, std::uint64_t seed, int max_k, long precision_bits) {
  Real eps = Real::parse(epsilon, 128);
  long prec = precision_for(eps, precision_bits);
  eps = Real::parse(epsilon, prec);
  LemmaConstants d = LemmaConstants::defaults_for(eps);
  LemmaConstants c = LemmaConstants::make(eps_tilde ? Real::parse(*eps_tilde, prec) : d.eps_tilde,
                                          eps0 ? Real::parse(*eps0, prec) : d.eps0);
  ApproxResult r;
  {
    py::gil_scoped_release release;
    r = approximate(target(ar, ai, br, bi, prec), eps, c, RandomSeed{seed}, {max_k, prec});
  }
  py::dict out;
  out["branch"] = to_string(r.branch);
  out["word"] = r.word.str();
  out["word_left"] = r.word_left.str();
  out["word_middle"] = r.word_middle.str();
  out["word_right"] = r.word_right.str();
  out["k"] = r.k;
  out["t_counts"] = t_counts(r.t_counts);
  out["distance"] = r.achieved_distance.to_string(6);
  out["bound"] = r.bound.to_string(6);
  out["gamma"] = unitary(r.gamma);
  return out;
}

py::object approximate_diagonal_py(const std::string& theta, const std::string& epsilon, std::uint64_t seed,
                                   int max_k, long precision_bits) {
  Real eps = Real::parse(epsilon, 128);
  long prec = precision_for(eps, precision_bits);
  eps = Real::parse(epsilon, prec);
  DiagonalApproxRequest req{{Real::parse(theta, prec)}, eps, RandomSeed{seed},
                            max_k > 0 ? max_k : default_diagonal_max_k(eps), prec};
  std::optional<DiagonalApprox> r;
  {
    py::gil_scoped_release release;
    r = approximate_diagonal(req);
  }
  if (!r) return py::none();
  py::dict out;
  out["word"] = r->word.str();
  out["k"] = r->k;
  out["t_count"] = r->word.t_count();
  out["distance"] = r->distance.to_string(6);
  out["unitary"] = unitary(r->gate.to_exact_unitary());
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Clifford+T approximation of single-qubit gates";
  py::register_exception<NonHaltingError>(m, "NonHaltingError", PyExc_RuntimeError);

  m.def("approximate", &approximate_py, py::arg("alpha_re"), py::arg("alpha_im"), py::arg("beta_re"),
        py::arg("beta_im"), py::arg("epsilon"), py::arg("eps0") = py::none(), py::arg("eps_tilde") = py::none(),
        py::arg("seed") = 1, py::arg("max_k") = 0, py::arg("precision_bits") = 0,
        "Approximate u(alpha, beta); reals are decimal strings.");
  m.def("approximate_diagonal", &approximate_diagonal_py, py::arg("theta"), py::arg("epsilon"), py::arg("seed") = 1,
        py::arg("max_k") = 0, py::arg("precision_bits") = 0,
        "Approximate u(theta); None when max_k is exhausted.");
  m.def(
      "exact_synthesize",
      [](const std::vector<std::pair<py::int_, py::int_>>& x, int k) {
        if (x.size() != 4) throw py::value_error("expected four (a, b) pairs");
        return exact_synthesize(make_exact_unitary(to_zroot2(x[0]), to_zroot2(x[1]), to_zroot2(x[2]),
                                                   to_zroot2(x[3]), k))
            .str();
      },
      py::arg("x"), py::arg("k"), "Minimal T-count word for an exact unitary.");
  m.def(
      "verify",
      [](const std::string& word, const std::string& ar, const std::string& ai, const std::string& br,
         const std::string& bi, long precision_bits) {
        Verification v = verify(target(ar, ai, br, bi, precision_bits), GateWord(word), precision_bits);
        return py::make_tuple(v.distance.to_string(6), v.t_count);
      },
      py::arg("word"), py::arg("alpha_re"), py::arg("alpha_im"), py::arg("beta_re"), py::arg("beta_im"),
      py::arg("precision_bits") = 256, "(distance, T-count) of a word against u(alpha, beta).");
  m.def("t_count", [](const std::string& word) { return GateWord(word).t_count(); }, py::arg("word"));
  m.def(
      "solve_sum_of_two_squares",
      [](const py::int_& a, const py::int_& b, std::uint64_t seed) -> py::object {
        auto r = solve_sum_of_two_squares(ZRoot2(to_mpz(a), to_mpz(b)), RandomSeed{seed});
        if (!r) return py::none();
        return py::make_tuple(to_py(r->first), to_py(r->second));
      },
      py::arg("a"), py::arg("b"), py::arg("seed") = 1,
      "(x0, x1) with x0^2 + x1^2 = a + b sqrt2, each as an (a, b) pair, or None.");
}
