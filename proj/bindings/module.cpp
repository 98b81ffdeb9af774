#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "rectcount/asympt.hpp"
#include "rectcount/cli.hpp"
#include "rectcount/mary2.hpp"
#include "rectcount/natural.hpp"
#include "rectcount/oracle.hpp"
#include "rectcount/partcore.hpp"
#include "rectcount/qpfit.hpp"
#include "rectcount/restrict2.hpp"
#include "rectcount/tile2.hpp"

namespace py = pybind11;
using namespace rectcount;

namespace {

py::object to_py(const mpz_class& v) {
  PyObject* obj = PyLong_FromString(v.get_str().c_str(), nullptr, 10);
  if (!obj) throw py::error_already_set();
  return py::reinterpret_steal<py::object>(obj);
}

py::list to_py_list(const std::vector<Natural>& values) {
  py::list out;
  for (const auto& v : values) out.append(to_py(v));
  return out;
}

mary2::CongruenceKind kind_of(const std::string& name) {
  if (name == "alkauskas") return mary2::CongruenceKind::alkauskas;
  if (name == "b_i0") return mary2::CongruenceKind::b_i0;
  if (name == "b_ij") return mary2::CongruenceKind::b_ij;
  throw std::invalid_argument("kind must be alkauskas | b_i0 | b_ij");
}

oracle::BlockFilter filter_of(const std::string& name, std::uint32_t k, std::uint32_t l) {
  if (name == "all") return oracle::allow_all();
  if (name == "restricted") return oracle::allow_restricted(k, l);
  throw std::invalid_argument("filter must be all | restricted");
}

py::tuple spec_tuple(const asympt::AsymSpec& s) { return py::make_tuple(s.c, s.delta, s.lambda); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact and asymptotic counting for 2 x n rectangle partitions";

  // partcore
  m.def("euler_p", [](std::size_t n) { return to_py(partcore::euler_p(n)); }, py::arg("n"));
  m.def("euler_p_table",
        [](std::size_t n) { return to_py_list(partcore::euler_p_table(n)); }, py::arg("n_max"));
  m.def("nuclear_q", [](std::size_t n) { return to_py(partcore::nuclear_q(n)); }, py::arg("n"));
  m.def("p_max_part",
        [](std::size_t n, std::uint32_t l) { return to_py(partcore::p_max_part(n, l)); },
        py::arg("n"), py::arg("l"));
  m.def("p_multiset",
        [](std::size_t n, const std::vector<std::uint32_t>& a) {
          return to_py(partcore::p_multiset(n, a));
        },
        py::arg("n"), py::arg("parts"));
  m.def("two_colored_q2",
        [](std::size_t n) { return to_py(partcore::two_colored_q2(n)); }, py::arg("n"));

  // tile2
  m.def("p_tilde", [](std::size_t n) { return to_py(tile2::p_tilde(n)); }, py::arg("n"));
  m.def("p2", [](std::size_t n) { return to_py(tile2::p2(n)); }, py::arg("n"));
  m.def("p2_table",
        [](std::size_t n, int jobs) { return to_py_list(tile2::p2_table(n, jobs)); },
        py::arg("n_max"), py::arg("jobs") = 1);
  m.def("r_no_subsum",
        [](std::size_t N, std::size_t a) { return to_py(tile2::r_no_subsum(N, a)); },
        py::arg("N"), py::arg("a"));
  m.def("s_count", [](std::size_t n) { return to_py(tile2::s_count(n)); }, py::arg("n"));
  m.def("t_count", [](std::size_t n) { return to_py(tile2::t_count(n)); }, py::arg("n"));
  m.def("verify_bounds", [](std::size_t n) {
    py::list out;
    for (const auto& c : tile2::verify_bounds(n)) {
      py::dict d;
      d["name"] = c.name;
      d["lhs"] = to_py(c.lhs);
      d["rhs"] = to_py(c.rhs);
      d["holds"] = c.holds;
      d["slack"] = to_py(c.slack);
      out.append(std::move(d));
    }
    return out;
  }, py::arg("n"));

  // restrict2
  m.def("p_k1",
        [](std::uint32_t k, std::size_t n) { return to_py(restrict2::p_k1(k, n)); },
        py::arg("k"), py::arg("n"));
  m.def("p_k1_table",
        [](std::uint32_t k, std::size_t n, int jobs) {
          return to_py_list(restrict2::p_k1_table(k, n, jobs));
        },
        py::arg("k"), py::arg("n_max"), py::arg("jobs") = 1);
  m.def("p_kl",
        [](std::uint32_t k, std::uint32_t l, std::size_t n) {
          return to_py(restrict2::p_kl(k, l, n));
        },
        py::arg("k"), py::arg("l"), py::arg("n"));
  m.def("closed_form_table1",
        [](std::uint32_t k, std::uint32_t l, std::size_t n) {
          return to_py(restrict2::closed_form_table1(k, l, n));
        },
        py::arg("k"), py::arg("l"), py::arg("n"));
  m.def("p_two_parts",
        [](std::uint32_t mm, std::size_t n) { return to_py(restrict2::p_two_parts(mm, n)); },
        py::arg("m"), py::arg("n"));

  // mary2
  m.def("b_m", [](std::uint32_t mm, std::size_t n) { return to_py(mary2::b_m(mm, n)); },
        py::arg("m"), py::arg("n"));
  m.def("b_i0",
        [](std::uint32_t mm, std::uint32_t i, std::size_t n) {
          return to_py(mary2::b_i0(mm, i, n));
        },
        py::arg("m"), py::arg("i"), py::arg("n"));
  m.def("b_ij",
        [](std::uint32_t mm, std::uint32_t i, std::uint32_t j, std::size_t n) {
          return to_py(mary2::b_ij(mm, i, j, n));
        },
        py::arg("m"), py::arg("i"), py::arg("j"), py::arg("n"));
  m.def("b_full",
        [](std::uint32_t mm, std::size_t n) { return to_py(mary2::b_full(mm, n)); },
        py::arg("m"), py::arg("n"));
  m.def("digits_base", [](std::size_t n, std::uint32_t mm) {
    return mary2::digits_base(n, mm).digits;
  }, py::arg("n"), py::arg("m"));
  m.def("congruence_predict",
        [](const std::string& kind, std::uint32_t mm, std::uint32_t i, std::uint32_t j,
           std::size_t n) { return mary2::congruence_predict(kind_of(kind), mm, i, j, n); },
        py::arg("kind"), py::arg("m"), py::arg("i"), py::arg("j"), py::arg("n"));
  m.def("verify_congruences",
        [](const std::string& kind, std::uint32_t mm, std::uint32_t i, std::uint32_t j,
           std::size_t n_max) {
          auto rep = mary2::verify_congruences(kind_of(kind), mm, i, j, n_max);
          py::dict d;
          d["ok"] = rep.ok();
          py::list bad;
          for (const auto& ce : rep.counterexamples) {
            py::dict e;
            e["n"] = ce.n;
            e["computed"] = ce.computed_residue;
            e["predicted"] = ce.predicted_residue;
            bad.append(std::move(e));
          }
          d["counterexamples"] = std::move(bad);
          return d;
        },
        py::arg("kind"), py::arg("m"), py::arg("i"), py::arg("j"), py::arg("n_max"));

  // asympt
  m.def("asym_preset", [](const std::string& name) {
    return spec_tuple(asympt::preset_by_name(name));
  }, py::arg("name"));
  m.def("eval_asym",
        [](double c, double delta, double lambda, std::size_t n) {
          return asympt::eval_asym({c, delta, lambda}, n);
        },
        py::arg("c"), py::arg("delta"), py::arg("lambda"), py::arg("n"));
  m.def("log_eval_asym",
        [](double c, double delta, double lambda, std::size_t n) {
          return asympt::log_eval_asym({c, delta, lambda}, n);
        },
        py::arg("c"), py::arg("delta"), py::arg("lambda"), py::arg("n"));
  m.def("murty_convolve",
        [](const std::string& f, const std::string& g) {
          return spec_tuple(asympt::murty_convolve(asympt::preset_by_name(f),
                                                   asympt::preset_by_name(g)));
        },
        py::arg("f_preset"), py::arg("g_preset"));
  m.def("almkvist_asym", &asympt::almkvist_asym, py::arg("parts"), py::arg("n"),
        py::arg("order"));
  m.def("gt_singular", &asympt::gt_singular, py::arg("x"));
  m.def("benford_expected", &asympt::benford_expected, py::arg("base"), py::arg("prefix"));
  m.def("log_ratio_diag", &asympt::log_ratio_diag, py::arg("n"));

  // oracle
  m.def("oracle_count_multisets",
        [](std::uint32_t rows, std::uint32_t cols, const std::string& filter, std::uint32_t k,
           std::uint32_t l, bool allow_large, int jobs) {
          return to_py(oracle::count_multisets(rows, cols, filter_of(filter, k, l),
                                               allow_large, jobs));
        },
        py::arg("rows"), py::arg("cols"), py::arg("filter") = "all", py::arg("k") = 16,
        py::arg("l") = 16, py::arg("allow_large") = false, py::arg("jobs") = 1);
  m.def("oracle_count_symmetric",
        [](std::size_t n, bool allow_one_by_two) {
          return to_py(oracle::count_symmetric_multisets(n, allow_one_by_two));
        },
        py::arg("n"), py::arg("allow_one_by_two"));

  // qpfit
  m.def("fit_p_k1",
        [](std::uint32_t k, std::size_t terms, int jobs) {
          SeqTable table;
          table.name = "p_k1";
          table.args = {{"k", std::to_string(k)}};
          table.values = restrict2::p_k1_table(k, terms, jobs);
          auto res = qpfit::fit_min_start(table, k);
          py::dict d;
          d["k"] = k;
          d["N_k"] = res.N_k;
          d["bracket"] = res.fit.bracket_notation();
          d["period"] = res.fit.canonical.period;
          py::list polys;
          for (const auto& poly : res.fit.canonical.polys) {
            py::list coeffs;
            for (const auto& c : poly) coeffs.append(c.get_str());
            polys.append(std::move(coeffs));
          }
          d["canonical"] = std::move(polys);
          return d;
        },
        py::arg("k"), py::arg("terms"), py::arg("jobs") = 1);

  // CLI passthrough, mainly for smoke tests
  m.def("cli_run", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"));
}
