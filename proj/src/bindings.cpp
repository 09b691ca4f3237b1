#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <utility>

#include "tba/characters.hpp"
#include "tba/io.hpp"
#include "tba/products.hpp"
#include "tba/subsets.hpp"

namespace py = pybind11;

namespace {

struct Algebra {
  tba::TableAlgebra::Ptr ptr;
};

struct Quotient {
  tba::QuotientPresentation value;
};

struct Table {
  tba::CharacterTable value;
};

const tba::Character& irreducible_at(const Table& table, int i) {
  if (i < 0 || i >= static_cast<int>(table.value.irreducibles.size())) {
    throw py::index_error("character index out of range");
  }
  return table.value.irreducibles[i];
}

py::dict decomposition_dict(const tba::Decomposition& dec) {
  py::dict out;
  out["coefficients"] = dec.coefficients;
  out["rounded"] = dec.rounded;
  out["is_character"] = dec.is_character;
  return out;
}

}  // namespace

PYBIND11_MODULE(_tba, m) {
  m.doc() = "table algebra toolkit: validation, closed subsets, quotients, "
            "character tables and character products";

  py::register_exception<tba::Error>(m, "TbaError");

  py::class_<Algebra>(m, "Algebra")
      .def_property_readonly("dim",
                             [](const Algebra& a) { return a.ptr->dim(); })
      .def_property_readonly(
          "commutative", [](const Algebra& a) { return a.ptr->commutative(); })
      .def_property_readonly("degrees",
                             [](const Algebra& a) {
                               std::vector<double> out;
                               for (const auto& x : a.ptr->degrees()) {
                                 out.push_back(tba::to_double(x));
                               }
                               return out;
                             })
      .def_property_readonly(
          "star", [](const Algebra& a) { return a.ptr->star_permutation(); })
      .def("product",
           [](const Algebra& a, int i, int j) {
             if (i < 0 || i >= a.ptr->dim() || j < 0 || j >= a.ptr->dim()) {
               throw py::index_error("basis index out of range");
             }
             std::vector<std::pair<int, std::string>> out;
             for (const auto& e : a.ptr->row(i, j)) {
               out.emplace_back(e.c, tba::to_string(e.value));
             }
             return out;
           },
           "Nonzero coefficients of b_i b_j as (index, rational) pairs")
      .def("to_text",
           [](const Algebra& a) { return tba::write_native(*a.ptr); })
      .def("__repr__", [](const Algebra& a) {
        return "<Algebra dim=" + std::to_string(a.ptr->dim()) + ">";
      });

  py::class_<Quotient>(m, "Quotient")
      .def_property_readonly(
          "cosets", [](const Quotient& q) { return q.value.cosets; })
      .def_property_readonly("reps",
                             [](const Quotient& q) { return q.value.reps; })
      .def_property_readonly(
          "alphas",
          [](const Quotient& q) {
            std::vector<std::string> out;
            for (const auto& x : q.value.alphas) {
              out.push_back(tba::to_string(x));
            }
            return out;
          },
          "alpha_b as rationals; empty when the subset is not normal")
      .def_property_readonly(
          "algebra", [](const Quotient& q) { return Algebra{q.value.algebra}; })
      .def_property_readonly("normal", [](const Quotient& q) {
        return q.value.closed.normal();
      })
      .def_property_readonly("strongly_normal", [](const Quotient& q) {
        return q.value.closed.strongly_normal();
      });

  py::class_<Table>(m, "CharacterTable")
      .def_property_readonly("values",
                             [](const Table& t) {
                               std::vector<std::vector<tba::Complex>> out;
                               for (const auto& chi : t.value.irreducibles) {
                                 out.push_back(chi.values);
                               }
                               return out;
                             })
      .def_property_readonly(
          "block_dims", [](const Table& t) { return t.value.block_dims; })
      .def_property_readonly(
          "multiplicities",
          [](const Table& t) { return t.value.multiplicities; })
      .def_property_readonly("deg_index",
                             [](const Table& t) { return t.value.deg_index; })
      .def_property_readonly("residuals",
                             [](const Table& t) {
                               const auto& r = t.value.residuals;
                               py::dict out;
                               out["max_idempotent"] = r.max_idempotent;
                               out["max_gram_offdiag"] = r.max_gram_offdiag;
                               out["min_gram_diag"] = r.min_gram_diag;
                               out["max_trace"] = r.max_trace;
                               out["max_star_conj"] = r.max_star_conj;
                               out["attempts"] = r.attempts;
                               out["seed"] = r.seed;
                               return out;
                             })
      .def("dual",
           [](const Table& t, int i, int j) {
             return tba::dual_form(irreducible_at(t, i), irreducible_at(t, j));
           })
      .def("decompose", [](const Table& t, std::vector<tba::Complex> values) {
        return decomposition_dict(tba::decompose(t.value, values));
      });

  m.def("load", [](const std::string& path) {
    return Algebra{tba::load_algebra(path)};
  });
  m.def("from_text", [](const std::string& text) {
    std::istringstream in(text);
    return Algebra{tba::parse_any(in)};
  });
  m.def("example_q", [](int q) { return Algebra{tba::example_q(q)}; });
  m.def(
      "validate_text",
      [](const std::string& text) {
        std::istringstream in(text);
        const auto raw = tba::parse_any_raw(in);
        const auto result = tba::TableAlgebra::validate(raw);
        std::vector<std::string> out;
        for (const auto& violation : result.violations) {
          out.push_back(violation.describe());
        }
        return out;
      },
      "Axiom violations as strings; an empty list means the input is valid");

  m.def("closure", [](const Algebra& a, std::vector<int> seed) {
    return tba::closure(a.ptr, seed).indices();
  });
  m.def("closed_subsets", [](const Algebra& a) {
    py::list out;
    for (const auto& c : tba::enumerate_closed_subsets(a.ptr)) {
      py::dict item;
      item["indices"] = c.indices();
      item["normal"] = c.normal();
      item["strongly_normal"] = c.strongly_normal();
      out.append(std::move(item));
    }
    return out;
  });
  m.def("quotient", [](const Algebra& a, std::vector<int> indices) {
    auto closed = tba::ClosedSubset::from_indices(a.ptr, std::move(indices));
    return Quotient{tba::quotient(closed)};
  });

  m.def("character_table",
        [](const Algebra& a, double tol, std::uint64_t seed) {
          return Table{tba::character_table(a.ptr, tol, seed)};
        },
        py::arg("algebra"), py::arg("tol") = 1e-8, py::arg("seed") = 0);

  m.def("product_values",
        [](const Table& t, int i, int j) {
          return tba::product(irreducible_at(t, i), irreducible_at(t, j))
              .values;
        },
        "Values of the character product chi_i chi_j");
  m.def("power_values", [](const Table& t, int i, int j) {
    return tba::power(irreducible_at(t, i), j).values;
  });

  m.def("lift", [](const Quotient& q, const Table& quotient_table, int i) {
    return tba::lift_character(q.value, irreducible_at(quotient_table, i))
        .values;
  });
  m.def("embedding",
        [](const Table& parent, const Quotient& q, const Table& qt) {
          const auto report =
              tba::embedding_check(parent.value, q.value, qt.value);
          py::dict out;
          out["image"] = report.image;
          out["excluded"] = report.excluded;
          out["idempotent_values"] = report.idempotent_values;
          out["max_match_error"] = report.max_match_error;
          return out;
        });

  m.def("burnside_brauer",
        [](const Table& t, std::vector<int> chi_indices, double tol) {
          const auto chi = tba::character_sum(t.value, chi_indices);
          const auto report = tba::burnside_brauer(t.value, chi, tol);
          py::dict out;
          out["k"] = report.k;
          out["alpha"] = report.alpha;
          out["value_classes"] = report.value_classes;
          out["kernel_ok"] = report.hypothesis_kernel_ok;
          out["powers_ok"] = report.hypothesis_powers_ok;
          out["failures"] = report.hypothesis_failures;
          out["first_appearance"] = report.first_appearance;
          out["covered"] = report.covered;
          py::list powers;
          for (const auto& row : report.powers) {
            py::dict p;
            p["values"] = row.values;
            p["in_span"] = row.in_span;
            if (row.in_span) {
              p["decomposition"] = decomposition_dict(row.decomposition);
            }
            powers.append(std::move(p));
          }
          out["powers"] = powers;
          out["vandermonde"] = report.vandermonde;
          out["vandermonde_near_zero"] = report.vandermonde_near_zero;
          out["duality_residual"] = report.duality_residual;
          return out;
        },
        py::arg("table"), py::arg("chi_indices"), py::arg("tol") = 1e-6);
}
