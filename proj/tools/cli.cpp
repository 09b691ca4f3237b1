#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "tba/characters.hpp"
#include "tba/io.hpp"
#include "tba/products.hpp"
#include "tba/subsets.hpp"

namespace tba::cli {

namespace {

std::string fnum(double x) {
  if (std::abs(x) < 1e-9) x = 0.0;  // also normalizes -0
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

std::string fcplx(const Complex& z) {
  if (std::abs(z.imag()) < 1e-9) return fnum(z.real());
  std::string s = fnum(z.real());
  s += z.imag() < 0 ? "-" : "+";
  s += fnum(std::abs(z.imag()));
  s += "i";
  return s;
}

std::string join_ints(const std::vector<int>& v, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

std::vector<int> parse_index_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ShapeMismatch("bad index list entry '" + item + "'");
    }
  }
  if (out.empty()) throw ShapeMismatch("empty index list");
  return out;
}

/// "deg", a single index, or a +-separated sum of indices.
Character parse_character_spec(const CharacterTable& table,
                               const std::string& spec) {
  if (spec == "deg") return degree_character(table.algebra);
  std::vector<int> indices;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, '+')) {
    if (item == "deg") {
      throw ShapeMismatch("'deg' cannot be combined with indices");
    }
    try {
      std::size_t used = 0;
      indices.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ShapeMismatch("bad character spec entry '" + item + "'");
    }
  }
  return character_sum(table, indices);
}

void print_values_row(std::ostream& out, const std::vector<Complex>& values,
                      const char* sep) {
  for (std::size_t b = 0; b < values.size(); ++b) {
    if (b) out << sep;
    out << fcplx(values[b]);
  }
}

void print_decomposition_tsv(std::ostream& out,
                             const Decomposition& dec) {
  for (std::size_t i = 0; i < dec.coefficients.size(); ++i) {
    out << "coeff\t" << i << "\t" << fcplx(dec.coefficients[i]) << "\t"
        << dec.rounded[i] << "\n";
  }
  out << "ischaracter\t" << (dec.is_character ? 1 : 0) << "\n";
}

std::string decomposition_sum(const CharacterTable& table,
                              const Decomposition& dec) {
  std::string s;
  for (std::size_t i = 0; i < dec.coefficients.size(); ++i) {
    if (std::abs(dec.coefficients[i]) < 1e-9) continue;
    if (!s.empty()) s += " + ";
    s += fcplx(dec.coefficients[i]) + "*chi_" + std::to_string(i);
  }
  (void)table;
  return s.empty() ? "0" : s;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"table algebra toolkit"};
  app.require_subcommand(1);
  std::string format = "human";
  app.add_option("--format", format, "report format: human or tsv")
      ->check(CLI::IsMember({"human", "tsv"}));

  std::string file;
  std::string closed_spec;
  std::string chi_spec;
  std::string psi_spec;
  std::string out_path;
  bool strict = false;
  double tol_table = 1e-8;
  double tol_check = 1e-6;
  std::uint64_t seed = 0;
  int q_value = 0;
  std::size_t subset_limit = 1000000;

  auto* c_validate =
      app.add_subcommand("validate", "check the table algebra axioms");
  c_validate->add_option("file", file, "algebra file")->required();
  c_validate->add_flag("--strict", strict,
                       "exhaustive associativity at any dimension");
  c_validate->fallthrough();

  auto* c_subsets =
      app.add_subcommand("subsets", "enumerate all closed subsets");
  c_subsets->add_option("file", file, "algebra file")->required();
  c_subsets->add_option("--limit", subset_limit,
                        "abort beyond this many subsets");
  c_subsets->fallthrough();

  auto* c_quotient =
      app.add_subcommand("quotient", "quotient by a closed subset");
  c_quotient->add_option("file", file, "algebra file")->required();
  c_quotient
      ->add_option("--closed", closed_spec, "closed subset as indices i,j,...")
      ->required();
  c_quotient->fallthrough();

  auto* c_chartable =
      app.add_subcommand("chartable", "irreducible complex characters");
  c_chartable->add_option("file", file, "algebra file")->required();
  c_chartable->add_option("--tol", tol_table, "numerical tolerance");
  c_chartable->add_option("--seed", seed, "random seed for the splitting");
  c_chartable->fallthrough();

  auto* c_product =
      app.add_subcommand("product", "character product and decomposition");
  c_product->add_option("file", file, "algebra file")->required();
  c_product->add_option("--chi", chi_spec, "left character")->required();
  c_product->add_option("--psi", psi_spec, "right character")->required();
  c_product->add_option("--tol", tol_table, "numerical tolerance");
  c_product->add_option("--seed", seed, "random seed for the splitting");
  c_product->fallthrough();

  auto* c_bb =
      app.add_subcommand("bb", "power-coverage check for one character");
  c_bb->add_option("file", file, "algebra file")->required();
  c_bb->add_option("--chi", chi_spec,
                   "character: index, sum i+j+..., or deg")
      ->required();
  c_bb->add_option("--tol", tol_check, "value-clustering tolerance");
  c_bb->add_option("--seed", seed, "random seed for the splitting");
  c_bb->fallthrough();

  auto* c_lift =
      app.add_subcommand("lift", "lift quotient characters and embed them");
  c_lift->add_option("file", file, "algebra file")->required();
  c_lift->add_option("--closed", closed_spec, "closed subset as indices")
      ->required();
  c_lift->add_option("--tol", tol_check, "matching tolerance");
  c_lift->add_option("--seed", seed, "random seed for the splitting");
  c_lift->fallthrough();

  auto* c_example =
      app.add_subcommand("example-q", "emit the one-parameter example family");
  c_example->add_option("q", q_value, "parameter q >= 2")->required();
  c_example->add_option("--out", out_path, "write to this file instead");
  c_example->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  if (const char* env = std::getenv("TBA_SEED"); env && *env) {
    try {
      std::size_t used = 0;
      seed = std::stoull(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument(env);
    } catch (const std::exception&) {
      err << "usage error: TBA_SEED must be an unsigned integer\n";
      return 2;
    }
  }

  const bool tsv = format == "tsv";

  auto guard = [&err](auto&& body) -> int {
    try {
      return body();
    } catch (const ParseError& e) {
      err << "input error: " << e.what() << "\n";
      return 2;
    } catch (const FileError& e) {
      err << "input error: " << e.what() << "\n";
      return 2;
    } catch (const NotAScheme& e) {
      err << "input error: not an association scheme: " << e.what() << "\n";
      return 2;
    } catch (const NotAGroup& e) {
      err << "input error: not a group: " << e.what() << "\n";
      return 2;
    } catch (const AxiomError& e) {
      err << "input error: " << e.what() << "\n";
      return 2;
    } catch (const ShapeMismatch& e) {
      err << "input error: " << e.what() << "\n";
      return 2;
    } catch (const Error& e) {
      err << "check failed: " << e.what() << "\n";
      return 1;
    }
  };

  if (*c_validate) {
    return guard([&]() -> int {
      const auto raw = load_raw(file);
      ValidateOptions opts;
      opts.strict = strict;
      const auto result = TableAlgebra::validate(raw, opts);
      if (result.ok()) {
        if (tsv) {
          out << "validate\tok\t" << result.algebra->dim() << "\n";
        } else {
          out << "OK: " << result.algebra->dim()
              << " basis elements, axioms I-IV hold\n";
        }
        return 0;
      }
      if (tsv) {
        for (const auto& v : result.violations) {
          out << "violation\t" << name(v.axiom) << "\t"
              << join_ints(v.indices) << "\t" << to_string(v.found) << "\t"
              << to_string(v.expected) << "\t" << v.note << "\n";
        }
      } else {
        out << "INVALID: " << result.violations.size()
            << " axiom violation(s)\n";
        for (const auto& v : result.violations) {
          out << "  " << v.describe() << "\n";
        }
      }
      return 1;
    });
  }

  if (*c_subsets) {
    return guard([&]() -> int {
      const auto algebra = load_algebra(file);
      const auto subsets = enumerate_closed_subsets(algebra, subset_limit);
      if (!tsv) out << "closed subsets: " << subsets.size() << "\n";
      for (std::size_t i = 0; i < subsets.size(); ++i) {
        const auto& c = subsets[i];
        if (tsv) {
          out << "subset\t" << i << "\t" << c.size() << "\t"
              << (c.normal() ? 1 : 0) << "\t" << (c.strongly_normal() ? 1 : 0)
              << "\t" << join_ints(c.indices()) << "\n";
        } else {
          out << "  [" << i << "] {" << join_ints(c.indices())
              << "} size=" << c.size()
              << " normal=" << (c.normal() ? "yes" : "no")
              << " strongly_normal=" << (c.strongly_normal() ? "yes" : "no")
              << "\n";
        }
      }
      return 0;
    });
  }

  if (*c_quotient) {
    return guard([&]() -> int {
      const auto algebra = load_algebra(file);
      const auto closed =
          ClosedSubset::from_indices(algebra, parse_index_list(closed_spec));
      const auto q = quotient(closed);
      const auto& quot = *q.algebra;
      if (tsv) {
        out << "closed\t" << join_ints(closed.indices()) << "\t"
            << (closed.normal() ? 1 : 0) << "\t"
            << (closed.strongly_normal() ? 1 : 0) << "\n";
        for (std::size_t i = 0; i < q.cosets.size(); ++i) {
          out << "coset\t" << i << "\t" << q.reps[i] << "\t"
              << join_ints(q.cosets[i]) << "\t"
              << to_string(quot.degree(static_cast<int>(i))) << "\n";
        }
        for (std::size_t b = 0; b < q.alphas.size(); ++b) {
          out << "alpha\t" << b << "\t" << to_string(q.alphas[b]) << "\n";
        }
        for (const auto& e : quot.lambda_entries()) {
          out << "gamma\t" << e.a << "\t" << e.b << "\t" << e.c << "\t"
              << to_string(e.value) << "\n";
        }
      } else {
        out << "closed subset {" << join_ints(closed.indices()) << "}: "
            << (closed.normal() ? "normal" : "not normal") << ", "
            << (closed.strongly_normal() ? "strongly normal"
                                         : "not strongly normal")
            << "\n";
        out << "cosets: " << q.cosets.size() << "\n";
        for (std::size_t i = 0; i < q.cosets.size(); ++i) {
          out << "  [" << i << "] rep=" << q.reps[i] << " members={"
              << join_ints(q.cosets[i])
              << "} degree=" << to_string(quot.degree(static_cast<int>(i)))
              << "\n";
        }
        if (!q.alphas.empty()) {
          out << "alpha scalars:\n";
          for (std::size_t b = 0; b < q.alphas.size(); ++b) {
            out << "  alpha[" << b << "] = " << to_string(q.alphas[b]) << "\n";
          }
        }
        out << "structure constants gamma(i,j,k):\n";
        for (const auto& e : quot.lambda_entries()) {
          out << "  gamma(" << e.a << "," << e.b << "," << e.c
              << ") = " << to_string(e.value) << "\n";
        }
      }
      return 0;
    });
  }

  if (*c_chartable) {
    return guard([&]() -> int {
      const auto algebra = load_algebra(file);
      const auto table = character_table(algebra, tol_table, seed);
      const int r = static_cast<int>(table.irreducibles.size());
      if (tsv) {
        // Canonical rows only, so the report is independent of the seed.
        for (int i = 0; i < r; ++i) {
          out << "char\t" << i << "\t" << table.block_dims[i] << "\t"
              << fnum(table.multiplicities[i]) << "\t";
          print_values_row(out, table.irreducibles[i].values, "\t");
          out << "\n";
        }
        out << "degindex\t" << table.deg_index << "\n";
      } else {
        out << "irreducible characters: " << r << " (dimension "
            << algebra->dim() << ")\n";
        for (int i = 0; i < r; ++i) {
          out << "  chi_" << i << "  n=" << table.block_dims[i]
              << "  m=" << fnum(table.multiplicities[i]) << "  values: ";
          print_values_row(out, table.irreducibles[i].values, " ");
          if (i == table.deg_index) out << "  (degree map)";
          out << "\n";
        }
        const auto& res = table.residuals;
        out << "residuals: idempotent=" << fnum(res.max_idempotent)
            << " gram_offdiag=" << fnum(res.max_gram_offdiag)
            << " gram_diag_min=" << fnum(res.min_gram_diag)
            << " trace=" << fnum(res.max_trace)
            << " star_conj=" << fnum(res.max_star_conj)
            << " attempts=" << res.attempts << " seed=" << res.seed << "\n";
      }
      return 0;
    });
  }

  if (*c_product) {
    return guard([&]() -> int {
      const auto algebra = load_algebra(file);
      const auto table = character_table(algebra, tol_table, seed);
      const auto chi = parse_character_spec(table, chi_spec);
      const auto psi = parse_character_spec(table, psi_spec);
      const auto prod = product(chi, psi);
      const auto dec = decompose(table, prod.values);
      if (tsv) {
        for (int b = 0; b < algebra->dim(); ++b) {
          out << "value\t" << b << "\t" << fcplx(prod.values[b]) << "\n";
        }
        print_decomposition_tsv(out, dec);
      } else {
        out << "product values: ";
        print_values_row(out, prod.values, " ");
        out << "\n";
        out << "decomposition: " << decomposition_sum(table, dec) << "\n";
        out << "rounded coefficients:";
        for (long long c : dec.rounded) out << " " << c;
        out << "\n";
        out << "is a character: " << (dec.is_character ? "yes" : "no") << "\n";
      }
      return 0;
    });
  }

  if (*c_bb) {
    return guard([&]() -> int {
      const auto algebra = load_algebra(file);
      const auto table = character_table(algebra, tol_table, seed);
      const auto chi = parse_character_spec(table, chi_spec);
      const auto report = burnside_brauer(table, chi, tol_check);
      const bool pass = report.hypothesis_kernel_ok &&
                        report.hypothesis_powers_ok && report.covered;
      const int r = static_cast<int>(table.irreducibles.size());
      if (tsv) {
        out << "k\t" << report.k << "\n";
        for (int t = 0; t < report.k; ++t) {
          out << "alphavalue\t" << t << "\t" << fcplx(report.alpha[t]) << "\t"
              << join_ints(report.value_classes[t]) << "\n";
        }
        out << "hypothesis\tkernel\t" << (report.hypothesis_kernel_ok ? 1 : 0)
            << "\n";
        out << "hypothesis\tpowers\t" << (report.hypothesis_powers_ok ? 1 : 0)
            << "\n";
        for (int i = 0; i < report.k; ++i) {
          const auto& row = report.powers[i];
          out << "power\t" << i << "\t" << (row.in_span ? 1 : 0);
          if (row.in_span) {
            out << "\t" << (row.decomposition.is_character ? 1 : 0);
            for (const auto& c : row.decomposition.coefficients) {
              out << "\t" << fcplx(c);
            }
          }
          out << "\n";
        }
        for (int j = 0; j < r; ++j) {
          out << "coverage\t" << j << "\t" << report.first_appearance[j]
              << "\n";
        }
        out << "vandermonde\t" << fcplx(report.vandermonde) << "\t"
            << (report.vandermonde_near_zero ? 1 : 0) << "\n";
        out << "verdict\t" << (pass ? "PASS" : "FAIL") << "\n";
      } else {
        out << "character values: ";
        print_values_row(out, chi.values, " ");
        out << "\n";
        out << "k = " << report.k << " distinct values of chi(b)/|b|:";
        for (const auto& a : report.alpha) out << " " << fcplx(a);
        out << "\n";
        out << "value classes:";
        for (const auto& cls : report.value_classes) {
          out << " {" << join_ints(cls) << "}";
        }
        out << "\n";
        out << "hypothesis kernel = {0}: "
            << (report.hypothesis_kernel_ok ? "ok" : "FAILED") << "\n";
        out << "hypothesis powers are characters: "
            << (report.hypothesis_powers_ok ? "ok" : "FAILED") << "\n";
        for (const auto& f : report.hypothesis_failures) {
          out << "  failure: " << f << "\n";
        }
        for (int i = 0; i < report.k; ++i) {
          const auto& row = report.powers[i];
          out << "chi^" << i << ": ";
          if (row.in_span) {
            out << decomposition_sum(table, row.decomposition)
                << (row.decomposition.is_character ? "" : "  (not a character)")
                << "\n";
          } else {
            out << "outside the span of the irreducible characters\n";
          }
        }
        out << "coverage (first power containing chi_j):";
        for (int j = 0; j < r; ++j) {
          out << " chi_" << j << ":";
          if (report.first_appearance[j] == -1) {
            out << "none";
          } else {
            out << report.first_appearance[j];
          }
        }
        out << "\n";
        out << "vandermonde = " << fcplx(report.vandermonde)
            << (report.vandermonde_near_zero ? " (near zero)" : "") << "\n";
        out << "duality residual = " << fnum(report.duality_residual) << "\n";
        out << "note: " << report.chi0_note << "\n";
        out << "regular character decomposition: "
            << decomposition_sum(table, report.regular_chi0) << "\n";
        out << "verdict: " << (pass ? "PASS" : "FAIL") << "\n";
      }
      return pass ? 0 : 1;
    });
  }

  if (*c_lift) {
    return guard([&]() -> int {
      const auto algebra = load_algebra(file);
      const auto closed =
          ClosedSubset::from_indices(algebra, parse_index_list(closed_spec));
      const auto q = quotient(closed);
      const auto parent_table = character_table(algebra, tol_table, seed);
      const auto quotient_table = character_table(q.algebra, tol_table, seed);
      const auto report =
          embedding_check(parent_table, q, quotient_table, tol_check);
      const int rq = static_cast<int>(quotient_table.irreducibles.size());
      if (tsv) {
        for (int i = 0; i < rq; ++i) {
          const auto lifted =
              lift_character(q, quotient_table.irreducibles[i]);
          out << "lift\t" << i << "\t" << report.image[i] << "\t";
          print_values_row(out, lifted.values, "\t");
          out << "\n";
        }
        for (int j : report.excluded) out << "excluded\t" << j << "\n";
        for (std::size_t j = 0; j < report.idempotent_values.size(); ++j) {
          out << "idempotent\t" << j << "\t"
              << fcplx(report.idempotent_values[j]) << "\n";
        }
      } else {
        out << "quotient characters: " << rq << ", parent characters: "
            << parent_table.irreducibles.size() << "\n";
        for (int i = 0; i < rq; ++i) {
          const auto lifted =
              lift_character(q, quotient_table.irreducibles[i]);
          out << "  psi_" << i << " lifts to chi_" << report.image[i]
              << "  values: ";
          print_values_row(out, lifted.values, " ");
          out << "\n";
        }
        out << "excluded (vanish on the subset idempotent):";
        if (report.excluded.empty()) out << " none";
        for (int j : report.excluded) out << " chi_" << j;
        out << "\n";
        out << "chi(e) per parent character:";
        for (const auto& v : report.idempotent_values) {
          out << " " << fcplx(v);
        }
        out << "\n";
        out << "max match error: " << fnum(report.max_match_error) << "\n";
      }
      return 0;
    });
  }

  if (*c_example) {
    return guard([&]() -> int {
      const auto algebra = example_q(q_value);
      if (out_path.empty()) {
        write_native(out, *algebra);
      } else {
        std::ofstream f(out_path);
        if (!f) throw FileError("cannot write file: " + out_path);
        write_native(f, *algebra);
      }
      return 0;
    });
  }

  err << "usage error: no subcommand\n";
  return 2;
}

}  // namespace tba::cli
