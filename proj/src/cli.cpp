#include "ybsys/cli.hpp"

#include "ybsys/catalog.hpp"
#include "ybsys/matrix_file.hpp"
#include "ybsys/q_solver.hpp"
#include "ybsys/symmetry.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

namespace ybsys {

namespace {

template <class T>
struct Tag {
  using type = T;
};

bool has_identifier(const std::vector<std::string>& entries) {
  for (const auto& e : entries) {
    for (const char c : e) {
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return true;
    }
  }
  return false;
}

bool symbolic_file(const MatrixFile& file) {
  if (file.has_bindings()) return false;
  if (!file.params.empty()) return true;
  bool found = false;
  if (file.r) found = found || has_identifier(*file.r);
  if (file.q) found = found || has_identifier(*file.q);
  for (const auto& [name, entries] : file.basis) found = found || has_identifier(entries);
  return found;
}

// Calls f(Tag<T>{}, ctx) for the field the file and flags select.
template <class F>
int with_field(const MatrixFile& file, const std::optional<std::uint64_t>& prime, F&& f) {
  if (prime) return f(Tag<Fp>{}, PrimeField(*prime));
  if (symbolic_file(file)) return f(Tag<RationalFunction>{}, FunctionField{});
  return f(Tag<Rational>{}, RationalField{});
}

template <class T>
std::map<std::string, T> bindings_in(const MatrixFile& file, const typename T::Context& ctx) {
  std::map<std::string, T> out;
  for (const auto& [name, text] : file.bindings) {
    out.emplace(name, T::from_rational(parse_scalar<Rational>(text), ctx));
  }
  return out;
}

template <class T>
std::string field_name(const typename T::Context& ctx, const MatrixFile& file) {
  if constexpr (std::is_same_v<T, Fp>) {
    return "F_" + std::to_string(ctx.modulus());
  } else if constexpr (std::is_same_v<T, RationalFunction>) {
    std::set<std::string, bool (*)(const std::string&, const std::string&)> names(
        [](const std::string& a, const std::string& b) { return natural_less(a, b); });
    names.insert(file.params.begin(), file.params.end());
    const auto collect = [&](const std::vector<std::string>& entries) {
      for (const auto& e : entries) {
        const RationalFunction x = parse_scalar<RationalFunction>(e);
        for (const auto& v : x.numerator().variables()) names.insert(v);
        for (const auto& v : x.denominator().variables()) names.insert(v);
      }
    };
    if (file.r) collect(*file.r);
    if (file.q) collect(*file.q);
    std::string out = "Q(";
    bool first = true;
    for (const auto& n : names) {
      out += (first ? "" : ", ") + n;
      first = false;
    }
    return out + ")";
  } else {
    (void)ctx;
    (void)file;
    return "Q";
  }
}

template <class T>
Matrix<T> grid_in(const std::vector<std::string>& entries, const std::map<std::string, T>& bindings,
                  const typename T::Context& ctx) {
  return materialize_template<T>(entries, bindings, ctx);
}

const std::vector<std::string>& require_r(const MatrixFile& file) {
  if (!file.r) throw ParseError("input has no R matrix");
  return *file.r;
}

const std::vector<std::string>& require_q(const MatrixFile& file) {
  if (!file.q) throw ParseError("input has no Q matrix");
  return *file.q;
}

std::string position(const std::pair<std::size_t, std::size_t>& at) {
  return "(" + std::to_string(at.first + 1) + ", " + std::to_string(at.second + 1) + ")";
}

// Per-equation report. Returns true when all four residuals vanish.
template <class T>
bool report_pair(const YBPair<T>& pair, std::vector<std::string>& lines) {
  const SystemResiduals<T> res = system_residuals(pair);
  for (const auto e : kSystemEquations) {
    const auto at = first_nonzero(res.get(e));
    if (at) {
      lines.push_back(std::string(equation_label(e)) + ": nonzero, first at " + position(*at) + " = " +
                      res.get(e)(at->first, at->second).to_string());
    } else {
      lines.push_back(std::string(equation_label(e)) + ": zero");
    }
  }
  const bool solves = res.all_zero();
  if (solves) lines.emplace_back("all four residuals zero");
  lines.push_back(std::string("R invertible: ") + (is_invertible(pair.r) ? "yes" : "no"));
  lines.push_back(std::string("Q invertible: ") + (is_invertible(pair.q) ? "yes" : "no"));
  lines.push_back(std::string("R second inversion: ") +
                  (is_invertible(partial_transpose_t1(pair.r, pair.d)) ? "yes" : "no"));
  lines.push_back(std::string("verdict: ") + (solves ? "solution" : "not a solution"));
  return solves;
}

int cmd_verify(const std::string& path, const std::optional<std::uint64_t>& prime, std::ostream& out) {
  const MatrixFile file = read_matrix_file(path);
  return with_field(file, prime, [&](auto tag, const auto& ctx) {
    using T = typename decltype(tag)::type;
    const auto b = bindings_in<T>(file, ctx);
    const YBPair<T> pair(grid_in<T>(require_r(file), b, ctx), grid_in<T>(require_q(file), b, ctx), file.d);
    std::vector<std::string> lines;
    const bool solves = report_pair(pair, lines);
    out << "field " << field_name<T>(ctx, file) << '\n';
    for (const auto& l : lines) out << l << '\n';
    return solves ? kExitOk : kExitNotSolution;
  });
}

int cmd_nullspace(const std::string& path, const std::optional<std::uint64_t>& prime, std::ostream& out) {
  const MatrixFile file = read_matrix_file(path);
  return with_field(file, prime, [&](auto tag, const auto& ctx) {
    using T = typename decltype(tag)::type;
    const auto b = bindings_in<T>(file, ctx);
    const NullSpaceBasis<T> ns = null_space(linear_operator_for_Q(grid_in<T>(require_r(file), b, ctx), file.d));
    out << "# field " << field_name<T>(ctx, file) << '\n';
    out << "# kernel dimension " << ns.dimension() << '\n';
    MatrixFile gauge;
    gauge.d = file.d;
    for (std::size_t k = 0; k < ns.dimension(); ++k) gauge.basis.emplace_back(ns.coords[k], entry_strings(ns.basis[k]));
    out << write_matrix_file(gauge);
    return kExitOk;
  });
}

constexpr std::size_t kConstraintPrintLimit = 24;

int cmd_constraints(const std::string& path, const std::string& gauge_path, bool all, bool print,
                    std::ostream& out) {
  const MatrixFile file = read_matrix_file(path);
  const std::optional<MatrixFile> gauge =
      gauge_path.empty() ? std::nullopt : std::optional<MatrixFile>(read_matrix_file(gauge_path));
  if (gauge && gauge->basis.empty()) throw ParseError(gauge_path + ": no basis blocks");
  if (gauge && gauge->d != file.d) throw ParseError(gauge_path + ": dimension differs from R");
  return with_field(file, std::nullopt, [&](auto tag, const auto& ctx) -> int {
    using T = typename decltype(tag)::type;
    if constexpr (std::is_same_v<T, Fp>) {
      throw ParseError("constraints are computed over Q or Q(params) only");
    } else {
    const auto b = bindings_in<T>(file, ctx);
    const Matrix<T> r = grid_in<T>(require_r(file), b, ctx);
    NullSpaceBasis<T> basis;
    if (gauge) {
      for (const auto& [name, entries] : gauge->basis) {
        basis.coords.push_back(name);
        basis.basis.push_back(grid_in<T>(entries, b, ctx));
      }
    } else {
      basis = null_space(linear_operator_for_Q(r, file.d));
    }
    const ConstraintSystem raw = cubic_constraints(r, basis, file.d);
    const ConstraintSystem shown = all ? raw : independent_constraints(raw);
    out << "# field " << field_name<T>(ctx, file) << '\n';
    out << "# gauge " << (gauge ? gauge_path : std::string("reduced echelon")) << '\n';
    out << "# coordinates";
    for (const auto& c : basis.coords) out << ' ' << c;
    out << '\n';
    out << "# " << raw.polynomials.size() << " distinct residual entries, " << independent_constraints(raw).polynomials.size()
        << " independent\n";
    if (shown.polynomials.size() > kConstraintPrintLimit && !print) {
      out << "# " << shown.polynomials.size() << " constraints not printed, pass --print\n";
    } else {
      for (const auto& p : shown.polynomials) out << p.to_string() << '\n';
    }
    return kExitOk;
    }
  });
}

int cmd_enumerate(const std::string& path, std::uint64_t prime, std::uint64_t bound, unsigned workers,
                  bool counts_only, std::ostream& out) {
  const MatrixFile file = read_matrix_file(path);
  const PrimeField ctx(prime);
  const auto b = bindings_in<Fp>(file, ctx);
  const Matrix<Fp> r = grid_in<Fp>(require_r(file), b, ctx);
  const EnumerationResult res = enumerate_fp(r, file.d, bound, workers);
  out << "field F_" << prime << '\n';
  out << "kernel dimension " << res.basis.dimension() << '\n';
  out << "points " << res.points << '\n';
  if (!res.r_solves_ybe) {
    out << "R does not solve the Yang-Baxter equation mod " << prime << "\n";
    out << "solutions 0\n";
    return kExitNotSolution;
  }
  out << "solutions " << res.solutions.size() << '\n';
  out << "invertible " << res.invertible_count() << '\n';
  if (counts_only) return kExitOk;
  const std::size_t n = file.d * file.d;
  for (std::size_t i = 0; i < res.solutions.size(); ++i) {
    const auto& s = res.solutions[i];
    out << "solution " << (i + 1) << " coords (";
    for (std::size_t k = 0; k < s.coords.size(); ++k) out << (k == 0 ? "" : ", ") << s.coords[k];
    out << ") " << (s.invertible ? "invertible" : "singular") << '\n';
    out << quote_grid(entry_strings(s.q), n);
  }
  return kExitOk;
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) out.push_back(item);
  return out;
}

int cmd_orbit(const std::string& path, const std::optional<std::uint64_t>& prime, const std::string& s_text,
              const std::string& lambda_text, const std::string& kappa_text, bool flip, std::ostream& out) {
  const MatrixFile file = read_matrix_file(path);
  return with_field(file, prime, [&](auto tag, const auto& ctx) {
    using T = typename decltype(tag)::type;
    const auto b = bindings_in<T>(file, ctx);
    const YBPair<T> pair(grid_in<T>(require_r(file), b, ctx), grid_in<T>(require_q(file), b, ctx), file.d);
    const auto s_entries = s_text.empty() ? std::vector<std::string>{} : split_commas(s_text);
    Matrix<T> s = Matrix<T>::identity(file.d, ctx);
    if (!s_entries.empty()) {
      if (s_entries.size() != file.d * file.d) {
        throw ParseError("--s needs " + std::to_string(file.d * file.d) + " comma-separated entries");
      }
      s = grid_in<T>(s_entries, b, ctx);
    }
    const T lambda = parse_scalar<T>(lambda_text, ctx, &b);
    const T kappa = parse_scalar<T>(kappa_text, ctx, &b);
    if (lambda.is_zero() || kappa.is_zero()) throw ParseError("lambda and kappa must be nonzero");
    if (!is_invertible(s)) throw SingularMatrix("S is singular");
    const YBPair<T> image = apply_symmetry(pair, SymmetryElement<T>(s, lambda, kappa, flip));
    MatrixFile result;
    result.d = file.d;
    if constexpr (std::is_same_v<T, RationalFunction>) result.params = file.params;
    result.r = entry_strings(image.r);
    result.q = entry_strings(image.q);
    out << "# field " << field_name<T>(ctx, file) << '\n';
    out << write_matrix_file(result);
    std::vector<std::string> lines;
    const bool solves = report_pair(image, lines);
    for (const auto& l : lines) out << "# " << l << '\n';
    return solves ? kExitOk : kExitNotSolution;
  });
}

void write_comment_block(std::ostream& out, const std::string& label, const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) out << "# " << label << line << '\n';
}

int cmd_catalog_list(std::ostream& out) {
  for (const auto& e : catalog_entries()) {
    out << e.name << "  [" << e.group << "]  " << e.anchor;
    if (!e.params.empty()) {
      out << "  params";
      for (const auto& p : e.params) out << ' ' << p;
    }
    for (const auto& c : e.constraints) out << "  " << c.relation().to_string() << " = 0";
    out << '\n';
  }
  for (const auto& x : cross_references()) {
    out << x.name << "  [cross reference, " << x.status << " -> " << x.linked_entry << "]  " << x.anchor << '\n';
  }
  out << "scalar R  [rule]  " << kScalarRRule << '\n';
  return kExitOk;
}

std::vector<const CatalogEntry*> selected_entries(const std::string& name) {
  std::vector<const CatalogEntry*> out;
  if (name.empty()) {
    for (const auto& e : catalog_entries()) out.push_back(&e);
  } else {
    out.push_back(&find_entry(name));
  }
  return out;
}

int cmd_catalog_verify(const std::string& name, std::size_t samples, std::uint64_t seed, std::ostream& out) {
  bool all_passed = true;
  for (const auto* e : selected_entries(name)) {
    const FamilyReport rep = verify_family(*e, samples, seed);
    out << e->name << ": " << rep.samples_passed << "/" << rep.samples << " samples";
    if (rep.symbolic_attempted) {
      out << ", symbolic " << (rep.symbolic_passed ? "ok" : "FAILED") << " (" << rep.symbolic_instances
          << (rep.symbolic_instances == 1 ? " instance)" : " instances)");
    }
    out << (rep.passed() ? "  PASS" : "  FAIL") << '\n';
    if (!rep.passed()) {
      all_passed = false;
      if (!rep.failure.empty()) out << "  " << rep.failure << '\n';
      if (rep.failing_binding) {
        out << "  binding";
        for (const auto& [k, v] : *rep.failing_binding) out << ' ' << k << '=' << v.to_string();
        out << '\n';
      }
    }
  }
  return all_passed ? kExitOk : kExitNotSolution;
}

std::string export_file_name(const std::string& entry) {
  std::string out = entry;
  for (char& c : out) {
    if (c == '/') c = '_';
  }
  return out + ".ybs";
}

int cmd_catalog_export(const std::string& dir, const std::string& name, std::uint64_t seed, std::ostream& out) {
  std::filesystem::create_directories(dir);
  for (const auto* e : selected_entries(name)) {
    MatrixFile file;
    file.params = e->params;
    file.r = e->r_template;
    file.q = e->q_template;
    if (e->has_constraints()) {
      // Symbolic parameters would ignore the constraints; pin a valid point.
      for (const auto& [k, v] : instantiate(*e, seed).binding) file.bindings.emplace_back(k, v.to_string());
    }
    const std::filesystem::path target = std::filesystem::path(dir) / export_file_name(e->name);
    std::ofstream f(target);
    if (!f) throw ParseError("cannot write '" + target.string() + "'");
    f << "# " << e->name << '\n';
    write_comment_block(f, "", e->anchor);
    for (const auto& c : e->constraints) f << "# constraint " << c.relation().to_string() << " = 0\n";
    for (const auto& nz : e->nondegeneracy) f << "# nonzero " << nz << '\n';
    write_comment_block(f, "note: ", e->notes);
    f << write_matrix_file(file);
    out << target.string() << '\n';
  }
  return kExitOk;
}

std::vector<char*> argv_of(std::vector<std::string>& storage) {
  std::vector<char*> out;
  for (auto& s : storage) out.push_back(s.data());
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification and solving of the Yang-Baxter system for 4x4 matrices", "ybsys"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every command");

  std::string file;
  std::optional<std::uint64_t> prime;
  std::int64_t code = kExitOk;

  auto* verify = app.add_subcommand("verify", "Check whether (R, Q) solves the system");
  verify->add_option("file", file, "Pair file with R and Q")->required();
  verify->add_option("--prime", prime, "Work over F_p");

  auto* nullspace = app.add_subcommand("nullspace", "Basis of the Q solving the two linear equations for R");
  nullspace->add_option("file", file, "File with R")->required();
  nullspace->add_option("--prime", prime, "Work over F_p");

  std::string gauge;
  bool all = false;
  bool print = false;
  auto* constraints = app.add_subcommand("constraints", "Cubic constraints on the null-space coordinates");
  constraints->add_option("file", file, "File with R")->required();
  constraints->add_option("--gauge", gauge, "File with basis blocks to use instead of the echelon basis");
  constraints->add_flag("--all", all, "Every distinct residual entry, not only an independent subset");
  constraints->add_flag("--print", print, "Print long constraint lists too");

  std::uint64_t enum_prime = 0;
  std::uint64_t bound = default_enumeration_bound();
  unsigned workers = 0;
  bool counts_only = false;
  auto* enumerate = app.add_subcommand("enumerate", "Every solution Q over F_p for the given R");
  enumerate->add_option("file", file, "File with R")->required();
  enumerate->add_option("--prime", enum_prime, "Prime modulus")->required();
  enumerate->add_option("--bound", bound, "Largest number of coordinate points to visit (default from YBSYS_ENUM_BOUND or 10^7)");
  enumerate->add_option("--workers", workers, "Threads, 0 for all cores");
  enumerate->add_flag("--counts-only", counts_only, "Skip the solution listing");

  std::string s_text;
  std::string lambda_text = "1";
  std::string kappa_text = "1";
  bool flip = false;
  auto* orbit = app.add_subcommand("orbit", "Apply Q -> lambda (S(x)S) Q (S(x)S)^-1, R -> kappa (S(x)S) R (S(x)S)^-1, optional P-conjugation");
  orbit->add_option("file", file, "Pair file with R and Q")->required();
  orbit->add_option("--s", s_text, "Entries of S, row-major, comma separated (default identity)");
  orbit->add_option("--lambda", lambda_text, "Scale of Q");
  orbit->add_option("--kappa", kappa_text, "Scale of R");
  orbit->add_flag("--flip", flip, "Conjugate both matrices by P afterwards");
  orbit->add_option("--prime", prime, "Work over F_p");

  auto* catalog = app.add_subcommand("catalog", "The solution families");
  catalog->require_subcommand(1);
  std::string entry;
  std::size_t samples = 20;
  std::uint64_t seed = 1;
  std::string dir;
  auto* list = catalog->add_subcommand("list", "List families with their anchors");
  auto* cverify = catalog->add_subcommand("verify", "Verify families at seeded parameter values and symbolically");
  cverify->add_option("--samples", samples, "Instantiations per family");
  cverify->add_option("--seed", seed, "Seed");
  cverify->add_option("--entry", entry, "Only this family");
  auto* exp = catalog->add_subcommand("export", "Write one pair file per family");
  exp->add_option("--dir", dir, "Output directory")->required();
  exp->add_option("--entry", entry, "Only this family");
  exp->add_option("--seed", seed, "Seed for parameter values of constrained families");

  std::vector<std::string> storage{"ybsys"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv = argv_of(storage);
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInputError;
  }

  try {
    if (verify->parsed()) code = cmd_verify(file, prime, out);
    else if (nullspace->parsed()) code = cmd_nullspace(file, prime, out);
    else if (constraints->parsed()) code = cmd_constraints(file, gauge, all, print, out);
    else if (enumerate->parsed()) code = cmd_enumerate(file, enum_prime, bound, workers, counts_only, out);
    else if (orbit->parsed()) code = cmd_orbit(file, prime, s_text, lambda_text, kappa_text, flip, out);
    else if (list->parsed()) code = cmd_catalog_list(out);
    else if (cverify->parsed()) code = cmd_catalog_verify(entry, samples, seed, out);
    else if (exp->parsed()) code = cmd_catalog_export(dir, entry, seed, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return static_cast<int>(code);
}

}  // namespace ybsys
