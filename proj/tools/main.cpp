// arf-engine: command-line front end to the arfengine library.
//
// Exit status: 0 on success, 1 for usage, I/O and parse errors, 2 for
// precondition failures (degenerate forms, non-orthogonal maps, membership,
// resource guards, failed verification). Errors go to stderr as
// `error: <code>: <message>`.

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "arfe/arfe.hpp"

namespace {

using namespace arfe;

class InputError : public Error {
 public:
  explicit InputError(const std::string& message) : Error("io-error", message) {}
};

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return in;
}

template <typename Parser>
auto read_file(const std::string& path, Parser parse) {
  auto in = open(path);
  try {
    return parse(in);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

bool looks_inline(const std::string& text) {
  return !text.empty() && text.find_first_not_of("01,") == std::string::npos;
}

// Inline bit rows ("01,10") or a path to a matrix file.
BitMatrix read_matrix(const std::string& argument) {
  if (looks_inline(argument)) return io::parse_inline_matrix(argument);
  return read_file(argument, [](std::istream& in) { return io::parse_matrix(in); });
}

QuadraticForm read_form(const std::string& path) {
  return read_file(path, [](std::istream& in) { return io::parse_form(in); });
}

SurfacePinkallForm read_surface(const std::string& path) {
  return read_file(path, [](std::istream& in) { return io::parse_surface(in); });
}

GeneratorWord read_word(const std::string& path) {
  return read_file(path, [](std::istream& in) { return io::parse_word(in); });
}

Decomposition read_decomposition(const std::string& path) {
  return read_file(path, [](std::istream& in) { return io::parse_decomposition(in); });
}

std::optional<std::size_t> guard_override() {
  const char* value = std::getenv("ARF_ENGINE_MAX_DIM");
  if (value == nullptr || *value == '\0') return std::nullopt;
  std::size_t parsed = 0;
  const std::string_view text(value);
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), parsed);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error("usage", "ARF_ENGINE_MAX_DIM must be a non-negative integer");
  }
  return parsed;
}

const char* bit(bool value) { return value ? "1" : "0"; }
const char* boolean(bool value) { return value ? "true" : "false"; }

std::string integer_matrix(const std::array<int, 4>& m) {
  return std::to_string(m[0]) + "," + std::to_string(m[1]) + ";" + std::to_string(m[2]) + "," + std::to_string(m[3]);
}

int exit_code(const Error& e) {
  const auto& code = e.code();
  return code == "parse-error" || code == "io-error" || code == "usage" ? 1 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quadratic forms over GF(2), orthogonal groups and the quadruple-point invariant"};
  app.require_subcommand(1);

  std::string form_path;
  std::string matrix_arg;
  std::string surface_path;
  std::string word_path;
  std::string decomposition_path;
  std::vector<std::string> surfaces;
  std::string method = "algebraic";
  int epsilon = 0;
  int genus = 1;
  int arf_value = 0;

  auto* arf_cmd = app.add_subcommand("arf", "Arf invariant of a form");
  arf_cmd->add_option("--form", form_path, "form file")->required();
  arf_cmd->add_option("--method", method, "algebraic (symplectic basis) or democratic (value count)")
      ->check(CLI::IsMember({"algebraic", "democratic"}));

  auto* psi_cmd = app.add_subcommand("psi", "rank(T - Id) mod 2 of an orthogonal map");
  psi_cmd->add_option("--form", form_path, "form file")->required();
  psi_cmd->add_option("--matrix", matrix_arg, "matrix file or inline rows such as 01,10")->required();

  auto* q_cmd = app.add_subcommand("q", "quadruple-point invariant Q(i, i∘h)");
  q_cmd->add_option("--surface", surface_path, "surface file")->required();
  auto* word_opt = q_cmd->add_option("--word", word_path, "generator word file");
  auto* q_matrix_opt = q_cmd->add_option("--matrix", matrix_arg, "action h_* as a file or inline rows");
  auto* epsilon_opt = q_cmd->add_option("--epsilon", epsilon, "orientation bit of h")->check(CLI::Range(0, 1));
  word_opt->excludes(q_matrix_opt)->excludes(epsilon_opt);
  epsilon_opt->needs(q_matrix_opt);

  auto* decompose_cmd = app.add_subcommand("decompose", "write an orthogonal map as U-map flag plus transvections");
  decompose_cmd->add_option("--form", form_path, "form file")->required();
  decompose_cmd->add_option("--matrix", matrix_arg, "matrix file or inline rows")->required();

  auto* verify_cmd = app.add_subcommand("verify", "check a decomposition against a matrix");
  verify_cmd->add_option("--form", form_path, "form file")->required();
  verify_cmd->add_option("--matrix", matrix_arg, "matrix file or inline rows")->required();
  verify_cmd->add_option("--decomposition", decomposition_path, "decomposition file")->required();

  auto* rh_cmd = app.add_subcommand("check-rh", "regular homotopy predicates for two immersions");
  rh_cmd->add_option("--surface", surfaces, "surface file (give exactly two)")->required()->expected(2);

  auto* enumerate_cmd = app.add_subcommand("enumerate", "list O(V, g) with psi values");
  enumerate_cmd->add_option("--form", form_path, "form file")->required();

  auto* catalog_cmd = app.add_subcommand("catalog", "genus-1 generators with epsilon and Psi");
  catalog_cmd->add_option("--genus", genus, "surface genus")->required();
  catalog_cmd->add_option("--arf", arf_value, "Arf invariant of the Pinkall form")->required()->check(CLI::Range(0, 1));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: usage: " << e.what() << "\n";
    return 1;
  }

  std::ostringstream out;
  try {
    const auto override_dim = guard_override();

    if (*arf_cmd) {
      const auto form = read_form(form_path);
      const bool value = method == "democratic" ? democratic_arf(form, override_dim.value_or(kDemocraticMaxDim))
                                                : arf(form);
      out << "arf " << bit(value) << "\n";
    } else if (*psi_cmd) {
      const auto form = read_form(form_path);
      out << "psi " << bit(psi(OrthogonalMap(form, read_matrix(matrix_arg)))) << "\n";
    } else if (*q_cmd) {
      const auto surface = read_surface(surface_path);
      std::optional<MappingClass> h;
      if (*word_opt) {
        h = evaluate_word(surface, read_word(word_path));
      } else if (*q_matrix_opt) {
        h = MappingClass(read_matrix(matrix_arg), epsilon == 1);
      } else {
        throw Error("usage", "q needs --word or --matrix");
      }
      out << "Q " << bit(quadruple_point_invariant(surface, *h)) << "\n";
    } else if (*decompose_cmd) {
      const auto form = read_form(form_path);
      out << io::format_decomposition(decompose(OrthogonalMap(form, read_matrix(matrix_arg))));
    } else if (*verify_cmd) {
      const auto form = read_form(form_path);
      const auto matrix = read_matrix(matrix_arg);
      const auto decomposition = read_decomposition(decomposition_path);
      bool valid = true;
      for (const auto& c : decomposition.word) {
        if (c.size() != form.dim()) throw DimensionError("decomposition vector length differs from the form");
        valid = valid && evaluate(form, c);
      }
      valid = valid && recompose(form, decomposition) == matrix;
      if (!valid) {
        std::cout << "verify mismatch\n";
        return 2;
      }
      out << "verify ok\n";
    } else if (*rh_cmd) {
      const auto first = read_surface(surfaces[0]);
      const auto second = read_surface(surfaces[1]);
      out << "regularly-homotopic " << boolean(regularly_homotopic(first, second)) << "\n";
      out << "diffeo-equivalent " << boolean(equivalent_up_to_diffeomorphism(first, second)) << "\n";
      out << "embedding-realizable " << boolean(embedding_realizable(first)) << "\n";
    } else if (*enumerate_cmd) {
      const auto form = read_form(form_path);
      const auto table = make_group_table(form, enumerate_group(form, override_dim.value_or(kEnumerateMaxDim)));
      out << "order " << table.elements.size() << "\n";
      for (std::size_t i = 0; i < table.elements.size(); ++i) {
        out << io::format_inline_matrix(table.elements[i]) << " " << bit(table.psi_values[i]) << "\n";
      }
    } else if (*catalog_cmd) {
      if (genus != 1) throw PreconditionError("catalog lists genus-1 generators only");
      const SurfacePinkallForm surface(1, arf_value ? BitVector::from_string("11") : BitVector(2));
      for (const auto& entry : genus1_catalog(arf_value == 1)) {
        out << entry.name << " integer " << integer_matrix(entry.integer) << " reduction "
            << io::format_inline_matrix(entry.reduced.action()) << " epsilon " << bit(entry.reduced.epsilon())
            << " Psi " << bit(psi_invariant(surface, entry.reduced)) << "\n";
      }
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.code() << ": " << e.what() << "\n";
    return exit_code(e);
  } catch (const std::exception& e) {
    std::cerr << "error: internal: " << e.what() << "\n";
    return 3;
  }
  std::cout << out.str();
  return 0;
}
