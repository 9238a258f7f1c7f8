// surfgerm: invariants of normal surface germs from their resolution graphs.
//
//   surfgerm invariants <file> [--format text|machine]
//   surfgerm classify   <file>
//   surfgerm mu         <file>
//   surfgerm freeness   <file>
//   surfgerm verify appendix|continuants|lemmas [--m A..B] [--trials N] [--seed S]
//
// Exit status: 0 success (verify: every check passed), 1 a verification
// check failed, 2 malformed input, 3 graph not negative definite, 4 the
// document lacks D-data.

#include <iostream>
#include <map>
#include <regex>
#include <string>

#include <CLI11.hpp>

#include "surfgerm/document.hpp"
#include "surfgerm/errors.hpp"
#include "surfgerm/report.hpp"
#include "surfgerm/sweeps.hpp"

using namespace surfgerm;

namespace {

enum class Format { Text, Machine };

struct MRange {
  long lo = 2;
  long hi = 6;
};

MRange parse_m_range(const std::string& s) {
  static const std::regex re(R"(^\s*(-?\d+)\s*(?:\.\.\s*(-?\d+))?\s*$)");
  std::smatch mt;
  if (!std::regex_match(s, mt, re)) throw CLI::ValidationError("--m", "expected A..B, got '" + s + "'");
  MRange r;
  r.lo = std::stol(mt[1]);
  r.hi = mt[2].matched ? std::stol(mt[2]) : r.lo;
  if (r.lo > r.hi) throw CLI::ValidationError("--m", "empty range " + s);
  return r;
}

template <class Report>
void emit(const Report& r, Format f) {
  if (f == Format::Machine)
    std::cout << to_json(r).dump(2) << "\n";
  else
    std::cout << render_text(r);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants of normal surface germs given by weighted resolution dual graphs"};
  app.require_subcommand(1);

  Format format = Format::Text;
  std::map<std::string, Format> formats{{"text", Format::Text}, {"machine", Format::Machine}};
  app.add_option("--format", format, "Output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
      ->default_str("text");

  std::string file;
  auto* inv = app.add_subcommand("invariants", "Z, Delta_y, delta_y, mu(B,y), qlt test, Pa(Z)");
  inv->add_option("file", file, "Germ document (JSON)")->required();
  auto* cls = app.add_subcommand("classify", "Smooth / A_n / D_n / E-type / not log-terminal");
  cls->add_option("file", file, "Germ document (JSON)")->required();
  auto* mu_cmd = app.add_subcommand("mu", "mu(B,y) and the boundary's exceptional part");
  mu_cmd->add_option("file", file, "Germ document (JSON)")->required();
  auto* fr = app.add_subcommand("freeness", "Freeness criterion for the adjoint system");
  fr->add_option("file", file, "Germ document with d_data (JSON)")->required();

  std::string suite;
  std::string m_text = "2..6";
  std::size_t trials = 500;
  std::uint64_t seed = 7;
  bool serial = false;
  auto* ver = app.add_subcommand("verify", "Run a verification sweep");
  ver->add_option("suite", suite, "appendix | continuants | lemmas")
      ->required()
      ->check(CLI::IsMember({"appendix", "continuants", "lemmas"}));
  ver->add_option("--m", m_text, "Center-weight range A..B (appendix)");
  ver->add_option("--trials", trials, "Random trials (continuants, lemmas)");
  ver->add_option("--seed", seed, "Seed (continuants, lemmas)");
  ver->add_flag("--serial", serial, "Use the single-threaded reference runner");

  for (auto* sub : {inv, cls, mu_cmd, fr, ver})
    sub->add_option("--format", format, "Output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;  // --help is not an error
  }

  try {
    if (*ver) {
      const Exec exec = serial ? Exec::Serial : Exec::Parallel;
      if (suite == "appendix") {
        const auto m = parse_m_range(m_text);
        const auto rep = serial ? verify_appendix_serial(m.lo, m.hi, etype_families())
                                : verify_appendix(m.lo, m.hi);
        emit(rep, format);
        return rep.all_pass() ? 0 : 1;
      }
      const auto rep = suite == "continuants" ? verify_continuants(trials, seed, exec)
                                              : verify_lemmas(trials, seed, exec);
      emit(rep, format);
      return rep.all_pass() ? 0 : 1;
    }

    const auto doc = load_germ_document(file);
    if (*inv) {
      emit(compute_invariants(doc), format);
    } else if (*cls) {
      const auto r = compute_invariants(doc);
      if (format == Format::Machine)
        std::cout << classify_json(r).dump(2) << "\n";
      else
        std::cout << render_classify_text(r);
    } else if (*mu_cmd) {
      emit(compute_mu(doc), format);
    } else if (*fr) {
      emit(compute_freeness(doc), format);
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error at " << e.what() << "\n";
    return 2;
  } catch (const NotNegativeDefinite& e) {
    std::cerr << file << ": " << e.what() << "\n";
    return 3;
  } catch (const MissingDData& e) {
    std::cerr << file << ": " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
