#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "posetkit/expr.hpp"
#include "posetkit/json_io.hpp"

using namespace posetkit;

namespace {

enum Exit { kOk = 0, kEvalError = 1, kPrecondition = 2, kOpenCase = 3, kVerification = 4 };

struct Failure {
  int code;
};

GradedPoset build(const std::string& text) {
  try {
    return eval(parse(text));
  } catch (const ParseError& e) {
    std::cerr << e.what() << '\n' << "  " << text << '\n'
              << "  " << std::string(e.offset(), ' ') << "^\n";
    throw Failure{kEvalError};
  } catch (const PosetError& e) {
    std::cerr << e.what() << '\n';
    throw Failure{kEvalError};
  }
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream file(out);
  if (!file) {
    std::cerr << "cannot write " << out << '\n';
    throw Failure{kEvalError};
  }
  file << text;
}

int analysis_code(const PosetError& e) {
  return e.kind() == ErrorKind::InconsistentWithTheorems ? kVerification : kPrecondition;
}

Json analyze(const GradedPoset& poset, bool thin) {
  Json out{{"elements", poset.size()}, {"rank", poset.rank()}, {"covers", poset.cover_count()}};
  Json levels = Json::array();
  for (int r = 0; r <= poset.rank(); ++r) levels.push_back(poset.level(r).size());
  out["level_sizes"] = std::move(levels);
  out["eulerian"] = is_eulerian(poset);
  const auto summary = scan_profiles(poset);
  auto absent = [](const std::optional<NonUniformWitness>& w) {
    return Json{{"absent", w ? w->description : ""}};
  };
  out["binomial"] = summary.binomial ? profile_to_json(*summary.binomial) : absent(summary.binomial.witness);
  out["sheffer"] = summary.sheffer ? profile_to_json(*summary.sheffer) : absent(summary.sheffer.witness);
  out["triangular"] =
      summary.triangular ? triangular_to_json(*summary.triangular) : absent(summary.triangular.witness);
  if (thin) out["thin_sheffer"] = thin_report_to_json(check_thin_sheffer_conditions(poset));
  return out;
}

ClassificationResult classify(const GradedPoset& poset, const std::string& as) {
  if (as == "binomial") return classify_eulerian_binomial(poset);
  if (as == "sheffer") return classify_eulerian_sheffer(poset);
  if (as == "triangular") return classify_eulerian_triangular(poset);
  const auto summary = scan_profiles(poset);
  if (summary.binomial) return classify_eulerian_binomial(poset);
  if (summary.sheffer) return classify_eulerian_sheffer(poset);
  return classify_eulerian_triangular(poset);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graded poset toolkit: construct, analyze and classify Eulerian posets"};
  app.require_subcommand(1);

  std::string expr, out, format = "json", as = "auto", suite;
  int max_middle = 8, max_r = 30;
  bool thin = false;

  auto* construct = app.add_subcommand("construct", "Evaluate an expression and write poset JSON");
  construct->add_option("--expr,-e", expr, "Poset expression")->required();
  construct->add_option("--out,-o", out, "Output file (default stdout)");

  auto* analyze_cmd = app.add_subcommand("analyze", "Eulerian flag and factorial profiles");
  analyze_cmd->add_option("--expr,-e", expr, "Poset expression")->required();
  analyze_cmd->add_flag("--thin", thin, "Also check the thin Sheffer coatom conditions");

  auto* classify_cmd = app.add_subcommand("classify", "Canonical form of an Eulerian poset");
  classify_cmd->add_option("--expr,-e", expr, "Poset expression")->required();
  classify_cmd->add_option("--as", as, "Classifier to use")
      ->check(CLI::IsMember({"auto", "binomial", "sheffer", "triangular"}));

  auto* enumerate = app.add_subcommand("enumerate", "Print a low-rank census");
  enumerate->require_subcommand(1);
  auto* rank3 = enumerate->add_subcommand("rank3", "Rank-3 posets with a 2-regular middle");
  rank3->add_option("--max-middle", max_middle, "Largest number of atoms")->required();
  auto* rank4 = enumerate->add_subcommand("rank4", "Rank-4 factorial solutions");
  rank4->add_option("--max-r", max_r, "Largest number of rank-2 elements")->required();

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", suite, "Suite name")
      ->required()
      ->check(CLI::IsMember({"rank3", "rank4", "catalog"}));
  verify->add_option("--max-middle", max_middle, "rank3 bound");
  verify->add_option("--max-r", max_r, "rank4 bound");

  auto* exp = app.add_subcommand("export", "Write the Hasse diagram as DOT or JSON");
  exp->add_option("--expr,-e", expr, "Poset expression")->required();
  exp->add_option("--format", format, "dot or json")->check(CLI::IsMember({"dot", "json"}));
  exp->add_option("--out,-o", out, "Output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (construct->parsed()) {
      emit(poset_to_json(build(expr)).dump(2) + "\n", out);
    } else if (exp->parsed()) {
      const auto poset = build(expr);
      emit(format == "dot" ? to_dot(poset) : poset_to_json(poset).dump(2) + "\n", out);
    } else if (analyze_cmd->parsed()) {
      const auto poset = build(expr);
      try {
        std::cout << analyze(poset, thin).dump(2) << '\n';
      } catch (const PosetError& e) {
        std::cerr << e.what() << '\n';
        return analysis_code(e);
      }
    } else if (classify_cmd->parsed()) {
      const auto poset = build(expr);
      try {
        const auto result = classify(poset, as);
        std::cout << classification_to_json(result).dump() << '\n';
        return is_open(result) ? kOpenCase : kOk;
      } catch (const PosetError& e) {
        std::cerr << e.what() << '\n';
        return analysis_code(e);
      }
    } else if (enumerate->parsed() || verify->parsed()) {
      try {
        if (rank3->parsed()) {
          Json posets = Json::array();
          std::map<int, int> counts;
          for (const auto& p : enumerate_rank3(max_middle)) {
            const int t = static_cast<int>(p.level(1).size());
            ++counts[t];
            posets.push_back({{"t", t}, {"cycles", rank3_cycle_type(p)}});
          }
          Json c = Json::object();
          for (const auto& [t, n] : counts) c[std::to_string(t)] = n;
          std::cout << Json{{"suite", "rank3"}, {"bound", max_middle}, {"counts", c},
                            {"posets", posets}}
                           .dump(2)
                    << '\n';
        } else if (rank4->parsed()) {
          Json solutions = Json::array();
          for (const auto& s : enumerate_rank4_factorials(max_r)) {
            Json cases = Json::array();
            for (const auto& [index, r] : match_rank4_cases(s.triple())) cases.push_back(index);
            solutions.push_back({{"k1", s.k1}, {"k2", s.k2}, {"m", s.m}, {"r", s.r}, {"n", s.n},
                                 {"D4", s.D4.str()}, {"cases", cases}});
          }
          std::cout << Json{{"suite", "rank4"}, {"bound", max_r}, {"solutions", solutions}}.dump(2)
                    << '\n';
        } else {
          const CensusReport report = suite == "rank3"   ? verify_rank3_classification(max_middle)
                                      : suite == "rank4" ? verify_rank4_classification(max_r)
                                                         : verify_catalog();
          std::cout << report_to_json(report).dump(2) << '\n';
          return report.passed() ? kOk : kVerification;
        }
      } catch (const PosetError& e) {
        std::cerr << e.what() << '\n';
        return kPrecondition;
      }
    }
  } catch (const Failure& f) {
    return f.code;
  }
  return kOk;
}
